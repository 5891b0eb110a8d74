#include "opx/permoracle.hpp"

#include <algorithm>
#include <numeric>

#include "opx/errors.hpp"

namespace opx {

namespace {

// Backtracking over permutations of {1..len} whose comparisons alternate,
// with the first comparison a rise iff up_first.  Prunes as it goes; calls
// visit(sigma) for each complete permutation.
template <class Visit>
void enumerate_alternating(int len, bool up_first, Visit&& visit) {
  std::vector<int> sigma;
  std::vector<bool> used(size_t(len) + 1, false);
  auto rec = [&](auto&& self) -> void {
    int pos = static_cast<int>(sigma.size());
    if (pos == len) {
      visit(sigma);
      return;
    }
    for (int v = 1; v <= len; ++v) {
      if (used[size_t(v)]) continue;
      if (pos > 0) {
        bool rise_wanted = (pos % 2 == 1) == up_first;
        if (rise_wanted != (sigma.back() < v)) continue;
      }
      used[size_t(v)] = true;
      sigma.push_back(v);
      self(self);
      sigma.pop_back();
      used[size_t(v)] = false;
    }
  };
  rec(rec);
}

int lr_minima(const std::vector<int>& sigma) {
  int count = 0, cur = 0;
  for (size_t i = 0; i < sigma.size(); ++i) {
    if (i == 0 || sigma[i] < cur) {
      cur = sigma[i];
      ++count;
    }
  }
  return count;
}

}  // namespace

ParamPoly zigzag_moment_poly(int two_n) {
  if (two_n < 0 || two_n % 2 != 0)
    throw usage_error("zigzag_moment: length must be even and non-negative");
  if (two_n > kPermGuard)
    throw usage_error("zigzag_moment: length exceeds guard of " +
                      std::to_string(kPermGuard));
  if (two_n == 0) return ParamPoly(Rational(1));
  std::vector<Rational> counts(size_t(two_n) + 1, Rational(0));
  enumerate_alternating(two_n, /*up_first=*/true, [&](const std::vector<int>& sigma) {
    counts[size_t(lr_minima(sigma))] += Rational(1);
  });
  return ParamPoly::make("eta", counts);
}

Rational zigzag_moment(int two_n, const Rational& eta) {
  return zigzag_moment_poly(two_n).eval(eta);
}

Rational tangent_count(int odd_len) {
  if (odd_len < 1 || odd_len % 2 != 1)
    throw usage_error("tangent_count: length must be odd and positive");
  if (odd_len > kPermGuard + 1)
    throw usage_error("tangent_count: length exceeds guard");
  Rational count(0);
  enumerate_alternating(odd_len, /*up_first=*/false,
                        [&](const std::vector<int>&) { count += Rational(1); });
  return count;
}

EulerTable euler_table(int n_max) {
  // T_{2n_max-1} is produced by enumeration, which is feasible through T_11.
  if (n_max < 0 || n_max > 6) throw usage_error("euler_table: n_max must be in [0, 6]");
  EulerTable t;
  // tangent[j] = T_{2j+1}, by direct enumeration.
  for (int j = 0; j < n_max; ++j) t.tangent.push_back(tangent_count(2 * j + 1));
  t.e.assign(size_t(n_max) + 1, {});
  t.e[0] = {Rational(1)};
  for (int n = 1; n <= n_max; ++n) {
    t.e[size_t(n)].assign(size_t(n) + 1, Rational(0));
    for (int k = 1; k <= n; ++k) {
      Rational acc(0);
      for (int m = 0; m < n; ++m) {
        if (k - 1 > m) continue;  // E_{2m,k-1} = 0 above the diagonal
        acc += binomial(unsigned(2 * n - 1), unsigned(2 * m)) *
               t.e[size_t(m)][size_t(k - 1)] * t.tangent[size_t(n - m - 1)];
      }
      t.e[size_t(n)][size_t(k)] = acc;
    }
  }
  return t;
}

Rational descent_weighted_sum(int n, const Rational& w) {
  if (n < 0 || n > 9) throw usage_error("descent_weighted_sum: n must be in [0, 9]");
  if (n == 0) return Rational(1);
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  Rational total(0);
  do {
    int des = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (sigma[size_t(i)] > sigma[size_t(i + 1)]) ++des;
    total += w.pow(unsigned(des));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

std::vector<Rational> odd_cycle_counts(int n) {
  if (n < 0 || n > 9) throw usage_error("odd_cycle_counts: n must be in [0, 9]");
  std::vector<Rational> c(size_t(n) + 1, Rational(0));
  if (n == 0) {
    c[0] = Rational(1);
    return c;
  }
  std::vector<int> sigma(static_cast<size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  do {
    std::vector<bool> seen(size_t(n) + 1, false);
    int odd = 0;
    for (int start = 1; start <= n; ++start) {
      if (seen[size_t(start)]) continue;
      int len = 0, v = start;
      while (!seen[size_t(v)]) {
        seen[size_t(v)] = true;
        v = sigma[size_t(v - 1)];
        ++len;
      }
      if (len % 2 == 1) ++odd;
    }
    c[size_t(odd)] += Rational(1);
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return c;
}

}  // namespace opx
