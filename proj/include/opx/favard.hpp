#ifndef OPX_FAVARD_HPP
#define OPX_FAVARD_HPP

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "opx/errors.hpp"
#include "opx/motzkin.hpp"
#include "opx/xpoly.hpp"

namespace opx {

// The (b_n, lambda_n) data of a three-term recurrence
//   p_{n+1}(x) = (x - b_n) p_n(x) - lambda_n p_{n-1}(x),
// with p_0 = 1, p_1 = x - b_0.  lambda indices start at 1; there is no
// lambda_0.  When ops_flag is set, lambda_n != 0 is checked on every query,
// so the sequence is a genuine OPS by Favard's criterion.
template <class S>
struct RecurrencePair {
  std::function<S(int)> b;
  std::function<S(int)> lambda;
  bool ops_flag = false;

  S lambda_at(int n) const {
    if (n < 1) throw usage_error("RecurrencePair: lambda index must be >= 1");
    S v = lambda(n);
    if (ops_flag && v == S(0))
      throw domain_error("RecurrencePair: lambda_" + std::to_string(n) +
                         " = 0 under ops_flag");
    return v;
  }

  ValuationV<S> valuation() const {
    return ValuationV<S>{b, [rec = *this](int n) { return rec.lambda_at(n); }};
  }
};

// Monic p_0..p_{n_max} from the recurrence.
template <class S>
std::vector<XPoly<S>> build_ops(const RecurrencePair<S>& rec, int n_max) {
  std::vector<XPoly<S>> p;
  p.push_back(XPoly<S>(S(1)));
  if (n_max >= 1) p.push_back(XPoly<S>::x() - XPoly<S>(rec.b(0)));
  for (int n = 1; n < n_max; ++n) {
    XPoly<S> next = (XPoly<S>::x() - XPoly<S>(rec.b(n))) * p[size_t(n)] -
                    p[size_t(n - 1)].scaled(rec.lambda_at(n));
    p.push_back(std::move(next));
  }
  return p;
}

// mu_0..mu_{m_max}: weighted Motzkin path totals (0,0) -> (m,0); mu_0 = 1.
template <class S>
std::vector<S> moments(const RecurrencePair<S>& rec, int m_max) {
  std::vector<S> mu;
  auto val = rec.valuation();
  for (int m = 0; m <= m_max; ++m) mu.push_back(transfer_total(m, 0, 0, val));
  return mu;
}

// q[n][k] = total weight of Motzkin paths (0,0) -> (n,k); satisfies
// x^n = sum_k q[n][k] p_k(x) even when some lambda_n vanish.
template <class S>
std::vector<std::vector<S>> inverse_coeffs(const RecurrencePair<S>& rec, int n_max) {
  std::vector<std::vector<S>> q;
  ValuationV<S> val{rec.b, rec.lambda};  // no ops check: zero lambdas allowed here
  for (int n = 0; n <= n_max; ++n) {
    std::vector<S> row;
    for (int k = 0; k <= n; ++k) row.push_back(transfer_total(n, 0, k, val));
    q.push_back(std::move(row));
  }
  return q;
}

// f(poly) = sum coeff_n * mu_n.
template <class S>
S functional_apply(const RecurrencePair<S>& rec, const XPoly<S>& poly) {
  std::vector<S> mu = moments(rec, poly.degree() < 0 ? 0 : poly.degree());
  S acc(0);
  for (int n = 0; n <= poly.degree(); ++n) acc = acc + poly.coeff(n) * mu[size_t(n)];
  return acc;
}

// Both sides of f(x^n p_k p_l) = lambda_1...lambda_l * (path total k -> l).
template <class S>
std::pair<S, S> mixed_moment_check(const RecurrencePair<S>& rec, int n, int k, int l) {
  auto p = build_ops(rec, std::max(k, l));
  XPoly<S> xn(S(1));
  for (int i = 0; i < n; ++i) xn = xn * XPoly<S>::x();
  S lhs = functional_apply(rec, xn * p[size_t(k)] * p[size_t(l)]);
  S pref(1);
  for (int i = 1; i <= l; ++i) pref = pref * rec.lambda_at(i);
  S rhs = pref * transfer_total(n, k, l, rec.valuation());
  return {lhs, rhs};
}

// Independent route to the inverse coefficients: back-substitution on the
// triangular coefficient matrix of the monic sequence.
template <class S>
std::vector<std::vector<S>> change_of_basis_oracle(const std::vector<XPoly<S>>& seq,
                                                   int n_max) {
  if (static_cast<int>(seq.size()) <= n_max)
    throw usage_error("change_of_basis_oracle: sequence too short");
  std::vector<std::vector<S>> q;
  for (int n = 0; n <= n_max; ++n) {
    // residual = x^n - sum_{k<=n} q[n][k] p_k, peeled from the top degree down.
    std::vector<S> row(size_t(n) + 1, S(0));
    std::vector<S> residual(size_t(n) + 1, S(0));
    residual[size_t(n)] = S(1);
    for (int k = n; k >= 0; --k) {
      S c = residual[size_t(k)];  // p_k is monic, so this is the coefficient
      row[size_t(k)] = c;
      for (int j = 0; j <= k; ++j)
        residual[size_t(j)] = residual[size_t(j)] - c * seq[size_t(k)].coeff(j);
    }
    q.push_back(std::move(row));
  }
  return q;
}

}  // namespace opx

#endif
