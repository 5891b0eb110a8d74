#ifndef OPX_MOTZKIN_HPP
#define OPX_MOTZKIN_HPP

#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "opx/errors.hpp"

namespace opx {

enum class Step { NE, E, SE };

// Lattice path over steps (1,1), (1,0), (1,-1) never dropping below level 0.
struct MotzkinPath {
  int start = 0;
  std::vector<Step> steps;

  MotzkinPath(int start_level, std::vector<Step> path_steps)
      : start(start_level), steps(std::move(path_steps)) {
    if (start < 0) throw domain_error("MotzkinPath: negative start level");
    int level = start;
    for (Step s : steps) {
      level += delta(s);
      if (level < 0) throw domain_error("MotzkinPath: path drops below level 0");
    }
  }

  static int delta(Step s) { return s == Step::NE ? 1 : (s == Step::SE ? -1 : 0); }

  int length() const { return static_cast<int>(steps.size()); }

  int end_level() const {
    int level = start;
    for (Step s : steps) level += delta(s);
    return level;
  }

  // U/F/D encoding (up/flat/down).
  std::string to_string() const {
    std::string out;
    for (Step s : steps)
      out += s == Step::NE ? 'U' : (s == Step::E ? 'F' : 'D');
    return out;
  }

  static MotzkinPath parse(int start_level, const std::string& word) {
    std::vector<Step> steps;
    for (char c : word) {
      switch (c) {
        case 'U': steps.push_back(Step::NE); break;
        case 'F': steps.push_back(Step::E); break;
        case 'D': steps.push_back(Step::SE); break;
        default: throw usage_error(std::string("MotzkinPath: bad step '") + c + "'");
      }
    }
    return MotzkinPath(start_level, std::move(steps));
  }
};

// Viennot's first valuation: NE weight 1, E at level k weight b_k, SE
// *starting* at level k weight lambda_k (so lambda indices begin at 1).
template <class S>
struct ValuationV {
  std::function<S(int)> b;
  std::function<S(int)> lambda;
};

// Second valuation: NE/E/SE starting at level k weigh a_k / b_k / c_k.
template <class S>
struct ValuationV1 {
  std::function<S(int)> a;
  std::function<S(int)> b;
  std::function<S(int)> c;
};

// Builds an index->scalar function backed by a finite table; out-of-range
// queries raise a domain error.
template <class S>
std::function<S(int)> table_fn(std::vector<S> table, int base = 0) {
  return [table = std::move(table), base](int n) -> S {
    int idx = n - base;
    if (idx < 0 || idx >= static_cast<int>(table.size()))
      throw domain_error("valuation table: index " + std::to_string(n) + " out of range");
    return table[static_cast<size_t>(idx)];
  };
}

template <class S>
S path_weight(const MotzkinPath& path, const ValuationV<S>& val) {
  S w(1);
  int level = path.start;
  for (Step s : path.steps) {
    switch (s) {
      case Step::NE: ++level; break;
      case Step::E: w = w * val.b(level); break;
      case Step::SE: w = w * val.lambda(level); --level; break;
    }
  }
  return w;
}

template <class S>
S path_weight(const MotzkinPath& path, const ValuationV1<S>& val) {
  S w(1);
  int level = path.start;
  for (Step s : path.steps) {
    switch (s) {
      case Step::NE: w = w * val.a(level); ++level; break;
      case Step::E: w = w * val.b(level); break;
      case Step::SE: w = w * val.c(level); --level; break;
    }
  }
  return w;
}

inline constexpr int kEnumerationGuard = 16;

// Every Motzkin path of the given length from level i to level j, exactly once.
std::vector<MotzkinPath> enumerate_paths(int length, int from, int to);

namespace detail {

// One sweep of the level-indexed accumulator:
// new[k] = old[k-1] + old[k]*b_k + old[k+1]*lambda_{k+1}.
template <class S>
std::vector<S> transfer_core(int length, int from, int to,
                             const std::function<S(int)>& b,
                             const std::function<S(int)>& lambda) {
  (void)to;
  int top = from + length;  // paths cannot exceed start + length
  // Sample the sequences once so results do not depend on call order.
  std::vector<S> bs, ls;
  bs.reserve(size_t(top) + 1);
  for (int k = 0; k <= top; ++k) bs.push_back(b(k));
  ls.push_back(S(0));  // lambda_0 never used
  for (int k = 1; k <= top; ++k) ls.push_back(lambda(k));

  std::vector<S> acc(size_t(top) + 1, S(0));
  acc[size_t(from)] = S(1);
  for (int step = 0; step < length; ++step) {
    std::vector<S> next(acc.size(), S(0));
    for (int k = 0; k <= top; ++k) {
      S v = acc[size_t(k)] * bs[size_t(k)];
      if (k > 0) v = v + acc[size_t(k - 1)];
      if (k < top) v = v + acc[size_t(k + 1)] * ls[size_t(k + 1)];
      next[size_t(k)] = v;
    }
    acc.swap(next);
  }
  return acc;
}

}  // namespace detail

// Total weight of all Motzkin paths of the given length from level `from` to
// level `to` under the first valuation.
template <class S>
S transfer_total(int length, int from, int to, const ValuationV<S>& val) {
  if (length < 0 || from < 0 || to < 0) throw usage_error("transfer_total: negative argument");
  if (to > from + length || std::abs(from - to) > length) return S(0);
  auto acc = detail::transfer_core<S>(length, from, to, val.b, val.lambda);
  return acc[size_t(to)];
}

// Same sweep under the second valuation.
template <class S>
S transfer_total_v1(int length, int from, int to, const ValuationV1<S>& val) {
  if (length < 0 || from < 0 || to < 0) throw usage_error("transfer_total_v1: negative argument");
  if (to > from + length || std::abs(from - to) > length) return S(0);
  int top = from + length;
  std::vector<S> as, bs, cs;
  for (int k = 0; k <= top; ++k) as.push_back(val.a(k));
  for (int k = 0; k <= top; ++k) bs.push_back(val.b(k));
  cs.push_back(S(0));
  for (int k = 1; k <= top; ++k) cs.push_back(val.c(k));

  std::vector<S> acc(size_t(top) + 1, S(0));
  acc[size_t(from)] = S(1);
  for (int step = 0; step < length; ++step) {
    std::vector<S> next(acc.size(), S(0));
    for (int k = 0; k <= top; ++k) {
      S v = acc[size_t(k)] * bs[size_t(k)];
      if (k > 0) v = v + acc[size_t(k - 1)] * as[size_t(k - 1)];
      if (k < top) v = v + acc[size_t(k + 1)] * cs[size_t(k + 1)];
      next[size_t(k)] = v;
    }
    acc.swap(next);
  }
  return acc[size_t(to)];
}

}  // namespace opx

#endif
