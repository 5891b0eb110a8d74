#ifndef OPX_SERIES_HPP
#define OPX_SERIES_HPP

#include <string>
#include <vector>

#include "opx/errors.hpp"
#include "opx/parampoly.hpp"
#include "opx/rational.hpp"

namespace opx {

// All acceptance-level extractions live far below this order.
inline constexpr int kDefaultSeriesOrder = 24;

// Truncated formal power series: coefficients of t^0..t^order, exact through
// the stored order.  Binary operations truncate to the smaller order.
template <class S>
class Series {
public:
  explicit Series(int order) : c_(check_order(order) + 1, S(0)) {}
  Series(int order, std::vector<S> coeffs) : c_(std::move(coeffs)) {
    c_.resize(static_cast<size_t>(check_order(order)) + 1, S(0));
  }

  static Series identity(int order) {  // the series t
    Series s(order);
    if (order >= 1) s.c_[1] = S(1);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  S coeff(int k) const {
    if (k < 0 || k > order())
      throw usage_error("Series: coefficient index beyond truncation order");
    return c_[static_cast<size_t>(k)];
  }
  void set_coeff(int k, const S& v) { c_.at(static_cast<size_t>(k)) = v; }

  Series truncated(int new_order) const {
    Series s(new_order);
    for (int k = 0; k <= new_order && k <= order(); ++k) s.c_[size_t(k)] = c_[size_t(k)];
    return s;
  }

  Series operator-() const {
    Series s(*this);
    for (auto& c : s.c_) c = -c;
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series s(n);
    for (int k = 0; k <= n; ++k) s.c_[size_t(k)] = a.c_[size_t(k)] + b.c_[size_t(k)];
    return s;
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

  friend Series operator*(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    Series s(n);
    for (int i = 0; i <= n; ++i) {
      if (a.c_[size_t(i)] == S(0)) continue;
      for (int j = 0; i + j <= n; ++j)
        s.c_[size_t(i + j)] = s.c_[size_t(i + j)] + a.c_[size_t(i)] * b.c_[size_t(j)];
    }
    return s;
  }

  Series scaled(const S& v) const {
    Series s(*this);
    for (auto& c : s.c_) c = c * v;
    return s;
  }

  friend Series operator/(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    S b0 = b.c_[0];
    if (b0 == S(0)) throw domain_error("Series: division by series with zero constant term");
    S b0inv = b0.inv();
    Series q(n);
    for (int k = 0; k <= n; ++k) {
      S acc = a.c_[size_t(k)];
      for (int j = 1; j <= k; ++j) acc = acc - b.c_[size_t(j)] * q.c_[size_t(k - j)];
      q.c_[size_t(k)] = acc * b0inv;
    }
    return q;
  }

  // f(g(t)); requires g(0) = 0.
  Series compose(const Series& g) const {
    int n = std::min(order(), g.order());
    if (!(g.c_[0] == S(0)))
      throw domain_error("Series: composition inner series has nonzero constant term");
    Series gt = g.truncated(n);
    Series r(n);
    for (int k = order(); k >= 0; --k) r = r * gt + constant(n, c_[size_t(k)]);
    return r;
  }

  // Compositional inverse: h with g(h(t)) = t; requires g(0)=0, g'(0) != 0.
  // Solved order by order; perturbing h_n moves (g o h)_n by g_1 * h_n.
  Series revert() const {
    int n = order();
    if (n < 1 || !(c_[0] == S(0)) || c_[1] == S(0))
      throw domain_error("Series: reversion requires g(0)=0 and g'(0)!=0");
    S g1inv = c_[1].inv();
    Series h(n);
    h.c_[1] = g1inv;
    for (int m = 2; m <= n; ++m) {
      Series comp = this->compose(h);
      h.c_[size_t(m)] = -comp.c_[size_t(m)] * g1inv;
    }
    return h;
  }

  // exp(f) for f(0) = 0: n*c_n = sum_{k=1..n} k*f_k*c_{n-k}.
  Series exp() const {
    if (!(c_[0] == S(0)))
      throw domain_error("Series: exp requires zero constant term");
    int n = order();
    Series e(n);
    e.c_[0] = S(1);
    for (int m = 1; m <= n; ++m) {
      S acc(0);
      for (int k = 1; k <= m; ++k) acc = acc + (c_[size_t(k)] * S(k)) * e.c_[size_t(m - k)];
      e.c_[size_t(m)] = acc * S(Rational(1, m));
    }
    return e;
  }

  // log(f) for f(0) = 1: g_n = f_n - (1/n) sum_{k=1..n-1} k*g_k*f_{n-k}.
  Series log() const {
    if (!(c_[0] == S(1)))
      throw domain_error("Series: log requires constant term 1");
    int n = order();
    Series g(n);
    for (int m = 1; m <= n; ++m) {
      S acc = c_[size_t(m)];
      for (int k = 1; k < m; ++k)
        acc = acc - (g.c_[size_t(k)] * S(k)) * c_[size_t(m - k)] * S(Rational(1, m));
      g.c_[size_t(m)] = acc;
    }
    return g;
  }

  // f^e = exp(e*log(f)) for rational exponent; requires f(0) = 1.
  Series pow(const S& e) const { return log().scaled(e).exp(); }

  static Series constant(int order, const S& v) {
    Series s(order);
    s.c_[0] = v;
    return s;
  }

private:
  static int check_order(int order) {
    if (order < 0) throw usage_error("Series: negative order");
    return order;
  }

  std::vector<S> c_;
};

using RationalSeries = Series<Rational>;
using ParamSeries = Series<ParamPoly>;

// Maclaurin series of a named elementary function, exact rationals.
RationalSeries named_series(const std::string& name, int order);

// Lift a rational-coefficient series into the ParamPoly ring.
inline ParamSeries lift(const RationalSeries& s) {
  ParamSeries r(s.order());
  for (int k = 0; k <= s.order(); ++k) r.set_coeff(k, ParamPoly(s.coeff(k)));
  return r;
}

// base^exponent = exp(exponent * log(base)) with a symbolic exponent;
// requires base(0) = 1.  Coefficients are polynomials in the exponent symbol.
inline ParamSeries series_pow_param(const RationalSeries& base, const ParamPoly& exponent) {
  if (base.coeff(0) != Rational(1))
    throw domain_error("series_pow_param: base must have constant term 1");
  RationalSeries lg = base.log();
  ParamSeries scaled(lg.order());
  for (int k = 0; k <= lg.order(); ++k) scaled.set_coeff(k, exponent * ParamPoly(lg.coeff(k)));
  return scaled.exp();
}

}  // namespace opx

#endif
