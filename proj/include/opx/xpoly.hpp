#ifndef OPX_XPOLY_HPP
#define OPX_XPOLY_HPP

#include <string>
#include <vector>

#include "opx/errors.hpp"
#include "opx/rational.hpp"

namespace opx {

// Dense polynomial in the indeterminate x with coefficients in the scalar
// ring S (Rational or ParamPoly).  Kept separate from ParamPoly: here x is
// the orthogonal-polynomial variable, there the symbol is a family parameter.
template <class S>
class XPoly {
public:
  XPoly() = default;
  XPoly(const S& c) { if (!(c == S(0))) c_.push_back(c); }  // NOLINT
  explicit XPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }

  static XPoly x() { return XPoly(std::vector<S>{S(0), S(1)}); }

  static constexpr int kDegreeGuard = 32;

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  S coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return S(0);
    return c_[static_cast<size_t>(k)];
  }

  XPoly operator-() const {
    XPoly p(*this);
    for (auto& c : p.c_) c = -c;
    return p;
  }

  friend XPoly operator+(const XPoly& a, const XPoly& b) {
    std::vector<S> c(std::max(a.c_.size(), b.c_.size()), S(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(int(i)) + b.coeff(int(i));
    return XPoly(std::move(c));
  }
  friend XPoly operator-(const XPoly& a, const XPoly& b) { return a + (-b); }

  friend XPoly operator*(const XPoly& a, const XPoly& b) {
    if (a.is_zero() || b.is_zero()) return XPoly();
    if (a.degree() + b.degree() > kDegreeGuard)
      throw usage_error("XPoly: degree guard exceeded");
    std::vector<S> c(a.c_.size() + b.c_.size() - 1, S(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return XPoly(std::move(c));
  }

  XPoly scaled(const S& s) const {
    XPoly p;
    p.c_.reserve(c_.size());
    for (const auto& c : c_) p.c_.push_back(c * s);
    p.trim();
    return p;
  }

  // p(s*x): coefficient of x^k scaled by s^k.
  XPoly substitute_scaled_x(const S& s) const {
    XPoly p(*this);
    S sk(1);
    for (size_t k = 0; k < p.c_.size(); ++k) {
      p.c_[k] = p.c_[k] * sk;
      sk = sk * s;
    }
    p.trim();
    return p;
  }

  S eval(const S& x) const {
    S r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
  }

  friend bool operator==(const XPoly& a, const XPoly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const XPoly& a, const XPoly& b) { return !(a == b); }

private:
  void trim() {
    while (!c_.empty() && c_.back() == S(0)) c_.pop_back();
  }

  std::vector<S> c_;
};

}  // namespace opx

#endif
