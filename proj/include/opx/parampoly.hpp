#ifndef OPX_PARAMPOLY_HPP
#define OPX_PARAMPOLY_HPP

#include <string>
#include <utility>
#include <vector>

#include "opx/errors.hpp"
#include "opx/rational.hpp"

namespace opx {

// Dense univariate polynomial over Rational in a single named parameter.
// Canonical form: no trailing zero coefficients; the parameter name is empty
// iff the polynomial is constant.  Computations never mix two distinct
// parameter names.
class ParamPoly {
public:
  ParamPoly() = default;
  ParamPoly(const Rational& c) {  // NOLINT: implicit by design
    if (!c.is_zero()) coeffs_.push_back(c);
  }
  ParamPoly(long n) : ParamPoly(Rational(n)) {}  // NOLINT

  static ParamPoly variable(std::string name) {
    ParamPoly p;
    p.param_ = std::move(name);
    p.coeffs_ = {Rational(0), Rational(1)};
    return p;
  }

  static ParamPoly make(std::string name, std::vector<Rational> coeffs) {
    ParamPoly p;
    p.param_ = std::move(name);
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  const std::string& param() const { return param_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero

  Rational coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<size_t>(k)];
  }

  Rational constant_value() const {
    if (!is_constant()) throw domain_error("ParamPoly: not a constant: " + to_string());
    return coeff(0);
  }

  Rational eval(const Rational& x) const {
    Rational r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
  }

  ParamPoly operator-() const {
    ParamPoly p(*this);
    for (auto& c : p.coeffs_) c = -c;
    return p;
  }

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly p;
    p.param_ = unify(a, b);
    p.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < p.coeffs_.size(); ++i) p.coeffs_[i] = a.coeff(int(i)) + b.coeff(int(i));
    p.trim();
    return p;
  }
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return ParamPoly();
    ParamPoly p;
    p.param_ = unify(a, b);
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
      for (size_t j = 0; j < b.coeffs_.size(); ++j)
        p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    p.trim();
    return p;
  }

  ParamPoly& operator+=(const ParamPoly& o) { return *this = *this + o; }
  ParamPoly& operator-=(const ParamPoly& o) { return *this = *this - o; }
  ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

  // Multiplicative inverse exists only for nonzero constants.
  ParamPoly inv() const { return ParamPoly(constant_value().inv()); }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
    return a.coeffs_ == b.coeffs_ && (a.is_constant() || b.is_constant() || a.param_ == b.param_);
  }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  // Descending-degree rendering, e.g. "alpha^2+3*alpha+2".
  std::string to_string() const {
    if (is_zero()) return "0";
    std::string name = param_.empty() ? "x" : param_;
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      Rational c = coeff(k);
      if (c.is_zero()) continue;
      bool neg = c.sign() < 0;
      Rational a = c.abs();
      if (!out.empty()) out += neg ? "-" : "+";
      else if (neg) out += "-";
      std::string term;
      if (k == 0 || a != Rational(1)) term = a.to_string();
      if (k > 0) {
        if (!term.empty()) term += "*";
        term += name;
        if (k > 1) term += "^" + std::to_string(k);
      }
      out += term;
    }
    return out;
  }

private:
  static std::string unify(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_constant()) return b.is_constant() ? std::string() : b.param_;
    if (b.is_constant()) return a.param_;
    if (a.param_ != b.param_)
      throw domain_error("ParamPoly: mixed parameters '" + a.param_ + "' and '" + b.param_ + "'");
    return a.param_;
  }

  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    if (coeffs_.size() <= 1) param_.clear();
  }

  std::string param_;
  std::vector<Rational> coeffs_;
};

inline std::ostream& operator<<(std::ostream& os, const ParamPoly& p) {
  return os << p.to_string();
}

// Rising factorial a(a+1)...(a+n-1); 1 when n = 0.  Works over Rational and
// ParamPoly alike.
template <class S>
S pochhammer(const S& a, int n) {
  S r(1);
  for (int i = 0; i < n; ++i) r = r * (a + S(i));
  return r;
}

}  // namespace opx

#endif
