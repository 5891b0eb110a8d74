#ifndef OPX_SURD_HPP
#define OPX_SURD_HPP

#include <string>

#include "opx/errors.hpp"
#include "opx/rational.hpp"

namespace opx {

// Exact value coefficient * sqrt(radicand).  Normal form: the radicand is a
// squarefree non-negative integer (denominators are rationalized away), and a
// zero coefficient forces radicand 1.  Closed under multiplication and
// rational scaling; addition is defined only between equal radicands.
class Surd {
public:
  Surd() : coef_(0), rad_(1) {}
  Surd(const Rational& r) : coef_(r), rad_(1) {}  // NOLINT: implicit by design
  Surd(long n) : coef_(n), rad_(1) {}             // NOLINT

  static Surd normalize(const Rational& coefficient, const Rational& radicand) {
    if (radicand.sign() < 0) throw domain_error("Surd: negative radicand");
    if (radicand.is_zero() || coefficient.is_zero()) return Surd();
    // c*sqrt(p/q) = (c/q)*sqrt(p*q); then pull the square part out of p*q.
    mpz_class p = radicand.num(), q = radicand.den();
    mpz_class m = p * q;
    mpz_class square_part = 1, free_part = 1;
    for (mpz_class f = 2; f * f <= m; ++f) {
      if (m % f != 0) continue;
      unsigned e = 0;
      while (m % f == 0) { m /= f; ++e; }
      for (unsigned i = 0; i < e / 2; ++i) square_part *= f;
      if (e % 2 == 1) free_part *= f;
    }
    free_part *= m;
    Surd s;
    s.coef_ = coefficient * Rational(square_part, q);
    s.rad_ = Rational(free_part);
    return s;
  }

  const Rational& coef() const { return coef_; }
  const Rational& radicand() const { return rad_; }

  bool is_zero() const { return coef_.is_zero(); }
  bool is_rational() const { return rad_ == Rational(1); }

  Rational to_rational() const {
    if (!is_rational()) throw domain_error("Surd: irrational value " + to_string());
    return coef_;
  }

  friend Surd operator*(const Surd& a, const Surd& b) {
    return normalize(a.coef_ * b.coef_, a.rad_ * b.rad_);
  }
  friend Surd operator*(const Surd& a, const Rational& r) {
    Surd s;
    if (r.is_zero()) return s;
    s.coef_ = a.coef_ * r;
    s.rad_ = a.is_zero() ? Rational(1) : a.rad_;
    if (s.coef_.is_zero()) s.rad_ = Rational(1);
    return s;
  }
  friend Surd operator*(const Rational& r, const Surd& a) { return a * r; }

  friend Surd operator+(const Surd& a, const Surd& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.rad_ != b.rad_)
      throw domain_error("Surd: addition with distinct radicands " +
                         a.to_string() + " + " + b.to_string());
    Surd s;
    s.coef_ = a.coef_ + b.coef_;
    s.rad_ = s.coef_.is_zero() ? Rational(1) : a.rad_;
    return s;
  }
  Surd operator-() const {
    Surd s;
    s.coef_ = -coef_;
    s.rad_ = rad_;
    return s;
  }
  friend Surd operator-(const Surd& a, const Surd& b) { return a + (-b); }

  Surd inv() const {
    if (is_zero()) throw domain_error("Surd: inverse of zero");
    // 1/(a*sqrt(r)) = (1/(a*r)) * sqrt(r)
    Surd s;
    s.coef_ = (coef_ * rad_).inv();
    s.rad_ = rad_;
    return s;
  }

  friend bool operator==(const Surd& a, const Surd& b) {
    return a.coef_ == b.coef_ && a.rad_ == b.rad_;
  }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

  double to_double() const;

  std::string to_string() const {
    if (is_rational()) return coef_.to_string();
    return coef_.to_string() + "*sqrt(" + rad_.to_string() + ")";
  }

private:
  Rational coef_;
  Rational rad_;
};

inline std::ostream& operator<<(std::ostream& os, const Surd& s) {
  return os << s.to_string();
}

}  // namespace opx

#include <cmath>
namespace opx {
inline double Surd::to_double() const {
  return coef_.to_double() * std::sqrt(rad_.to_double());
}
}  // namespace opx

#endif
