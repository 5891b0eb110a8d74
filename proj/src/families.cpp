#include "opx/families.hpp"

#include <cmath>

namespace opx {

namespace {

// sqrt of a non-negative rational, when it is rational.
std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.sign() < 0) return std::nullopt;
  mpz_class p = r.num(), q = r.den();
  if (mpz_perfect_square_p(p.get_mpz_t()) && mpz_perfect_square_p(q.get_mpz_t())) {
    mpz_class sp, sq;
    mpz_sqrt(sp.get_mpz_t(), p.get_mpz_t());
    mpz_sqrt(sq.get_mpz_t(), q.get_mpz_t());
    return Rational(sp, sq);
  }
  return std::nullopt;
}

ParamPoly derivative(const ParamPoly& p) {
  std::vector<Rational> c;
  for (int k = 1; k <= p.degree(); ++k) c.push_back(p.coeff(k) * Rational(k));
  return ParamPoly::make(p.param(), std::move(c));
}

}  // namespace

RecurrencePair<Rational> meixner1_recurrence(const Rational& beta, const Rational& c) {
  if (c == Rational(0) || c == Rational(1))
    throw domain_error("meixner1: parameter c must avoid 0 and 1");
  Rational one_minus_c = Rational(1) - c;
  return {[beta, c, one_minus_c](int n) {
            return ((Rational(1) + c) * Rational(n) + beta * c) / one_minus_c;
          },
          [beta, c, one_minus_c](int n) {
            return c * Rational(n) * (Rational(n - 1) + beta) / (one_minus_c * one_minus_c);
          },
          false};
}

RecurrencePair<Rational> hermite_recurrence(const Rational& alpha) {
  return {[](int) { return Rational(0); },
          [alpha](int n) {
            return n % 2 == 1 ? Rational(n) + alpha : Rational(n);
          },
          false};
}

RecurrencePair<Rational> carlitz_recurrence(const Rational& k) {
  return {[](int) { return Rational(0); },
          [k](int n) { return -(Rational(n) * (Rational(n - 1) + Rational(2) * k)); },
          false};
}

TridiagonalOperator su11_plus_operator(const Rational& k, const Rational& c) {
  if (k.sign() <= 0) throw domain_error("su11+: k must be positive");
  auto off = [k](int n) {
    return Surd::normalize(Rational(1), Rational(n + 1) * (Rational(2) * k + Rational(n)));
  };
  return {off, [k, c](int n) { return Rational(2) * c * (k + Rational(n)); }, off};
}

TridiagonalOperator su11_minus_operator(const Rational& k, const Rational& c) {
  if (k.sign() <= 0) throw domain_error("su11-: k must be positive");
  auto off = [k](int n) {
    return -Surd::normalize(Rational(1), Rational(n + 1) * (Rational(2) * k + Rational(n)));
  };
  return {off, [k, c](int n) { return Rational(-2) * c * (k + Rational(n)); }, off};
}

TridiagonalOperator pibeta_operator(const Rational& beta, const Rational& c) {
  if (beta.sign() < 0) throw domain_error("pibeta: beta must be non-negative");
  auto off = [beta](int n) {
    return Surd::normalize(Rational(1), Rational(n + 1) * (Rational(n) + beta));
  };
  return {off, [beta, c](int n) { return c * (Rational(2 * n) + beta); }, off};
}

TridiagonalOperator hermite_operator(const Rational& alpha) {
  if (alpha < Rational(-1)) throw domain_error("hermite: alpha must be >= -1");
  auto off = [alpha](int n) {
    return n % 2 == 0 ? Surd::normalize(Rational(1), Rational(n + 1) + alpha)
                      : Surd::normalize(Rational(1), Rational(n + 1));
  };
  return {off, [](int) { return Rational(0); }, off};
}

TridiagonalOperator carlitz_operator(const Rational& k) {
  if (k.sign() <= 0) throw domain_error("carlitz: k must be positive");
  auto rad = [k](int n) { return Rational(n + 1) * (Rational(2) * k + Rational(n)); };
  return {[rad](int n) { return Surd::normalize(Rational(1), rad(n)); },
          [](int) { return Rational(0); },
          [rad](int n) { return -Surd::normalize(Rational(1), rad(n)); }};
}

TridiagonalOperator jacobi_operator(const RecurrencePair<Rational>& rec) {
  auto off = [rec](int n) { return Surd::normalize(Rational(1), rec.lambda(n + 1)); };
  return {off, rec.b, off};
}

Surd sh_entry(const Rational& alpha, int m, int row, int col, bool with_s) {
  if (alpha < Rational(-1) || alpha > Rational(1))
    throw domain_error("sh_entry: alpha must lie in [-1, 1]");
  if (m < 0 || row < 0 || col < 0) throw usage_error("sh_entry: negative argument");
  if ((row - col) % 2 != 0) return Surd();
  Rational c = with_s ? Rational(1) : Rational(0);
  bool odd_chain = row % 2 == 1;
  Rational beta = odd_chain ? (alpha + Rational(3)) / Rational(2)
                            : (alpha + Rational(1)) / Rational(2);
  int i = odd_chain ? (col - 1) / 2 : col / 2;
  int d = (row - col) / 2;
  return matrix_entry(pibeta_operator(beta, c), m, i, d);
}

Rational meixner1_moment(int n, const Rational& beta, const Rational& c) {
  if (c.abs() >= Rational(1) || c == Rational(0))
    throw domain_error("meixner1_moment: need 0 < |c| < 1");
  if (n < 0) throw usage_error("meixner1_moment: negative n");
  // G = sum_j q_j(c) (1-c)^{-beta-j}; theta = c d/dc maps the representation
  // to itself:
  //   theta(q (1-c)^{-beta-j}) = c q' (1-c)^{-beta-j} + (beta+j) c q (1-c)^{-beta-j-1}.
  std::vector<ParamPoly> q(size_t(n) + 1);
  q[0] = ParamPoly(Rational(1));
  ParamPoly cvar = ParamPoly::variable("c");
  for (int step = 0; step < n; ++step) {
    std::vector<ParamPoly> next(q.size());
    for (size_t j = 0; j < q.size(); ++j) {
      if (q[j].is_zero()) continue;
      next[j] += cvar * derivative(q[j]);
      if (j + 1 < next.size())
        next[j + 1] += ParamPoly(beta + Rational(long(j))) * cvar * q[j];
    }
    q.swap(next);
  }
  // Multiply by (1-c)^beta and evaluate: mu = sum_j q_j(c) (1-c)^{-j}.
  Rational one_minus_c = Rational(1) - c;
  Rational mu(0), pw(1);
  for (size_t j = 0; j < q.size(); ++j) {
    mu += q[j].eval(c) * pw.inv() * Rational(1);
    pw *= one_minus_c;
  }
  return mu;
}

double meixner1_moment_series_float(int n, const Rational& beta, const Rational& c) {
  double cb = c.to_double(), b = beta.to_double();
  double sum = 0.0, poch_over_fact = 1.0, ck = 1.0;
  for (int k = 0; k <= 200; ++k) {
    if (k > 0) {
      poch_over_fact *= (b + (k - 1)) / k;
      ck *= cb;
    }
    sum += std::pow(double(k), double(n)) * ck * poch_over_fact;
  }
  return std::pow(1.0 - cb, b) * sum;
}

ParamPoly meixner2_moment_poly(int two_n) {
  if (two_n < 0 || two_n % 2 != 0)
    throw usage_error("meixner2_moment: index must be even and non-negative");
  ParamSeries sec_eta =
      series_pow_param(named_series("sec", two_n), ParamPoly::variable("eta"));
  return ParamPoly(factorial(unsigned(two_n))) * sec_eta.coeff(two_n);
}

Rational meixner2_moment(int two_n, const Rational& eta) {
  if (two_n < 0) throw usage_error("meixner2_moment: negative index");
  if (two_n % 2 == 1) return Rational(0);  // odd moments vanish
  return meixner2_moment_poly(two_n).eval(eta);
}

ParamPoly laguerre_inverse_genfunc(int n, int d) {
  if (d < 0 || d > n) throw usage_error("laguerre_inverse_genfunc: need 0 <= d <= n");
  int order = n;
  RationalSeries one = RationalSeries::constant(order, Rational(1));
  RationalSeries geom = one / (one - RationalSeries::identity(order));  // 1/(1-t)
  ParamSeries f = series_pow_param(geom, ParamPoly::variable("alpha") + ParamPoly(Rational(1)));
  RationalSeries gd = one;
  RationalSeries g = RationalSeries::identity(order) * geom;  // t/(1-t)
  for (int j = 0; j < d; ++j) gd = gd * g;
  ParamSeries total = f * lift(gd);
  return ParamPoly(factorial(unsigned(n)) / factorial(unsigned(d))) * total.coeff(n);
}

Rational meixner1_inverse_genfunc(int n, int d, const Rational& beta, const Rational& c) {
  if (d < 0 || d > n) throw usage_error("meixner1_inverse_genfunc: need 0 <= d <= n");
  int order = n;
  RationalSeries one = RationalSeries::constant(order, Rational(1));
  RationalSeries et = named_series("exp", order);
  RationalSeries denom = one - et.scaled(c);  // 1 - c e^t, constant term 1-c
  RationalSeries f = (RationalSeries::constant(order, Rational(1) - c) / denom).pow(beta);
  RationalSeries g = (et - one).scaled(Rational(1) - c) / denom;
  RationalSeries gd = one;
  for (int j = 0; j < d; ++j) gd = gd * g;
  return factorial(unsigned(n)) / factorial(unsigned(d)) * (f * gd).coeff(n);
}

ParamPoly meixner2_inverse_genfunc(int n, int d) {
  if (d < 0 || d > n) throw usage_error("meixner2_inverse_genfunc: need 0 <= d <= n");
  int order = n;
  ParamSeries f = series_pow_param(named_series("sec", order), ParamPoly::variable("eta"));
  RationalSeries tand = RationalSeries::constant(order, Rational(1));
  RationalSeries tan = named_series("tan", order);
  for (int j = 0; j < d; ++j) tand = tand * tan;
  ParamSeries total = f * lift(tand);
  return ParamPoly(factorial(unsigned(n)) / factorial(unsigned(d))) * total.coeff(n);
}

Rational meixner2_inverse_genfunc(int n, int d, const Rational& delta, const Rational& eta) {
  if (d < 0 || d > n) throw usage_error("meixner2_inverse_genfunc: need 0 <= d <= n");
  int order = n;
  RationalSeries one = RationalSeries::constant(order, Rational(1));
  RationalSeries tan = named_series("tan", order);
  RationalSeries sec = named_series("sec", order);
  RationalSeries denom = one - tan.scaled(delta);  // 1 - delta tan t
  RationalSeries base = (sec * sec) / (denom * denom);
  RationalSeries f = base.pow(eta / Rational(2));
  RationalSeries g = tan / denom;
  RationalSeries gd = one;
  for (int j = 0; j < d; ++j) gd = gd * g;
  return factorial(unsigned(n)) / factorial(unsigned(d)) * (f * gd).coeff(n);
}

std::string Classification::kind_name() const {
  switch (kind) {
    case Kind::Laguerre: return "laguerre";
    case Kind::LaguerreReflected: return "laguerre_reflected";
    case Kind::Meixner1: return "meixner1";
    case Kind::Meixner2: return "meixner2";
  }
  return "?";
}

Classification plmx_classify(const Rational& k, const Rational& c) {
  if (k.sign() <= 0) throw domain_error("plmx_classify: k must be positive");
  Classification r;
  r.k = k;
  r.c = c;
  r.shift = Surd();
  if (c == Rational(1) || c == Rational(-1)) {
    r.kind = c == Rational(1) ? Classification::Kind::Laguerre
                              : Classification::Kind::LaguerreReflected;
    r.family_second = Rational(2) * k - Rational(1);  // alpha
    r.scale = Surd(c);  // the c = -1 case flips the sign of x
    return r;
  }
  if (c.abs() > Rational(1)) {
    r.kind = Classification::Kind::Meixner1;
    r.family_second = Rational(2) * k;  // beta
    Rational disc = c * c - Rational(1);
    r.scale = Surd::normalize(Rational(2), disc);            // 2 sqrt(c^2-1)
    r.shift = Surd::normalize(Rational(2) * k, disc);        // b' = (b - shift)/scale
    if (auto s = rational_sqrt(disc)) r.meixner1_c = (c - *s) / (c + *s);
    return r;
  }
  r.kind = Classification::Kind::Meixner2;
  r.family_second = Rational(2) * k;  // eta
  Rational disc = Rational(1) - c * c;
  r.scale = Surd::normalize(Rational(1), disc);  // sqrt(1-c^2)
  if (auto s = rational_sqrt(disc)) r.meixner2_delta = c / *s;
  return r;
}

std::pair<Rational, Rational> carlitz_relation_check(const Rational& k, int m) {
  if (m < 0) throw usage_error("carlitz_relation_check: negative m");
  Rational lhs = moments(carlitz_recurrence(k), 2 * m)[size_t(2 * m)];
  Rational sign = m % 2 == 0 ? Rational(1) : Rational(-1);
  Rational rhs = sign * meixner2_moment(2 * m, Rational(2) * k);
  return {lhs, rhs};
}

}  // namespace opx
