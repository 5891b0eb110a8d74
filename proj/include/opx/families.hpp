#ifndef OPX_FAMILIES_HPP
#define OPX_FAMILIES_HPP

#include <optional>
#include <string>

#include "opx/favard.hpp"
#include "opx/parampoly.hpp"
#include "opx/rational.hpp"
#include "opx/series.hpp"
#include "opx/surd.hpp"
#include "opx/tridiag.hpp"

namespace opx {

// ---------------------------------------------------------------------------
// Recurrences of the named families.  Templated over the scalar ring so that
// a family parameter may be symbolic (ParamPoly) or numeric (Rational).
// ---------------------------------------------------------------------------

// Monic Laguerre: b_n = 2n + alpha + 1, lambda_n = n(n + alpha).
template <class S>
RecurrencePair<S> laguerre_recurrence(const S& alpha) {
  return {[alpha](int n) { return S(2 * n + 1) + alpha; },
          [alpha](int n) { return S(n) * (S(n) + alpha); }, false};
}

// Monic Meixner of the first kind:
// b_n = ((1+c)n + beta*c) / (1-c), lambda_n = c n (n+beta-1) / (1-c)^2.
RecurrencePair<Rational> meixner1_recurrence(const Rational& beta, const Rational& c);

// Monic Meixner of the second kind:
// b_n = (2n + eta) delta, lambda_n = (delta^2 + 1) n (n + eta - 1).
template <class S>
RecurrencePair<S> meixner2_recurrence(const S& delta, const S& eta) {
  return {[delta, eta](int n) { return (S(2 * n) + eta) * delta; },
          [delta, eta](int n) { return (delta * delta + S(1)) * S(n) * (S(n - 1) + eta); },
          false};
}

// OPS attached to pi^+_k(-C) + c*pi^+_k(H) + pi^+_k(B):
// b_n = 2c(k+n), lambda_n = n(n + 2k - 1).  The negative series gives the
// same family at -c.
template <class S>
RecurrencePair<S> su11_recurrence(const S& k, const S& c, bool positive = true) {
  S sign = positive ? S(1) : S(-1);
  return {[k, c, sign](int n) { return S(2) * sign * c * (k + S(n)); },
          [k](int n) { return S(n) * (S(n - 1) + S(2) * k); }, false};
}

// Generalized Hermite: b = 0, lambda_{2n+1} = 2n + 1 + alpha, lambda_{2n} = 2n.
RecurrencePair<Rational> hermite_recurrence(const Rational& alpha);

// Family attached to pi^+_k(B + C): b = 0, lambda_n = -n(n + 2k - 1).
RecurrencePair<Rational> carlitz_recurrence(const Rational& k);

// ---------------------------------------------------------------------------
// Operators
// ---------------------------------------------------------------------------

// T = pi^+_k(-C) + c*pi^+_k(H) + pi^+_k(B):
// l_n = sqrt((n+1)(2k+n)), d_n = 2c(k+n), u_n = sqrt((n+1)(2k+n)).
TridiagonalOperator su11_plus_operator(const Rational& k, const Rational& c);
TridiagonalOperator su11_minus_operator(const Rational& k, const Rational& c);

// pi_beta action (even/odd restriction of the Sukumar-Hodges L, R, S):
// l_n = u_n = sqrt((n+1)(n+beta)), d_n = c(2n+beta).  beta = 0 is allowed;
// the first row and column then vanish.
TridiagonalOperator pibeta_operator(const Rational& beta, const Rational& c);

// A + A^dagger: l_{2n} = u_{2n} = sqrt(2n+1+alpha), l_{2n+1} = u_{2n+1} = sqrt(2n+2).
TridiagonalOperator hermite_operator(const Rational& alpha);

// pi^+_k(B + C): l_n = sqrt((n+1)(2k+n)), u_n = -sqrt((n+1)(2k+n)), d = 0.
TridiagonalOperator carlitz_operator(const Rational& k);

// Symmetric Jacobi split of an arbitrary rational recurrence:
// l_n = u_n = sqrt(lambda_{n+1}), d_n = b_n.
TridiagonalOperator jacobi_operator(const RecurrencePair<Rational>& rec);

// ---------------------------------------------------------------------------
// Sukumar-Hodges matrix entries
// ---------------------------------------------------------------------------

// <e_row, (L+R)^m e_col> (or L+R+S when with_s), alpha in [-1, 1].  Routed by
// parity to pi_{(alpha+1)/2} (even chain) and pi_{(alpha+3)/2} (odd chain);
// zero when row and col have different parities.
Surd sh_entry(const Rational& alpha, int m, int row, int col, bool with_s = false);

// ---------------------------------------------------------------------------
// Closed forms
// ---------------------------------------------------------------------------

// mu_n = (alpha+1)_n.
template <class S>
S laguerre_moment(int n, const S& alpha) {
  return pochhammer(alpha + S(1), n);
}

// mu_{n,d} = binom(n,d) (alpha+1+d)_{n-d}.
template <class S>
S laguerre_inverse(int n, int d, const S& alpha) {
  if (d < 0 || d > n) throw usage_error("laguerre_inverse: need 0 <= d <= n");
  return S(binomial(unsigned(n), unsigned(d))) * pochhammer(alpha + S(1 + d), n - d);
}

// Exact Meixner-1 moment by the theta-operator method (theta = c d/dc applied
// to (1-c)^{-beta}, keeping the closed form q(c) (1-c)^{-beta-j}); no series
// truncation is involved.
Rational meixner1_moment(int n, const Rational& beta, const Rational& c);

// Float sanity route: 200-term truncation of (1-c)^beta sum k^n c^k (beta)_k / k!.
double meixner1_moment_series_float(int n, const Rational& beta, const Rational& c);

// mu_{2n}(0, eta) = (2n)! [t^{2n}] sec^eta, as a polynomial in eta.
// Odd moments vanish and are reported as zero.
ParamPoly meixner2_moment_poly(int two_n);
Rational meixner2_moment(int two_n, const Rational& eta);

// Inverse coefficients via the Sheffer generating functions.
ParamPoly laguerre_inverse_genfunc(int n, int d);                 // symbolic alpha
Rational meixner1_inverse_genfunc(int n, int d, const Rational& beta, const Rational& c);
ParamPoly meixner2_inverse_genfunc(int n, int d);                 // delta = 0, symbolic eta
Rational meixner2_inverse_genfunc(int n, int d, const Rational& delta, const Rational& eta);

// ---------------------------------------------------------------------------
// Classification of p[k,c] (the Meixner-method trichotomy)
// ---------------------------------------------------------------------------

struct Classification {
  enum class Kind { Laguerre, LaguerreReflected, Meixner1, Meixner2 };
  Kind kind;
  Rational k;
  Rational c;
  // Transport: b'_n = (b_n - shift)/scale, lambda'_n = lambda_n/scale^2 maps
  // p[k,c] onto the classified family's recurrence.
  Surd scale;
  Surd shift;
  Rational family_second;               // Laguerre alpha = 2k-1, or beta/eta = 2k
  std::optional<Rational> meixner1_c;   // rational iff sqrt(c^2-1) is rational
  std::optional<Rational> meixner2_delta;  // rational iff sqrt(1-c^2) is rational
  std::string kind_name() const;
};

Classification plmx_classify(const Rational& k, const Rational& c);

// lhs: mu_{2m} of the recurrence with lambda_n = -n(n+2k-1);
// rhs: (-1)^m * (2m)! [t^{2m}] sec^{2k}.
std::pair<Rational, Rational> carlitz_relation_check(const Rational& k, int m);

}  // namespace opx

#endif
