#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "opx/families.hpp"
#include "opx/favard.hpp"
#include "opx/permoracle.hpp"

using namespace opx;

TEST_CASE("zig-zag sums weighted by left-to-right minima") {
  ParamPoly eta = ParamPoly::variable("eta");
  CHECK(zigzag_moment_poly(0) == ParamPoly(Rational(1)));
  CHECK(zigzag_moment_poly(2) == eta);
  CHECK(zigzag_moment_poly(4) ==
        ParamPoly::make("eta", {Rational(0), Rational(2), Rational(3)}));
  CHECK(zigzag_moment(6, Rational(1)) == Rational(61));
  CHECK_THROWS_AS(zigzag_moment_poly(3), usage_error);
  CHECK_THROWS_AS(zigzag_moment_poly(12), usage_error);
}

TEST_CASE("zig-zag counts of odd length") {
  CHECK(tangent_count(1) == Rational(1));
  CHECK(tangent_count(3) == Rational(2));
  CHECK(tangent_count(5) == Rational(16));
  CHECK(tangent_count(7) == Rational(272));
  CHECK_THROWS_AS(tangent_count(4), usage_error);
}

TEST_CASE("binomial recursion reproduces the enumeration") {
  EulerTable t = euler_table(4);
  CHECK(t.e[1][1] == Rational(1));
  CHECK(t.e[2][1] == Rational(2));
  CHECK(t.e[2][2] == Rational(3));
  CHECK(t.tangent[1] == Rational(2));
  for (int n = 0; n <= 4; ++n) {
    ParamPoly z = zigzag_moment_poly(2 * n);
    for (int k = 0; k <= n; ++k)
      CHECK(t.e[size_t(n)][size_t(k)] == z.coeff(k));
  }
  CHECK_THROWS_AS(euler_table(7), usage_error);
}

TEST_CASE("descent-weighted sums") {
  CHECK(descent_weighted_sum(2, Rational(2)) == Rational(3));
  CHECK(descent_weighted_sum(3, Rational(2)) == Rational(13));
  CHECK(descent_weighted_sum(5, Rational(0)) == Rational(1));
  // w = 1 collapses to counting all of S_n.
  CHECK(descent_weighted_sum(6, Rational(1)) == factorial(6));
  for (int n = 0; n <= 7; ++n)
    CHECK(descent_weighted_sum(n, Rational(2)) ==
          meixner1_moment(n, Rational(1), Rational(1, 2)));
}

TEST_CASE("odd cycle statistics") {
  auto c3 = odd_cycle_counts(3);
  CHECK(c3[1] == Rational(5));
  CHECK(c3[3] == Rational(1));
  CHECK(odd_cycle_counts(1)[1] == Rational(1));

  for (int n = 0; n <= 7; ++n) {
    auto c = odd_cycle_counts(n);
    Rational total(0);
    for (int j = 0; j <= n; ++j) {
      total += c[size_t(j)];
      if ((n - j) % 2 == 1) CHECK(c[size_t(j)] == Rational(0));
    }
    CHECK(total == factorial(unsigned(n)));
  }
}

TEST_CASE("odd cycle counts appear in the flat-free polynomial coefficients") {
  auto p = build_ops(meixner2_recurrence<Rational>(Rational(0), Rational(1)), 8);
  for (int n = 0; n <= 8; ++n) {
    auto c = odd_cycle_counts(n);
    for (int j = 0; j <= n; ++j)
      CHECK(p[size_t(n)].coeff(j).abs() == c[size_t(j)]);
  }
}

TEST_CASE("zig-zag sums equal the parametric secant moments") {
  for (int two_n = 0; two_n <= 8; two_n += 2)
    CHECK(zigzag_moment_poly(two_n) == meixner2_moment_poly(two_n));
}
