#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "opx/series.hpp"

using namespace opx;

namespace {

RationalSeries one_plus_t(int order) {
  RationalSeries s = RationalSeries::constant(order, Rational(1));
  s.set_coeff(1, Rational(1));
  return s;
}

std::mt19937 rng(777);

Rational rand_rational() {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("series arithmetic") {
  int order = 8;
  RationalSeries a = one_plus_t(order);
  RationalSeries b = RationalSeries::constant(order, Rational(1)) - RationalSeries::identity(order);
  RationalSeries prod = a * b;  // (1+t)(1-t) = 1 - t^2
  CHECK(prod.coeff(0) == Rational(1));
  CHECK(prod.coeff(1) == Rational(0));
  CHECK(prod.coeff(2) == Rational(-1));
  CHECK(prod.coeff(3) == Rational(0));

  RationalSeries geom = RationalSeries::constant(order, Rational(1)) / b;
  for (int k = 0; k <= order; ++k) CHECK(geom.coeff(k) == Rational(1));

  RationalSeries sec = RationalSeries::constant(order, Rational(1)) / named_series("cos", order);
  CHECK(sec.coeff(4) == Rational(5, 24));

  CHECK_THROWS_AS(a / RationalSeries::identity(order), domain_error);
}

TEST_CASE("named series") {
  RationalSeries tan = named_series("tan", 5);
  CHECK(tan.coeff(0) == Rational(0));
  CHECK(tan.coeff(1) == Rational(1));
  CHECK(tan.coeff(3) == Rational(1, 3));
  CHECK(tan.coeff(5) == Rational(2, 15));

  RationalSeries sec = named_series("sec", 6);
  CHECK(sec.coeff(0) == Rational(1));
  CHECK(sec.coeff(2) == Rational(1, 2));
  CHECK(sec.coeff(4) == Rational(5, 24));
  CHECK(sec.coeff(6) == Rational(61, 720));

  RationalSeries ex = named_series("exp", 2);
  CHECK(ex.coeff(0) == Rational(1));
  CHECK(ex.coeff(1) == Rational(1));
  CHECK(ex.coeff(2) == Rational(1, 2));

  CHECK_THROWS_AS(named_series("cosh", 4), usage_error);
}

TEST_CASE("composition") {
  int order = 8;
  RationalSeries ex = named_series("exp", order);
  CHECK(ex.compose(RationalSeries(order)).coeff(0) == Rational(1));

  // t/(1+t) composed with t/(1-t) gives back t.
  RationalSeries t = RationalSeries::identity(order);
  RationalSeries f = t / one_plus_t(order);
  RationalSeries g = t / (RationalSeries::constant(order, Rational(1)) - t);
  RationalSeries comp = f.compose(g);
  for (int k = 0; k <= order; ++k) CHECK(comp.coeff(k) == t.coeff(k));

  // exp(-log cos t) = sec t.
  RationalSeries sec_again = (-named_series("cos", order).log()).exp();
  CHECK(sec_again.coeff(2) == Rational(1, 2));
  CHECK(sec_again.coeff(4) == Rational(5, 24));

  CHECK_THROWS_AS(f.compose(one_plus_t(order)), domain_error);
}

TEST_CASE("reversion") {
  int order = 10;
  RationalSeries t = RationalSeries::identity(order);
  RationalSeries f = t / one_plus_t(order);
  RationalSeries g = t / (RationalSeries::constant(order, Rational(1)) - t);
  RationalSeries rev = f.revert();
  for (int k = 0; k <= order; ++k) CHECK(rev.coeff(k) == g.coeff(k));

  rev = t.revert();
  for (int k = 0; k <= order; ++k) CHECK(rev.coeff(k) == t.coeff(k));

  // Compositional inverse of arctan(t/(1+dt)) at d = 1/2 is tan/(1 - (1/2)tan).
  Rational d(1, 2);
  RationalSeries inner = t / (RationalSeries::constant(order, Rational(1)) + t.scaled(d));
  RationalSeries lhs = named_series("arctan", order).compose(inner).revert();
  RationalSeries tan = named_series("tan", order);
  RationalSeries rhs =
      tan / (RationalSeries::constant(order, Rational(1)) - tan.scaled(d));
  for (int k = 0; k <= order; ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));

  CHECK_THROWS_AS(one_plus_t(order).revert(), domain_error);
  CHECK_THROWS_AS((t * t).revert(), domain_error);
}

TEST_CASE("reversion and exp/log inverses on randomized series") {
  int order = 9;
  for (int trial = 0; trial < 10; ++trial) {
    RationalSeries f(order);
    f.set_coeff(1, rand_rational() + Rational(10));  // keep f'(0) nonzero
    for (int k = 2; k <= order; ++k) f.set_coeff(k, rand_rational());
    RationalSeries comp = f.compose(f.revert());
    for (int k = 0; k <= order; ++k)
      CHECK(comp.coeff(k) == (k == 1 ? Rational(1) : Rational(0)));

    RationalSeries s(order);
    for (int k = 1; k <= order; ++k) s.set_coeff(k, rand_rational());
    RationalSeries back = (RationalSeries::constant(order, Rational(1)) + s).log().exp();
    for (int k = 1; k <= order; ++k) CHECK(back.coeff(k) == s.coeff(k));
  }
}

TEST_CASE("sec squared is one plus tan squared") {
  int order = 12;
  RationalSeries sec = named_series("sec", order), tan = named_series("tan", order);
  RationalSeries lhs = sec * sec;
  RationalSeries rhs = RationalSeries::constant(order, Rational(1)) + tan * tan;
  for (int k = 0; k <= order; ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
}

TEST_CASE("parametric powers of sec") {
  ParamSeries s = series_pow_param(named_series("sec", 6), ParamPoly::variable("eta"));
  CHECK(s.coeff(2) == ParamPoly::make("eta", {Rational(0), Rational(1, 2)}));
  ParamPoly e4 = ParamPoly(factorial(4)) * s.coeff(4);
  CHECK(e4 == ParamPoly::make("eta", {Rational(0), Rational(2), Rational(3)}));

  ParamSeries trivial = series_pow_param(RationalSeries::constant(4, Rational(1)),
                                         ParamPoly::variable("eta"));
  CHECK(trivial.coeff(0) == ParamPoly(Rational(1)));
  for (int k = 1; k <= 4; ++k) CHECK(trivial.coeff(k) == ParamPoly());

  CHECK_THROWS_AS(series_pow_param(named_series("tan", 4), ParamPoly::variable("eta")),
                  domain_error);
}

TEST_CASE("rational powers") {
  int order = 8;
  RationalSeries base = one_plus_t(order);
  RationalSeries sqrt = base.pow(Rational(1, 2));
  RationalSeries square = sqrt * sqrt;
  for (int k = 0; k <= order; ++k) CHECK(square.coeff(k) == base.coeff(k));
}
