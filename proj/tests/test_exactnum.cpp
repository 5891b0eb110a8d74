#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "opx/parampoly.hpp"
#include "opx/rational.hpp"
#include "opx/surd.hpp"

using namespace opx;

namespace {

std::mt19937 rng(12345);

Rational rand_rational() {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("rational parsing and reduction") {
  CHECK(Rational::parse("3/6") == Rational(1, 2));
  CHECK(Rational::parse("-4/2") == Rational(-2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK(Rational(2, -4) == Rational(-1, 2));
  CHECK(Rational(-1, 2).den() == 2);  // denominator stays positive
  CHECK_THROWS_AS(Rational::parse(""), usage_error);
  CHECK_THROWS_AS(Rational::parse("1/2/3"), usage_error);
  CHECK_THROWS_AS(Rational(1, 0), domain_error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), domain_error);
  CHECK_THROWS_AS(Rational(0).inv(), domain_error);
}

TEST_CASE("rational field axioms on randomized triples") {
  for (int trial = 0; trial < 50; ++trial) {
    Rational a = rand_rational(), b = rand_rational(), c = rand_rational();
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + (-a) == Rational(0));
    if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));
  }
}

TEST_CASE("factorial and binomial helpers") {
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(5) == Rational(120));
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(3, 7) == Rational(0));
}

TEST_CASE("surd normalization") {
  Surd s = Surd::normalize(Rational(1), Rational(12));
  CHECK(s.coef() == Rational(2));
  CHECK(s.radicand() == Rational(3));

  s = Surd::normalize(Rational(1), Rational(9, 4));
  CHECK(s.coef() == Rational(3, 2));
  CHECK(s.radicand() == Rational(1));
  CHECK(s.is_rational());

  s = Surd::normalize(Rational(-1), Rational(1, 2));
  CHECK(s.coef() == Rational(-1, 2));
  CHECK(s.radicand() == Rational(2));

  CHECK(Surd::normalize(Rational(5), Rational(0)).is_zero());
  CHECK(Surd::normalize(Rational(0), Rational(7)).is_zero());
  CHECK_THROWS_AS(Surd::normalize(Rational(1), Rational(-2)), domain_error);
}

TEST_CASE("surd squares are rational") {
  for (long rad = 1; rad <= 30; ++rad) {
    Surd s = Surd::normalize(rand_rational() + Rational(1), Rational(rad));
    Surd sq = s * s;
    CHECK(sq.radicand() == Rational(1));
    CHECK(sq.coef() == s.coef() * s.coef() * s.radicand());
  }
}

TEST_CASE("surd arithmetic") {
  Surd a = Surd::normalize(Rational(2), Rational(3));
  Surd b = Surd::normalize(Rational(5), Rational(3));
  CHECK((a + b).coef() == Rational(7));
  CHECK((a - b).coef() == Rational(-3));
  CHECK((a + (-a)).is_zero());
  CHECK(a * a.inv() == Surd(Rational(1)));
  CHECK((a * Rational(0)).is_zero());

  Surd c = Surd::normalize(Rational(1), Rational(2));
  CHECK_THROWS_AS(a + c, domain_error);  // sqrt(3) + sqrt(2) not representable
  CHECK_THROWS_AS(Surd().inv(), domain_error);
  CHECK_THROWS_AS(c.to_rational(), domain_error);
  CHECK(c.to_string() == "1*sqrt(2)");
}

TEST_CASE("pochhammer over both scalar rings") {
  ParamPoly alpha = ParamPoly::variable("alpha");
  CHECK(pochhammer(alpha + ParamPoly(1), 0) == ParamPoly(Rational(1)));
  ParamPoly expect = ParamPoly::make("alpha", {Rational(2), Rational(3), Rational(1)});
  CHECK(pochhammer(alpha + ParamPoly(1), 2) == expect);  // alpha^2+3*alpha+2
  CHECK(pochhammer(Rational(1), 5) == Rational(120));
}

TEST_CASE("parampoly evaluation is a ring homomorphism") {
  std::uniform_int_distribution<int> deg(0, 4);
  auto rand_poly = [&] {
    std::vector<Rational> c;
    for (int k = 0, d = deg(rng); k <= d; ++k) c.push_back(rand_rational());
    return ParamPoly::make("t", std::move(c));
  };
  for (int trial = 0; trial < 30; ++trial) {
    ParamPoly p = rand_poly(), q = rand_poly();
    Rational x = rand_rational();
    CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
    CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
  }
}

TEST_CASE("parampoly rendering and parameter discipline") {
  ParamPoly p = pochhammer(ParamPoly::variable("alpha") + ParamPoly(1), 2);
  CHECK(p.to_string() == "alpha^2+3*alpha+2");
  CHECK(ParamPoly().to_string() == "0");
  CHECK(ParamPoly(Rational(-5)).to_string() == "-5");

  ParamPoly other = ParamPoly::variable("eta");
  CHECK_THROWS_AS(p * other, domain_error);  // univariate only
  CHECK_THROWS_AS(p.constant_value(), domain_error);
  CHECK_THROWS_AS(p.inv(), domain_error);
  CHECK(ParamPoly(Rational(2)).inv() == ParamPoly(Rational(1, 2)));
}
