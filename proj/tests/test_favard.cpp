#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "opx/families.hpp"
#include "opx/favard.hpp"
#include "opx/permoracle.hpp"

using namespace opx;

namespace {

std::mt19937 rng(20240902);

Rational rand_nonzero() {
  std::uniform_int_distribution<long> num(1, 9), den(1, 4), sign(0, 1);
  return Rational(sign(rng) ? num(rng) : -num(rng), den(rng));
}

RecurrencePair<Rational> rand_recurrence(std::vector<Rational>& b,
                                         std::vector<Rational>& lam, int len,
                                         int zero_at = -1) {
  b.clear();
  lam.clear();
  for (int n = 0; n < len; ++n) b.push_back(rand_nonzero());
  for (int n = 1; n < len; ++n)
    lam.push_back(n == zero_at ? Rational(0) : rand_nonzero());
  return {table_fn(b), table_fn(lam, 1), false};
}

}  // namespace

TEST_CASE("monic sequences from the recurrence") {
  ParamPoly alpha = ParamPoly::variable("alpha");
  auto lag = build_ops(laguerre_recurrence<ParamPoly>(alpha), 2);
  CHECK(lag[0] == XPoly<ParamPoly>(ParamPoly(Rational(1))));
  // p_2 = x^2 - (2a+4)x + (a+1)(a+2)
  XPoly<ParamPoly> expect(std::vector<ParamPoly>{
      pochhammer(alpha + ParamPoly(1), 2),
      -(ParamPoly::make("alpha", {Rational(4), Rational(2)})), ParamPoly(Rational(1))});
  CHECK(lag[2] == expect);

  auto mx = build_ops(meixner2_recurrence<Rational>(Rational(0), Rational(1)), 3);
  CHECK(mx[3] == XPoly<Rational>(std::vector<Rational>{Rational(0), Rational(-5),
                                                       Rational(0), Rational(1)}));
}

TEST_CASE("ops flag enforces nonvanishing lambda") {
  std::vector<Rational> b, lam;
  RecurrencePair<Rational> rec = rand_recurrence(b, lam, 8, 3);
  CHECK_NOTHROW(build_ops(rec, 7));
  rec.ops_flag = true;
  CHECK_THROWS_AS(build_ops(rec, 7), domain_error);
  CHECK_THROWS_AS(rec.lambda_at(0), usage_error);
}

TEST_CASE("moments as path totals") {
  ParamPoly alpha = ParamPoly::variable("alpha");
  auto mu = moments(laguerre_recurrence<ParamPoly>(alpha), 6);
  CHECK(mu[0] == ParamPoly(Rational(1)));
  for (int n = 0; n <= 6; ++n) CHECK(mu[size_t(n)] == pochhammer(alpha + ParamPoly(1), n));

  auto fub = moments(meixner1_recurrence(Rational(1), Rational(1, 2)), 5);
  std::vector<long> want{1, 1, 3, 13, 75, 541};
  for (size_t n = 0; n < want.size(); ++n) CHECK(fub[n] == Rational(want[n]));

  RecurrencePair<Rational> dyck{[](int) { return Rational(0); },
                                [](int n) { return Rational(n); }, false};
  auto mu2 = moments(dyck, 6);
  CHECK(mu2[2] == Rational(1));
  CHECK(mu2[4] == Rational(3));
  CHECK(mu2[6] == Rational(15));
  CHECK(mu2[3] == Rational(0));
}

TEST_CASE("inverse coefficients") {
  ParamPoly alpha = ParamPoly::variable("alpha");
  auto q = inverse_coeffs(laguerre_recurrence<ParamPoly>(alpha), 4);
  CHECK(q[2][1] == ParamPoly::make("alpha", {Rational(4), Rational(2)}));  // 2(a+2)
  for (int n = 0; n <= 4; ++n) CHECK(q[size_t(n)][size_t(n)] == ParamPoly(Rational(1)));

  ParamPoly eta = ParamPoly::variable("eta");
  auto qm = inverse_coeffs(meixner2_recurrence<ParamPoly>(ParamPoly(), eta), 3);
  CHECK(qm[3][1] == ParamPoly::make("eta", {Rational(2), Rational(3)}));  // 3eta+2
}

TEST_CASE("the moment functional") {
  RecurrencePair<Rational> lag = laguerre_recurrence<Rational>(Rational(2));
  CHECK(functional_apply(lag, XPoly<Rational>(Rational(1))) == Rational(1));
  auto p = build_ops(lag, 2);
  CHECK(functional_apply(lag, p[1]) == Rational(0));
  CHECK(functional_apply(lag, XPoly<Rational>::x() * XPoly<Rational>::x()) ==
        Rational(12));  // (a+1)(a+2) at a=2
}

TEST_CASE("mixed moments match the path formula") {
  RecurrencePair<Rational> lag = laguerre_recurrence<Rational>(Rational(0));
  auto [l1, r1] = mixed_moment_check(lag, 0, 1, 2);
  CHECK(l1 == Rational(0));
  CHECK(r1 == Rational(0));
  auto [l2, r2] = mixed_moment_check(lag, 0, 2, 2);
  CHECK(l2 == lag.lambda_at(1) * lag.lambda_at(2));
  CHECK(l2 == r2);
  auto [l3, r3] = mixed_moment_check(lag, 2, 1, 1);
  CHECK(l3 == r3);

  for (int trial = 0; trial < 2; ++trial) {
    std::vector<Rational> b, lam;
    RecurrencePair<Rational> rec = rand_recurrence(b, lam, 16);
    for (int n = 0; n <= 4; ++n)
      for (int k = 0; k <= 4; ++k)
        for (int l = 0; l <= 4; ++l) {
          auto [lhs, rhs] = mixed_moment_check(rec, n, k, l);
          CHECK(lhs == rhs);
        }
  }
}

TEST_CASE("orthogonality and norms") {
  RecurrencePair<Rational> rec = su11_recurrence<Rational>(Rational(1), Rational(1, 3));
  auto p = build_ops(rec, 6);
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n) {
      Rational f = functional_apply(rec, p[size_t(m)] * p[size_t(n)]);
      if (m != n) {
        CHECK(f == Rational(0));
      } else {
        Rational norm(1);
        for (int i = 1; i <= n; ++i) norm *= rec.lambda_at(i);
        CHECK(f == norm);
        CHECK(!f.is_zero());
      }
    }
}

TEST_CASE("change of basis oracle") {
  std::vector<Rational> b{Rational(5, 2), Rational(-1)};
  std::vector<Rational> lam{Rational(3)};
  RecurrencePair<Rational> rec{table_fn(b), table_fn(lam, 1), false};
  auto q = change_of_basis_oracle(build_ops(rec, 1), 1);
  CHECK(q[0][0] == Rational(1));
  CHECK(q[1][0] == Rational(5, 2));  // x = p_1 + b_0

  for (int trial = 0; trial < 3; ++trial) {
    std::vector<Rational> bb, ll;
    RecurrencePair<Rational> r = rand_recurrence(bb, ll, 12, trial == 1 ? 3 : -1);
    auto lhs = inverse_coeffs(r, 8);
    auto rhs = change_of_basis_oracle(build_ops(r, 8), 8);
    for (size_t n = 0; n < lhs.size(); ++n)
      for (size_t k = 0; k < lhs[n].size(); ++k) CHECK(lhs[n][k] == rhs[n][k]);
  }
}

TEST_CASE("expansion holds even with a vanishing lambda") {
  std::vector<Rational> b, lam;
  RecurrencePair<Rational> rec = rand_recurrence(b, lam, 12, 3);
  auto p = build_ops(rec, 8);
  auto q = inverse_coeffs(rec, 8);
  for (int n = 0; n <= 8; ++n) {
    XPoly<Rational> sum;
    for (int k = 0; k <= n; ++k) sum = sum + p[size_t(k)].scaled(q[size_t(n)][size_t(k)]);
    XPoly<Rational> xn(Rational(1));
    for (int i = 0; i < n; ++i) xn = xn * XPoly<Rational>::x();
    CHECK(sum == xn);
  }
}

TEST_CASE("inverse table obeys Dyck parity when b vanishes") {
  std::vector<Rational> b(12, Rational(0)), lam;
  for (int n = 1; n < 12; ++n) lam.push_back(rand_nonzero());
  RecurrencePair<Rational> rec{table_fn(b), table_fn(lam, 1), false};
  auto q = inverse_coeffs(rec, 8);
  for (size_t n = 0; n < q.size(); ++n)
    for (size_t k = 0; k < q[n].size(); ++k)
      if ((n - k) % 2 == 1) CHECK(q[n][k] == Rational(0));
}
