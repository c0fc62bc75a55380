#include <doctest.h>

#include <random>

#include "dmult/error.hpp"
#include "helpers.hpp"

using namespace dmult;
using testing_support::eval;

namespace {

Poly2 random_poly(std::mt19937_64& rng, int terms, int span) {
  std::uniform_int_distribution<int> e(0, span), c(-3, 3);
  Poly2 p;
  for (int k = 0; k < terms; ++k) p += Poly2::monomial(e(rng), e(rng) - span / 2, c(rng));
  return p;
}

Poly2 binomial(int a, int b, int sign) { return Poly2(1) - Poly2::monomial(a, b, sign); }

}  // namespace

TEST_CASE("Laurent polynomials in t^{1/2}") {
  LaurentT one(1);
  LaurentT tinv = LaurentT::monomial(-2);
  LaurentT c = one - tinv;
  CHECK(c.to_string() == "1 - t^{-1}");
  CHECK(c.to_string(true) == "-t^{-1} + 1");
  CHECK(LaurentT::monomial(-1).to_string() == "t^{-1/2}");
  CHECK((LaurentT::monomial(2) - one).to_string(true) == "-1 + t");
  CHECK(limit_t_infinity(c) == 1);
  CHECK(limit_t_infinity(tinv) == 0);
  CHECK_THROWS_AS(limit_t_infinity(LaurentT::monomial(1)), InvariantError);
  CHECK(evaluate_t(LaurentT::monomial(2) - one, 9) == 8);
  CHECK(evaluate_t(LaurentT::monomial(1), 9) == 3);
  CHECK_THROWS_AS(evaluate_t(LaurentT::monomial(1), 2), DomainError);
  LaurentT q;
  CHECK(LaurentT::try_divide(LaurentT::monomial(4) - one, LaurentT::monomial(2) - one, q));
  CHECK(q == LaurentT::monomial(2) + one);
  CHECK_FALSE(LaurentT::try_divide(LaurentT::monomial(4) - one, LaurentT::monomial(2) + one + one, q));
}

TEST_CASE("bivariate gcd and exact division") {
  Poly2 a = binomial(1, 1, 1) * binomial(2, 0, -1);
  Poly2 b = binomial(1, 1, 1) * (Poly2(1) + Poly2::monomial(0, 1) + Poly2::monomial(1, 0));
  Poly2 g = gcd(a, b);
  CHECK(g.terms().back().c == 1);
  CHECK(g.size() == 2);
  CHECK(exact_divide(a, g) * g == a);
  Poly2 q;
  CHECK(try_divide(a.shifted(-3, 2), binomial(2, 0, -1), q));
  CHECK(q * binomial(2, 0, -1) == a.shifted(-3, 2));
  CHECK_FALSE(try_divide(a, binomial(0, 1, 1), q));
}

TEST_CASE("RatQT arithmetic agrees with evaluation at rational points") {
  std::mt19937_64 rng(7);
  const Rational q0 = make_rational(7, 3), t0 = make_rational(-5, 2);
  for (int trial = 0; trial < 40; ++trial) {
    RatQT a(random_poly(rng, 4, 3), binomial(1 + trial % 3, trial % 2, 1) * binomial(2, -1, -1));
    RatQT b(random_poly(rng, 3, 2), binomial(1, 1, 1) * (Poly2(2) + Poly2::monomial(1, 1)));
    if (b.is_zero()) continue;
    const Rational va = eval(a, q0, t0), vb = eval(b, q0, t0);
    CHECK(eval(a + b, q0, t0) == va + vb);
    CHECK(eval(a - b, q0, t0) == va - vb);
    CHECK(eval(a * b, q0, t0) == va * vb);
    CHECK(eval(a / b, q0, t0) == va / vb);
  }
}

TEST_CASE("RatQT normal form is unique") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Poly2 n = random_poly(rng, 4, 3);
    Poly2 d = binomial(2, 1, 1) * binomial(1, 0, -1);
    Poly2 extra = Poly2(3) + Poly2::monomial(1, 2) + Poly2::monomial(0, 1, -1);
    // The factored path and the general gcd path land on the same form.
    RatQT fast(n, d);
    RatQT general(n * extra, d * extra);
    CHECK(fast == general);
    // Association order does not matter.
    RatQT x(random_poly(rng, 3, 2), binomial(1, 1, 1));
    RatQT y(random_poly(rng, 3, 2), binomial(2, 0, -1));
    RatQT z(random_poly(rng, 3, 2), binomial(1, -1, 1));
    CHECK((x + y) + z == x + (y + z));
    CHECK((x * y) * z == x * (y * z));
  }
  RatQT r(Poly2::monomial(1, 0) - Poly2(1), Poly2::monomial(2, 0) - Poly2(1));
  CHECK(r.num() == Poly2(1));
  CHECK(r.den() == Poly2::monomial(1, 0) + Poly2(1));
  CHECK(r.den().terms().back().c == 1);
  // monomials move into the numerator
  RatQT s(Poly2(1), Poly2::monomial(3, 1, 2));
  CHECK(s.is_polynomial());
  CHECK(s.num() == Poly2::monomial(-3, -1, make_rational(1, 2)));
}

TEST_CASE("binomial factorization") {
  auto f = factor_binomial(Poly2(1) - Poly2::monomial(4, 2));
  REQUIRE(f);
  // 1 - (QT^{1/2}... )^2: Phi_1 and Phi_2 of Q^2 T
  CHECK(f->second.size() == 2);
  auto g = factor_binomial(Poly2(1) + Poly2::monomial(0, 3));
  REQUIRE(g);
  CHECK(g->second.size() == 2);  // Phi_2, Phi_6
  CHECK_FALSE(factor_binomial(Poly2(1) - Poly2::monomial(1, 0, 2)));
  CHECK_FALSE(factor_binomial(Poly2(1) + Poly2::monomial(1, 0) + Poly2::monomial(0, 1)));
}

TEST_CASE("limit q to infinity") {
  // (qt - q)/(qt - 1) -> (t - 1)/t
  RatQT c(Poly2::monomial(1, 2) - Poly2::monomial(1, 0), Poly2::monomial(1, 2) - Poly2(1));
  CHECK(limit_q_infinity(c) == LaurentT(1) - LaurentT::monomial(-2));
  CHECK(limit_q_infinity(RatQT(Poly2(1), Poly2::monomial(1, 0) - Poly2(1))).is_zero());
  CHECK_THROWS_AS(limit_q_infinity(RatQT(Poly2::monomial(1, 0))), InvariantError);
  CHECK_THROWS_AS(limit_q_infinity(RatQT(Poly2::monomial(1, 0), Poly2::monomial(1, 0) + Poly2::monomial(1, 1) + 1)),
                  InvariantError);
  // Laurent embedding round-trips.
  LaurentT l = LaurentT::monomial(-3, 2) + LaurentT(5);
  CHECK(limit_q_infinity(RatQT(l)) == l);
}

TEST_CASE("weight series") {
  CharSeries a = CharSeries::monomial(Weight{1}, 2) + CharSeries::monomial(Weight{-1}, 1);
  CharSeries b = CharSeries::monomial(Weight{-1}, -1);
  CharSeries s = a + b;
  CHECK(s.size() == 1);
  CHECK(s.coefficient(Weight{1}) == 2);
  CHECK((a * a).coefficient(Weight{0}) == 4);
  CHECK(a.shifted(Weight{1}).coefficient(Weight{2}) == 2);
}
