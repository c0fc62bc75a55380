#include <doctest.h>

#include "dmult/error.hpp"
#include "helpers.hpp"

using namespace dmult;
using testing_support::ctx;
using testing_support::W;

TEST_CASE("dimension n") {
  const GeometryEngine& g = ctx("A1").geo;
  CHECK(g.n_dim(W("-1"), W("1")) == 1);
  CHECK(g.n_dim(W("-1"), W("-1")) == 2);
  CHECK(g.n_dim(W("1"), W("1")) == 0);
  CHECK_THROWS_AS(g.n_dim(W("1"), W("-1")), DomainError);
  CHECK_THROWS_AS(ctx("A2").geo.n_dim(W("1,0"), W("0,-1")), DomainError);
}

TEST_CASE("modular exponent") {
  CHECK(ctx("A1").geo.modular_exponent(W("1")) == 1);
  CHECK(ctx("A1").geo.modular_exponent(W("0")) == 0);
  CHECK(ctx("A2").geo.modular_exponent(W("1,1")) == 4);
}

TEST_CASE("denominator identity") {
  const GeometryEngine& g = ctx("A1").geo;
  CHECK(g.denominator_identity_check(W("-1"), W("1")));
  CHECK(g.denominator_identity_check(W("1"), W("1")));
  const TypeContext& a2 = ctx("A2");
  for (const Weight& l : {W("1,0"), W("-1,1"), W("0,-1")})
    for (const Weight& mu : a2.group.lower_set(l)) CHECK(a2.geo.denominator_identity_check(l, mu));
}

TEST_CASE("volume polynomials") {
  const GeometryEngine& g = ctx("A1").geo;
  CHECK(g.volume_poly(W("-1"), W("1")) == LaurentT::monomial(2) - LaurentT(1));
  CHECK(g.volume_poly(W("1"), W("1")) == LaurentT(1));
  for (int k = -4; k <= 4; ++k) {
    const Weight l = W(std::to_string(k));
    CHECK(g.volume_poly(l, l) == LaurentT::monomial(static_cast<int>(2 * g.n_dim(l, l))));
  }
}

TEST_CASE("prediction records") {
  const GeometryEngine& g = ctx("A1").geo;
  PredictionRecord a = g.predict(W("-1"), W("1"));
  CHECK(a.m == 1);
  CHECK(a.n == 1);
  CHECK(*a.vol_poly == LaurentT::monomial(2) - LaurentT(1));
  CHECK(a.checks_passed());
  PredictionRecord b = g.predict(W("-1"), W("-1"));
  CHECK(b.m == 1);
  CHECK(b.n == 2);
  PredictionRecord c = g.predict(W("1"), W("1"));
  CHECK(c.n == 0);
  CHECK(c.n_is_zero());
  CHECK(*c.vol_poly == LaurentT(1));
  CHECK(c.checks_passed());
  CHECK(g.predict_all(W("-1")).size() == 2);
  CHECK_THROWS_AS(g.predict(W("1"), W("-1")), DomainError);
}

TEST_CASE("irreducible module records") {
  CHECK(ctx("A1").geo.predict_irreducible(W("1"), W("-1")).m == 1);
  CHECK(ctx("A1").geo.predict_irreducible(W("2"), W("0")).m == 1);
  PredictionRecord adj = ctx("A2").geo.predict_irreducible(W("1,1"), W("0,0"));
  CHECK(adj.m == 2);
  CHECK(adj.n.has_value());
  CHECK(adj.checks_passed());
  CHECK_THROWS_AS(ctx("A2").geo.predict_irreducible(W("1,-1"), W("0,0")), DomainError);
  // weight outside V_lambda: m = 0, no dimension
  PredictionRecord out = ctx("A1").geo.predict_irreducible(W("1"), W("3"));
  CHECK(out.m == 0);
  CHECK_FALSE(out.n.has_value());
}

TEST_CASE("records are consistent across types") {
  for (const std::string t : {"A2", "B2", "G2", "A3", "C3"}) {
    const TypeContext& c = ctx(t);
    const int r = c.roots.rank() <= 2 ? 2 : 1;
    for (const Weight& l : testing_support::short_box(c.group, c.roots.rank(), r))
      for (const PredictionRecord& rec : c.geo.predict_all(l)) {
        CAPTURE(t);
        CAPTURE(l.to_string());
        CAPTURE(rec.mu.to_string());
        CHECK(rec.checks_passed());
        CHECK(*rec.n >= 0);
      }
  }
}
