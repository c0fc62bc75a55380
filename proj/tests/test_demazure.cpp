#include <doctest.h>

#include "dmult/error.hpp"
#include "helpers.hpp"

using namespace dmult;
using testing_support::ctx;
using testing_support::W;

namespace {

// Weyl dimension formula: prod over positive roots of
// (lambda + rho, alpha^vee) / (rho, alpha^vee).
Rational weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  Rational d = 1;
  RationalVector lr = rs.ambient(lambda);
  RationalVector rho = rs.ambient(rs.rho_weight());
  for (std::size_t k = 0; k < lr.size(); ++k) lr[k] += rho[k];
  for (const auto& a : rs.positive_roots()) d *= rs.pairing(lr, a.ambient) / rs.pairing(rho, a.ambient);
  return d;
}

long total(const CharSeries& c) {
  long s = 0;
  for (const auto& [w, m] : c) s += m;
  return s;
}

}  // namespace

TEST_CASE("A1 characters") {
  const DemazureEngine& d = ctx("A1").dem;
  CHECK(d.character(W("1")).series == CharSeries::monomial(W("1"), 1));
  for (int m = 0; m <= 6; ++m) {
    CharSeries chi = d.character(W(std::to_string(-m))).series;
    CHECK(chi.size() == static_cast<std::size_t>(m + 1));
    for (int k = -m; k <= m; k += 2) CHECK(chi.coefficient(W(std::to_string(k))) == 1);
  }
  // chi_{s lambda} for lambda dominant: the full string; for lambda positive
  // only the top.
  CHECK(d.character(W("3")).series.size() == 1);
}

TEST_CASE("Demazure operator on monomials") {
  const RootSystem& rs = ctx("A1").roots;
  CHECK(demazure_op(rs, 0, CharSeries::monomial(W("2"), 1)).size() == 3);
  CHECK(demazure_op(rs, 0, CharSeries::monomial(W("-1"), 1)).is_zero());
  CharSeries neg = demazure_op(rs, 0, CharSeries::monomial(W("-3"), 1));
  CHECK(neg.size() == 2);
  CHECK(neg.coefficient(W("-1")) == -1);
  CHECK(neg.coefficient(W("1")) == -1);
  // D_i is idempotent
  CharSeries f = CharSeries::monomial(W("3"), 1) + CharSeries::monomial(W("-2"), 2);
  CHECK(demazure_op(rs, 0, demazure_op(rs, 0, f)) == demazure_op(rs, 0, f));
}

TEST_CASE("A2 adjoint zero weight has multiplicity 2") {
  const DemazureEngine& d = ctx("A2").dem;
  CharSeries chi = d.character(W("-1,-1")).series;
  CHECK(chi.coefficient(W("0,0")) == 2);
  CHECK(total(chi) == 8);
  CHECK(d.multiplicity(W("-1,-1"), W("0,0")) == 2);
}

TEST_CASE("Freudenthal oracle matches the Weyl dimension formula") {
  for (const auto& t : supported_types()) {
    const RootSystem& rs = ctx(t.name()).roots;
    const int r = t.rank <= 2 ? 3 : 1;
    for (const Weight& l : testing_support::box(t.rank, r)) {
      if (!rs.is_dominant(l)) continue;
      CAPTURE(t.name());
      CAPTURE(l.to_string());
      CharSeries v = weyl_character_oracle(rs, l);
      CHECK(Rational(total(v)) == weyl_dimension(rs, l));
      CHECK(v.coefficient(l) == 1);
    }
  }
  CHECK_THROWS_AS(weyl_character_oracle(ctx("A2").roots, W("1,-1")), DomainError);
}

TEST_CASE("antidominant Demazure characters are full Weyl characters") {
  for (const auto& t : supported_types()) {
    const TypeContext& c = ctx(t.name());
    const int r = t.rank <= 2 ? 2 : 1;
    for (const Weight& l : testing_support::box(t.rank, r)) {
      if (!c.roots.is_antidominant(l)) continue;
      CAPTURE(t.name());
      CAPTURE(l.to_string());
      CHECK(c.dem.character(l).series == weyl_character_oracle(c.roots, c.group.orbit_data(l).lambda_plus));
    }
  }
}

TEST_CASE("character does not depend on the reduced word") {
  const DemazureEngine& d = ctx("A2").dem;
  // w_0 = s1 s2 s1 = s2 s1 s2
  CHECK(d.character_from_word(W("2,1"), {0, 1, 0}) == d.character_from_word(W("2,1"), {1, 0, 1}));
  const DemazureEngine& b = ctx("B2").dem;
  CHECK(b.character_from_word(W("1,1"), {0, 1, 0, 1}) == b.character_from_word(W("1,1"), {1, 0, 1, 0}));
}

TEST_CASE("dominant weights have one-term characters and multiplicities are nonnegative") {
  for (const std::string t : {"A2", "B2", "G2"}) {
    const TypeContext& c = ctx(t);
    for (const Weight& l : testing_support::box(2, 2)) {
      CharSeries chi = c.dem.character(l).series;
      CHECK(chi.coefficient(l) == 1);
      for (const auto& [w, m] : chi) CHECK(m > 0);
      if (c.roots.is_dominant(l)) CHECK(chi.size() == 1);
    }
  }
}
