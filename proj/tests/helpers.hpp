#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <string>

#include "dmult/context.hpp"

namespace testing_support {

using namespace dmult;

// One context per type for the whole test binary.
inline const TypeContext& ctx(const std::string& type) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<TypeContext>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[type];
  if (!slot) slot = make_context(parse_cartan_type(type));
  return *slot;
}

inline Weight W(const std::string& s) { return parse_weight(s); }

// All weights with coordinates in [-r, r]^n.
inline std::vector<Weight> box(int rank, int r) {
  std::vector<Weight> out;
  std::vector<int> x(rank, -r);
  while (true) {
    Weight w = Weight::zero(rank);
    for (int i = 0; i < rank; ++i) w[i] = x[i];
    out.push_back(w);
    int i = 0;
    while (i < rank && ++x[i] > r) x[i++] = -r;
    if (i == rank) break;
  }
  return out;
}

// The box, keeping only weights whose lower set stays small.
inline std::vector<Weight> short_box(const AffineWeylGroup& g, int rank, int r, int max_len = 12) {
  std::vector<Weight> out;
  for (const Weight& w : box(rank, r))
    if (g.orbit_data(w).length_w() <= max_len) out.push_back(w);
  return out;
}

// Elements of the affine Weyl group of length <= depth, by breadth-first
// search on words; the value is the BFS distance, i.e. the word length.
inline std::map<AffineWeylElt, int> affine_ball(const AffineWeylGroup& g, int depth) {
  std::map<AffineWeylElt, int> dist;
  std::vector<AffineWeylElt> frontier{g.identity()};
  dist[g.identity()] = 0;
  for (int d = 1; d <= depth; ++d) {
    std::vector<AffineWeylElt> next;
    for (const auto& x : frontier)
      for (int i = 0; i <= g.rank(); ++i) {
        AffineWeylElt y = g.compose(x, g.generator(i));
        if (dist.emplace(y, d).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return dist;
}

// Every product of a subword of `word`: the Bruhat interval below it.
inline std::set<AffineWeylElt> subword_products(const AffineWeylGroup& g, const std::vector<int>& word) {
  std::set<AffineWeylElt> cur{g.identity()};
  for (int letter : word) {
    std::set<AffineWeylElt> next = cur;
    for (const auto& x : cur) next.insert(g.compose(x, g.generator(letter)));
    cur = std::move(next);
  }
  return cur;
}

// Value of a Laurent polynomial in (Q, T) at a rational point.
inline Rational eval(const Poly2& p, const Rational& q0, const Rational& t0) {
  auto pw = [](const Rational& x, int e) {
    Rational r = 1;
    for (int i = 0; i < std::abs(e); ++i) r *= x;
    return e < 0 ? Rational(1 / r) : r;
  };
  Rational s = 0;
  for (const auto& term : p.terms()) s += term.c * pw(q0, term.q) * pw(t0, term.t);
  return s;
}

inline Rational eval(const RatQT& r, const Rational& q0, const Rational& t0) {
  return eval(r.num(), q0, t0) / eval(r.den(), q0, t0);
}

}  // namespace testing_support
