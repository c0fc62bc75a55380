#include "dmult/demazure.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "dmult/error.hpp"

namespace dmult {

CharSeries demazure_op(const RootSystem& rs, int i, const CharSeries& f) {
  if (i < 0 || i >= rs.rank()) throw DomainError("Demazure operator index out of range");
  const Weight& alpha = rs.simple_root(i);
  CharSeries g;
  for (const auto& [mu, c] : f) {
    // e^mu (1 - e^{-(k+1) alpha}) / (1 - e^{-alpha}) with k = (mu, alpha_i^vee).
    const int k = mu[i];
    if (k >= 0) {
      Weight w = mu;
      for (int j = 0; j <= k; ++j) {
        g.add(w, c);
        w -= alpha;
      }
    } else if (k < -1) {
      Weight w = mu;
      for (int j = 1; j <= -k - 1; ++j) {
        w += alpha;
        g.add(w, -c);
      }
    }
  }
  return g;
}

namespace {

Weight dominant_conjugate(const RootSystem& rs, Weight x) {
  while (true) {
    int i = 0;
    while (i < rs.rank() && x[i] >= 0) ++i;
    if (i == rs.rank()) return x;
    x = rs.reflect(i, x);
  }
}

// lambda - mu is a nonnegative integer combination of simple roots; returns
// its height, or -1.
int depth_below(const RootSystem& rs, const Weight& lambda, const Weight& mu) {
  int h = 0;
  for (const auto& c : rs.root_coordinates(lambda - mu)) {
    if (!is_integer(c) || c < 0) return -1;
    h += static_cast<int>(c.get_num().get_si());
  }
  return h;
}

}  // namespace

CharSeries weyl_character_oracle(const RootSystem& rs, const Weight& lambda_plus) {
  if (!rs.is_dominant(lambda_plus))
    throw DomainError("Weyl character requires a dominant weight, got " + lambda_plus.to_string());
  // Saturated weight set: closed under subtracting simple roots while the
  // dominant conjugate stays below lambda_plus.
  std::set<Weight> weights{lambda_plus};
  std::deque<Weight> queue{lambda_plus};
  while (!queue.empty()) {
    Weight x = queue.front();
    queue.pop_front();
    for (int i = 0; i < rs.rank(); ++i) {
      Weight y = x - rs.simple_root(i);
      if (weights.count(y)) continue;
      if (depth_below(rs, lambda_plus, dominant_conjugate(rs, y)) < 0) continue;
      weights.insert(y);
      queue.push_back(y);
    }
  }

  std::vector<std::pair<int, Weight>> dominant;
  for (const auto& w : weights)
    if (rs.is_dominant(w)) dominant.emplace_back(depth_below(rs, lambda_plus, w), w);
  std::sort(dominant.begin(), dominant.end());

  const Weight rho = rs.rho_weight();
  const long top = rs.inner_scaled(lambda_plus + rho, lambda_plus + rho);
  std::map<Weight, Integer> mult;
  auto lookup = [&](const Weight& nu) -> Integer {
    if (!weights.count(nu)) return 0;
    auto it = mult.find(dominant_conjugate(rs, nu));
    return it == mult.end() ? Integer(0) : it->second;
  };
  for (const auto& [depth, mu] : dominant) {
    if (depth == 0) {
      mult[mu] = 1;
      continue;
    }
    Integer sum = 0;
    for (const auto& a : rs.positive_roots()) {
      Weight nu = mu + a.weight;
      while (weights.count(nu)) {
        sum += lookup(nu) * Integer(rs.inner_scaled(nu, a.weight));
        nu += a.weight;
      }
    }
    sum *= 2;
    const long denom = top - rs.inner_scaled(mu + rho, mu + rho);
    if (denom <= 0) throw InvariantError("Freudenthal denominator vanished");
    Rational m(sum, Integer(denom));
    m.canonicalize();
    if (!is_integer(m) || m < 0)
      throw InvariantError("non-integral Freudenthal multiplicity at " + mu.to_string());
    mult[mu] = m.get_num();
  }

  CharSeries ch;
  for (const auto& w : weights) {
    Integer m = lookup(w);
    if (m != 0) ch.add(w, m.get_si());
  }
  return ch;
}

DemazureCharacter DemazureEngine::character(const Weight& lambda) const {
  {
    std::shared_lock lock(mutex_);
    auto it = cache_.find(lambda);
    if (it != cache_.end()) return {lambda, *it->second};
  }
  OrbitData d = group_.orbit_data(lambda);
  auto series = std::make_shared<const CharSeries>(character_from_word(d.lambda_plus, d.v_plus.word));
  std::unique_lock lock(mutex_);
  cache_.emplace(lambda, series);
  return {lambda, *series};
}

CharSeries DemazureEngine::character_from_word(const Weight& lambda_plus,
                                               const std::vector<int>& word) const {
  CharSeries f = CharSeries::monomial(lambda_plus, 1);
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure_op(group_.roots(), *it, f);
  return f;
}

long DemazureEngine::multiplicity(const Weight& lambda, const Weight& mu) const {
  return character(lambda).series.coefficient(mu);
}

}  // namespace dmult
