#pragma once

#include <functional>
#include <map>
#include <vector>

#include "dmult/weight.hpp"

namespace dmult {

namespace detail {
template <class S>
bool scalar_is_zero(const S& s) {
  if constexpr (requires { s.is_zero(); }) {
    return s.is_zero();
  } else {
    return s == S(0);
  }
}
}  // namespace detail

// Finite formal sum of e^mu with coefficients in S. No zero coefficients are
// stored; iteration is in lexicographic weight order.
template <class S>
class WeightSeries {
 public:
  using Map = std::map<Weight, S>;

  WeightSeries() = default;
  static WeightSeries monomial(const Weight& mu, const S& c = S(1)) {
    WeightSeries f;
    f.add(mu, c);
    return f;
  }

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  S coefficient(const Weight& mu) const {
    auto it = terms_.find(mu);
    return it == terms_.end() ? S(0) : it->second;
  }
  bool contains(const Weight& mu) const { return terms_.count(mu) != 0; }
  std::vector<Weight> support() const {
    std::vector<Weight> s;
    for (const auto& [w, c] : terms_) s.push_back(w);
    return s;
  }

  void add(const Weight& mu, const S& c) {
    if (detail::scalar_is_zero(c)) return;
    auto [it, inserted] = terms_.try_emplace(mu, c);
    if (!inserted) {
      it->second += c;
      if (detail::scalar_is_zero(it->second)) terms_.erase(it);
    }
  }

  WeightSeries& operator+=(const WeightSeries& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  WeightSeries& operator-=(const WeightSeries& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend WeightSeries operator+(WeightSeries a, const WeightSeries& b) { return a += b; }
  friend WeightSeries operator-(WeightSeries a, const WeightSeries& b) { return a -= b; }

  WeightSeries scaled(const S& s) const {
    WeightSeries r;
    if (detail::scalar_is_zero(s)) return r;
    for (const auto& [w, c] : terms_) r.add(w, c * s);
    return r;
  }

  // e^mu -> e^{mu + nu}.
  WeightSeries shifted(const Weight& nu) const {
    WeightSeries r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w + nu, c);
    return r;
  }

  friend WeightSeries operator*(const WeightSeries& a, const WeightSeries& b) {
    WeightSeries r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add(wa + wb, ca * cb);
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using T = std::decay_t<decltype(f(std::declval<const S&>()))>;
    WeightSeries<T> r;
    for (const auto& [w, c] : terms_) r.add(w, f(c));
    return r;
  }

  // Linear substitution e^mu -> e^{g(mu)}.
  template <class G>
  WeightSeries substitute(G&& g) const {
    WeightSeries r;
    for (const auto& [w, c] : terms_) r.add(g(w), c);
    return r;
  }

  friend bool operator==(const WeightSeries&, const WeightSeries&) = default;

 private:
  Map terms_;
};

}  // namespace dmult
