#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "dmult/root_data.hpp"
#include "dmult/weight.hpp"

namespace dmult {

// Integer matrix acting on fundamental-weight coordinates (column j is the
// image of varpi_j).
class LinearMap {
 public:
  LinearMap() = default;
  static LinearMap identity(int rank);

  int rank() const { return rank_; }
  int at(int i, int j) const { return m_[i * kMaxRank + j]; }
  int& at(int i, int j) { return m_[i * kMaxRank + j]; }

  Weight apply(const Weight& x) const;
  friend LinearMap operator*(const LinearMap& a, const LinearMap& b);
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
  friend auto operator<=>(const LinearMap&, const LinearMap&) = default;

 private:
  std::array<int, kMaxRank * kMaxRank> m_{};
  int rank_ = 0;
};

// Element of the finite Weyl group with its canonical (smallest index first)
// reduced word over 1..n, stored 0-based.
struct FiniteWeylElt {
  LinearMap map;
  std::vector<int> word;

  int length() const { return static_cast<int>(word.size()); }
  Weight operator()(const Weight& x) const { return map.apply(x); }
  friend bool operator==(const FiniteWeylElt& a, const FiniteWeylElt& b) { return a.map == b.map; }
};

// x -> finite(x) + translation. Lies in the non-extended group W iff the
// translation is in the root lattice.
struct AffineWeylElt {
  LinearMap finite;
  Weight translation;
  bool in_W = true;

  friend bool operator==(const AffineWeylElt& a, const AffineWeylElt& b) {
    return a.finite == b.finite && a.translation == b.translation;
  }
  friend auto operator<=>(const AffineWeylElt& a, const AffineWeylElt& b) {
    if (auto c = a.finite <=> b.finite; c != 0) return c;
    return a.translation <=> b.translation;
  }
};

struct OrbitData {
  Weight lambda;
  Weight lambda_tilde;
  AffineWeylElt w_lambda;
  std::vector<int> w_word;  // w_lambda = s_{w_word[0]} ... s_{w_word[k-1]}, indices 0..n
  Weight lambda_minus;
  Weight lambda_plus;
  FiniteWeylElt w_ring;      // w_ring(lambda_minus) = lambda
  FiniteWeylElt v_plus;      // minimal v with v(lambda_plus) = lambda

  int length_w() const { return static_cast<int>(w_word.size()); }
  int length_w_ring() const { return w_ring.length(); }
};

// Reduced expression tau = pi s_{word[0]} ... s_{word[k-1]} of an element of
// the extended affine Weyl group, pi of length zero.
struct ExtendedWord {
  AffineWeylElt pi;
  std::vector<int> word;
};

inline constexpr int kDefaultLowerSetBudget = 16;

// Finite and affine Weyl group machinery over one root system. Orbit data is
// memoized behind a shared mutex; every other member is pure.
class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(const RootSystem& rs);
  AffineWeylGroup(const AffineWeylGroup&) = delete;
  AffineWeylGroup& operator=(const AffineWeylGroup&) = delete;

  const RootSystem& roots() const { return rs_; }
  int rank() const { return rs_.rank(); }

  // ---- finite group
  FiniteWeylElt finite_identity() const;
  FiniteWeylElt finite_from_word(const std::vector<int>& word) const;
  FiniteWeylElt finite_from_map(const LinearMap& map) const;
  const FiniteWeylElt& longest() const { return longest_; }
  // Number of positive roots sent to negative roots.
  int inversion_count(const LinearMap& map) const;

  // ---- affine group
  AffineWeylElt identity() const;
  // i = 0..n; s_0 . x = s_theta(x) + theta.
  AffineWeylElt generator(int i) const;
  AffineWeylElt translation(const Weight& lambda) const;
  AffineWeylElt from_word(const std::vector<int>& word) const;
  AffineWeylElt compose(const AffineWeylElt& a, const AffineWeylElt& b) const;
  AffineWeylElt inverse(const AffineWeylElt& a) const;
  AffineWeylElt embed(const FiniteWeylElt& w) const;

  Weight act(const AffineWeylElt& w, const Weight& x) const;
  Weight act_generator(int i, const Weight& x) const;

  // Number of affine hyperplanes separating C and w.C.
  int length(const AffineWeylElt& w) const;
  // Sum over positive roots of |(lambda, alpha^vee)|.
  int translation_length(const Weight& lambda) const;

  // Reduced word via left descents; w = s_{r[0]} ... s_{r[k-1]}. Requires in_W.
  std::vector<int> reduced_word(const AffineWeylElt& w) const;
  ExtendedWord extended_word(const AffineWeylElt& w) const;

  // Bruhat order on W; throws DomainError for extended elements.
  bool bruhat_leq(const AffineWeylElt& u, const AffineWeylElt& w) const;

  // ---- weights
  // (x + Lambda_0, alpha_i^vee) >= 0 for i = 0..n.
  bool in_fundamental_chamber(const Weight& x) const;
  OrbitData orbit_data(const Weight& lambda) const;
  // mu <= lambda in the Bruhat order on P.
  bool bruhat_leq_weights(const Weight& mu, const Weight& lambda) const;
  std::vector<Weight> lower_set(const Weight& lambda, int budget = kDefaultLowerSetBudget) const;
  // lower_set sorted by (l(w_mu), coordinates): a linear extension of the
  // Bruhat order.
  std::vector<Weight> ordered_lower_set(const Weight& lambda,
                                        int budget = kDefaultLowerSetBudget) const;

 private:
  OrbitData compute_orbit_data(const Weight& lambda) const;
  bool bruhat_rec(const AffineWeylElt& u, const AffineWeylElt& w, int lw) const;

  const RootSystem& rs_;
  std::vector<LinearMap> reflections_;  // s_1..s_n as linear maps (0-based)
  LinearMap s_theta_;
  int alcove_scale_ = 1;
  FiniteWeylElt longest_;

  mutable std::shared_mutex orbit_mutex_;
  mutable std::unordered_map<Weight, std::shared_ptr<const OrbitData>, WeightHash> orbit_cache_;
};

}  // namespace dmult
