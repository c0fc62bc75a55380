#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dmult/rational.hpp"
#include "dmult/weight.hpp"

namespace dmult {

struct CartanType {
  char family = 'A';
  int rank = 1;

  std::string name() const { return std::string(1, family) + std::to_string(rank); }
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

// Case-insensitive; throws ParseError listing the supported instances.
CartanType parse_cartan_type(std::string_view text);
const std::vector<CartanType>& supported_types();

using RationalVector = std::vector<Rational>;

struct Root {
  Weight weight;             // coordinates on the fundamental weights
  std::vector<int> simple;   // coordinates on the simple roots
  std::vector<int> co;       // coroot on the simple coroots
  RationalVector ambient;
  int half_norm = 1;         // (a,a)/2: 1 for short roots, r for long ones

  bool is_short() const { return half_norm == 1; }
  int height() const;
};

enum class Dominance { Dominant, Antidominant, Neither, BothZero };
const char* to_string(Dominance d);

// Immutable finite root data for one Cartan type, with the invariant form
// normalized so that short roots have squared length 2.
class RootSystem {
 public:
  static RootSystem build(CartanType ct);

  const CartanType& cartan_type() const { return type_; }
  int rank() const { return type_.rank; }

  // cartan(i, j) = (alpha_j, alpha_i^vee), the i-th fundamental coordinate
  // of alpha_j.
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const Weight& simple_root(int i) const { return positive_[simple_index_[i]].weight; }
  const Root& simple(int i) const { return positive_[simple_index_[i]]; }
  const std::vector<Root>& positive_roots() const { return positive_; }

  const RationalVector& ambient_simple_root(int i) const { return simple(i).ambient; }
  const RationalVector& ambient_fundamental_weight(int i) const { return fund_ambient_[i]; }
  // Gram matrix of the ambient coordinates (a multiple of the identity).
  const Rational& ambient_scale() const { return ambient_scale_; }
  Rational ambient_inner(const RationalVector& x, const RationalVector& y) const;
  RationalVector ambient(const Weight& w) const;

  const Root& theta() const { return positive_[theta_index_]; }
  int lacing() const { return lacing_; }
  int denom_m() const { return denom_m_; }
  // Number of positive roots, which is also l(w_0).
  int num_positive() const { return static_cast<int>(positive_.size()); }

  // (x, alpha^vee) for a positive root alpha; always an integer on P.
  int coroot_pairing(const Weight& x, const Root& alpha) const;
  Rational pairing(const Weight& x, const Root& alpha) const {
    return Rational(coroot_pairing(x, alpha));
  }
  // Pairing of an ambient vector with the coroot of an ambient root.
  Rational pairing(const RationalVector& x, const RationalVector& alpha) const;

  // (x, y) of two weights, exact.
  Rational inner(const Weight& x, const Weight& y) const;
  // m * (x, y); an integer for x, y in P.
  long inner_scaled(const Weight& x, const Weight& y) const;

  // 2<x, rho> = sum over positive roots of (x, alpha^vee).
  int two_rho_pairing(const Weight& x) const;
  // rho = half the sum of positive coroots, ambient coordinates.
  RationalVector rho_ambient() const;
  // Sum of the fundamental weights (half the sum of positive roots).
  Weight rho_weight() const;

  Dominance dominance(const Weight& x) const;
  bool is_dominant(const Weight& x) const;
  bool is_antidominant(const Weight& x) const;

  // Finite simple reflection s_i (0-based) on a weight.
  Weight reflect(int i, const Weight& x) const;
  // Reflection in an arbitrary positive root.
  Weight reflect(const Root& alpha, const Weight& x) const;

  // Root-lattice coordinates of a weight (rational in general).
  RationalVector root_coordinates(const Weight& x) const;
  bool in_root_lattice(const Weight& x) const;

  // Index of the positive root equal to x, or -1.
  int find_positive(const Weight& x) const;

 private:
  RootSystem() = default;

  CartanType type_;
  std::vector<std::vector<int>> cartan_;
  std::vector<Root> positive_;
  std::vector<int> simple_index_;
  std::vector<RationalVector> fund_ambient_;
  std::vector<std::vector<Rational>> fund_gram_;
  std::vector<std::vector<long>> fund_gram_scaled_;
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<std::vector<long>> cartan_inverse_scaled_;
  long cartan_det_ = 1;
  Rational ambient_scale_{1};
  int theta_index_ = 0;
  int lacing_ = 1;
  int denom_m_ = 1;
};

}  // namespace dmult
