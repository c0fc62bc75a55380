#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "dmult/affine_weyl.hpp"
#include "dmult/exact_algebra.hpp"

namespace dmult {

// e^mu * q^{q_exp / m}: the image of a level-zero affine weight, with the
// delta-exponent mapped to a power of q.
struct AffineMonomial {
  Weight weight;
  long q_exp = 0;  // in units of 1/m
};

using PolySeries = WeightSeries<Poly2>;

// Square matrix over the Laurent polynomials in (q^{1/m}, t^{1/2}); entry
// (r, c) is the coefficient of basis[r] in Y e^{basis[c]}.
struct YMatrix {
  std::vector<std::vector<Poly2>> entries;
  const Poly2& at(std::size_t r, std::size_t c) const { return entries[r][c]; }
  std::size_t size() const { return entries.size(); }
};

struct YMatrices {
  std::vector<Weight> basis;      // Bruhat-compatible order; lambda is last
  std::vector<YMatrix> matrices;  // one per fundamental weight
};

struct MacdonaldPoly {
  Weight lambda;
  RatSeries series;
};

struct CCoefficient {
  LaurentT value;
  bool outside_lower_set = false;
};

// Polynomial representation of the affine Hecke algebra, equal parameters:
//   T_i = -t^{-1/2} s_i + (t^{1/2} - t^{-1/2}) (1 - s_i) / (1 - X^{alpha_i}),
// X^{alpha_0} = q^{-1} X^{-theta}, and an element x -> w(x) + mu of the
// extended affine Weyl group acting by e^nu -> q^{(mu, w nu)} e^{w nu}.
// E_lambda is the monic joint eigenvector of Y^{varpi_j} = pi T_{i_1} ... T_{i_k}
// on span{e^mu : mu <= lambda}.
class MacdonaldEngine {
 public:
  explicit MacdonaldEngine(const AffineWeylGroup& group, int budget = kDefaultLowerSetBudget);

  const AffineWeylGroup& group() const { return group_; }
  int denom_m() const { return group_.roots().denom_m(); }

  AffineMonomial affine_image(const AffineWeylElt& g, const Weight& mu) const;

  template <class S>
  WeightSeries<S> demazure_lusztig(int i, const WeightSeries<S>& f) const;
  template <class S>
  WeightSeries<S> length_zero(const AffineWeylElt& pi, const WeightSeries<S>& f) const;
  template <class S>
  WeightSeries<S> apply_y(int j, const WeightSeries<S>& f) const;

  const ExtendedWord& fundamental_translation_word(int j) const { return tau_words_[j]; }

  // Throws InvariantError ("convention error") if some Y e^mu leaves
  // span{e^nu : nu <= mu}.
  YMatrices cherednik_y_matrices(const Weight& lambda) const;

  MacdonaldPoly macdonald_e(const Weight& lambda) const;
  LaurentSeries e_limit_q(const Weight& lambda) const;
  CCoefficient c_coeff(const Weight& lambda, const Weight& mu) const;
  LaurentT j_factor(const Weight& lambda) const;

 private:
  MacdonaldPoly compute_e(const Weight& lambda) const;

  const AffineWeylGroup& group_;
  int budget_;
  std::vector<ExtendedWord> tau_words_;

  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Weight, std::shared_ptr<const RatSeries>, WeightHash> e_cache_;
  mutable std::unordered_map<Weight, std::shared_ptr<const LaurentSeries>, WeightHash> et_cache_;
};

// Coefficient-wise t -> infinity of E_lambda(t).
CharSeries limit_t_series(const LaurentSeries& f);

}  // namespace dmult
