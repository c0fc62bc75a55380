#pragma once

#include <memory>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "dmult/affine_weyl.hpp"
#include "dmult/exact_algebra.hpp"

namespace dmult {

// D_i f = (f - e^{-alpha_i} s_i(f)) / (1 - e^{-alpha_i}), i 0-based.
CharSeries demazure_op(const RootSystem& rs, int i, const CharSeries& f);

// Character of the irreducible module V_{lambda_plus} by Freudenthal's
// recursion. Independent of the Demazure operators.
CharSeries weyl_character_oracle(const RootSystem& rs, const Weight& lambda_plus);

struct DemazureCharacter {
  Weight lambda;
  CharSeries series;
};

class DemazureEngine {
 public:
  explicit DemazureEngine(const AffineWeylGroup& group) : group_(group) {}

  const AffineWeylGroup& group() const { return group_; }

  // chi_lambda = D_{i_1} ... D_{i_k} e^{lambda_+} along the canonical reduced
  // word of the minimal v with v(lambda_+) = lambda. Memoized.
  DemazureCharacter character(const Weight& lambda) const;
  // Same product along an explicit word for v (any reduced word of v).
  CharSeries character_from_word(const Weight& lambda_plus, const std::vector<int>& word) const;
  long multiplicity(const Weight& lambda, const Weight& mu) const;

 private:
  const AffineWeylGroup& group_;
  mutable std::shared_mutex mutex_;
  mutable std::unordered_map<Weight, std::shared_ptr<const CharSeries>, WeightHash> cache_;
};

}  // namespace dmult
