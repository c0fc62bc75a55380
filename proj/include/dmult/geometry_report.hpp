#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dmult/demazure.hpp"
#include "dmult/macdonald.hpp"

namespace dmult {

// Sample residue-field sizes at which volume polynomials must count cosets.
inline constexpr int kSampleFieldSizes[] = {2, 3, 4, 5, 7, 8, 9};

struct PredictionRecord {
  Weight lambda;
  Weight mu;
  long m = 0;
  // Absent only for irreducible-module records with mu outside the lower set.
  std::optional<long> n;
  std::optional<LaurentT> vol_poly;
  std::map<std::string, bool> checks;
  bool n_is_zero() const { return n && *n == 0; }
  bool checks_passed() const;
};

class GeometryEngine {
 public:
  GeometryEngine(const DemazureEngine& dem, const MacdonaldEngine& mac);

  const AffineWeylGroup& group() const { return group_; }

  // 2 n_{lambda,mu} = l(w) - l(w_ring) + 2 l(w_0) - 2<mu, rho>. Needs mu <= lambda.
  int n_doubled(const Weight& lambda, const Weight& mu) const;
  // Throws DomainError if mu is not below lambda and InvariantError if the
  // value is not a nonnegative integer.
  long n_dim(const Weight& lambda, const Weight& mu) const;
  // 2<mu, rho>.
  int modular_exponent(const Weight& mu) const;
  // (l(w) - l(w_ring))/2 + l(w_0) + <w_0(mu), rho> == n, evaluated separately.
  bool denominator_identity_check(const Weight& lambda, const Weight& mu) const;
  // c_{lambda,mu}(t) t^{n}.
  LaurentT volume_poly(const Weight& lambda, const Weight& mu) const;

  // Failed checks are recorded in the result, not thrown.
  PredictionRecord predict(const Weight& lambda, const Weight& mu) const;
  // One record per mu in the ordered lower set of lambda.
  std::vector<PredictionRecord> predict_all(const Weight& lambda) const;
  // Multiplicity of mu in V_{lambda_plus} through chi_{w_0(lambda_plus)}.
  PredictionRecord predict_irreducible(const Weight& lambda_plus, const Weight& mu) const;

 private:
  void require_below(const Weight& lambda, const Weight& mu) const;

  const DemazureEngine& dem_;
  const MacdonaldEngine& mac_;
  const AffineWeylGroup& group_;
};

}  // namespace dmult
