#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dmult/context.hpp"

namespace dmult {

struct CheckTally {
  std::string name;
  long checked = 0;
  long failed = 0;
  std::vector<std::string> failures;  // first few offenders

  void record(bool ok, const std::string& what);
};

struct VerifyReport {
  std::string type;
  int radius = 0;
  long weights = 0;
  long pairs = 0;
  std::vector<CheckTally> checks;
  std::vector<std::string> zero_dimension_pairs;  // (lambda; mu) with n = 0

  bool ok() const;
  const CheckTally* find(const std::string& name) const;
};

// Maximum verify radius: 12 for rank <= 2, 8 for rank 3 and 4.
int radius_ceiling(int rank);

// Weights with l(tau_lambda) <= radius, together with the points of the
// fundamental alcove (0 and the minuscule weights), sorted by
// (l(tau_lambda), coordinates).
std::vector<Weight> weight_ball(const AffineWeylGroup& group, int radius);

// Eq. l(tau) = l(w) + l(w_ring) and 2<lambda, rho> <= l(w) + l(w_ring).
// Both lengths of tau_lambda (hyperplane count and root sum) must agree.
bool length_identity_holds(const AffineWeylGroup& group, const Weight& lambda);
bool rho_inequality_holds(const AffineWeylGroup& group, const Weight& lambda);

// Affine braid order of s_i s_j, or 0 if it is infinite.
int braid_order(const AffineWeylGroup& group, int i, int j);

struct HeckeReport {
  CheckTally quadratic{"hecke_quadratic", 0, 0, {}};
  CheckTally braid{"hecke_braid", 0, 0, {}};
};
// Quadratic and braid relations on `samples` pseudo-random monomials with
// coordinates in [-3, 3], drawn from a fixed seed.
HeckeReport check_hecke_axioms(const MacdonaldEngine& mac, int samples, std::uint64_t seed);

// Runs every invariant over weight_ball(radius). Throws BudgetError when the
// radius exceeds the ceiling.
VerifyReport run_verify(const TypeContext& ctx, int radius, int jobs);

}  // namespace dmult
