#include "dmult/geometry_report.hpp"

#include "dmult/error.hpp"

namespace dmult {

bool PredictionRecord::checks_passed() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

GeometryEngine::GeometryEngine(const DemazureEngine& dem, const MacdonaldEngine& mac)
    : dem_(dem), mac_(mac), group_(mac.group()) {}

void GeometryEngine::require_below(const Weight& lambda, const Weight& mu) const {
  if (lambda.rank() != group_.rank() || mu.rank() != group_.rank())
    throw DomainError("weight rank does not match the root system");
  if (!group_.bruhat_leq_weights(mu, lambda))
    throw DomainError(mu.to_string() + " is not below " + lambda.to_string() + " in the Bruhat order");
}

int GeometryEngine::n_doubled(const Weight& lambda, const Weight& mu) const {
  require_below(lambda, mu);
  OrbitData d = group_.orbit_data(lambda);
  return d.length_w() - d.length_w_ring() + 2 * group_.longest().length() -
         group_.roots().two_rho_pairing(mu);
}

long GeometryEngine::n_dim(const Weight& lambda, const Weight& mu) const {
  const int n2 = n_doubled(lambda, mu);
  if (n2 % 2 != 0 || n2 < 0)
    throw InvariantError("n(" + lambda.to_string() + "; " + mu.to_string() + ") = " + std::to_string(n2) +
                         "/2 is not a nonnegative integer");
  return n2 / 2;
}

int GeometryEngine::modular_exponent(const Weight& mu) const { return group_.roots().two_rho_pairing(mu); }

bool GeometryEngine::denominator_identity_check(const Weight& lambda, const Weight& mu) const {
  const int n2 = n_doubled(lambda, mu);
  OrbitData d = group_.orbit_data(lambda);
  const FiniteWeylElt& w0 = group_.longest();
  const int lhs2 = d.length_w() - d.length_w_ring() + 2 * w0.length() +
                   group_.roots().two_rho_pairing(w0(mu));
  return lhs2 == n2;
}

LaurentT GeometryEngine::volume_poly(const Weight& lambda, const Weight& mu) const {
  const long n = n_dim(lambda, mu);
  return mac_.c_coeff(lambda, mu).value.shifted(static_cast<int>(2 * n));
}

PredictionRecord GeometryEngine::predict(const Weight& lambda, const Weight& mu) const {
  require_below(lambda, mu);
  PredictionRecord rec{lambda, mu, dem_.multiplicity(lambda, mu), std::nullopt, std::nullopt, {}};
  const int n2 = n_doubled(lambda, mu);
  rec.checks["n_integral"] = n2 % 2 == 0;
  rec.checks["n_nonnegative"] = n2 >= 0;
  rec.checks["denominator_identity"] = denominator_identity_check(lambda, mu);
  rec.n = n2 >= 0 ? n2 / 2 : -((-n2 + 1) / 2);
  const LaurentT vol = mac_.c_coeff(lambda, mu).value.shifted(static_cast<int>(2 * *rec.n));
  rec.vol_poly = vol;
  rec.checks["degree_bound"] = vol.is_zero() || vol.max_exp() <= 2 * *rec.n;
  rec.checks["leading_coefficient"] = vol.coefficient(static_cast<int>(2 * *rec.n)) == rec.m;
  rec.checks["nonnegative_exponents"] = vol.is_zero() || vol.min_exp() >= 0;
  bool counts = true;
  for (int f : kSampleFieldSizes) {
    try {
      Rational v = evaluate_t(vol, Rational(f));
      if (!is_integer(v) || v < 0) counts = false;
    } catch (const DomainError&) {
      counts = false;
    }
  }
  rec.checks["sample_counts"] = counts;
  return rec;
}

std::vector<PredictionRecord> GeometryEngine::predict_all(const Weight& lambda) const {
  std::vector<PredictionRecord> out;
  for (const Weight& mu : group_.ordered_lower_set(lambda)) out.push_back(predict(lambda, mu));
  return out;
}

PredictionRecord GeometryEngine::predict_irreducible(const Weight& lambda_plus, const Weight& mu) const {
  if (lambda_plus.rank() != group_.rank() || mu.rank() != group_.rank())
    throw DomainError("weight rank does not match the root system");
  if (!group_.roots().is_dominant(lambda_plus))
    throw DomainError(lambda_plus.to_string() + " is not dominant");
  const Weight lambda = group_.longest()(lambda_plus);
  if (group_.bruhat_leq_weights(mu, lambda)) return predict(lambda, mu);
  return {lambda, mu, dem_.multiplicity(lambda, mu), std::nullopt, std::nullopt, {}};
}

}  // namespace dmult
