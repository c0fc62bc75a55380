#include "dmult/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <thread>

#include "dmult/error.hpp"

namespace dmult {

namespace {

constexpr std::size_t kMaxListedFailures = 5;

std::string pair_label(const Weight& lambda, const Weight& mu) {
  return "(" + lambda.to_string() + "; " + mu.to_string() + ")";
}

// Per-lambda outcome, merged in ball order so the report does not depend on
// thread scheduling.
struct LambdaResult {
  std::map<std::string, CheckTally> tallies;
  std::vector<std::string> zero_pairs;
  long pairs = 0;

  void record(const std::string& name, bool ok, const std::string& what) {
    auto& t = tallies[name];
    t.name = name;
    t.record(ok, what);
  }
};

const std::vector<std::string> kCheckOrder = {
    "central_identity",     "limit_q_finite",     "limit_t_nonpositive", "length_identity",
    "rho_inequality",       "n_integral",         "n_nonnegative",       "leading_coefficient",
    "degree_bound",         "sample_counts",      "denominator_identity", "oracle_agreement",
    "hecke_quadratic",      "hecke_braid",        "hecke_span",          "y_commute",
    "y_triangular",         "e_triangular",       "e_monic",             "m_lambda_lambda",
};

bool poly_matrices_commute(const YMatrix& a, const YMatrix& b) {
  const std::size_t n = a.size();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) {
      Poly2 ab, ba;
      for (std::size_t k = r; k <= c; ++k) {
        if (!a.at(r, k).is_zero() && !b.at(k, c).is_zero()) ab += a.at(r, k) * b.at(k, c);
        if (!b.at(r, k).is_zero() && !a.at(k, c).is_zero()) ba += b.at(r, k) * a.at(k, c);
      }
      if (!(ab == ba)) return false;
    }
  return true;
}

bool upper_triangular(const YMatrix& y) {
  for (std::size_t r = 0; r < y.size(); ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (!y.at(r, c).is_zero()) return false;
  return true;
}

LambdaResult check_lambda(const TypeContext& ctx, const Weight& lambda) {
  LambdaResult res;
  const AffineWeylGroup& g = ctx.group;
  const std::string lab = lambda.to_string();

  res.record("length_identity", length_identity_holds(g, lambda), lab);
  res.record("rho_inequality", rho_inequality_holds(g, lambda), lab);

  const std::vector<Weight> lower = g.ordered_lower_set(lambda);
  const std::set<Weight> lower_set(lower.begin(), lower.end());

  // Y operators and E_lambda.
  YMatrices ys = ctx.mac.cherednik_y_matrices(lambda);
  bool tri = true;
  for (const auto& y : ys.matrices) tri = tri && upper_triangular(y);
  res.record("y_triangular", tri, lab);
  bool comm = true;
  for (std::size_t a = 0; a < ys.matrices.size(); ++a)
    for (std::size_t b = a + 1; b < ys.matrices.size(); ++b)
      comm = comm && poly_matrices_commute(ys.matrices[a], ys.matrices[b]);
  res.record("y_commute", comm, lab);

  // T_i e^lambda always involves e^{s_i lambda}, so only the lower sets that
  // are closed under s_i can be stable.
  for (int i = 1; i <= g.rank(); ++i) {
    if (!g.bruhat_leq_weights(g.act_generator(i, lambda), lambda)) continue;
    bool span_ok = true;
    for (const Weight& mu : lower)
      for (const auto& [w, c] : ctx.mac.demazure_lusztig(i, PolySeries::monomial(mu, Poly2(1))))
        span_ok = span_ok && lower_set.count(w) > 0;
    res.record("hecke_span", span_ok, lab + " under T_" + std::to_string(i));
  }

  MacdonaldPoly e = ctx.mac.macdonald_e(lambda);
  bool e_tri = true;
  for (const auto& [w, c] : e.series) e_tri = e_tri && lower_set.count(w) > 0;
  res.record("e_triangular", e_tri, lab);
  res.record("e_monic", e.series.coefficient(lambda) == RatQT(1), lab);

  LaurentSeries et;
  bool finite = true;
  try {
    et = ctx.mac.e_limit_q(lambda);
  } catch (const InvariantError& err) {
    finite = false;
  }
  res.record("limit_q_finite", finite, lab);
  if (!finite) return res;
  bool nonpos = true;
  for (const auto& [w, c] : et)
    for (const auto& [d, coef] : c.terms()) nonpos = nonpos && d <= 0 && d % 2 == 0;
  res.record("limit_t_nonpositive", nonpos, lab);

  const CharSeries chi = ctx.dem.character(lambda).series;
  bool central = nonpos;
  if (nonpos) central = limit_t_series(et) == chi;
  res.record("central_identity", central, lab);
  res.record("m_lambda_lambda", chi.coefficient(lambda) == 1, lab);

  if (ctx.roots.dominance(lambda) == Dominance::Antidominant || lambda.is_zero()) {
    const Weight plus = g.orbit_data(lambda).lambda_plus;
    res.record("oracle_agreement", weyl_character_oracle(ctx.roots, plus) == chi, lab);
  }

  for (const Weight& mu : lower) {
    ++res.pairs;
    PredictionRecord rec = ctx.geo.predict(lambda, mu);
    const std::string pl = pair_label(lambda, mu);
    for (const auto& [name, ok] : rec.checks)
      if (name != "nonnegative_exponents") res.record(name, ok, pl);
    if (rec.n_is_zero()) res.zero_pairs.push_back(pl);
  }
  return res;
}

}  // namespace

void CheckTally::record(bool ok, const std::string& what) {
  ++checked;
  if (ok) return;
  ++failed;
  if (failures.size() < kMaxListedFailures) failures.push_back(what);
}

bool VerifyReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckTally& t) { return t.failed == 0; });
}

const CheckTally* VerifyReport::find(const std::string& name) const {
  for (const auto& t : checks)
    if (t.name == name) return &t;
  return nullptr;
}

int radius_ceiling(int rank) { return rank <= 2 ? 12 : 8; }

std::vector<Weight> weight_ball(const AffineWeylGroup& group, int radius) {
  const int n = group.rank();
  std::vector<std::pair<int, Weight>> found;
  std::vector<int> x(n, -radius);
  while (true) {
    Weight w = Weight::zero(n);
    for (int i = 0; i < n; ++i) w[i] = x[i];
    const int len = group.translation_length(w);
    // Alcove points have l(w_lambda) = 0; they are 0 and the minuscule weights.
    if (len <= radius) found.emplace_back(len, w);
    int i = 0;
    while (i < n && ++x[i] > radius) x[i++] = -radius;
    if (i == n) break;
  }
  // Alcove points have l(w_lambda) = 0: 0 and the minuscule weights.
  for (int j = 0; j < n; ++j) {
    Weight w = Weight::fundamental(n, j);
    if (group.in_fundamental_chamber(w)) found.emplace_back(group.translation_length(w), w);
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Weight> out;
  for (auto& [len, w] : found) out.push_back(w);
  return out;
}

bool length_identity_holds(const AffineWeylGroup& group, const Weight& lambda) {
  OrbitData d = group.orbit_data(lambda);
  const int tau = group.translation_length(lambda);
  return tau == group.length(group.translation(lambda)) && tau == d.length_w() + d.length_w_ring();
}

bool rho_inequality_holds(const AffineWeylGroup& group, const Weight& lambda) {
  OrbitData d = group.orbit_data(lambda);
  return group.roots().two_rho_pairing(lambda) <= d.length_w() + d.length_w_ring();
}

int braid_order(const AffineWeylGroup& group, int i, int j) {
  const AffineWeylElt st = group.compose(group.generator(i), group.generator(j));
  AffineWeylElt p = st;
  for (int k = 1; k <= 6; ++k) {
    if (p == group.identity()) return k;
    p = group.compose(p, st);
  }
  return 0;
}

HeckeReport check_hecke_axioms(const MacdonaldEngine& mac, int samples, std::uint64_t seed) {
  const AffineWeylGroup& g = mac.group();
  const int n = g.rank();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-3, 3);
  const Poly2 t_diff = Poly2::monomial(0, 1) - Poly2::monomial(0, -1);

  std::vector<std::pair<int, int>> braids;
  for (int i = 0; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (int m = braid_order(g, i, j); m > 0) braids.emplace_back(i, j);

  HeckeReport rep;
  for (int s = 0; s < samples; ++s) {
    Weight w = Weight::zero(n);
    for (int k = 0; k < n; ++k) w[k] = coord(rng);
    const PolySeries f = PolySeries::monomial(w, Poly2(1));
    for (int i = 0; i <= n; ++i) {
      PolySeries tf = mac.demazure_lusztig(i, f);
      PolySeries lhs = mac.demazure_lusztig(i, tf);
      PolySeries rhs = tf.map_coefficients([&](const Poly2& c) { return c * t_diff; }) + f;
      rep.quadratic.record(lhs == rhs, "T_" + std::to_string(i) + " on " + w.to_string());
    }
    for (auto [i, j] : braids) {
      const int m = braid_order(g, i, j);
      PolySeries a = f, b = f;
      for (int k = 0; k < m; ++k) {
        // rightmost factor acts first; both words have length m
        a = mac.demazure_lusztig((m - 1 - k) % 2 == 0 ? i : j, a);
        b = mac.demazure_lusztig((m - 1 - k) % 2 == 0 ? j : i, b);
      }
      rep.braid.record(a == b, "T_" + std::to_string(i) + ", T_" + std::to_string(j) + " on " + w.to_string());
    }
  }
  return rep;
}

VerifyReport run_verify(const TypeContext& ctx, int radius, int jobs) {
  const int ceiling = radius_ceiling(ctx.roots.rank());
  if (radius < 0) throw DomainError("radius must be nonnegative");
  if (radius > ceiling)
    throw BudgetError("radius " + std::to_string(radius) + " exceeds the ceiling " + std::to_string(ceiling) +
                      " for rank " + std::to_string(ctx.roots.rank()));
  const std::vector<Weight> ball = weight_ball(ctx.group, radius);
  std::vector<LambdaResult> results(ball.size());
  std::atomic<std::size_t> next{0};
  std::vector<std::string> errors(ball.size());
  auto worker = [&] {
    for (std::size_t k; (k = next++) < ball.size();) {
      try {
        results[k] = check_lambda(ctx, ball[k]);
      } catch (const Error& err) {
        errors[k] = err.what();
      }
    }
  };
  const int nthreads = std::max(1, std::min<int>(jobs, static_cast<int>(ball.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < nthreads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  VerifyReport rep;
  rep.type = ctx.roots.cartan_type().name();
  rep.radius = radius;
  rep.weights = static_cast<long>(ball.size());
  std::map<std::string, CheckTally> merged;
  for (const auto& name : kCheckOrder) merged[name].name = name;
  for (std::size_t k = 0; k < ball.size(); ++k) {
    if (!errors[k].empty()) {
      merged["errors"].name = "errors";
      merged["errors"].record(false, ball[k].to_string() + ": " + errors[k]);
      continue;
    }
    rep.pairs += results[k].pairs;
    for (auto& [name, t] : results[k].tallies) {
      auto& m = merged[name];
      m.checked += t.checked;
      m.failed += t.failed;
      for (auto& f : t.failures)
        if (m.failures.size() < kMaxListedFailures) m.failures.push_back(f);
    }
    for (auto& z : results[k].zero_pairs) rep.zero_dimension_pairs.push_back(z);
  }
  HeckeReport hecke = check_hecke_axioms(ctx.mac, 50, 0x5eedULL + static_cast<std::uint64_t>(ctx.roots.rank()));
  for (CheckTally* t : {&hecke.quadratic, &hecke.braid}) {
    auto& m = merged[t->name];
    m.checked += t->checked;
    m.failed += t->failed;
    for (auto& f : t->failures)
      if (m.failures.size() < kMaxListedFailures) m.failures.push_back(f);
  }
  for (const auto& name : kCheckOrder) rep.checks.push_back(merged[name]);
  if (merged.count("errors")) rep.checks.push_back(merged["errors"]);
  return rep;
}

}  // namespace dmult
