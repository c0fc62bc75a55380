#include "dmult/affine_weyl.hpp"

#include <algorithm>
#include <set>

#include "dmult/error.hpp"

namespace dmult {

LinearMap LinearMap::identity(int rank) {
  LinearMap m;
  m.rank_ = rank;
  for (int i = 0; i < rank; ++i) m.at(i, i) = 1;
  return m;
}

Weight LinearMap::apply(const Weight& x) const {
  Weight r(rank_);
  for (int i = 0; i < rank_; ++i) {
    int s = 0;
    for (int j = 0; j < rank_; ++j) s += at(i, j) * x[j];
    r[i] = s;
  }
  return r;
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
  LinearMap r;
  r.rank_ = a.rank_;
  for (int i = 0; i < a.rank_; ++i)
    for (int j = 0; j < a.rank_; ++j) {
      int s = 0;
      for (int k = 0; k < a.rank_; ++k) s += a.at(i, k) * b.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

AffineWeylGroup::AffineWeylGroup(const RootSystem& rs) : rs_(rs) {
  const int n = rs.rank();
  for (int i = 0; i < n; ++i) {
    LinearMap m = LinearMap::identity(n);
    const Weight& a = rs.simple_root(i);
    for (int k = 0; k < n; ++k) m.at(k, i) -= a[k];
    reflections_.push_back(m);
  }
  s_theta_ = LinearMap::identity(n);
  const Root& th = rs.theta();
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) s_theta_.at(k, j) -= th.co[j] * th.weight[k];
  int max_height = 0;
  for (const auto& a : rs.positive_roots()) {
    int h = 0;
    for (int c : a.co) h += c;
    max_height = std::max(max_height, h);
  }
  alcove_scale_ = max_height + 1;

  std::vector<int> word;
  Weight x = rs.rho_weight();
  while (true) {
    int i = 0;
    while (i < n && x[i] <= 0) ++i;
    if (i == n) break;
    x = rs.reflect(i, x);
    word.push_back(i);
  }
  longest_ = finite_from_word(word);
}

FiniteWeylElt AffineWeylGroup::finite_identity() const {
  return FiniteWeylElt{LinearMap::identity(rank()), {}};
}

FiniteWeylElt AffineWeylGroup::finite_from_word(const std::vector<int>& word) const {
  LinearMap m = LinearMap::identity(rank());
  for (int i : word) m = m * reflections_.at(i);
  return finite_from_map(m);
}

FiniteWeylElt AffineWeylGroup::finite_from_map(const LinearMap& map) const {
  FiniteWeylElt w{map, {}};
  Weight x = map.apply(rs_.rho_weight());
  while (true) {
    int i = 0;
    while (i < rank() && x[i] >= 0) ++i;
    if (i == rank()) break;
    x = rs_.reflect(i, x);
    w.word.push_back(i);
  }
  return w;
}

int AffineWeylGroup::inversion_count(const LinearMap& map) const {
  int count = 0;
  for (const auto& a : rs_.positive_roots())
    if (rs_.find_positive(map.apply(a.weight)) < 0) ++count;
  return count;
}

AffineWeylElt AffineWeylGroup::identity() const {
  return AffineWeylElt{LinearMap::identity(rank()), Weight::zero(rank()), true};
}

AffineWeylElt AffineWeylGroup::generator(int i) const {
  if (i < 0 || i > rank()) throw DomainError("generator index out of range");
  if (i == 0) return AffineWeylElt{s_theta_, rs_.theta().weight, true};
  return AffineWeylElt{reflections_[i - 1], Weight::zero(rank()), true};
}

AffineWeylElt AffineWeylGroup::translation(const Weight& lambda) const {
  return AffineWeylElt{LinearMap::identity(rank()), lambda, rs_.in_root_lattice(lambda)};
}

AffineWeylElt AffineWeylGroup::from_word(const std::vector<int>& word) const {
  AffineWeylElt g = identity();
  for (int i : word) g = compose(g, generator(i));
  return g;
}

AffineWeylElt AffineWeylGroup::compose(const AffineWeylElt& a, const AffineWeylElt& b) const {
  Weight t = a.finite.apply(b.translation) + a.translation;
  bool in_w = (a.in_W && b.in_W) || rs_.in_root_lattice(t);
  return AffineWeylElt{a.finite * b.finite, t, in_w};
}

AffineWeylElt AffineWeylGroup::inverse(const AffineWeylElt& a) const {
  FiniteWeylElt w = finite_from_map(a.finite);
  std::vector<int> rev(w.word.rbegin(), w.word.rend());
  LinearMap inv = finite_from_word(rev).map;
  return AffineWeylElt{inv, -inv.apply(a.translation), a.in_W};
}

AffineWeylElt AffineWeylGroup::embed(const FiniteWeylElt& w) const {
  return AffineWeylElt{w.map, Weight::zero(rank()), true};
}

Weight AffineWeylGroup::act(const AffineWeylElt& w, const Weight& x) const {
  return w.finite.apply(x) + w.translation;
}

Weight AffineWeylGroup::act_generator(int i, const Weight& x) const {
  if (i == 0) return rs_.reflect(rs_.theta(), x) + rs_.theta().weight;
  return rs_.reflect(i - 1, x);
}

namespace {
int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }
}  // namespace

int AffineWeylGroup::length(const AffineWeylElt& w) const {
  // Image of the interior point rho/N of C, scaled by N.
  Weight p = w.finite.apply(rs_.rho_weight()) + alcove_scale_ * w.translation;
  int len = 0;
  for (const auto& a : rs_.positive_roots()) len += std::abs(floor_div(rs_.coroot_pairing(p, a), alcove_scale_));
  return len;
}

int AffineWeylGroup::translation_length(const Weight& lambda) const {
  int len = 0;
  for (const auto& a : rs_.positive_roots()) len += std::abs(rs_.coroot_pairing(lambda, a));
  return len;
}

std::vector<int> AffineWeylGroup::reduced_word(const AffineWeylElt& w) const {
  if (!w.in_W) throw DomainError("reduced word requested for an extended element");
  std::vector<int> word;
  AffineWeylElt g = w;
  int len = length(g);
  while (len > 0) {
    bool found = false;
    for (int i = 0; i <= rank() && !found; ++i) {
      AffineWeylElt h = compose(generator(i), g);
      int lh = length(h);
      if (lh < len) {
        word.push_back(i);
        g = h;
        len = lh;
        found = true;
      }
    }
    if (!found) throw InvariantError("no left descent on a positive-length element");
  }
  return word;
}

ExtendedWord AffineWeylGroup::extended_word(const AffineWeylElt& w) const {
  std::vector<int> rec;
  AffineWeylElt g = w;
  int len = length(g);
  while (len > 0) {
    bool found = false;
    for (int i = 0; i <= rank() && !found; ++i) {
      AffineWeylElt h = compose(g, generator(i));
      int lh = length(h);
      if (lh < len) {
        rec.push_back(i);
        g = h;
        len = lh;
        found = true;
      }
    }
    if (!found) throw InvariantError("no right descent on a positive-length element");
  }
  return ExtendedWord{g, std::vector<int>(rec.rbegin(), rec.rend())};
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElt& u, const AffineWeylElt& w) const {
  if (!u.in_W || !w.in_W) throw DomainError("Bruhat comparison of extended elements");
  return bruhat_rec(u, w, length(w));
}

// Lifting property: for a left descent s of w, u <= w iff
// (su < u ? su <= sw : u <= sw). Single-branch, so no memo is needed.
bool AffineWeylGroup::bruhat_rec(const AffineWeylElt& u, const AffineWeylElt& w, int lw) const {
  AffineWeylElt uu = u, ww = w;
  int lu = length(uu);
  while (true) {
    if (lu > lw) return false;
    if (lw == 0 || lu == lw) return uu == ww;
    int i = 0;
    AffineWeylElt sw;
    for (; i <= rank(); ++i) {
      sw = compose(generator(i), ww);
      if (length(sw) < lw) break;
    }
    if (i > rank()) throw InvariantError("no left descent in Bruhat recursion");
    AffineWeylElt su = compose(generator(i), uu);
    int lsu = length(su);
    if (lsu < lu) {
      uu = su;
      lu = lsu;
    }
    ww = sw;
    --lw;
  }
}

bool AffineWeylGroup::in_fundamental_chamber(const Weight& x) const {
  for (int v : x.coords())
    if (v < 0) return false;
  return rs_.coroot_pairing(x, rs_.theta()) <= 1;
}

OrbitData AffineWeylGroup::orbit_data(const Weight& lambda) const {
  {
    std::shared_lock lock(orbit_mutex_);
    auto it = orbit_cache_.find(lambda);
    if (it != orbit_cache_.end()) return *it->second;
  }
  auto data = std::make_shared<const OrbitData>(compute_orbit_data(lambda));
  std::unique_lock lock(orbit_mutex_);
  orbit_cache_.emplace(lambda, data);
  return *data;
}

OrbitData AffineWeylGroup::compute_orbit_data(const Weight& lambda) const {
  const int n = rank();
  OrbitData d;
  d.lambda = lambda;

  Weight x = lambda;
  while (true) {
    int i = -1;
    if (rs_.coroot_pairing(x, rs_.theta()) > 1) {
      i = 0;
    } else {
      for (int k = 0; k < n; ++k)
        if (x[k] < 0) {
          i = k + 1;
          break;
        }
    }
    if (i < 0) break;
    x = act_generator(i, x);
    d.w_word.push_back(i);
  }
  d.lambda_tilde = x;
  d.w_lambda = from_word(d.w_word);

  auto finite_walk = [&](bool toward_antidominant) {
    Weight y = lambda;
    std::vector<int> rec;
    while (true) {
      int i = 0;
      while (i < n && (toward_antidominant ? y[i] <= 0 : y[i] >= 0)) ++i;
      if (i == n) break;
      y = rs_.reflect(i, y);
      rec.push_back(i);
    }
    return std::make_pair(y, finite_from_word(rec));
  };
  std::tie(d.lambda_minus, d.w_ring) = finite_walk(true);
  std::tie(d.lambda_plus, d.v_plus) = finite_walk(false);
  return d;
}

bool AffineWeylGroup::bruhat_leq_weights(const Weight& mu, const Weight& lambda) const {
  OrbitData dm = orbit_data(mu);
  OrbitData dl = orbit_data(lambda);
  if (dm.lambda_tilde != dl.lambda_tilde) return false;
  return bruhat_leq(dm.w_lambda, dl.w_lambda);
}

std::vector<Weight> AffineWeylGroup::lower_set(const Weight& lambda, int budget) const {
  OrbitData d = orbit_data(lambda);
  if (d.length_w() > budget)
    throw BudgetError("l(w_lambda) = " + std::to_string(d.length_w()) + " exceeds the lower-set budget " +
                      std::to_string(budget) + " for lambda = " + lambda.to_string());
  // Subword products applied to lambda~: fold the letters from the right,
  // each one either applied or skipped.
  std::set<Weight> current{d.lambda_tilde};
  for (auto it = d.w_word.rbegin(); it != d.w_word.rend(); ++it) {
    std::set<Weight> next = current;
    for (const auto& y : current) next.insert(act_generator(*it, y));
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

std::vector<Weight> AffineWeylGroup::ordered_lower_set(const Weight& lambda, int budget) const {
  std::vector<Weight> ls = lower_set(lambda, budget);
  std::vector<std::pair<int, Weight>> keyed;
  keyed.reserve(ls.size());
  for (const auto& mu : ls) keyed.emplace_back(orbit_data(mu).length_w(), mu);
  std::sort(keyed.begin(), keyed.end());
  std::vector<Weight> out;
  out.reserve(keyed.size());
  for (auto& [len, mu] : keyed) out.push_back(mu);
  return out;
}

}  // namespace dmult
