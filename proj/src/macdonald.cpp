#include "dmult/macdonald.hpp"

#include <algorithm>
#include <set>

#include "dmult/error.hpp"

namespace dmult {

MacdonaldEngine::MacdonaldEngine(const AffineWeylGroup& group, int budget)
    : group_(group), budget_(budget) {
  for (int j = 0; j < group.rank(); ++j)
    tau_words_.push_back(group.extended_word(group.translation(Weight::fundamental(group.rank(), j))));
}

AffineMonomial MacdonaldEngine::affine_image(const AffineWeylElt& g, const Weight& mu) const {
  Weight w = g.finite.apply(mu);
  return {w, group_.roots().inner_scaled(g.translation, w)};
}

template <class S>
WeightSeries<S> MacdonaldEngine::demazure_lusztig(int i, const WeightSeries<S>& f) const {
  const RootSystem& rs = group_.roots();
  if (i < 0 || i > rs.rank()) throw DomainError("Demazure-Lusztig index out of range");
  // X^{alpha_i} = Q^{a_q} e^{a_w}.
  Weight a_w = i == 0 ? -rs.theta().weight : rs.simple_root(i - 1);
  const int a_q = i == 0 ? -rs.denom_m() : 0;
  const Poly2 t_half = Poly2::monomial(0, 1);
  const Poly2 t_minus_half = Poly2::monomial(0, -1);
  const Poly2 t_diff = t_half - t_minus_half;

  WeightSeries<S> g;
  for (const auto& [nu, c] : f) {
    const int k = i == 0 ? -rs.coroot_pairing(nu, rs.theta()) : nu[i - 1];
    // s_i X^nu = X^nu a^{-k}
    g.add(nu - k * a_w, c * S(Poly2::monomial(-k * a_q, -1, -1)));
    if (k > 0) {
      for (int j = 1; j <= k; ++j) g.add(nu - j * a_w, c * S(Poly2::monomial(-j * a_q, 0, -1) * t_diff));
    } else if (k < 0) {
      for (int j = 0; j < -k; ++j) g.add(nu + j * a_w, c * S(Poly2::monomial(j * a_q, 0, 1) * t_diff));
    }
  }
  return g;
}

template <class S>
WeightSeries<S> MacdonaldEngine::length_zero(const AffineWeylElt& pi, const WeightSeries<S>& f) const {
  WeightSeries<S> g;
  for (const auto& [nu, c] : f) {
    AffineMonomial im = affine_image(pi, nu);
    g.add(im.weight, c * S(Poly2::monomial(static_cast<int>(im.q_exp), 0)));
  }
  return g;
}

template <class S>
WeightSeries<S> MacdonaldEngine::apply_y(int j, const WeightSeries<S>& f) const {
  const ExtendedWord& tw = tau_words_.at(j);
  WeightSeries<S> g = f;
  for (auto it = tw.word.rbegin(); it != tw.word.rend(); ++it) g = demazure_lusztig(*it, g);
  return length_zero(tw.pi, g);
}

template PolySeries MacdonaldEngine::demazure_lusztig(int, const PolySeries&) const;
template RatSeries MacdonaldEngine::demazure_lusztig(int, const RatSeries&) const;
template PolySeries MacdonaldEngine::length_zero(const AffineWeylElt&, const PolySeries&) const;
template RatSeries MacdonaldEngine::length_zero(const AffineWeylElt&, const RatSeries&) const;
template PolySeries MacdonaldEngine::apply_y(int, const PolySeries&) const;
template RatSeries MacdonaldEngine::apply_y(int, const RatSeries&) const;

YMatrices MacdonaldEngine::cherednik_y_matrices(const Weight& lambda) const {
  YMatrices out;
  out.basis = group_.ordered_lower_set(lambda, budget_);
  const std::size_t n = out.basis.size();
  std::map<Weight, std::size_t> index;
  for (std::size_t k = 0; k < n; ++k) index[out.basis[k]] = k;

  std::vector<std::set<Weight>> below(n);
  for (std::size_t c = 0; c < n; ++c) {
    auto ls = group_.lower_set(out.basis[c], budget_);
    below[c] = std::set<Weight>(ls.begin(), ls.end());
  }
  for (int j = 0; j < group_.rank(); ++j) {
    YMatrix m;
    m.entries.assign(n, std::vector<Poly2>(n));
    for (std::size_t c = 0; c < n; ++c) {
      PolySeries img = apply_y(j, PolySeries::monomial(out.basis[c], Poly2(1)));
      for (const auto& [w, coef] : img) {
        if (!below[c].count(w))
          throw InvariantError("convention error: Y^{varpi_" + std::to_string(j + 1) + "} e^{" +
                               out.basis[c].to_string() + "} has a term at " + w.to_string() +
                               " outside the lower set");
        m.entries[index.at(w)][c] = coef;
      }
    }
    out.matrices.push_back(std::move(m));
  }
  return out;
}

MacdonaldPoly MacdonaldEngine::macdonald_e(const Weight& lambda) const {
  {
    std::shared_lock lock(mutex_);
    auto it = e_cache_.find(lambda);
    if (it != e_cache_.end()) return {lambda, *it->second};
  }
  MacdonaldPoly e = compute_e(lambda);
  std::unique_lock lock(mutex_);
  e_cache_.emplace(lambda, std::make_shared<const RatSeries>(e.series));
  return e;
}

MacdonaldPoly MacdonaldEngine::compute_e(const Weight& lambda) const {
  YMatrices ys = cherednik_y_matrices(lambda);
  const std::size_t n = ys.basis.size();
  const std::size_t top = n - 1;
  if (ys.basis[top] != lambda) throw InvariantError("lambda is not the maximum of its lower set");

  std::vector<RatQT> coef(n);
  coef[top] = RatQT(1);
  for (std::size_t r = top; r-- > 0;) {
    bool solved = false;
    for (const auto& y : ys.matrices) {
      Poly2 gap = y.at(top, top) - y.at(r, r);
      if (gap.is_zero()) continue;
      RatQT sum;
      for (std::size_t c = r + 1; c < n; ++c)
        if (!y.at(r, c).is_zero() && !coef[c].is_zero()) sum += RatQT(y.at(r, c)) * coef[c];
      coef[r] = sum / RatQT(gap);
      solved = true;
      break;
    }
    if (!solved)
      throw InvariantError("degenerate spectrum: all Y eigenvalues at " + ys.basis[r].to_string() +
                           " coincide with those at " + lambda.to_string());
  }
  // Each row was solved against one Y only; the vector must be a joint
  // eigenvector of all of them.
  for (std::size_t j = 0; j < ys.matrices.size(); ++j) {
    const YMatrix& y = ys.matrices[j];
    const RatQT eig(y.at(top, top));
    for (std::size_t r = 0; r < n; ++r) {
      RatQT lhs;
      for (std::size_t c = r; c < n; ++c)
        if (!y.at(r, c).is_zero() && !coef[c].is_zero()) lhs += RatQT(y.at(r, c)) * coef[c];
      if (!(lhs == eig * coef[r]))
        throw InvariantError("eigen-equation fails for Y^{varpi_" + std::to_string(j + 1) + "} at " +
                             ys.basis[r].to_string());
    }
  }
  MacdonaldPoly e{lambda, {}};
  for (std::size_t k = 0; k < n; ++k) e.series.add(ys.basis[k], coef[k]);
  return e;
}

LaurentSeries MacdonaldEngine::e_limit_q(const Weight& lambda) const {
  {
    std::shared_lock lock(mutex_);
    auto it = et_cache_.find(lambda);
    if (it != et_cache_.end()) return *it->second;
  }
  MacdonaldPoly e = macdonald_e(lambda);
  LaurentSeries out;
  for (const auto& [w, c] : e.series) {
    try {
      out.add(w, limit_q_infinity(c));
    } catch (const InvariantError& err) {
      throw InvariantError(std::string("convention error at e^{") + w.to_string() + "}: " + err.what());
    }
  }
  std::unique_lock lock(mutex_);
  et_cache_.emplace(lambda, std::make_shared<const LaurentSeries>(out));
  return out;
}

CCoefficient MacdonaldEngine::c_coeff(const Weight& lambda, const Weight& mu) const {
  if (!group_.bruhat_leq_weights(mu, lambda)) return {LaurentT(), true};
  return {e_limit_q(lambda).coefficient(mu), false};
}

LaurentT MacdonaldEngine::j_factor(const Weight& lambda) const {
  OrbitData d = group_.orbit_data(lambda);
  return LaurentT::monomial(d.length_w() - d.length_w_ring());
}

CharSeries limit_t_series(const LaurentSeries& f) {
  CharSeries out;
  for (const auto& [w, c] : f) {
    Rational v = limit_t_infinity(c);
    if (!is_integer(v)) throw InvariantError("non-integral t -> infinity limit at " + w.to_string());
    out.add(w, v.get_num().get_si());
  }
  return out;
}

}  // namespace dmult
