#include "dmult/root_data.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

#include "dmult/error.hpp"

namespace dmult {

namespace {

using Matrix = std::vector<std::vector<Rational>>;

Matrix invert(Matrix a) {
  const std::size_t n = a.size();
  Matrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw InvariantError("singular Cartan matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

RationalVector unit(int dim, int k, int scale = 1) {
  RationalVector v(dim, Rational(0));
  v[k] = scale;
  return v;
}

RationalVector diff(RationalVector a, const RationalVector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

// Bourbaki simple roots in orthonormal coordinates plus the scalar that
// makes short roots have squared length 2.
std::pair<std::vector<RationalVector>, Rational> ambient_simple_roots(CartanType ct) {
  const int n = ct.rank;
  std::vector<RationalVector> roots;
  switch (ct.family) {
    case 'A':
      for (int i = 0; i < n; ++i) roots.push_back(diff(unit(n + 1, i), unit(n + 1, i + 1)));
      return {roots, Rational(1)};
    case 'B':
      for (int i = 0; i + 1 < n; ++i) roots.push_back(diff(unit(n, i), unit(n, i + 1)));
      roots.push_back(unit(n, n - 1));
      return {roots, Rational(2)};
    case 'C':
      for (int i = 0; i + 1 < n; ++i) roots.push_back(diff(unit(n, i), unit(n, i + 1)));
      roots.push_back(unit(n, n - 1, 2));
      return {roots, Rational(1)};
    case 'D': {
      for (int i = 0; i + 1 < n; ++i) roots.push_back(diff(unit(n, i), unit(n, i + 1)));
      RationalVector last = unit(n, n - 2);
      last[n - 1] = 1;
      roots.push_back(last);
      return {roots, Rational(1)};
    }
    case 'G':
      roots.push_back(RationalVector{1, -1, 0});
      roots.push_back(RationalVector{-2, 1, 1});
      return {roots, Rational(1)};
  }
  throw InvariantError("unreachable Cartan family");
}

}  // namespace

const std::vector<CartanType>& supported_types() {
  static const std::vector<CartanType> types = {
      {'A', 1}, {'A', 2}, {'A', 3}, {'A', 4}, {'B', 2}, {'B', 3}, {'C', 3}, {'D', 4}, {'G', 2},
  };
  return types;
}

CartanType parse_cartan_type(std::string_view text) {
  std::string supported;
  for (const auto& t : supported_types()) supported += (supported.empty() ? "" : ", ") + t.name();
  if (text.size() >= 2) {
    CartanType ct;
    ct.family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    std::string digits(text.substr(1));
    if (std::all_of(digits.begin(), digits.end(), [](unsigned char c) { return std::isdigit(c); }) &&
        digits.size() <= 2) {
      ct.rank = std::stoi(digits);
      for (const auto& t : supported_types())
        if (t == ct) return ct;
    }
  }
  throw ParseError("unsupported Cartan type '" + std::string(text) + "'; supported: " + supported);
}

int Root::height() const { return std::accumulate(simple.begin(), simple.end(), 0); }

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::Dominant: return "dominant";
    case Dominance::Antidominant: return "antidominant";
    case Dominance::Neither: return "neither";
    case Dominance::BothZero: return "both-zero";
  }
  return "?";
}

RootSystem RootSystem::build(CartanType ct) {
  bool ok = false;
  for (const auto& t : supported_types()) ok = ok || t == ct;
  if (!ok) parse_cartan_type(ct.name());  // throws with the supported list

  RootSystem rs;
  rs.type_ = ct;
  const int n = ct.rank;
  auto [simple_amb, scale] = ambient_simple_roots(ct);
  rs.ambient_scale_ = scale;

  std::vector<int> half_norm(n);
  for (int j = 0; j < n; ++j) {
    Rational hn = rs.ambient_inner(simple_amb[j], simple_amb[j]) / 2;
    if (!is_integer(hn)) throw InvariantError("non-integral simple root norm");
    half_norm[j] = static_cast<int>(hn.get_num().get_si());
  }
  rs.cartan_.assign(n, std::vector<int>(n));
  Matrix cartan_q(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = 2 * rs.ambient_inner(simple_amb[j], simple_amb[i]) /
                   rs.ambient_inner(simple_amb[i], simple_amb[i]);
      rs.cartan_[i][j] = static_cast<int>(v.get_num().get_si());
      cartan_q[i][j] = v;
    }
  rs.cartan_inverse_ = invert(cartan_q);
  Integer det = 1;
  for (const auto& row : rs.cartan_inverse_)
    for (const auto& v : row) mpz_lcm(det.get_mpz_t(), det.get_mpz_t(), v.get_den_mpz_t());
  rs.cartan_det_ = det.get_si();
  rs.cartan_inverse_scaled_.assign(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = rs.cartan_inverse_[i][j] * rs.cartan_det_;
      rs.cartan_inverse_scaled_[i][j] = v.get_num().get_si();
    }

  // Fundamental weights: [alpha] = [varpi] C, so varpi_i = sum_j alpha_j Cinv[j][i].
  const std::size_t dim = simple_amb[0].size();
  rs.fund_ambient_.assign(n, RationalVector(dim, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        rs.fund_ambient_[i][k] += simple_amb[j][k] * rs.cartan_inverse_[j][i];

  // (varpi_i, varpi_j) = Cinv[i][j] * d_i.
  rs.fund_gram_.assign(n, std::vector<Rational>(n));
  Integer lcd = 1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      rs.fund_gram_[i][j] = rs.cartan_inverse_[i][j] * half_norm[i];
      mpz_lcm(lcd.get_mpz_t(), lcd.get_mpz_t(), rs.fund_gram_[i][j].get_den_mpz_t());
    }
  rs.denom_m_ = static_cast<int>(lcd.get_si());
  rs.fund_gram_scaled_.assign(n, std::vector<long>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rational v = rs.fund_gram_[i][j] * rs.denom_m_;
      rs.fund_gram_scaled_[i][j] = v.get_num().get_si();
    }

  // Close the simple roots under the simple reflections.
  std::vector<Weight> simple_w;
  for (int j = 0; j < n; ++j) {
    Weight w(n);
    for (int i = 0; i < n; ++i) w[i] = rs.cartan_[i][j];
    simple_w.push_back(w);
  }
  std::set<Weight> all(simple_w.begin(), simple_w.end());
  std::vector<Weight> frontier = simple_w;
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& b : frontier)
      for (int i = 0; i < n; ++i) {
        Weight c = b;
        int k = c[i];
        c -= k * simple_w[i];
        if (all.insert(c).second) next.push_back(c);
      }
    frontier = std::move(next);
  }

  for (const auto& b : all) {
    RationalVector rc = rs.root_coordinates(b);
    if (!std::all_of(rc.begin(), rc.end(), [](const Rational& x) { return x >= 0; })) continue;
    Root r;
    r.weight = b;
    r.ambient.assign(dim, Rational(0));
    for (int j = 0; j < n; ++j) {
      if (!is_integer(rc[j])) throw InvariantError("non-integral root coordinate");
      r.simple.push_back(static_cast<int>(rc[j].get_num().get_si()));
      for (std::size_t k = 0; k < dim; ++k) r.ambient[k] += rc[j] * simple_amb[j][k];
    }
    Rational hn = rs.ambient_inner(r.ambient, r.ambient) / 2;
    r.half_norm = static_cast<int>(hn.get_num().get_si());
    for (int j = 0; j < n; ++j) {
      Rational c = make_rational(r.simple[j] * half_norm[j], r.half_norm);
      if (!is_integer(c)) throw InvariantError("non-integral coroot coordinate");
      r.co.push_back(static_cast<int>(c.get_num().get_si()));
    }
    rs.positive_.push_back(std::move(r));
  }
  std::stable_sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a.simple > b.simple;
  });
  rs.simple_index_.assign(n, -1);
  for (int k = 0; k < rs.num_positive(); ++k)
    if (rs.positive_[k].height() == 1)
      for (int j = 0; j < n; ++j)
        if (rs.positive_[k].simple[j] == 1) rs.simple_index_[j] = k;

  rs.lacing_ = *std::max_element(half_norm.begin(), half_norm.end());
  int best = -1;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (rs.positive_[k].is_short() &&
        (best < 0 || rs.positive_[k].height() > rs.positive_[best].height()))
      best = k;
  rs.theta_index_ = best;
  return rs;
}

Rational RootSystem::ambient_inner(const RationalVector& x, const RationalVector& y) const {
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s * ambient_scale_;
}

RationalVector RootSystem::ambient(const Weight& w) const {
  RationalVector v(fund_ambient_[0].size(), Rational(0));
  for (int i = 0; i < rank(); ++i)
    if (w[i] != 0)
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += w[i] * fund_ambient_[i][k];
  return v;
}

int RootSystem::coroot_pairing(const Weight& x, const Root& alpha) const {
  int s = 0;
  for (int j = 0; j < rank(); ++j) s += alpha.co[j] * x[j];
  return s;
}

Rational RootSystem::pairing(const RationalVector& x, const RationalVector& alpha) const {
  return 2 * ambient_inner(x, alpha) / ambient_inner(alpha, alpha);
}

Rational RootSystem::inner(const Weight& x, const Weight& y) const {
  return make_rational(inner_scaled(x, y), denom_m_);
}

long RootSystem::inner_scaled(const Weight& x, const Weight& y) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank(); ++j) s += static_cast<long>(x[i]) * y[j] * fund_gram_scaled_[i][j];
  }
  return s;
}

int RootSystem::two_rho_pairing(const Weight& x) const {
  int s = 0;
  for (const auto& a : positive_) s += coroot_pairing(x, a);
  return s;
}

RationalVector RootSystem::rho_ambient() const {
  RationalVector v(fund_ambient_[0].size(), Rational(0));
  for (const auto& a : positive_)
    for (std::size_t k = 0; k < v.size(); ++k) v[k] += a.ambient[k] / a.half_norm;
  for (auto& x : v) x /= 2;
  return v;
}

Weight RootSystem::rho_weight() const {
  Weight w(rank());
  for (int i = 0; i < rank(); ++i) w[i] = 1;
  return w;
}

Dominance RootSystem::dominance(const Weight& x) const {
  bool nonneg = true, nonpos = true;
  for (int v : x.coords()) {
    nonneg = nonneg && v >= 0;
    nonpos = nonpos && v <= 0;
  }
  if (nonneg && nonpos) return Dominance::BothZero;
  if (nonneg) return Dominance::Dominant;
  if (nonpos) return Dominance::Antidominant;
  return Dominance::Neither;
}

bool RootSystem::is_dominant(const Weight& x) const {
  for (int v : x.coords())
    if (v < 0) return false;
  return true;
}

bool RootSystem::is_antidominant(const Weight& x) const {
  for (int v : x.coords())
    if (v > 0) return false;
  return true;
}

Weight RootSystem::reflect(int i, const Weight& x) const {
  Weight r = x;
  const int k = x[i];
  if (k != 0) r -= k * simple_root(i);
  return r;
}

Weight RootSystem::reflect(const Root& alpha, const Weight& x) const {
  Weight r = x;
  const int k = coroot_pairing(x, alpha);
  if (k != 0) r -= k * alpha.weight;
  return r;
}

RationalVector RootSystem::root_coordinates(const Weight& x) const {
  RationalVector rc(rank(), Rational(0));
  for (int j = 0; j < rank(); ++j)
    for (int i = 0; i < rank(); ++i) rc[j] += cartan_inverse_[j][i] * x[i];
  return rc;
}

bool RootSystem::in_root_lattice(const Weight& x) const {
  for (int j = 0; j < rank(); ++j) {
    long s = 0;
    for (int i = 0; i < rank(); ++i) s += cartan_inverse_scaled_[j][i] * x[i];
    if (s % cartan_det_ != 0) return false;
  }
  return true;
}

int RootSystem::find_positive(const Weight& x) const {
  for (int k = 0; k < num_positive(); ++k)
    if (positive_[k].weight == x) return k;
  return -1;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw ParseError("malformed rational '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace dmult
