#include "dmult/ratqt.hpp"

#include <mutex>
#include <numeric>
#include <vector>

#include "dmult/error.hpp"

namespace dmult {

namespace {

std::vector<long> divide_exact(std::vector<long> p, const std::vector<long>& f) {
  std::vector<long> r(p.size() - f.size() + 1, 0);
  for (std::size_t k = r.size(); k-- > 0;) {
    const long c = p[k + f.size() - 1];
    r[k] = c;
    for (std::size_t j = 0; j < f.size(); ++j) p[k + j] -= c * f[j];
  }
  return r;
}

// Integer coefficients of the d-th cyclotomic polynomial, ascending.
std::vector<long> cyclotomic(int d) {
  static std::mutex mu;
  static std::vector<std::vector<long>> table{{}};  // table[e] = Phi_e
  std::lock_guard lock(mu);
  while (static_cast<int>(table.size()) <= d) {
    const int e = static_cast<int>(table.size());
    std::vector<long> p(e + 1, 0);
    p[0] = -1;
    p[e] = 1;
    for (int g = 1; g < e; ++g)
      if (e % g == 0) p = divide_exact(std::move(p), table[g]);
    table.push_back(std::move(p));
  }
  return table[d];
}

Poly2 cyclo_poly(const RatQT::Cyclo& c) {
  const auto coeffs = cyclotomic(c.d);
  std::vector<Poly2::Term> terms;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0)
      terms.push_back({static_cast<int>(k) * c.a, static_cast<int>(k) * c.b, Rational(coeffs[k])});
  return Poly2::from_sorted(std::move(terms));
}

Poly2 expand(const RatQT::Factors& f) {
  Poly2 p(1);
  for (const auto& [c, k] : f) {
    Poly2 base = cyclo_poly(c);
    for (int i = 0; i < k; ++i) p = p * base;
  }
  return p;
}

RatQT::Factors excess(const RatQT::Factors& big, const RatQT::Factors& small) {
  RatQT::Factors out;
  for (const auto& [c, k] : big) {
    auto it = small.find(c);
    int r = k - (it == small.end() ? 0 : it->second);
    if (r > 0) out[c] = r;
  }
  return out;
}

}  // namespace

std::optional<std::pair<Poly2, RatQT::Factors>> factor_binomial(const Poly2& p) {
  if (p.is_zero()) return std::nullopt;
  if (p.size() == 1) return std::make_pair(p, RatQT::Factors{});
  if (p.size() != 2) return std::nullopt;
  const auto& lo = p.terms()[0];
  const auto& hi = p.terms()[1];
  // p = c1 X1 (1 - r M), M = X2 / X1 lex positive
  const Rational r = -hi.c / lo.c;
  if (r != 1 && r != -1) return std::nullopt;
  const int A = hi.q - lo.q, B = hi.t - lo.t;
  const int g = std::gcd(A, B);
  const int a = A / g, b = B / g;
  RatQT::Factors f;
  Poly2 unit = Poly2::monomial(lo.q, lo.t, lo.c);
  if (r == 1) {
    // 1 - u^g = -prod_{d | g} Phi_d(u)
    for (int d = 1; d <= g; ++d)
      if (g % d == 0) f[{a, b, d}] = 1;
    unit = -unit;
  } else {
    // 1 + u^g = prod_{d | 2g, d not dividing g} Phi_d(u)
    for (int d = 1; d <= 2 * g; ++d)
      if ((2 * g) % d == 0 && g % d != 0) f[{a, b, d}] = 1;
  }
  return std::make_pair(unit, f);
}

RatQT::RatQT(const Poly2& num, const Poly2& den) : num_(num), den_(den) {
  if (den_.is_zero()) throw InvariantError("rational function with zero denominator");
  if (auto fb = factor_binomial(den)) {
    // n / (unit * prod) = (n / unit) / prod
    const auto& u = fb->first.terms()[0];
    assign_factored(num.shifted(-u.q, -u.t) * Poly2(Rational(1 / u.c)), fb->second);
    return;
  }
  normalize();
}

Poly2 RatQT::scaled_numerator() const {
  const auto& u = fac_->unit.terms()[0];
  return num_.shifted(-u.q, -u.t) * Poly2(Rational(1 / u.c));
}

void RatQT::assign_factored(Poly2 n, Factors f) {
  if (n.is_zero()) {
    *this = RatQT();
    return;
  }
  for (auto it = f.begin(); it != f.end();) {
    Poly2 base = cyclo_poly(it->first), quo;
    while (it->second > 0 && try_divide(n, base, quo)) {
      n = std::move(quo);
      --it->second;
    }
    it = it->second == 0 ? f.erase(it) : std::next(it);
  }
  Poly2 d = expand(f);
  const int dq = d.min_q(), dt = d.min_t();
  d = d.shifted(-dq, -dt);
  n = n.shifted(-dq, -dt);
  const Rational lead = d.terms().back().c;
  Poly2 unit = Poly2::monomial(-dq, -dt, 1);
  if (lead != 1) {
    Rational inv = 1 / lead;
    n *= inv;
    d *= inv;
    unit *= inv;
  }
  num_ = std::move(n);
  den_ = std::move(d);
  fac_ = Factored{std::move(f), std::move(unit)};
}

void RatQT::normalize() {
  fac_.reset();
  if (num_.is_zero()) {
    den_ = Poly2(1);
    return;
  }
  // Move the denominator's monomial content into the numerator.
  const int dq = den_.min_q(), dt = den_.min_t();
  if (dq != 0 || dt != 0) {
    den_ = den_.shifted(-dq, -dt);
    num_ = num_.shifted(-dq, -dt);
  }
  if (den_.size() > 1) {
    const int nq = num_.min_q(), nt = num_.min_t();
    Poly2 n0 = num_.shifted(-nq, -nt);
    Poly2 g = gcd(n0, den_);
    if (!g.is_one()) {
      n0 = exact_divide(n0, g);
      den_ = exact_divide(den_, g);
    }
    num_ = n0.shifted(nq, nt);
  }
  const Rational lead = den_.terms().back().c;
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
}

RatQT& RatQT::operator+=(const RatQT& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (fac_ && o.fac_) {
    if (den_ == o.den_) {
      Factors f = fac_->factors;
      assign_factored(scaled_numerator() + o.scaled_numerator(), std::move(f));
      return *this;
    }
    const Factors& fa = fac_->factors;
    const Factors& fb = o.fac_->factors;
    Factors l = fa;
    for (const auto& [c, k] : fb) l[c] = std::max(l[c], k);
    Poly2 n = scaled_numerator() * expand(excess(l, fa)) + o.scaled_numerator() * expand(excess(l, fb));
    assign_factored(std::move(n), std::move(l));
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_one()) normalize();
    else if (num_.is_zero()) den_ = Poly2(1);
    return *this;
  }
  if (den_.is_one()) {
    num_ = num_ * o.den_ + o.num_;
    den_ = o.den_;
    normalize();
    return *this;
  }
  if (o.den_.is_one()) {
    num_ += o.num_ * den_;
    normalize();
    return *this;
  }
  Poly2 g = gcd(den_, o.den_);
  Poly2 a = exact_divide(den_, g), b = exact_divide(o.den_, g);
  num_ = num_ * b + o.num_ * a;
  den_ = den_ * b;
  normalize();
  return *this;
}

RatQT& RatQT::operator-=(const RatQT& o) { return *this += -o; }

RatQT RatQT::operator-() const {
  RatQT r = *this;
  r.num_ = -r.num_;
  return r;
}

RatQT& RatQT::operator*=(const RatQT& o) {
  if (is_zero() || o.is_zero()) return *this = RatQT();
  if (fac_ && o.fac_) {
    Factors f = fac_->factors;
    for (const auto& [c, k] : o.fac_->factors) f[c] += k;
    assign_factored(scaled_numerator() * o.scaled_numerator(), std::move(f));
    return *this;
  }
  if (den_.is_one() && o.den_.is_one()) {
    num_ = num_ * o.num_;
    return *this;
  }
  // Cross-cancel before multiplying.
  auto strip = [](const Poly2& p) { return p.shifted(-p.min_q(), -p.min_t()); };
  Poly2 n1 = num_, n2 = o.num_, d1 = den_, d2 = o.den_;
  if (!d2.is_one()) {
    Poly2 g = gcd(strip(n1), d2);
    if (!g.is_one()) {
      n1 = exact_divide(n1, g);
      d2 = exact_divide(d2, g);
    }
  }
  if (!d1.is_one()) {
    Poly2 g = gcd(strip(n2), d1);
    if (!g.is_one()) {
      n2 = exact_divide(n2, g);
      d1 = exact_divide(d1, g);
    }
  }
  fac_.reset();
  num_ = n1 * n2;
  den_ = d1 * d2;
  const Rational lead = den_.terms().back().c;
  if (lead != 1) {
    Rational inv = 1 / lead;
    num_ *= inv;
    den_ *= inv;
  }
  return *this;
}

RatQT& RatQT::operator/=(const RatQT& o) {
  if (o.is_zero()) throw InvariantError("division by zero rational function");
  if (fac_ && o.fac_) {
    if (auto fb = factor_binomial(o.num_)) {
      // (n1 / P1) / (n2 / P2) = n1 P2 / (unit2 prod2 P1)
      Factors f = fac_->factors;
      for (const auto& [c, k] : fb->second) f[c] += k;
      const auto& u = fb->first.terms()[0];
      Poly2 n = scaled_numerator() * expand(o.fac_->factors);
      assign_factored(n.shifted(-u.q, -u.t) * Poly2(Rational(1 / u.c)), std::move(f));
      return *this;
    }
  }
  RatQT inv;
  inv.num_ = o.den_;
  inv.den_ = o.num_;
  inv.normalize();
  return *this *= inv;
}

std::string RatQT::to_string(int m) const {
  if (den_.is_one()) return num_.to_string(m);
  return "(" + num_.to_string(m) + ")/(" + den_.to_string(m) + ")";
}

LaurentT limit_q_infinity(const RatQT& c) {
  if (c.is_zero()) return {};
  const int dn = c.num().max_q(), dd = c.den().max_q();
  if (dn > dd) throw InvariantError("limit diverges: q -> infinity of " + c.to_string(1));
  if (dn < dd) return {};
  LaurentT out;
  if (!LaurentT::try_divide(c.num().q_coefficient(dn), c.den().q_coefficient(dd), out))
    throw InvariantError("limit not Laurent: q -> infinity of " + c.to_string(1));
  return out;
}

}  // namespace dmult
