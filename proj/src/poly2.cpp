#include "dmult/poly2.hpp"

#include <algorithm>

#include "dmult/error.hpp"
#include "dmult/upoly.hpp"

namespace dmult {

namespace {

bool term_less(const Poly2::Term& a, const Poly2::Term& b) {
  return a.q != b.q ? a.q < b.q : a.t < b.t;
}

// Polynomial in Q with coefficients in Q[T]; index = Q exponent.
using BiPoly = std::vector<UPoly>;

void trim(BiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

BiPoly to_bi(const Poly2& p) {
  BiPoly out;
  if (p.is_zero()) return out;
  const int q0 = p.min_q(), t0 = p.min_t();
  std::vector<std::vector<std::pair<int, Rational>>> rows(p.max_q() - q0 + 1);
  for (const auto& term : p.terms()) rows[term.q - q0].emplace_back(term.t, term.c);
  for (auto& row : rows) out.push_back(UPoly::from_terms(row, t0));
  return out;
}

std::vector<Poly2::Term> from_bi(const BiPoly& p) {
  std::vector<Poly2::Term> terms;
  for (std::size_t k = 0; k < p.size(); ++k)
    for (int j = 0; j <= p[k].degree(); ++j)
      if (p[k].coeff(j) != 0) terms.push_back({static_cast<int>(k), j, p[k].coeff(j)});
  return terms;
}

UPoly content(const BiPoly& p) {
  UPoly g;
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c.monic() : UPoly::gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

BiPoly div_content(const BiPoly& p, const UPoly& c) {
  if (c.degree() == 0) {
    BiPoly out;
    for (const auto& x : p) out.push_back(x.scaled(1 / c.lead()));
    return out;
  }
  BiPoly out;
  for (const auto& x : p) out.push_back(x.is_zero() ? UPoly() : UPoly::exact_div(x, c));
  return out;
}

BiPoly primitive(const BiPoly& p) {
  if (p.empty()) return p;
  return div_content(p, content(p));
}

BiPoly pseudo_rem(BiPoly a, const BiPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  const UPoly& lb = b.back();
  while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
    const int da = static_cast<int>(a.size()) - 1;
    UPoly la = a.back();
    for (auto& x : a) x = x * lb;
    for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - la * b[j];
    trim(a);
  }
  return a;
}

BiPoly bi_mul_upoly(const BiPoly& p, const UPoly& c) {
  BiPoly out;
  for (const auto& x : p) out.push_back(x * c);
  return out;
}

// Scale so that the coefficient of the highest (Q, T) monomial is 1.
BiPoly lex_monic(const BiPoly& p) {
  if (p.empty()) return p;
  Rational s = 1 / p.back().lead();
  BiPoly out;
  for (const auto& x : p) out.push_back(x.scaled(s));
  return out;
}

BiPoly bi_gcd(BiPoly a, BiPoly b) {
  trim(a);
  trim(b);
  if (a.empty()) return lex_monic(b);
  if (b.empty()) return lex_monic(a);
  UPoly ca = content(a), cb = content(b);
  UPoly c = UPoly::gcd(ca, cb);
  a = div_content(a, ca);
  b = div_content(b, cb);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    if (b.size() == 1) {  // constant in Q and primitive: a unit
      a = {UPoly::constant(1)};
      break;
    }
    BiPoly r = pseudo_rem(a, b);
    a = std::move(b);
    b = r.empty() ? r : primitive(r);
  }
  return lex_monic(bi_mul_upoly(primitive(a), c));
}

BiPoly bi_exact_div(BiPoly a, const BiPoly& b) {
  trim(a);
  const int db = static_cast<int>(b.size()) - 1;
  if (db < 0) throw InvariantError("division by zero polynomial");
  if (a.empty()) return {};
  BiPoly q(std::max<int>(0, static_cast<int>(a.size()) - db), UPoly());
  while (!a.empty() && static_cast<int>(a.size()) - 1 >= db) {
    const int da = static_cast<int>(a.size()) - 1;
    UPoly f = UPoly::exact_div(a.back(), b.back());
    q[da - db] = f;
    for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - f * b[j];
    trim(a);
  }
  if (!a.empty()) throw InvariantError("inexact bivariate division");
  trim(q);
  return q;
}

}  // namespace

Poly2::Poly2(long c) {
  if (c != 0) terms_.push_back({0, 0, Rational(c)});
}

Poly2::Poly2(const Rational& c) {
  if (c != 0) terms_.push_back({0, 0, c});
}

Poly2::Poly2(const LaurentT& c) {
  for (const auto& [e, v] : c.terms()) terms_.push_back({0, e, v});
}

Poly2 Poly2::monomial(int q, int t, const Rational& c) {
  Poly2 p;
  if (c != 0) p.terms_.push_back({q, t, c});
  return p;
}

bool Poly2::is_one() const {
  return terms_.size() == 1 && terms_[0].q == 0 && terms_[0].t == 0 && terms_[0].c == 1;
}

int Poly2::min_q() const { return terms_.front().q; }
int Poly2::max_q() const { return terms_.back().q; }
int Poly2::min_t() const {
  int m = terms_.front().t;
  for (const auto& x : terms_) m = std::min(m, x.t);
  return m;
}
int Poly2::max_t() const {
  int m = terms_.front().t;
  for (const auto& x : terms_) m = std::max(m, x.t);
  return m;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && term_less(*a, *b))) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || term_less(*b, *a)) {
      out.push_back(*b++);
    } else {
      Rational s = a->c + b->c;
      if (s != 0) out.push_back({a->q, a->t, std::move(s)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) { return *this += -o; }

Poly2& Poly2::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& x : terms_) x.c *= c;
  return *this;
}

Poly2 Poly2::operator-() const {
  Poly2 r = *this;
  for (auto& x : r.terms_) x.c = -x.c;
  return r;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Poly2& mono = a.terms_.size() == 1 ? a : b;
    const Poly2& other = a.terms_.size() == 1 ? b : a;
    const auto& m = mono.terms_[0];
    Poly2 r = other;
    for (auto& x : r.terms_) {
      x.q += m.q;
      x.t += m.t;
      x.c *= m.c;
    }
    return r;
  }
  std::vector<Poly2::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back({x.q + y.q, x.t + y.t, x.c * y.c});
  std::sort(prod.begin(), prod.end(), term_less);
  std::vector<Poly2::Term> out;
  for (auto& x : prod) {
    if (!out.empty() && out.back().q == x.q && out.back().t == x.t) {
      out.back().c += x.c;
    } else {
      if (!out.empty() && out.back().c == 0) out.pop_back();
      out.push_back(std::move(x));
    }
  }
  if (!out.empty() && out.back().c == 0) out.pop_back();
  return Poly2(std::move(out));
}

Poly2 Poly2::shifted(int dq, int dt) const {
  Poly2 r = *this;
  for (auto& x : r.terms_) {
    x.q += dq;
    x.t += dt;
  }
  return r;
}

LaurentT Poly2::q_coefficient(int k) const {
  LaurentT r;
  for (const auto& x : terms_)
    if (x.q == k) r += LaurentT::monomial(x.t, x.c);
  return r;
}

std::string Poly2::to_string(int m) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational mag = abs(it->c);
    if (first) {
      if (it->c < 0) s += "-";
    } else {
      s += it->c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    if (it->q != 0) {
      Rational e = make_rational(it->q, m);
      mono += e == 1 ? std::string("q") : "q^{" + e.get_str() + "}";
    }
    if (it->t != 0) {
      if (!mono.empty()) mono += "*";
      mono += format_exponent(it->t);
    }
    if (mono.empty()) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += mono;
    }
  }
  return s;
}

Poly2 gcd(const Poly2& a, const Poly2& b) {
  if (!a.is_zero() && (a.min_q() < 0 || a.min_t() < 0)) throw InvariantError("gcd of a Laurent polynomial");
  if (!b.is_zero() && (b.min_q() < 0 || b.min_t() < 0)) throw InvariantError("gcd of a Laurent polynomial");
  // Pull out the common monomial, which to_bi would otherwise drop.
  int mq = 0, mt = 0;
  if (!a.is_zero() && !b.is_zero()) {
    mq = std::min(a.min_q(), b.min_q());
    mt = std::min(a.min_t(), b.min_t());
  } else if (!a.is_zero()) {
    mq = a.min_q();
    mt = a.min_t();
  } else if (!b.is_zero()) {
    mq = b.min_q();
    mt = b.min_t();
  }
  BiPoly ba = to_bi(a.shifted(-mq, -mt)), bb = to_bi(b.shifted(-mq, -mt));
  return Poly2::from_sorted(from_bi(bi_gcd(ba, bb))).shifted(mq, mt);
}

Poly2 exact_divide(const Poly2& a, const Poly2& b) {
  if (b.is_zero()) throw InvariantError("division by zero polynomial");
  if (a.is_zero()) return {};
  const int dq = a.min_q() - b.min_q(), dt = a.min_t() - b.min_t();
  BiPoly q = bi_exact_div(to_bi(a), to_bi(b));
  return Poly2::from_sorted(from_bi(q)).shifted(dq, dt);
}

bool try_divide(const Poly2& a, const Poly2& b, Poly2& quotient) {
  if (b.is_zero()) throw InvariantError("division by zero polynomial");
  quotient = Poly2();
  if (a.is_zero()) return true;
  using Key = std::pair<int, int>;
  std::map<Key, Rational> rem;
  for (const auto& x : a.terms()) rem.emplace(Key{x.q, x.t}, x.c);
  const auto& bt = b.terms();
  const auto& lead = bt.back();
  // If b | a then lowest(a) = lowest(b) * lowest(quotient) in lex order, so
  // no quotient term can sit below that. Lex alone does not bound T, but
  // minimal degrees in each variable add under products.
  const Key floor{a.terms().front().q - bt.front().q, a.terms().front().t - bt.front().t};
  const int min_t = a.min_t() - b.min_t();
  std::vector<Poly2::Term> quo;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    const Key k{top->first.first - lead.q, top->first.second - lead.t};
    if (k < floor || k.second < min_t) return false;
    const Rational f = top->second / lead.c;
    quo.push_back({k.first, k.second, f});
    for (const auto& y : bt) {
      auto [it, fresh] = rem.try_emplace(Key{k.first + y.q, k.second + y.t}, 0);
      it->second -= f * y.c;
      if (it->second == 0) rem.erase(it);
    }
  }
  std::reverse(quo.begin(), quo.end());
  quotient = Poly2::from_sorted(std::move(quo));
  return true;
}

}  // namespace dmult
