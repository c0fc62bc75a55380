#include "dmult/laurent.hpp"

#include <algorithm>
#include <map>

#include "dmult/error.hpp"
#include "dmult/upoly.hpp"

namespace dmult {

LaurentT::LaurentT(long c) {
  if (c != 0) terms_.emplace_back(0, Rational(c));
}

LaurentT::LaurentT(const Rational& c) {
  if (c != 0) terms_.emplace_back(0, c);
}

LaurentT LaurentT::monomial(int doubled_exp, const Rational& c) {
  LaurentT r;
  if (c != 0) r.terms_.emplace_back(doubled_exp, c);
  return r;
}

Rational LaurentT::coefficient(int doubled_exp) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), doubled_exp,
                             [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == doubled_exp) return it->second;
  return 0;
}

bool LaurentT::has_odd_exponent() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.first % 2 != 0; });
}

void LaurentT::normalize() {
  std::erase_if(terms_, [](const Term& t) { return t.second == 0; });
}

LaurentT& LaurentT::operator+=(const LaurentT& o) {
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == terms_.end() || b->first < a->first) {
      out.push_back(*b++);
    } else {
      Rational s = a->second + b->second;
      if (s != 0) out.emplace_back(a->first, s);
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentT& LaurentT::operator-=(const LaurentT& o) { return *this += -o; }

LaurentT LaurentT::operator-() const {
  LaurentT r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

LaurentT operator*(const LaurentT& a, const LaurentT& b) {
  std::map<int, Rational> acc;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[ea + eb] += ca * cb;
  LaurentT r;
  for (auto& [e, c] : acc)
    if (c != 0) r.terms_.emplace_back(e, std::move(c));
  return r;
}

LaurentT& LaurentT::operator*=(const LaurentT& o) { return *this = *this * o; }

LaurentT& LaurentT::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

LaurentT LaurentT::shifted(int doubled_exp) const {
  LaurentT r = *this;
  for (auto& t : r.terms_) t.first += doubled_exp;
  return r;
}

bool LaurentT::try_divide(const LaurentT& a, const LaurentT& b, LaurentT& out) {
  if (b.is_zero()) return false;
  if (a.is_zero()) {
    out = LaurentT();
    return true;
  }
  UPoly pa = UPoly::from_terms(a.terms_, a.min_exp());
  UPoly pb = UPoly::from_terms(b.terms_, b.min_exp());
  UPoly q, r;
  UPoly::divrem(pa, pb, q, r);
  if (!r.is_zero()) return false;
  out = LaurentT();
  const int shift = a.min_exp() - b.min_exp();
  for (int k = 0; k <= q.degree(); ++k)
    if (q.coeff(k) != 0) out.terms_.emplace_back(k + shift, q.coeff(k));
  return true;
}

std::string format_exponent(int doubled_exp, char var) {
  std::string v(1, var);
  if (doubled_exp == 2) return v;
  if (doubled_exp % 2 == 0) return v + "^{" + std::to_string(doubled_exp / 2) + "}";
  return v + "^{" + std::to_string(doubled_exp) + "/2}";
}

std::string LaurentT::to_string(bool ascending) const {
  if (terms_.empty()) return "0";
  std::vector<Term> ts = terms_;
  if (!ascending) std::reverse(ts.begin(), ts.end());
  std::string s;
  bool first = true;
  for (const auto& [e, c] : ts) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      s += mag.get_str();
    } else {
      if (mag != 1) s += mag.get_str() + "*";
      s += format_exponent(e);
    }
  }
  return s;
}

Rational limit_t_infinity(const LaurentT& c) {
  if (!c.is_zero() && c.max_exp() > 0)
    throw InvariantError("limit diverges: t -> infinity of " + c.to_string());
  return c.coefficient(0);
}

namespace {
bool exact_sqrt(const Rational& x, Rational& root) {
  Integer n = x.get_num(), d = x.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t())) return false;
  Integer rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  root = Rational(rn, rd);
  return true;
}

Rational power(Rational base, int e) {
  if (e < 0) {
    base = 1 / base;
    e = -e;
  }
  Rational r = 1;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}
}  // namespace

Rational evaluate_t(const LaurentT& c, const Rational& t_value) {
  if (t_value <= 0) throw DomainError("evaluate_t requires a positive parameter");
  Rational half = 0;
  bool have_half = false;
  Rational sum = 0;
  for (const auto& [e, coef] : c.terms()) {
    if (e % 2 == 0) {
      sum += coef * power(t_value, e / 2);
    } else {
      if (!have_half) {
        if (!exact_sqrt(t_value, half))
          throw DomainError("t^{1/2} is irrational at t = " + t_value.get_str());
        have_half = true;
      }
      sum += coef * power(half, e);
    }
  }
  return sum;
}

}  // namespace dmult
