#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>

#include "dmult/laurent.hpp"
#include "dmult/poly2.hpp"

namespace dmult {

// Rational function in Q = q^{1/m} and T = t^{1/2}. Normal form: the
// numerator is a Laurent polynomial, the denominator a polynomial with no
// monomial factor, coprime to the numerator, whose (q,t)-lex leading
// coefficient is 1. Equal values have identical representations.
class RatQT {
 public:
  // Irreducible factor Phi_d(Q^a T^b), with gcd(a, b) = 1 and (a, b) > 0 in
  // lex order.
  struct Cyclo {
    int a = 0;
    int b = 0;
    int d = 1;
    friend auto operator<=>(const Cyclo&, const Cyclo&) = default;
  };
  using Factors = std::map<Cyclo, int>;

  RatQT() : den_(1), fac_(Factored{}) {}
  RatQT(long c) : num_(c), den_(1), fac_(Factored{}) {}              // NOLINT
  RatQT(const Rational& c) : num_(c), den_(1), fac_(Factored{}) {}   // NOLINT
  RatQT(const LaurentT& c) : num_(c), den_(1), fac_(Factored{}) {}   // NOLINT
  RatQT(const Poly2& c) : num_(c), den_(1), fac_(Factored{}) {}      // NOLINT
  // num / den, normalized; den must be nonzero.
  RatQT(const Poly2& num, const Poly2& den);

  const Poly2& num() const { return num_; }
  const Poly2& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatQT& operator+=(const RatQT& o);
  RatQT& operator-=(const RatQT& o);
  RatQT& operator*=(const RatQT& o);
  RatQT& operator/=(const RatQT& o);
  friend RatQT operator+(RatQT a, const RatQT& b) { return a += b; }
  friend RatQT operator-(RatQT a, const RatQT& b) { return a -= b; }
  friend RatQT operator*(RatQT a, const RatQT& b) { return a *= b; }
  friend RatQT operator/(RatQT a, const RatQT& b) { return a /= b; }
  RatQT operator-() const;
  friend bool operator==(const RatQT& x, const RatQT& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

  std::string to_string(int m) const;

 private:
  // Known factorization of the denominator: den_ = unit * prod(factors).
  struct Factored {
    Factors factors;
    Poly2 unit = Poly2(1);  // a monomial
  };

  void normalize();
  // Sets *this = n / prod(f), cancelling common factors.
  void assign_factored(Poly2 n, Factors f);
  Poly2 scaled_numerator() const;  // num_ / unit

  Poly2 num_;
  Poly2 den_;
  std::optional<Factored> fac_;
};

// p = unit * prod(Phi_d(Q^a T^b)^k) when p is a monomial or a binomial
// c1 X1 + c2 X2 with c2 = +-c1.
std::optional<std::pair<Poly2, RatQT::Factors>> factor_binomial(const Poly2& p);

// q -> infinity. Zero if deg_q(num) < deg_q(den); the ratio of leading
// q-coefficients if equal. Throws InvariantError for a divergent limit or a
// non-Laurent ratio.
LaurentT limit_q_infinity(const RatQT& c);

}  // namespace dmult
