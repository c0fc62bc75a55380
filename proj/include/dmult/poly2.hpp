#pragma once

#include <map>
#include <string>
#include <vector>

#include "dmult/laurent.hpp"
#include "dmult/rational.hpp"

namespace dmult {

// Laurent polynomial in Q = q^{1/m} and T = t^{1/2} over Q. Terms are kept
// sorted by (q exponent, t exponent) with no zero coefficients.
class Poly2 {
 public:
  struct Term {
    int q = 0;
    int t = 0;
    Rational c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  Poly2() = default;
  Poly2(long c);               // NOLINT
  Poly2(const Rational& c);    // NOLINT
  Poly2(const LaurentT& c);    // NOLINT: embeds with q exponent 0
  static Poly2 monomial(int q, int t, const Rational& c = 1);
  // Terms already sorted by (q, t), distinct and nonzero.
  static Poly2 from_sorted(std::vector<Term> terms) { return Poly2(std::move(terms)); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  std::size_t size() const { return terms_.size(); }
  // Requires nonzero.
  int min_q() const;
  int max_q() const;
  int min_t() const;
  int max_t() const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Rational& c);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  Poly2 operator-() const;
  friend bool operator==(const Poly2&, const Poly2&) = default;

  // Multiply by Q^dq T^dt.
  Poly2 shifted(int dq, int dt) const;
  // Coefficient of Q^k as a Laurent polynomial in t (T exponents become
  // doubled t exponents).
  LaurentT q_coefficient(int k) const;

  std::string to_string(int m) const;

 private:
  friend class RatQT;
  explicit Poly2(std::vector<Term> sorted_terms) : terms_(std::move(sorted_terms)) {}
  std::vector<Term> terms_;
};

// Multivariate gcd over Q of two polynomials (no negative exponents),
// normalized so that the lexicographically leading coefficient is 1.
Poly2 gcd(const Poly2& a, const Poly2& b);
// a / b for b | a (polynomial division); throws InvariantError otherwise.
Poly2 exact_divide(const Poly2& a, const Poly2& b);
// Laurent division: true and the quotient if b divides a in Q[Q^{+-1}, T^{+-1}].
bool try_divide(const Poly2& a, const Poly2& b, Poly2& quotient);

}  // namespace dmult
