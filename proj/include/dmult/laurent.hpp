#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dmult/rational.hpp"

namespace dmult {

// Laurent polynomial in t^{1/2} with rational coefficients. Exponents are
// stored doubled: the term (k, c) is c * t^{k/2}. No zero coefficients.
class LaurentT {
 public:
  using Term = std::pair<int, Rational>;

  LaurentT() = default;
  LaurentT(long c);  // NOLINT: constants embed implicitly
  LaurentT(const Rational& c);  // NOLINT
  static LaurentT monomial(int doubled_exp, const Rational& c = 1);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  Rational coefficient(int doubled_exp) const;
  // Largest / smallest doubled exponent; requires nonzero.
  int max_exp() const { return terms_.back().first; }
  int min_exp() const { return terms_.front().first; }
  bool has_odd_exponent() const;

  LaurentT& operator+=(const LaurentT& o);
  LaurentT& operator-=(const LaurentT& o);
  LaurentT& operator*=(const LaurentT& o);
  LaurentT& operator*=(const Rational& c);
  friend LaurentT operator+(LaurentT a, const LaurentT& b) { return a += b; }
  friend LaurentT operator-(LaurentT a, const LaurentT& b) { return a -= b; }
  friend LaurentT operator*(const LaurentT& a, const LaurentT& b);
  LaurentT operator-() const;
  friend bool operator==(const LaurentT&, const LaurentT&) = default;

  // Multiply by t^{k/2}.
  LaurentT shifted(int doubled_exp) const;

  // Exact quotient a / b in the Laurent ring, if it exists.
  static bool try_divide(const LaurentT& a, const LaurentT& b, LaurentT& out);

  // "c0 + c1*t^{-1/2} + ...": descending exponents unless ascending is set.
  std::string to_string(bool ascending = false) const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

// Coefficient of t^0; throws InvariantError("limit diverges") if any
// strictly positive exponent is present.
Rational limit_t_infinity(const LaurentT& c);

// Exact value at a positive rational t. Odd half-exponents need t to be a
// perfect square; otherwise DomainError.
Rational evaluate_t(const LaurentT& c, const Rational& t_value);

// Renders c * t^{e/2} term lists shared by the Laurent printers.
std::string format_exponent(int doubled_exp, char var = 't');

}  // namespace dmult
