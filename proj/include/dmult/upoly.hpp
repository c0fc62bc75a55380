#pragma once

#include <utility>
#include <vector>

#include "dmult/rational.hpp"

namespace dmult {

// Dense univariate polynomial over Q; index = exponent. Internal helper for
// exact division and gcd.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const Rational& c) { return UPoly(std::vector<Rational>{c}); }
  // Terms (exponent, coefficient) shifted down by `shift`.
  template <class Terms>
  static UPoly from_terms(const Terms& terms, int shift) {
    std::vector<Rational> c;
    for (const auto& [e, v] : terms) {
      const std::size_t k = static_cast<std::size_t>(e - shift);
      if (c.size() <= k) c.resize(k + 1, Rational(0));
      c[k] = v;
    }
    return UPoly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const { return c_[k]; }
  const Rational& lead() const { return c_.back(); }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_constant() const { return c_.size() <= 1; }

  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  UPoly scaled(const Rational& s) const;
  friend bool operator==(const UPoly&, const UPoly&) = default;

  static void divrem(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r);
  // Requires b | a.
  static UPoly exact_div(const UPoly& a, const UPoly& b);
  // Monic gcd; gcd(0, 0) = 0.
  static UPoly gcd(UPoly a, UPoly b);
  UPoly monic() const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace dmult
