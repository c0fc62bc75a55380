#pragma once

#include <gmpxx.h>

#include <string>

namespace dmult {

using Rational = mpq_class;
using Integer = mpz_class;

// Lowest terms, "-" prefix, "a/b" for non-integers.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational make_rational(long num, long den) {
  Rational r{Integer(num), Integer(den)};
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

Rational parse_rational(const std::string& text);

}  // namespace dmult
