#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tric {

// Exact rational scalar. mpq_class keeps gcd(num, den) = 1 and den > 0 for
// every arithmetic result as long as inputs are canonical; the constructors
// below canonicalize.
using Rat = mpq_class;
using Int = mpz_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Exact value of a finite double (doubles are dyadic rationals).
Rat rat_from_double(double x);

// Nearest double; at most one rounding.
double rat_to_double(const Rat& q);

// Accepts "p/q", plain integers, and plain decimals ("0.1" -> 1/10 exactly).
// Throws std::invalid_argument on anything else.
Rat rat_parse(const std::string& text);

// Parse a decimal integer literal (used for coefficients too wide for long).
Int int_parse(const std::string& text);

// "p/q", or "p" when the denominator is 1.
std::string rat_str(const Rat& q);

inline int sign(const Rat& q) { return sgn(q); }

Rat rat_pow(const Rat& base, long exp);

}  // namespace tric
