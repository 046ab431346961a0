#pragma once

#include <gmpxx.h>

#include <string>

namespace ter {

using Integer = mpz_class;
using Rational = mpq_class;

// n/d in lowest terms; d must be nonzero.
Rational make_rational(long n, long d = 1);

// Parses "p" or "p/q" (optional sign) into lowest terms.
Rational parse_rational(const std::string& text);

// "p" when the denominator is one, otherwise "p/q".
std::string to_string(const Rational& q);

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

Rational pow(const Rational& base, int exponent);

}  // namespace ter
