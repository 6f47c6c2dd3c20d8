#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace bethe {

using Integer = mpz_class;
using Rational = mpq_class;

/// Canonical (reduced, positive denominator) copy.
Rational canonical(Rational q);

Rational pow(const Rational& base, unsigned long exponent);
/// Integer power allowing negative exponents; base must be nonzero then.
Rational pow(const Rational& base, long exponent);

/// "p/q" in lowest terms; integers render as "p/1".
std::string to_string(const Rational& q);

/// Accepts "p/q" or "p"; throws ConfigError otherwise or on zero denominator.
Rational parse_rational(std::string_view text);

/// Exact square root if q is the square of a rational, else false.
bool is_rational_square(const Rational& q);

}  // namespace bethe
