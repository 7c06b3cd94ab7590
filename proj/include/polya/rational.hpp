#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polya {

// Arbitrary precision, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using Integer = mpz_class;

/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws polya::Error on malformed input.
Rational parse_rational(std::string_view text);

/// Nearest long double, correct to about 64 bits of mantissa. Values outside
/// the long double range saturate to +-inf / 0.
long double to_long_double(const Rational& q);
long double to_long_double(const Integer& z);

Integer factorial(unsigned n);

/// Number of fixed-point-free permutations of m items.
Integer derangements(unsigned m);

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace polya
