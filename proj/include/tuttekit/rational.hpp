#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace tuttekit {

using Integer = mpz_class;
/// GMP rationals are kept in lowest terms with a positive denominator by every
/// arithmetic operation; values built from a raw numerator/denominator pair
/// must go through make_rational.
using Rational = mpq_class;

Rational make_rational(const Integer& numerator, const Integer& denominator);

/// Parses "17", "-3", "+2/6", "  -4/ 8" style input. Throws Error(parse).
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

bool is_integer(const Rational& value);

/// Throws Error(inconsistent) when value is not an integer.
Integer to_integer(const Rational& value);

/// Converts to int64, throwing Error(invalid_argument) on overflow.
std::int64_t to_int64(const Integer& value);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
Integer ipow(const Integer& base, unsigned exponent);
Rational rpow(const Rational& base, unsigned exponent);

bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);  // smallest prime > n

}  // namespace tuttekit
