#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace affinv {

// GMP keeps mpq_class canonical (lowest terms, positive denominator) after
// every arithmetic operation; values built from raw numerator/denominator
// pairs must go through make_rational.
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);

// "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

bool is_integer(const Rational& r);

// Floor of a rational as a signed 64-bit value; throws std::overflow_error
// when the result does not fit.
std::int64_t floor_to_int64(const Rational& r);

BigInt lcm(const BigInt& a, const BigInt& b);

}  // namespace affinv
