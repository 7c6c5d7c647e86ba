#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace vball {

/// Exact arbitrary-precision rational. GMP keeps values in canonical
/// reduced form; no operation in this library ever rounds.
using Rational = mpq_class;

Rational rat(long num, long den = 1);

/// Parses "p", "-p" or "p/q" (q > 0). Throws std::invalid_argument on
/// anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical form: lowest terms, "p/q", integers without "/1".
std::string format_rational(const Rational& value);

Rational abs(const Rational& value);

/// Smallest integer >= value, as a Rational.
Rational ceil(const Rational& value);

/// Smallest natural number n >= |value|, at least `floor_at`.
std::uint32_t ceil_abs_to_nat(const Rational& value, std::uint32_t floor_at = 0);

bool is_integer(const Rational& value);

}  // namespace vball
