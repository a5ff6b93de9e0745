#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace cartan {

// GMP keeps mpq_class canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;
using Integer = mpz_class;

/// Parses "p", "-p" or "p/q" (optional leading '+'). Throws std::invalid_argument
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

/// Exact text form: "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& value);

}  // namespace cartan
