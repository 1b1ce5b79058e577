#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace lyk {

// Exact rational scalar. mpq_class keeps values canonical (positive
// denominator, gcd 1) as long as every entry point canonicalizes, which
// parse_rational and the arithmetic operators do.
using Rational = mpq_class;

// Accepts "p", "-p" and "p/q" (q != 0). Throws std::invalid_argument on
// malformed input.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& value);

}  // namespace lyk
