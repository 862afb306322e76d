#pragma once

#include <gmpxx.h>

#include <string>

namespace rephom {

// Exact rational scalar, always canonical (lowest terms, positive denominator).
using Rational = mpq_class;
using BigInt = mpz_class;

Rational make_rational(long num, long den = 1);

// Accepts "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& q);

}  // namespace rephom
