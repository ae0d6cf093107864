#pragma once

#include <gmpxx.h>

#include <string>

namespace spchar {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

// Converts an exact rational known to be an integer; throws
// internal_consistency_error otherwise.
Integer to_integer(const Rational& q);

// "p/q", or just "p" when the denominator is one.
std::string to_string(const Rational& q);

// Parses "p/q" or "n"; rejects zero denominators and malformed input.
Rational rational_from_string(const std::string& text);

Rational rational_pow(const Rational& base, long exponent);

Integer binomial(unsigned long n, unsigned long k);

} // namespace spchar
