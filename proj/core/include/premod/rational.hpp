// Exact rational scalars. Backed by GMP's mpq_class: arithmetic results are
// always in canonical form (gcd(num, den) = 1, den > 0), which is exactly the
// invariant the rest of the library relies on.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace premod {

using Rational = mpq_class;

/// Parse "p", "-p", or "p/q" (q > 0 after canonicalization). Throws
/// ArgumentError on malformed input or zero denominator.
Rational rational_from_string(const std::string& text);

/// Canonical "p" or "p/q" rendering (den omitted when 1).
std::string rational_to_string(const Rational& r);

/// Exact rational from a small numerator/denominator pair.
Rational make_rational(long num, long den = 1);

/// r^k for k >= 0 (k = 0 gives 1).
Rational rational_pow(const Rational& base, unsigned long k);

double to_double(const Rational& r);

}  // namespace premod
