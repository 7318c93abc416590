#pragma once

#include <gmpxx.h>

#include <string>

namespace mcg {

// Exact rational values. GMP's mpq_class keeps results in lowest terms with a
// positive denominator after every arithmetic operation, which is the
// invariant all downstream code relies on. Construction helpers here
// canonicalize explicitly because mpq_class(n, d) alone does not.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);

// Accepted forms: "3/2", "-7", "+7", "0.25". Decimal forms are converted to
// the exact fraction (0.25 -> 1/4). Anything else is an input_error.
Rational parse_rational(const std::string& text);

// Canonical form: "p" when the denominator is 1, "p/q" otherwise.
std::string rational_to_string(const Rational& value);

} // namespace mcg
