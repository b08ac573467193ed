#pragma once

#include <gmpxx.h>

#include <string>

namespace gp {

// Exact arbitrary-precision rational, canonical form (reduced, positive
// denominator). All geometry in this project is exact; no floating point.
using Rational = mpq_class;

// Serialized as "p/q", or "p" when q == 1.
std::string format_rational(const Rational& r);

// Accepts the same forms. Throws std::invalid_argument on malformed input
// or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace gp
