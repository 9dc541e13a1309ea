#pragma once

#include <string>

#include "mks/arith.hpp"

namespace mks {

// "p/q" or "p" with optional sign and surrounding whitespace.
Fraction parse_fraction(const std::string& text);

// Comma-separated signed fractions, optionally wrapped in "K( ... )".
// The result is validated: reduced, non-integral, N >= 3, a knot.
TangleList parse_knot(const std::string& text);

// Canonical text form; parse_knot(format_knot(t)) == t.
std::string format_knot(const TangleList& t);

}  // namespace mks
