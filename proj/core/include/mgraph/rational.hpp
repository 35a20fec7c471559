#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mgraph {

/// Exact arbitrary-precision rational. All graph data (lengths, masses,
/// Green values) lives in this type; floating point appears only in the
/// bound calculators where square roots and logarithms are unavoidable.
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" into a canonical rational.
/// Throws std::invalid_argument on malformed input or zero denominator.
Rat parse_rational(std::string_view text);

/// Canonical rendering: "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rat& r);

double to_double(const Rat& r);

/// t reduced into [0, m) for m > 0.
Rat mod_positive(const Rat& t, const Rat& m);

}  // namespace mgraph
