#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace rkit {

/// Exact probability values. Weights, completion probabilities and
/// robustness values are all carried as GMP rationals so that sums over
/// completions compare exactly.
using Rational = mpq_class;

/// Parses "0.7", "7/10", "1", ".25" exactly. Returns nullopt on anything else.
std::optional<Rational> parse_rational(std::string_view text);

/// "3/4", "1", "0".
std::string to_fraction_string(const Rational& value);

/// Decimal text when the expansion terminates ("0.75"), otherwise "n/d".
std::string to_compact_string(const Rational& value);

inline double to_double(const Rational& value) { return value.get_d(); }

}  // namespace rkit
