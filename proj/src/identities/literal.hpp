#pragma once

#include "numerics/bigreal.hpp"

#include <string>
#include <string_view>

namespace lamzeta {

/// A number of the form coeff * pi^pi_power with both parts exact.
struct PiLiteral {
  Rational coeff = 1;
  Rational pi_power = 0;

  /// Value at the current default precision.
  BigReal value() const;
  std::string to_string() const;

  friend bool operator==(const PiLiteral&, const PiLiteral&) = default;
};

/// Parses literals such as "pi", "2pi", "pi^4", "pi^3/4", "4*pi^(3/2)",
/// "1/2", "-0.75" or "pi^-1". Juxtaposition multiplies; '/' divides by the
/// next factor only. Throws UsageError on malformed input.
PiLiteral parse_pi_literal(std::string_view text);

}  // namespace lamzeta
