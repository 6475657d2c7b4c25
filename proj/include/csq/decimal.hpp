#pragma once

#include <string>

#include "csq/rational.hpp"

namespace csq {

/// Renders an exact rational as a decimal string with at most `digits`
/// fractional digits, rounded half-even. Trailing zeros (and a bare trailing
/// point) are stripped, so 5 renders as "5" and 1/8 at 12 digits as "0.125".
/// The decimal is a display convenience; exact values travel as
/// numerator/denominator.
std::string decimal_string(const Rational& value, int digits);

/// Number of significant digits in a rendered decimal (leading zeros do not
/// count). Used to decide whether a decimal is safe to emit as a plain JSON
/// number.
int significant_digits(const std::string& decimal);

/// Rational approximation of sqrt(5), accurate to `digits` decimal places.
/// Display-only helper; exact comparisons against multiples of sqrt(5) are
/// done by squaring, not through this.
Rational sqrt5_approx(int digits);

}  // namespace csq
