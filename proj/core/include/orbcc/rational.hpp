#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace orbcc {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational number, always in lowest terms with positive denominator.
/// Every quantity on a verdict path is one of these; no floating point is
/// ever involved in a strict-positivity decision.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p" or "p/q" (q > 0). Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Renders "p" when the denominator is 1, "p/q" otherwise.
std::string render_rational(const Rational& q);

/// Decimal approximation with the given number of significant digits.
/// For human convenience only; never used in verdicts.
std::string render_approx(const Rational& q, int significant_digits = 6);

}  // namespace orbcc
