#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace cmgeo {

// All core arithmetic is exact. Squared distances, Gram entries, determinants
// and closed forms are rationals; floating point appears only in realizations
// and bisection roots.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q" with q > 0. Throws std::invalid_argument on
/// malformed input (junk characters, zero or negative denominator).
Rational parse_rational(std::string_view text);

/// Lowest-terms rendering: "p" when the denominator is 1, otherwise "p/q".
std::string format_rational(const Rational& value);

/// Renders a double with a fixed number of significant digits. Trailing
/// zeros are kept so identical values always produce identical bytes.
std::string format_significant(double value, int digits = 12);

inline int sign(const Rational& value) {
  if (value > 0) return 1;
  if (value < 0) return -1;
  return 0;
}

}  // namespace cmgeo
