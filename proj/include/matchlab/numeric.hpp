#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace matchlab {

// All counting and weighting is exact: arbitrary-precision integers for
// counts, reduced rationals for weights, densities and thresholds. No
// floating point appears anywhere in a counting or optimization path.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Canonical text form: "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

// Accepts "p" or "p/q" with optional leading '-'; rejects q = 0.
Rational parse_rational(const std::string& text);

BigInt factorial(int n);

// value^exponent for small nonnegative exponents.
BigInt int_pow(const BigInt& value, int exponent);
Rational rat_pow(const Rational& value, int exponent);

}  // namespace matchlab
