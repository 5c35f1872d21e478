#include "matchlab/numeric.hpp"

#include <stdexcept>

namespace matchlab {

std::string to_string(const Rational& value) {
  const BigInt num = numerator(value);
  const BigInt den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string to_string(const BigInt& value) { return value.str(); }

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(BigInt(text));
    }
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative value");
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt int_pow(const BigInt& value, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  BigInt result = 1;
  for (int i = 0; i < exponent; ++i) result *= value;
  return result;
}

Rational rat_pow(const Rational& value, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  Rational result = 1;
  for (int i = 0; i < exponent; ++i) result *= value;
  return result;
}

}  // namespace matchlab
