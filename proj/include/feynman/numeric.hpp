#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "feynman/error.hpp"

namespace feynman {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& value) { return value.str(); }

inline std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

/// Exact quotient; throws `code` when `den` does not divide `num`.
inline BigInt exact_quotient(const BigInt& num, const BigInt& den, Errc code,
                             std::string_view what) {
  if (den == 0) throw Error(code, std::string(what) + ": division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) {
    throw Error(code, std::string(what) + ": " + num.str() + " not divisible by " + den.str());
  }
  return q;
}

inline BigInt to_integer(const Rational& value, Errc code, std::string_view what) {
  if (denominator(value) != 1) {
    throw Error(code, std::string(what) + ": non-integral value " + to_string(value));
  }
  return numerator(value);
}

inline BigInt factorial(unsigned n) {
  BigInt result = 1;
  for (unsigned k = 2; k <= n; ++k) result *= k;
  return result;
}

inline BigInt ipow(BigInt base, unsigned exponent) {
  BigInt result = 1;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

inline std::vector<std::string> to_strings(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

}  // namespace feynman
