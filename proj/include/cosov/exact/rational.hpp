#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace cosov {

/// Arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator; zero is 0/1.
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& z) { return z.str(); }

inline std::string to_string(const Rational& r) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_zero(const Rational& r) { return r == 0; }

}  // namespace cosov
