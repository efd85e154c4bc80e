#pragma once

// Exact integer and rational arithmetic used throughout the library.

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace cicy {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Integer& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(v) == 1) return numerator(v).str();
  return numerator(v).str() + "/" + denominator(v).str();
}

inline bool is_integral(const Rational& v) {
  return boost::multiprecision::denominator(v) == 1;
}

// Narrowing conversion; throws std::overflow_error when out of range.
template <typename T>
T narrow(const Integer& v) {
  if (v > std::numeric_limits<T>::max() || v < std::numeric_limits<T>::min()) {
    throw std::overflow_error("integer " + v.str() + " does not fit target type");
  }
  return static_cast<T>(v);
}

}  // namespace cicy
