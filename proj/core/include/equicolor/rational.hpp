#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace equicolor {

using Rational = boost::multiprecision::cpp_rational;

/// "p/q" in lowest terms, q > 0 (integers print as "p/1").
inline std::string to_string(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" +
         boost::multiprecision::denominator(x).str();
}

}  // namespace equicolor
