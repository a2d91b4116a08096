#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace aq {

using Rational = boost::multiprecision::cpp_rational;

/// Coordinates of a weight lambda in the normalized fundamental-weight basis,
/// i.e. c[j] = <lambda, phi_{j+1}>.
using CVector = std::vector<Rational>;

/// "num/den" with den > 0; integers are written as "n/1".
inline std::string to_fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

/// Inverse of to_fraction_string; also accepts a bare integer.
Rational parse_fraction(const std::string& text);

}  // namespace aq
