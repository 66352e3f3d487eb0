#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>

namespace plumb {

// All core arithmetic is exact: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int int_gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(a, b);
}

// Floor of a/b for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && (a < 0) != (b < 0)) --q;
  return q;
}

// Ceiling of a/b for b > 0.
inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

}  // namespace plumb
