#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>

namespace zls {

// Exact arbitrary-precision integer used everywhere; no fixed-width
// arithmetic is allowed to leak into results.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

// Floor division for b > 0; the remainder a - b*floor_div(a,b) lies in [0, b).
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // cpp_int division truncates toward zero
  if (a % b != 0 && a < 0) --q;
  return q;
}

inline bool divides(const Int& b, const Int& a) { return b != 0 && a % b == 0; }

// The fixed enumeration 0, 1, -1, 2, -2, ... of the integers.
inline Int integer_at(std::size_t k) {
  if (k % 2 == 1) return Int((k + 1) / 2);
  return -Int(k / 2);
}

}  // namespace zls
