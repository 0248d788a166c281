#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace cutcert {

/// Exact arbitrary-precision integer. All coefficient arithmetic in the
/// library is exact; there is no floating point anywhere.
using Int = boost::multiprecision::cpp_int;

inline Int int_from_string(const std::string& s) { return Int(s); }

inline std::string to_decimal_string(const Int& v) { return v.str(); }

inline long long gcd_ll(long long a, long long b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    long long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline long long gcd_of(std::span<const long long> v) {
  long long g = 0;
  for (long long x : v) g = gcd_ll(g, x);
  return g;
}

inline bool is_primitive_vector(std::span<const long long> v) { return gcd_of(v) == 1; }

}  // namespace cutcert
