#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace zonoq {

// All counting in this library is exact; Int never overflows.
using Int = boost::multiprecision::cpp_int;

inline Int factorial(int n) {
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

// Binomial coefficient C(d, j) for arbitrary integer d, including negative
// values: C(d, j) = d(d-1)...(d-j+1) / j!.  The falling factorial of j
// consecutive integers is always divisible by j!, so the division is exact.
inline Int binomial(const Int& d, int j) {
  if (j < 0) return 0;
  Int num = 1;
  for (int i = 0; i < j; ++i) num *= d - i;
  return num / factorial(j);
}

}  // namespace zonoq
