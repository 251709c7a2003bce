#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

namespace ruc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Binomial coefficient by the multiplicative recurrence; exact for any n
// reachable in practice (no factorials, no floating point). Returns 0 for
// k < 0 or k > n, matching the path-counting conventions.
inline BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long j = 1; j <= k; ++j) {
    result *= (n - k + j);
    result /= j;
  }
  return result;
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline double to_double(const BigInt& n) { return n.convert_to<double>(); }

inline Rational rational_pow(const Rational& base, long exp) {
  if (exp < 0) throw std::invalid_argument("rational_pow: negative exponent");
  Rational result = 1;
  Rational b = base;
  long e = exp;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

}  // namespace ruc
