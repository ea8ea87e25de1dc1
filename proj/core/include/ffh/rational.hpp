#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "ffh/errors.hpp"

namespace ffh {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

inline Rational rational_pow(const Rational& base, int exp) {
  if (exp < 0) {
    if (base == 0) throw DomainError("negative power of zero");
    return Rational(1) / rational_pow(base, -exp);
  }
  Rational out(1), b = base;
  for (int e = exp; e > 0; e >>= 1) {
    if (e & 1) out *= b;
    b *= b;
  }
  return out;
}

inline Integer factorial(int n) {
  if (n < 0) throw DomainError("factorial of negative integer");
  Integer out(1);
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

// (2n-1)!! for odd arguments, (2n)!! for even ones; (-1)!! = 1 by convention.
inline Integer double_factorial(int n) {
  if (n < -1) throw DomainError("double factorial of integer below -1");
  Integer out(1);
  for (int i = n; i >= 2; i -= 2) out *= i;
  return out;
}

inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return Rational(0);
  Rational out(1);
  for (int i = 0; i < k; ++i) out *= Rational(n - i) / Rational(i + 1);
  return out;
}

// "3", "-4/6" (normalised to -2/3 on construction by cpp_rational).
inline std::string to_string(const Rational& r) { return r.str(); }

}  // namespace ffh
