#pragma once

#include <cmath>
#include <numbers>
#include <string>

#include "ffh/errors.hpp"
#include "ffh/rational.hpp"

namespace ffh {

// Exact scalar of the form rat * pi^pi_pow with pi_pow >= 0.  Zero is
// canonical: rat == 0 forces pi_pow == 0.  Sums of unlike pi powers have no
// representation here and throw MixedPiSumError.
struct ScalarExt {
  Rational rat{};
  int pi_pow = 0;

  ScalarExt() = default;
  ScalarExt(Rational r) : rat(std::move(r)) {}  // NOLINT: implicit by design
  ScalarExt(Rational r, int s) : rat(std::move(r)), pi_pow(rat == 0 ? 0 : s) {
    if (s < 0) throw DomainError("negative pi power");
  }
  ScalarExt(int n) : rat(n) {}  // NOLINT: implicit by design

  bool is_zero() const { return rat == 0; }

  friend ScalarExt operator-(const ScalarExt& a) { return {-a.rat, a.pi_pow}; }

  friend ScalarExt operator+(const ScalarExt& a, const ScalarExt& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.pi_pow != b.pi_pow)
      throw MixedPiSumError("cannot add pi^" + std::to_string(a.pi_pow) + " and pi^" +
                            std::to_string(b.pi_pow) + " terms");
    return {a.rat + b.rat, a.pi_pow};
  }

  friend ScalarExt operator-(const ScalarExt& a, const ScalarExt& b) { return a + (-b); }

  friend ScalarExt operator*(const ScalarExt& a, const ScalarExt& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.rat * b.rat, a.pi_pow + b.pi_pow};
  }

  friend ScalarExt operator/(const ScalarExt& a, const ScalarExt& b) {
    if (b.is_zero()) throw DomainError("division by zero scalar");
    if (a.is_zero()) return {};
    if (a.pi_pow < b.pi_pow)
      throw DomainError("quotient would carry a negative pi power");
    return {a.rat / b.rat, a.pi_pow - b.pi_pow};
  }

  ScalarExt& operator+=(const ScalarExt& b) { return *this = *this + b; }
  ScalarExt& operator-=(const ScalarExt& b) { return *this = *this - b; }
  ScalarExt& operator*=(const ScalarExt& b) { return *this = *this * b; }

  friend bool operator==(const ScalarExt& a, const ScalarExt& b) {
    return a.rat == b.rat && a.pi_pow == b.pi_pow;
  }
};

inline double to_double(const ScalarExt& s) {
  double v = to_double(s.rat);
  for (int i = 0; i < s.pi_pow; ++i) v *= std::numbers::pi;
  return v;
}

// "3/5", "-8/3*pi", "2*pi^2", "0".
inline std::string to_string(const ScalarExt& s) {
  if (s.is_zero()) return "0";
  std::string out = to_string(s.rat);
  if (s.pi_pow >= 1) {
    out += "*pi";
    if (s.pi_pow > 1) out += "^" + std::to_string(s.pi_pow);
  }
  return out;
}

}  // namespace ffh
