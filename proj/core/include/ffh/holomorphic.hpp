#pragma once

#include <complex>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ffh/laurent.hpp"

namespace ffh {

// a + b i with exact rational parts.
struct GaussianRational {
  Rational re{};
  Rational im{};

  bool is_zero() const { return re == 0 && im == 0; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

// Holomorphic seed h.  Exact: h(z) = sum c_n z^n with Gaussian-rational c_n.
// Numeric: arbitrary callable with a validity predicate telling which
// (theta, rho) evaluation points (theta may be negative) are safe.
class HolomorphicInput {
public:
  enum class Kind { Exact, Numeric };

  static HolomorphicInput exact(std::vector<GaussianRational> coeffs);
  static HolomorphicInput numeric(
      std::function<std::complex<double>(std::complex<double>)> f,
      std::function<bool(double theta, double rho)> validity, std::string label);

  Kind kind() const { return kind_; }
  bool is_exact() const { return kind_ == Kind::Exact; }

  // Exact kind only; coeffs()[n] multiplies z^n, trailing entry nonzero
  // unless h = 0.
  const std::vector<GaussianRational>& coeffs() const;

  std::complex<double> eval(std::complex<double> z) const;
  bool valid_at(double theta, double rho) const;

  const std::string& label() const { return label_; }

private:
  HolomorphicInput() = default;

  Kind kind_ = Kind::Exact;
  std::vector<GaussianRational> coeffs_;
  std::function<std::complex<double>(std::complex<double>)> f_;
  std::function<bool(double, double)> validity_;
  std::string label_;
};

// Real and imaginary parts of h(theta + i rho) as exact polynomials in
// (theta, rho); rejects numeric inputs.  The pair satisfies the
// Cauchy-Riemann relations d_theta u = d_rho v, d_rho u = -d_theta v.
std::pair<LaurentBi, LaurentBi> extract_uv(const HolomorphicInput& h);

// Grammar-compatible text, descending powers: "z^4 - 2*z^2", "3/2*i*z", "0".
// A coefficient with both parts nonzero prints as two terms.  Numeric
// inputs print their label.
std::string to_string(const HolomorphicInput& h);

// Variable-renamed copy, e.g. (theta, rho) -> (x0, R).
LaurentBi renamed(const LaurentBi& f, std::string var1, std::string var2);

}  // namespace ffh
