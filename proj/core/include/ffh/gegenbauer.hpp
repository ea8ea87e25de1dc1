#pragma once

#include <array>
#include <functional>
#include <vector>

#include "ffh/polyalg.hpp"
#include "ffh/scalar_ext.hpp"

namespace ffh {

// C_k^lambda(t) with exact rational coefficients, built from
// C_0 = 1, C_1 = 2*lambda*t,
// C_k = (1/k) * (2(k+lambda-1) t C_{k-1} - (k+2lambda-2) C_{k-2}).
class GegenbauerPoly {
public:
  GegenbauerPoly(int k, Rational lambda, std::vector<Rational> coeffs)
      : k_(k), lambda_(std::move(lambda)), coeffs_(std::move(coeffs)) {}

  int degree() const { return k_; }
  const Rational& lambda() const { return lambda_; }
  // coeffs()[i] multiplies t^i; trailing entry nonzero for k >= 0.
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational evaluate(const Rational& t) const;
  double evaluate(double t) const;
  Rational at_one() const { return evaluate(Rational(1)); }

private:
  int k_;
  Rational lambda_;
  std::vector<Rational> coeffs_;
};

// lambda must be positive; lambda = (p-2)/2 for ambient dimension p >= 3.
GegenbauerPoly gegenbauer(int k, const Rational& lambda);

// Exact integral of t^n C_k(t) (1-t^2)^((p-3)/2) over [-1,1]; rational for
// odd p, rational*pi for even p.  Zero when n < k or n-k is odd.
ScalarExt moment(int n, int k, int p);

// |S^{d-1}| = 2 pi^{d/2} / Gamma(d/2) as an exact rational*pi^s.
ScalarExt surface_area(int d);

struct QuadratureRule {
  int p = 3;
  std::vector<double> nodes;    // ascending, inside (-1,1)
  std::vector<double> weights;  // positive
  int order() const { return static_cast<int>(nodes.size()); }

  double integrate(const std::function<double(double)>& f) const;
};

// Gauss rule for the weight (1-t^2)^((p-3)/2): Jacobi matrix of the monic
// three-term recurrence diagonalized by an implicit-shift QL sweep
// (Golub-Welsch); weights from the first eigenvector components.
QuadratureRule gauss_jacobi_rule(int order, int p);

// Both sides of the sphere-integral reduction on S^2: lhs integrates
// F(<xi,eta>) Yk(eta) over the sphere by a Gauss-Legendre x trapezoid
// product grid; rhs is Yk(xi) |S^1| C_k(1)^{-1} Integral F C_k w dt.
// Yk: polynomial in three x-variables (shape p=3, q=0), degree k.
std::pair<MultivectorD, MultivectorD> funk_hecke_oracle(
    const std::function<double(double)>& F, const CartesianPoly& Yk, int k,
    std::array<double, 3> xi, int polar_order = 64, int azimuth_order = 128);

}  // namespace ffh
