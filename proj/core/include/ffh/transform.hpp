#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ffh/gegenbauer.hpp"
#include "ffh/holomorphic.hpp"
#include "ffh/radial.hpp"

namespace ffh {

// The pair (A, B) in (r, rho): weighted Gegenbauer integrals of u(rt, rho)
// and v(rt, rho), divided by C_k(1) resp. C_{k+1}(1), times r^{-k}.
struct FunkHeckeProfile {
  int p = 3;
  int k = 0;
  LaurentBi A{"r", "rho"};
  LaurentBi B{"r", "rho"};
};

FunkHeckeProfile funk_hecke_profile(const HolomorphicInput& h, int p, int k);

struct Classification {
  enum class Kind { Zero, Homogeneous, Inhomogeneous, NonPolynomial };
  Kind kind = Kind::Zero;
  int degree = 0;  // meaningful only for Homogeneous

  friend bool operator==(const Classification&, const Classification&) = default;
};

std::string to_string(const Classification& c);

struct TransformResult {
  int p = 3, q = 3, k = 0, l = 0;
  SphericalMonogenic Pk;
  SphericalMonogenic Pl;
  // Raw value: the iterated Laplacian applied to (A - w n B) Pk Pl, unscaled.
  RadialElement radial = RadialElement::biaxial_zero(3, 3, 0, 0);
  // Polynomial form at canonical scale (raw / normalization), when it exists.
  std::optional<CartesianPoly> cartesian;
  Classification classification;
  // Raw-to-canonical divisor: leading coefficient of the raw radial form
  // (1 for zero results).  normalize() divides the sectors by it and keeps
  // this audit value unchanged.
  ScalarExt normalization = ScalarExt(1);
};

// q odd, p >= 3; Pk, Pl must be validated monogenics of matching block,
// degree, and shape {p, q}.  Applies l+(q-1)/2 radial Laplacians to the
// profile element s1 = A, swn = -B.
TransformResult biaxial_transform(const HolomorphicInput& h, int p, int q, int k, int l,
                                  const SphericalMonogenic& Pk,
                                  const SphericalMonogenic& Pl);

// Convenience: builtin P_k, P_l.
TransformResult biaxial_transform(const HolomorphicInput& h, int p, int q, int k, int l);

// Divides the radial sectors by their leading coefficient so the first
// nonzero coefficient in canonical order becomes 1; idempotent on the
// sectors; `normalization` keeps recording the raw-to-canonical divisor.
TransformResult normalize(TransformResult res);

// Fate of h = z^n: Zero when k-n is odd or n < k+2l+q-1, otherwise
// homogeneous of degree n-(k+2l+q-1).
Classification classify_power(int n, int k, int l, int p, int q);

// M = (rho^{-1} d_rho)^{l+(q-1)/2} u, N = (d_rho rho^{-1})^{l+(q-1)/2} v,
// in (theta, rho); q odd.  Exact solution pair of the axis-sphere Vekua
// system with constant 2l+q-1.
std::pair<LaurentBi, LaurentBi> fuesom_profiles(const HolomorphicInput& h, int q, int l);

// Iterated full Laplacian (k+(m-1)/2 times) of (u + n v) Pk over the axis
// variable x0 and an m-dimensional vector block; m odd; Pk over shape
// (p=0, q=m, axial) with block y.  Sectors of the result are the axial
// (A, B) pair.
RadialElement fueter_axial(const HolomorphicInput& h, int m, const SphericalMonogenic& Pk);

struct NumericOptions {
  int base_order = 64;     // starting quadrature order
  int max_order = 1024;    // adaptive doubling cap
  double quad_tol = 1e-11; // relative convergence target between doublings
  double fd_step = 1e-3;   // central-difference base step (scaled by coordinate)
  double fd_growth = 5.0;  // extra step factor per nested derivative level
  double check_tol = 1e-8; // reference tolerance for the step-halving check

  static NumericOptions from_env();  // FFH_QUAD_ORDER overrides base_order
};

struct NumericProfileValues {
  double M = 0.0;
  double N = 0.0;
  // Richardson estimate: change under one halving of the top-level step.
  double fd_check = 0.0;
  bool flagged = false;  // fd_check exceeded 10x check_tol
};

// Numeric path at one point (r > 0, rho > 0): quadrature profiles, then the
// sector reduction rules through nested 4th-order central differences.
NumericProfileValues biaxial_transform_numeric(const HolomorphicInput& h, int p, int q,
                                               int k, int l, double r, double rho,
                                               const NumericOptions& opt = {});

struct VerifyReport {
  bool has_cartesian = false;
  bool dirac_zero = false;       // meaningful when has_cartesian
  bool vekua_zero = false;
  bool stray_sectors_zero = false;  // sw and sn must vanish in transform output
  std::string details;

  bool passed() const {
    return vekua_zero && stray_sectors_zero && (!has_cartesian || dirac_zero);
  }
};

// Exact checks: biaxial Vekua residuals of (s1, swn), absence of w/n
// sectors, and (when a polynomial form exists) the full Cartesian Dirac.
VerifyReport verify_monogenic(const TransformResult& res);

// Max-norm of the finite-difference Dirac residual of the numerically
// assembled field (M + w n N) Pk Pl at a Cartesian point (x, y).
double numeric_dirac_residual(const HolomorphicInput& h, int p, int q, int k, int l,
                              const SphericalMonogenic& Pk, const SphericalMonogenic& Pl,
                              std::span<const double> point, double step = 1e-3,
                              const NumericOptions& opt = {});

}  // namespace ffh
