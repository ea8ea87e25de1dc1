#pragma once

#include <array>
#include <string>
#include <utility>

#include "ffh/laurent.hpp"
#include "ffh/polyalg.hpp"

namespace ffh {

// One radial variable slot: either a plain axis coordinate (second
// derivative only) or the norm of a vector block of the given dimension
// carrying a unit vector and a degree-`degree` spherical monogenic.
struct BlockSpec {
  enum class Kind { Axis, Sphere };
  Kind kind = Kind::Sphere;
  int dim = 0;
  int degree = 0;

  static BlockSpec axis() { return {Kind::Axis, 0, 0}; }
  static BlockSpec sphere(int dim, int degree) { return {Kind::Sphere, dim, degree}; }

  // 2k+p-1: the Euler-term constant of the reduction rules.
  int euler_constant() const { return 2 * degree + dim - 1; }

  friend bool operator==(const BlockSpec&, const BlockSpec&) = default;
};

// (s1 + sw*w + sn*n + swn*w*n) * P_k(x) * P_l(y) with w, n the unit vectors
// of the two blocks; sectors are Laurent polynomials in the block radii.
// Axis blocks have no unit vector, so their unit-carrying sectors are zero.
class RadialElement {
public:
  static RadialElement biaxial(int p, int q, int k, int l, LaurentBi s1, LaurentBi sw,
                               LaurentBi sn, LaurentBi swn);
  static RadialElement biaxial_zero(int p, int q, int k, int l);
  // Axis-first form in variables (axis, radius), e.g. (x0, R) or (theta, rho).
  static RadialElement axial(int m, int k, LaurentBi s1, LaurentBi sn);

  const BlockSpec& first() const { return first_; }
  const BlockSpec& second() const { return second_; }
  const std::string& var_first() const { return s1().var_first(); }
  const std::string& var_second() const { return s1().var_second(); }

  // Unit-vector powers (eps, delta) in {0,1}^2 select the sector.
  const LaurentBi& sector(int eps, int delta) const { return sectors_[eps * 2 + delta]; }
  const LaurentBi& s1() const { return sector(0, 0); }
  const LaurentBi& sw() const { return sector(1, 0); }
  const LaurentBi& sn() const { return sector(0, 1); }
  const LaurentBi& swn() const { return sector(1, 1); }

  bool is_zero() const;

  RadialElement operator+(const RadialElement& rhs) const;
  RadialElement operator-(const RadialElement& rhs) const;
  RadialElement scaled(const ScalarExt& s) const;
  RadialElement divided_by(const ScalarExt& s) const;

  // First nonzero coefficient in canonical order: sectors s1, sw, sn, swn,
  // lexicographic (a, b) within a sector.  Zero for the zero element.
  ScalarExt leading_coefficient() const;

  friend bool operator==(const RadialElement&, const RadialElement&) = default;

  std::string to_string() const;

private:
  RadialElement(BlockSpec first, BlockSpec second, std::array<LaurentBi, 4> sectors);

  BlockSpec first_, second_;
  std::array<LaurentBi, 4> sectors_;  // index eps*2 + delta
};

// One application of the Laplacian through the sector reduction rules:
//   sphere block, unit power 0:  g'' + c * g'/v
//   sphere block, unit power 1:  g'' + c * (g/v)'
//   axis block:                  g''
// with c the block's Euler constant and v its variable.  Sectors never mix.
RadialElement radial_laplacian(const RadialElement& e);
RadialElement iterated_radial_laplacian(const RadialElement& e, int n);

// Exact polynomial form of a biaxial element.  Sector terms r^a rho^b
// convert iff a-eps and b-delta are non-negative and even (and the
// coefficient carries no pi); otherwise NotConvertibleError names the term.
CartesianPoly to_cartesian(const RadialElement& e, const SphericalMonogenic& Pk,
                           const SphericalMonogenic& Pl);

// Axial variant: the axis exponent only needs to be non-negative.
CartesianPoly to_cartesian(const RadialElement& e, const SphericalMonogenic& Pk);

// Residuals of d_r M + d_rho N + ((2l+q-1)/rho) N  and
//              d_rho M - d_r N - ((2k+p-1)/r) N;  (0,0) certifies the
// biaxial monogenic form.
std::pair<LaurentBi, LaurentBi> vekua_residual_biaxial(const LaurentBi& M,
                                                       const LaurentBi& N, int p, int q,
                                                       int k, int l);

// Residuals of d_a A - d_v B - ((2k+m-1)/v) B  and  d_v A + d_a B in
// variables (axis a, radius v).  Also serves the (theta, rho) system with
// (k, m) read as (l, q).
std::pair<LaurentBi, LaurentBi> vekua_residual_axial(const LaurentBi& A,
                                                     const LaurentBi& B, int k, int m);

inline std::string to_string(const RadialElement& e) { return e.to_string(); }

}  // namespace ffh
