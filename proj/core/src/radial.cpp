#include "ffh/radial.hpp"

namespace ffh {

RadialElement::RadialElement(BlockSpec first, BlockSpec second,
                             std::array<LaurentBi, 4> sectors)
    : first_(first), second_(second), sectors_(std::move(sectors)) {
  const auto& v1 = sectors_[0].var_first();
  const auto& v2 = sectors_[0].var_second();
  for (const auto& s : sectors_)
    if (s.var_first() != v1 || s.var_second() != v2)
      throw DimensionMismatchError("sector variables disagree");
  if (first_.kind == BlockSpec::Kind::Axis && (!sw().is_zero() || !swn().is_zero()))
    throw DomainError("axis block carries no unit vector; w sectors must be zero");
  if (second_.kind == BlockSpec::Kind::Axis && (!sn().is_zero() || !swn().is_zero()))
    throw DomainError("axis block carries no unit vector; n sectors must be zero");
}

RadialElement RadialElement::biaxial(int p, int q, int k, int l, LaurentBi s1,
                                     LaurentBi sw, LaurentBi sn, LaurentBi swn) {
  if (p < 1 || q < 1 || k < 0 || l < 0) throw DomainError("bad biaxial parameters");
  return RadialElement(BlockSpec::sphere(p, k), BlockSpec::sphere(q, l),
                       {std::move(s1), std::move(sn), std::move(sw), std::move(swn)});
}

RadialElement RadialElement::biaxial_zero(int p, int q, int k, int l) {
  LaurentBi z("r", "rho");
  return biaxial(p, q, k, l, z, z, z, z);
}

RadialElement RadialElement::axial(int m, int k, LaurentBi s1, LaurentBi sn) {
  if (m < 1 || k < 0) throw DomainError("bad axial parameters");
  LaurentBi zero(s1.var_first(), s1.var_second());
  return RadialElement(BlockSpec::axis(), BlockSpec::sphere(m, k),
                       {std::move(s1), std::move(sn), zero, zero});
}

bool RadialElement::is_zero() const {
  for (const auto& s : sectors_)
    if (!s.is_zero()) return false;
  return true;
}

RadialElement RadialElement::operator+(const RadialElement& rhs) const {
  if (first_ != rhs.first_ || second_ != rhs.second_)
    throw DimensionMismatchError("radial elements have different block structure");
  RadialElement out = *this;
  for (int i = 0; i < 4; ++i) out.sectors_[i] += rhs.sectors_[i];
  return out;
}

RadialElement RadialElement::operator-(const RadialElement& rhs) const {
  return *this + rhs.scaled(ScalarExt(Rational(-1)));
}

RadialElement RadialElement::scaled(const ScalarExt& s) const {
  RadialElement out = *this;
  for (auto& sec : out.sectors_) sec = sec * s;
  return out;
}

RadialElement RadialElement::divided_by(const ScalarExt& s) const {
  RadialElement out = *this;
  for (auto& sec : out.sectors_) sec = sec.divided_by(s);
  return out;
}

ScalarExt RadialElement::leading_coefficient() const {
  for (int eps = 0; eps < 2; ++eps)
    for (int delta = 0; delta < 2; ++delta) {
      const LaurentBi& s = sector(eps, delta);
      if (!s.is_zero()) return s.leading_coefficient();
    }
  return ScalarExt{};
}

std::string RadialElement::to_string() const {
  static const char* tags[4] = {"", "*w", "*n", "*wn"};
  const LaurentBi* order[4] = {&s1(), &sw(), &sn(), &swn()};
  std::string out;
  for (int i = 0; i < 4; ++i) {
    if (order[i]->is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + order[i]->to_string() + ")" + tags[i];
  }
  return out.empty() ? "0" : out;
}

namespace {

// g'' + c * g'/v (unit absent) or g'' + c * (g/v)' (unit present) in the
// block's variable; plain g'' for an axis block.
LaurentBi reduce_block(const LaurentBi& g, Which which, const BlockSpec& block,
                       bool unit_present) {
  LaurentBi out = laurent_derivative(laurent_derivative(g, which), which);
  if (block.kind == BlockSpec::Kind::Axis) return out;
  ScalarExt c(Rational(block.euler_constant()));
  int da = which == Which::First ? -1 : 0;
  int db = which == Which::First ? 0 : -1;
  if (unit_present)
    out += laurent_derivative(g.shifted(da, db), which) * c;
  else
    out += laurent_derivative(g, which).shifted(da, db) * c;
  return out;
}

}  // namespace

RadialElement radial_laplacian(const RadialElement& e) {
  std::array<LaurentBi, 4> out = {e.s1(), e.sn(), e.sw(), e.swn()};
  for (int eps = 0; eps < 2; ++eps)
    for (int delta = 0; delta < 2; ++delta) {
      const LaurentBi& g = e.sector(eps, delta);
      LaurentBi reduced = reduce_block(g, Which::First, e.first(), eps == 1) +
                          reduce_block(g, Which::Second, e.second(), delta == 1);
      out[eps * 2 + delta] = std::move(reduced);
    }
  // Private constructor is inaccessible here; rebuild through the factories.
  if (e.first().kind == BlockSpec::Kind::Axis)
    return RadialElement::axial(e.second().dim, e.second().degree, out[0], out[1]);
  return RadialElement::biaxial(e.first().dim, e.second().dim, e.first().degree,
                                e.second().degree, out[0], out[2], out[1], out[3]);
}

RadialElement iterated_radial_laplacian(const RadialElement& e, int n) {
  if (n < 0) throw DomainError("negative operator power");
  RadialElement out = e;
  for (int i = 0; i < n; ++i) out = radial_laplacian(out);
  return out;
}

namespace {

std::string sector_term_text(const LaurentBi& s, int a, int b, const ScalarExt& c) {
  LaurentBi t = LaurentBi::monomial(s.var_first(), s.var_second(), a, b, c);
  return t.to_string();
}

// Scalar polynomial (sum of squares of the block's variables)^(e/2) times
// the block vector to the unit power.
CartesianPoly sector_factor(const CartesianPoly::Shape& shape, Block block, int exp,
                            int unit_power, const std::string& term_text) {
  int reduced = exp - unit_power;
  if (reduced < 0 || reduced % 2 != 0)
    throw NotConvertibleError("not Cartesian-convertible: term " + term_text);
  CartesianPoly norm_sq(shape);
  CartesianPoly vec = CartesianPoly::block_vector(shape, block);
  norm_sq = vec * vec * Rational(-1);  // |v|^2 = -v*v
  CartesianPoly out = norm_sq.pow(reduced / 2);
  if (unit_power == 1) out = out * vec;
  return out;
}

}  // namespace

CartesianPoly to_cartesian(const RadialElement& e, const SphericalMonogenic& Pk,
                           const SphericalMonogenic& Pl) {
  if (e.first().kind != BlockSpec::Kind::Sphere ||
      e.second().kind != BlockSpec::Kind::Sphere)
    throw DomainError("biaxial conversion needs two sphere blocks");
  CartesianPoly::Shape shape{e.first().dim, e.second().dim, false};
  if (Pk.block != Block::X || Pk.degree != e.first().degree ||
      !(Pk.poly.shape() == shape))
    throw DomainError("Pk does not match the element's first block");
  if (Pl.block != Block::Y || Pl.degree != e.second().degree ||
      !(Pl.poly.shape() == shape))
    throw DomainError("Pl does not match the element's second block");

  CartesianPoly acc(shape);
  for (int eps = 0; eps < 2; ++eps)
    for (int delta = 0; delta < 2; ++delta) {
      const LaurentBi& s = e.sector(eps, delta);
      for (const auto& [ab, c] : s.terms()) {
        std::string text = sector_term_text(s, ab.first, ab.second, c);
        if (c.pi_pow != 0)
          throw NotConvertibleError("not Cartesian-convertible: pi coefficient in " +
                                    text);
        CartesianPoly factor = sector_factor(shape, Block::X, ab.first, eps, text) *
                               sector_factor(shape, Block::Y, ab.second, delta, text);
        acc += factor * c.rat;
      }
    }
  return acc * Pk.poly * Pl.poly;
}

CartesianPoly to_cartesian(const RadialElement& e, const SphericalMonogenic& Pk) {
  if (e.first().kind != BlockSpec::Kind::Axis ||
      e.second().kind != BlockSpec::Kind::Sphere)
    throw DomainError("axial conversion needs an axis block and a sphere block");
  CartesianPoly::Shape shape{0, e.second().dim, true};
  if (Pk.block != Block::Y || Pk.degree != e.second().degree ||
      !(Pk.poly.shape() == shape))
    throw DomainError("Pk does not match the element's sphere block");

  CartesianPoly acc(shape);
  for (int delta = 0; delta < 2; ++delta) {
    const LaurentBi& s = e.sector(0, delta);
    for (const auto& [ab, c] : s.terms()) {
      std::string text = sector_term_text(s, ab.first, ab.second, c);
      if (c.pi_pow != 0)
        throw NotConvertibleError("not Cartesian-convertible: pi coefficient in " +
                                  text);
      if (ab.first < 0)
        throw NotConvertibleError("not Cartesian-convertible: term " + text);
      CartesianPoly axis_pow(shape);
      CartesianPoly::ExpVec exps(shape.nvars(), 0);
      exps[0] = ab.first;
      axis_pow.add_term(exps, Multivector::scalar(shape.gens(), 1));
      acc += axis_pow * sector_factor(shape, Block::Y, ab.second, delta, text) * c.rat;
    }
  }
  return acc * Pk.poly;
}

std::pair<LaurentBi, LaurentBi> vekua_residual_biaxial(const LaurentBi& M,
                                                       const LaurentBi& N, int p, int q,
                                                       int k, int l) {
  ScalarExt cy(Rational(2 * l + q - 1));
  ScalarExt cx(Rational(2 * k + p - 1));
  LaurentBi r1 = laurent_derivative(M, Which::First) +
                 laurent_derivative(N, Which::Second) + N.shifted(0, -1) * cy;
  LaurentBi r2 = laurent_derivative(M, Which::Second) -
                 laurent_derivative(N, Which::First) - N.shifted(-1, 0) * cx;
  return {std::move(r1), std::move(r2)};
}

std::pair<LaurentBi, LaurentBi> vekua_residual_axial(const LaurentBi& A,
                                                     const LaurentBi& B, int k, int m) {
  ScalarExt c(Rational(2 * k + m - 1));
  LaurentBi r1 = laurent_derivative(A, Which::First) -
                 laurent_derivative(B, Which::Second) - B.shifted(0, -1) * c;
  LaurentBi r2 = laurent_derivative(A, Which::Second) +
                 laurent_derivative(B, Which::First);
  return {std::move(r1), std::move(r2)};
}

}  // namespace ffh
