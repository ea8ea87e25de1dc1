#include "ffh/polyalg.hpp"

#include <algorithm>
#include <cmath>

namespace ffh {

std::string block_name(Block b) {
  switch (b) {
    case Block::X: return "x";
    case Block::Y: return "y";
    case Block::Full: return "full";
  }
  return "?";
}

CartesianPoly::CartesianPoly(Shape shape) : shape_(shape) {
  if (shape.p < 0 || shape.q < 0 || shape.gens() > kMaxGenerators)
    throw DomainError("polynomial shape out of range");
}

CartesianPoly CartesianPoly::constant(Shape shape, Multivector value) {
  CartesianPoly out(shape);
  out.add_term(ExpVec(shape.nvars(), 0), value);
  return out;
}

CartesianPoly CartesianPoly::constant(Shape shape, const Rational& value) {
  return constant(shape, Multivector::scalar(shape.gens(), value));
}

CartesianPoly CartesianPoly::variable(Shape shape, Var v) {
  CartesianPoly out(shape);
  ExpVec e(shape.nvars(), 0);
  e[out.var_index(v)] = 1;
  out.add_term(e, Multivector::scalar(shape.gens(), 1));
  return out;
}

CartesianPoly CartesianPoly::block_vector(Shape shape, Block block) {
  CartesianPoly out(shape);
  if (block == Block::Full) throw DomainError("block vector needs a single block");
  int n = block == Block::X ? shape.p : shape.q;
  for (int i = 1; i <= n; ++i) {
    Var v = block == Block::X ? Var::x(i) : Var::y(i);
    ExpVec e(shape.nvars(), 0);
    e[out.var_index(v)] = 1;
    out.add_term(e, Multivector::basis_vector(shape.gens(), out.generator(v)));
  }
  return out;
}

int CartesianPoly::var_index(Var v) const {
  int base = shape_.axial ? 1 : 0;
  switch (v.kind) {
    case Var::Kind::Axis:
      if (!shape_.axial) throw DomainError("shape has no axis variable");
      return 0;
    case Var::Kind::X:
      if (v.index < 1 || v.index > shape_.p)
        throw DomainError("x variable index out of range");
      return base + v.index - 1;
    case Var::Kind::Y:
      if (v.index < 1 || v.index > shape_.q)
        throw DomainError("y variable index out of range");
      return base + shape_.p + v.index - 1;
  }
  throw DomainError("bad variable");
}

int CartesianPoly::generator(Var v) const {
  var_index(v);  // range check
  switch (v.kind) {
    case Var::Kind::X: return v.index;
    case Var::Kind::Y: return shape_.p + v.index;
    default: throw DomainError("axis variable carries no generator");
  }
}

std::string CartesianPoly::var_name(Var v) const {
  switch (v.kind) {
    case Var::Kind::Axis: return "x0";
    case Var::Kind::X: return "x" + std::to_string(v.index);
    case Var::Kind::Y: return "y" + std::to_string(v.index);
  }
  return "?";
}

std::string CartesianPoly::var_name_flat(int flat) const {
  int base = shape_.axial ? 1 : 0;
  if (shape_.axial && flat == 0) return "x0";
  int i = flat - base;
  if (i < shape_.p) return "x" + std::to_string(i + 1);
  return "y" + std::to_string(i - shape_.p + 1);
}

void CartesianPoly::add_term(const ExpVec& exps, const Multivector& coef) {
  if (static_cast<int>(exps.size()) != shape_.nvars())
    throw DimensionMismatchError("exponent vector length does not match shape");
  for (int e : exps)
    if (e < 0) throw DomainError("negative exponent in polynomial term");
  if (coef.dim() != shape_.gens())
    throw DimensionMismatchError("coefficient algebra does not match shape");
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exps, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Multivector CartesianPoly::coefficient(const ExpVec& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Multivector::zero(shape_.gens()) : it->second;
}

CartesianPoly CartesianPoly::operator-() const {
  CartesianPoly out(shape_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

CartesianPoly& CartesianPoly::operator+=(const CartesianPoly& rhs) {
  check_shape(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

CartesianPoly& CartesianPoly::operator-=(const CartesianPoly& rhs) {
  check_shape(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

CartesianPoly operator*(const CartesianPoly& a, const CartesianPoly& b) {
  a.check_shape(b);
  CartesianPoly out(a.shape_);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      CartesianPoly::ExpVec e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out.add_term(e, ca * cb);
    }
  return out;
}

CartesianPoly operator*(CartesianPoly a, const Rational& s) {
  if (s == 0) return CartesianPoly(a.shape_);
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

CartesianPoly CartesianPoly::mv_mul_left(const Multivector& m) const {
  CartesianPoly out(shape_);
  for (const auto& [e, c] : terms_) out.add_term(e, m * c);
  return out;
}

CartesianPoly CartesianPoly::mv_mul_right(const Multivector& m) const {
  CartesianPoly out(shape_);
  for (const auto& [e, c] : terms_) out.add_term(e, c * m);
  return out;
}

CartesianPoly CartesianPoly::pow(int n) const {
  if (n < 0) throw DomainError("negative polynomial power");
  CartesianPoly out = constant(shape_, Rational(1));
  for (int i = 0; i < n; ++i) out = out * *this;
  return out;
}

CartesianPoly CartesianPoly::partial_derivative(Var v) const {
  int idx = var_index(v);
  CartesianPoly out(shape_);
  for (const auto& [e, c] : terms_) {
    if (e[idx] == 0) continue;
    ExpVec d = e;
    d[idx] -= 1;
    out.add_term(d, c * Rational(e[idx]));
  }
  return out;
}

std::vector<Var> CartesianPoly::block_vars(Block block) const {
  std::vector<Var> vars;
  if (block == Block::Full && shape_.axial) vars.push_back(Var::axis());
  if (block == Block::X || block == Block::Full)
    for (int i = 1; i <= shape_.p; ++i) vars.push_back(Var::x(i));
  if (block == Block::Y || block == Block::Full)
    for (int i = 1; i <= shape_.q; ++i) vars.push_back(Var::y(i));
  return vars;
}

CartesianPoly CartesianPoly::dirac(Block block) const {
  CartesianPoly out(shape_);
  for (Var v : block_vars(block)) {
    CartesianPoly d = partial_derivative(v);
    if (v.kind == Var::Kind::Axis)
      out += d;
    else
      out += d.mv_mul_left(Multivector::basis_vector(shape_.gens(), generator(v)));
  }
  return out;
}

CartesianPoly CartesianPoly::laplacian(Block block) const {
  CartesianPoly out(shape_);
  for (Var v : block_vars(block)) out += partial_derivative(v).partial_derivative(v);
  return out;
}

CartesianPoly CartesianPoly::laplacian_power(Block block, int n) const {
  if (n < 0) throw DomainError("negative operator power");
  CartesianPoly out = *this;
  for (int i = 0; i < n; ++i) out = out.laplacian(block);
  return out;
}

Homogeneity CartesianPoly::homogeneous_degree() const {
  if (terms_.empty()) return {Homogeneity::Kind::Zero, 0};
  int deg = -1;
  for (const auto& [e, c] : terms_) {
    int d = std::accumulate(e.begin(), e.end(), 0);
    if (deg == -1) deg = d;
    if (d != deg) return {Homogeneity::Kind::Inhomogeneous, 0};
  }
  return {Homogeneity::Kind::Homogeneous, deg};
}

bool CartesianPoly::uses_var(Var v) const {
  int idx = var_index(v);
  for (const auto& [e, c] : terms_)
    if (e[idx] != 0) return true;
  return false;
}

MultivectorD CartesianPoly::evaluate(std::span<const double> point) const {
  if (static_cast<int>(point.size()) != shape_.nvars())
    throw DimensionMismatchError("point length does not match variable count");
  MultivectorD out(shape_.gens());
  for (const auto& [e, c] : terms_) {
    double mono = 1.0;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) mono *= point[i];
    out += to_numeric(c) * mono;
  }
  return out;
}

void CartesianPoly::check_shape(const CartesianPoly& rhs) const {
  if (!(shape_ == rhs.shape_))
    throw DimensionMismatchError("polynomials have different shapes");
}

namespace {

// One printed term: sign split off so the caller can join with " + "/" - ".
std::string term_text(const CartesianPoly& poly, const CartesianPoly::ExpVec& exps,
                      Blade blade, const Rational& coef) {
  std::vector<std::string> factors;
  Rational mag = coef < 0 ? Rational(-coef) : coef;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    std::string f = poly.var_name_flat(static_cast<int>(i));
    if (exps[i] > 1) f += "^" + std::to_string(exps[i]);
    factors.push_back(f);
  }
  if (!blade.is_scalar()) factors.push_back(blade_name(blade));
  std::string out;
  if (mag != 1 || factors.empty()) out = to_string(mag);
  for (const auto& f : factors) {
    if (!out.empty()) out += "*";
    out += f;
  }
  return out;
}

}  // namespace

std::string to_string(const CartesianPoly& poly) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : poly.terms()) {
    for (const auto& [b, r] : c.terms()) {
      bool neg = r < 0;
      std::string piece = term_text(poly, e, b, r);
      if (first) {
        out = neg ? "-" + piece : piece;
        first = false;
      } else {
        out += neg ? " - " : " + ";
        out += piece;
      }
    }
  }
  return out;
}

std::string to_string(const MonogenicRejection& r) {
  switch (r.kind) {
    case MonogenicRejection::Kind::NotHomogeneous:
      return "not homogeneous: " + r.witness;
    case MonogenicRejection::Kind::NotMonogenic:
      return "not monogenic: Dirac image contains " + r.witness;
    case MonogenicRejection::Kind::NotEven:
      return "coefficient outside the even subalgebra: " + r.witness;
  }
  return "invalid";
}

namespace {

std::string witness_term(const CartesianPoly& poly, const CartesianPoly::ExpVec& e,
                         const Multivector& c) {
  const auto& [b, r] = *c.terms().begin();
  std::string t = term_text(poly, e, b, r);
  return (r < 0 ? "-" : "") + t;
}

}  // namespace

std::variant<SphericalMonogenic, MonogenicRejection> validate_spherical_monogenic(
    const CartesianPoly& f, Block block, int degree) {
  if (block == Block::Full) throw DomainError("spherical monogenics live in one block");
  if (degree < 0) throw DomainError("negative degree");
  const auto shape = f.shape();

  // Contract: no variables outside the block.
  std::vector<Var> outside;
  if (shape.axial) outside.push_back(Var::axis());
  for (int i = 1; i <= shape.p; ++i)
    if (block != Block::X) outside.push_back(Var::x(i));
  for (int i = 1; i <= shape.q; ++i)
    if (block != Block::Y) outside.push_back(Var::y(i));
  for (Var v : outside)
    if (f.uses_var(v))
      throw DomainError("polynomial uses variable " + f.var_name(v) +
                        " outside block " + block_name(block));

  Homogeneity h = f.homogeneous_degree();
  if (!(h.kind == Homogeneity::Kind::Zero && degree == 0) &&
      !(h.kind == Homogeneity::Kind::Homogeneous && h.degree == degree)) {
    for (const auto& [e, c] : f.terms()) {
      int d = std::accumulate(e.begin(), e.end(), 0);
      if (d != degree)
        return MonogenicRejection{MonogenicRejection::Kind::NotHomogeneous,
                                  witness_term(f, e, c)};
    }
    return MonogenicRejection{MonogenicRejection::Kind::NotHomogeneous, "0"};
  }

  CartesianPoly d = f.dirac(block);
  if (!d.is_zero()) {
    const auto& [e, c] = *d.terms().begin();
    return MonogenicRejection{MonogenicRejection::Kind::NotMonogenic,
                              witness_term(d, e, c)};
  }

  int lo = block == Block::X ? 1 : shape.p + 1;
  int hi = block == Block::X ? shape.p : shape.p + shape.q;
  for (const auto& [e, c] : f.terms())
    for (const auto& [b, r] : c.terms()) {
      bool inside = b.grade() % 2 == 0;
      for (int j : b.indices())
        if (j < lo || j > hi) inside = false;
      if (!inside)
        return MonogenicRejection{MonogenicRejection::Kind::NotEven,
                                  term_text(f, e, b, r)};
    }

  return SphericalMonogenic{block, degree, f};
}

SphericalMonogenic builtin_monogenic(CartesianPoly::Shape shape, Block block, int degree) {
  if (block == Block::Full) throw DomainError("spherical monogenics live in one block");
  if (degree < 0) throw DomainError("negative degree");
  if (degree == 0)
    return SphericalMonogenic{block, 0, CartesianPoly::constant(shape, Rational(1))};

  int dim = block == Block::X ? shape.p : shape.q;
  if (dim < 2)
    throw DomainError("builtin spherical monogenic of positive degree needs a block "
                      "of dimension >= 2");
  CartesianPoly base(shape);
  Var v1 = block == Block::X ? Var::x(1) : Var::y(1);
  Var v2 = block == Block::X ? Var::x(2) : Var::y(2);
  int g1 = base.generator(v1), g2 = base.generator(v2);
  int idx[] = {g1, g2};
  Multivector bivec =
      Multivector::term(shape.gens(), Blade::from_indices(idx, shape.gens()), Rational(-1));
  base = CartesianPoly::variable(shape, v1) +
         CartesianPoly::variable(shape, v2).mv_mul_right(bivec);
  CartesianPoly f = base.pow(degree);

  auto checked = validate_spherical_monogenic(f, block, degree);
  return std::get<SphericalMonogenic>(checked);
}

}  // namespace ffh
