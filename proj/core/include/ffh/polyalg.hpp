#pragma once

#include <map>
#include <numeric>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ffh/clifford.hpp"
#include "ffh/errors.hpp"
#include "ffh/rational.hpp"

namespace ffh {

// Variable blocks of a polynomial ring.  X covers the first vector block,
// Y the second, Full everything including the axis variable when present.
enum class Block { X, Y, Full };

std::string block_name(Block b);

// A variable: the scalar axis x0, or the i-th entry (1-based) of a block.
struct Var {
  enum class Kind { Axis, X, Y };
  Kind kind = Kind::Axis;
  int index = 0;

  static Var axis() { return {Kind::Axis, 0}; }
  static Var x(int i) { return {Kind::X, i}; }
  static Var y(int i) { return {Kind::Y, i}; }

  friend bool operator==(const Var&, const Var&) = default;
};

struct Homogeneity {
  enum class Kind { Zero, Homogeneous, Inhomogeneous };
  Kind kind = Kind::Zero;
  int degree = 0;  // meaningful only for Homogeneous

  friend bool operator==(const Homogeneity&, const Homogeneity&) = default;
};

// Polynomial with multivector coefficients in variables laid out as
// [x0 when axial][x_1..x_p][y_1..y_q].  Variable x_i carries generator e_i,
// y_j carries e_{p+j}; the axis variable carries no generator.  Coefficients
// multiply on the left of nothing in particular: the ring is the free module
// over monomials, coefficients compose by the geometric product.
class CartesianPoly {
public:
  struct Shape {
    int p = 0;
    int q = 0;
    bool axial = false;

    int nvars() const { return (axial ? 1 : 0) + p + q; }
    int gens() const { return p + q; }

    friend bool operator==(const Shape&, const Shape&) = default;
  };

  using ExpVec = std::vector<int>;

  struct GradedLexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
      int da = std::accumulate(a.begin(), a.end(), 0);
      int db = std::accumulate(b.begin(), b.end(), 0);
      if (da != db) return da < db;
      return a < b;
    }
  };

  using Terms = std::map<ExpVec, Multivector, GradedLexLess>;

  explicit CartesianPoly(Shape shape);

  static CartesianPoly zero(Shape shape) { return CartesianPoly(shape); }
  static CartesianPoly constant(Shape shape, Multivector value);
  static CartesianPoly constant(Shape shape, const Rational& value);
  static CartesianPoly variable(Shape shape, Var v);
  // x_1 e_1 + ... + x_p e_p, resp. y_1 e_{p+1} + ... + y_q e_{p+q}.
  static CartesianPoly block_vector(Shape shape, Block block);

  const Shape& shape() const { return shape_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  int var_index(Var v) const;      // flat index into the layout
  int generator(Var v) const;      // e-index of a vector variable
  std::string var_name(Var v) const;
  std::string var_name_flat(int flat) const;

  void add_term(const ExpVec& exps, const Multivector& coef);
  Multivector coefficient(const ExpVec& exps) const;

  CartesianPoly operator-() const;
  CartesianPoly& operator+=(const CartesianPoly& rhs);
  CartesianPoly& operator-=(const CartesianPoly& rhs);
  friend CartesianPoly operator+(CartesianPoly a, const CartesianPoly& b) { return a += b; }
  friend CartesianPoly operator-(CartesianPoly a, const CartesianPoly& b) { return a -= b; }
  friend CartesianPoly operator*(const CartesianPoly& a, const CartesianPoly& b);
  friend CartesianPoly operator*(CartesianPoly a, const Rational& s);
  friend CartesianPoly operator*(const Rational& s, CartesianPoly a) { return a * s; }

  CartesianPoly mv_mul_left(const Multivector& m) const;   // m * this
  CartesianPoly mv_mul_right(const Multivector& m) const;  // this * m
  CartesianPoly pow(int n) const;

  CartesianPoly partial_derivative(Var v) const;
  // Sum of e_j d/dv_j over the block's vector variables (left action);
  // Full adds d/dx0 with no generator for axial shapes.
  CartesianPoly dirac(Block block) const;
  // Sum of second partials over the block; Full includes the axis.
  CartesianPoly laplacian(Block block) const;
  CartesianPoly laplacian_power(Block block, int n) const;

  Homogeneity homogeneous_degree() const;
  bool uses_var(Var v) const;

  // Coordinates in variable layout order.
  MultivectorD evaluate(std::span<const double> point) const;

  friend bool operator==(const CartesianPoly& a, const CartesianPoly& b) {
    return a.shape_ == b.shape_ && a.terms_ == b.terms_;
  }

private:
  void check_shape(const CartesianPoly& rhs) const;
  std::vector<Var> block_vars(Block block) const;

  Shape shape_;
  Terms terms_;
};

std::string to_string(const CartesianPoly& poly);

// Homogeneous polynomial in one vector block, monogenic for that block's
// Dirac operator and with coefficients in the even subalgebra of the
// block's generators.
struct SphericalMonogenic {
  Block block = Block::X;
  int degree = 0;
  CartesianPoly poly{CartesianPoly::Shape{}};
};

struct MonogenicRejection {
  enum class Kind { NotHomogeneous, NotMonogenic, NotEven };
  Kind kind;
  std::string witness;  // offending term, printed
};

std::string to_string(const MonogenicRejection& r);

// Checks the three defining properties in this order: homogeneous of the
// stated degree, annihilated by the block Dirac operator, even coefficients
// within the block's generators.  A polynomial touching variables outside
// the block is a contract violation and throws DomainError.
std::variant<SphericalMonogenic, MonogenicRejection> validate_spherical_monogenic(
    const CartesianPoly& f, Block block, int degree);

// (v1 - v2 e_a e_b)^k for the block's first two variables; degree 0 gives
// the constant 1.  Blocks of dimension < 2 only support degree 0.
SphericalMonogenic builtin_monogenic(CartesianPoly::Shape shape, Block block, int degree);

}  // namespace ffh
