#pragma once

#include <bit>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ffh/errors.hpp"
#include "ffh/rational.hpp"

namespace ffh {

inline constexpr int kMaxGenerators = 30;

// Basis blade of the real Clifford algebra with e_j e_k + e_k e_j = -2 d_jk.
// Bit j-1 of the mask is set iff generator e_j occurs.  The empty mask is
// the scalar blade.
class Blade {
public:
  constexpr Blade() = default;

  // indices must be strictly increasing, each within 1..dim.
  static Blade from_indices(std::span<const int> indices, int dim);
  static constexpr Blade from_mask(std::uint32_t mask) {
    Blade b;
    b.mask_ = mask;
    return b;
  }

  constexpr std::uint32_t mask() const { return mask_; }
  int grade() const { return std::popcount(mask_); }
  bool contains(int j) const { return j >= 1 && (mask_ >> (j - 1) & 1u); }
  bool is_scalar() const { return mask_ == 0; }
  // Largest generator index, 0 for the scalar blade.
  int max_index() const { return mask_ == 0 ? 0 : std::bit_width(mask_); }
  std::vector<int> indices() const;

  friend constexpr bool operator==(Blade a, Blade b) { return a.mask_ == b.mask_; }

private:
  std::uint32_t mask_ = 0;
};

// Canonical blade order: by grade, then lexicographically by the increasing
// index sequence.  Total order used for all term maps and printing.
bool blade_less(Blade a, Blade b);

struct BladeLess {
  bool operator()(Blade a, Blade b) const { return blade_less(a, b); }
};

struct SignedBlade {
  int sign;  // +1 or -1
  Blade blade;
};

// Product of two basis blades in R_{0,dim}; sorts the concatenation counting
// transpositions and folds repeated generators with e_j^2 = -1.  Throws
// InvalidBladeError when either operand uses a generator above dim.
SignedBlade blade_product(Blade a, Blade b, int dim);

// "e12", "e1", "1" for the scalar blade.
std::string blade_name(Blade b);

// Sparse multivector over a scalar ring S (exact rationals or doubles).
// Terms are kept in canonical blade order; zero coefficients are pruned.
template <class S>
class MultivectorT {
public:
  using Terms = std::map<Blade, S, BladeLess>;

  explicit MultivectorT(int dim) : dim_(dim) {
    if (dim < 0 || dim > kMaxGenerators)
      throw DomainError("algebra dimension out of range");
  }

  static MultivectorT zero(int dim) { return MultivectorT(dim); }

  static MultivectorT scalar(int dim, S value) {
    MultivectorT out(dim);
    out.add_term(Blade(), value);
    return out;
  }

  static MultivectorT basis_vector(int dim, int j) {
    MultivectorT out(dim);
    if (j < 1 || j > dim) throw InvalidBladeError("generator index out of range");
    out.add_term(Blade::from_mask(1u << (j - 1)), S(1));
    return out;
  }

  static MultivectorT term(int dim, Blade b, S value) {
    MultivectorT out(dim);
    out.add_term(b, value);
    return out;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const Terms& terms() const { return terms_; }

  S coefficient(Blade b) const {
    auto it = terms_.find(b);
    return it == terms_.end() ? S(0) : it->second;
  }

  S scalar_part() const { return coefficient(Blade()); }

  void add_term(Blade b, const S& value) {
    if (b.max_index() > dim_)
      throw InvalidBladeError("blade " + blade_name(b) + " not valid in dimension " +
                              std::to_string(dim_));
    auto [it, inserted] = terms_.try_emplace(b, value);
    if (!inserted) it->second = it->second + value;
    if (it->second == S(0)) terms_.erase(it);
  }

  MultivectorT operator-() const {
    MultivectorT out(dim_);
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
    return out;
  }

  MultivectorT& operator+=(const MultivectorT& rhs) {
    check_dim(rhs);
    for (const auto& [b, c] : rhs.terms_) add_term(b, c);
    return *this;
  }

  MultivectorT& operator-=(const MultivectorT& rhs) {
    check_dim(rhs);
    for (const auto& [b, c] : rhs.terms_) add_term(b, -c);
    return *this;
  }

  friend MultivectorT operator+(MultivectorT a, const MultivectorT& b) { return a += b; }
  friend MultivectorT operator-(MultivectorT a, const MultivectorT& b) { return a -= b; }

  // Geometric product.
  friend MultivectorT operator*(const MultivectorT& a, const MultivectorT& b) {
    a.check_dim(b);
    MultivectorT out(a.dim_);
    for (const auto& [ba, ca] : a.terms_)
      for (const auto& [bb, cb] : b.terms_) {
        SignedBlade sb = blade_product(ba, bb, a.dim_);
        S prod(ca * cb);
        if (sb.sign < 0) prod = -prod;
        out.add_term(sb.blade, prod);
      }
    return out;
  }

  MultivectorT& operator*=(const S& s) {
    if (s == S(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& [b, c] : terms_) c = c * s;
    return *this;
  }

  friend MultivectorT operator*(MultivectorT a, const S& s) { return a *= s; }
  friend MultivectorT operator*(const S& s, MultivectorT a) { return a *= s; }

  MultivectorT grade_project(int g) const {
    MultivectorT out(dim_);
    for (const auto& [b, c] : terms_)
      if (b.grade() == g) out.terms_.emplace(b, c);
    return out;
  }

  int max_grade() const {
    int g = 0;
    for (const auto& [b, c] : terms_) g = std::max(g, b.grade());
    return g;
  }

  // All terms of even grade (membership in the even subalgebra).
  bool is_even() const {
    for (const auto& [b, c] : terms_)
      if (b.grade() % 2 != 0) return false;
    return true;
  }

  friend bool operator==(const MultivectorT& a, const MultivectorT& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

private:
  void check_dim(const MultivectorT& rhs) const {
    if (dim_ != rhs.dim_)
      throw DimensionMismatchError("multivectors live in different algebras (" +
                                   std::to_string(dim_) + " vs " +
                                   std::to_string(rhs.dim_) + " generators)");
  }

  int dim_;
  Terms terms_;
};

using Multivector = MultivectorT<Rational>;
using MultivectorD = MultivectorT<double>;

// "1 + 3*e12", "-e1 + 2/3*e23", "0"; terms in canonical blade order.
std::string to_string(const Multivector& mv);

// Same layout with shortest round-trip double formatting.
std::string to_string(const MultivectorD& mv);

MultivectorD to_numeric(const Multivector& mv);

}  // namespace ffh
