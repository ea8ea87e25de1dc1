#include "ffh/clifford.hpp"

#include <charconv>
#include <sstream>

namespace ffh {

Blade Blade::from_indices(std::span<const int> indices, int dim) {
  std::uint32_t mask = 0;
  int prev = 0;
  for (int j : indices) {
    if (j < 1 || j > dim)
      throw InvalidBladeError("generator index " + std::to_string(j) +
                              " outside 1.." + std::to_string(dim));
    if (j <= prev)
      throw InvalidBladeError("blade indices must be strictly increasing");
    mask |= 1u << (j - 1);
    prev = j;
  }
  return from_mask(mask);
}

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (std::uint32_t m = mask_; m != 0; m &= m - 1)
    out.push_back(std::countr_zero(m) + 1);
  return out;
}

bool blade_less(Blade a, Blade b) {
  int ga = a.grade(), gb = b.grade();
  if (ga != gb) return ga < gb;
  std::uint32_t ma = a.mask(), mb = b.mask();
  // Equal grade: compare index sequences from the low end.
  while (ma != 0 && mb != 0) {
    int ia = std::countr_zero(ma), ib = std::countr_zero(mb);
    if (ia != ib) return ia < ib;
    ma &= ma - 1;
    mb &= mb - 1;
  }
  return false;
}

SignedBlade blade_product(Blade a, Blade b, int dim) {
  if (dim < 0 || dim > kMaxGenerators) throw InvalidBladeError("dimension out of range");
  if (a.max_index() > dim || b.max_index() > dim)
    throw InvalidBladeError("blade uses a generator above the algebra dimension");
  std::uint32_t ma = a.mask(), mb = b.mask();
  // Transpositions needed to interleave the two sorted index lists.
  int swaps = 0;
  for (std::uint32_t t = ma >> 1; t != 0; t >>= 1) swaps += std::popcount(t & mb);
  // Each common generator squares to -1.
  swaps += std::popcount(ma & mb);
  return SignedBlade{(swaps & 1) ? -1 : +1, Blade::from_mask(ma ^ mb)};
}

std::string blade_name(Blade b) {
  if (b.is_scalar()) return "1";
  std::string out = "e";
  for (int j : b.indices()) out += std::to_string(j);
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <class S, class Fmt>
std::string mv_to_string(const MultivectorT<S>& mv, Fmt fmt) {
  if (mv.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : mv.terms()) {
    std::string coef = fmt(c);
    std::string piece;
    if (b.is_scalar()) {
      piece = coef;
    } else if (coef == "1") {
      piece = blade_name(b);
    } else if (coef == "-1") {
      piece = "-" + blade_name(b);
    } else {
      piece = coef + "*" + blade_name(b);
    }
    if (first) {
      out = piece;
      first = false;
    } else if (!piece.empty() && piece[0] == '-') {
      out += " - " + piece.substr(1);
    } else {
      out += " + " + piece;
    }
  }
  return out;
}

}  // namespace

std::string to_string(const Multivector& mv) {
  return mv_to_string(mv, [](const Rational& r) { return to_string(r); });
}

std::string to_string(const MultivectorD& mv) {
  return mv_to_string(mv, format_double);
}

MultivectorD to_numeric(const Multivector& mv) {
  MultivectorD out(mv.dim());
  for (const auto& [b, c] : mv.terms()) out.add_term(b, to_double(c));
  return out;
}

}  // namespace ffh
