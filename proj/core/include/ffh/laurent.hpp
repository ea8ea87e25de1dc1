#pragma once

#include <map>
#include <string>
#include <utility>

#include "ffh/errors.hpp"
#include "ffh/scalar_ext.hpp"

namespace ffh {

enum class Which { First, Second };

// Laurent polynomial in two named variables with ScalarExt coefficients.
// Exponents may be negative; zero coefficients are never stored.
class LaurentBi {
public:
  using Exp = std::pair<int, int>;               // (a, b): v1^a v2^b
  using Terms = std::map<Exp, ScalarExt>;        // lexicographic on (a, b)

  LaurentBi(std::string var1, std::string var2)
      : vars_(std::move(var1), std::move(var2)) {}

  static LaurentBi monomial(std::string var1, std::string var2, int a, int b,
                            ScalarExt c) {
    LaurentBi out(std::move(var1), std::move(var2));
    out.add_term(a, b, std::move(c));
    return out;
  }

  const std::string& var_first() const { return vars_.first; }
  const std::string& var_second() const { return vars_.second; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(int a, int b, const ScalarExt& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({a, b}, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ScalarExt coefficient(int a, int b) const {
    auto it = terms_.find({a, b});
    return it == terms_.end() ? ScalarExt{} : it->second;
  }

  // First nonzero coefficient in lexicographic (a, b) order.
  ScalarExt leading_coefficient() const {
    return terms_.empty() ? ScalarExt{} : terms_.begin()->second;
  }

  LaurentBi operator-() const;
  LaurentBi& operator+=(const LaurentBi& rhs);
  LaurentBi& operator-=(const LaurentBi& rhs);
  friend LaurentBi operator+(LaurentBi a, const LaurentBi& b) { return a += b; }
  friend LaurentBi operator-(LaurentBi a, const LaurentBi& b) { return a -= b; }
  friend LaurentBi operator*(const LaurentBi& a, const LaurentBi& b);
  friend LaurentBi operator*(LaurentBi a, const ScalarExt& s);
  friend LaurentBi operator*(const ScalarExt& s, LaurentBi a) { return a * s; }
  LaurentBi divided_by(const ScalarExt& s) const;

  // Multiplication by v1^da v2^db.
  LaurentBi shifted(int da, int db) const;

  friend bool operator==(const LaurentBi& a, const LaurentBi& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  // Refuses values <= 0 for a variable occurring with negative exponent.
  double evaluate(double first, double second) const;

  std::string to_string() const;

private:
  void check_vars(const LaurentBi& rhs) const;

  std::pair<std::string, std::string> vars_;
  Terms terms_;
};

// Term-wise formal partial derivative.
LaurentBi laurent_derivative(const LaurentBi& f, Which which);

// (v^{-1} d/dv)^n: one step maps coefficient c at exponent b to b*c at b-2.
LaurentBi ladder_I(const LaurentBi& f, Which which, int n);

// (d/dv v^{-1})^n: one step maps c at b to (b-1)*c at b-2.
LaurentBi ladder_II(const LaurentBi& f, Which which, int n);

inline std::string to_string(const LaurentBi& f) { return f.to_string(); }

}  // namespace ffh
