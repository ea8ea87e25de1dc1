#include "ffh/laurent.hpp"

#include <cmath>

namespace ffh {

void LaurentBi::check_vars(const LaurentBi& rhs) const {
  if (vars_ != rhs.vars_)
    throw DimensionMismatchError("Laurent operands use different variables (" +
                                 vars_.first + "," + vars_.second + ") vs (" +
                                 rhs.vars_.first + "," + rhs.vars_.second + ")");
}

LaurentBi LaurentBi::operator-() const {
  LaurentBi out(vars_.first, vars_.second);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentBi& LaurentBi::operator+=(const LaurentBi& rhs) {
  check_vars(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, c);
  return *this;
}

LaurentBi& LaurentBi::operator-=(const LaurentBi& rhs) {
  check_vars(rhs);
  for (const auto& [e, c] : rhs.terms_) add_term(e.first, e.second, -c);
  return *this;
}

LaurentBi operator*(const LaurentBi& a, const LaurentBi& b) {
  a.check_vars(b);
  LaurentBi out(a.vars_.first, a.vars_.second);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      out.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return out;
}

LaurentBi operator*(LaurentBi a, const ScalarExt& s) {
  if (s.is_zero()) return LaurentBi(a.vars_.first, a.vars_.second);
  for (auto& [e, c] : a.terms_) c *= s;
  return a;
}

LaurentBi LaurentBi::divided_by(const ScalarExt& s) const {
  LaurentBi out(vars_.first, vars_.second);
  for (const auto& [e, c] : terms_) out.add_term(e.first, e.second, c / s);
  return out;
}

LaurentBi LaurentBi::shifted(int da, int db) const {
  LaurentBi out(vars_.first, vars_.second);
  for (const auto& [e, c] : terms_) out.terms_.emplace(Exp{e.first + da, e.second + db}, c);
  return out;
}

double LaurentBi::evaluate(double first, double second) const {
  double out = 0.0;
  for (const auto& [e, c] : terms_) {
    if ((e.first < 0 && first <= 0.0) || (e.second < 0 && second <= 0.0))
      throw DomainError("evaluation at a nonpositive value of a variable with "
                        "negative exponent");
    out += to_double(c) * std::pow(first, e.first) * std::pow(second, e.second);
  }
  return out;
}

std::string LaurentBi::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    ScalarExt mag = c.rat < 0 ? -c : c;
    std::string piece;
    auto var_factor = [](const std::string& name, int exp) -> std::string {
      if (exp == 0) return "";
      if (exp == 1) return name;
      return name + "^" + std::to_string(exp);
    };
    std::string f1 = var_factor(vars_.first, e.first);
    std::string f2 = var_factor(vars_.second, e.second);
    if (mag == ScalarExt(1) && !(f1.empty() && f2.empty()))
      piece = "";
    else
      piece = ffh::to_string(mag);
    for (const std::string& f : {f1, f2}) {
      if (f.empty()) continue;
      if (!piece.empty()) piece += "*";
      piece += f;
    }
    bool neg = c.rat < 0;
    if (first) {
      out = neg ? "-" + piece : piece;
      first = false;
    } else {
      out += neg ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

LaurentBi laurent_derivative(const LaurentBi& f, Which which) {
  LaurentBi out(f.var_first(), f.var_second());
  for (const auto& [e, c] : f.terms()) {
    if (which == Which::First)
      out.add_term(e.first - 1, e.second, c * ScalarExt(Rational(e.first)));
    else
      out.add_term(e.first, e.second - 1, c * ScalarExt(Rational(e.second)));
  }
  return out;
}

LaurentBi ladder_I(const LaurentBi& f, Which which, int n) {
  if (n < 0) throw DomainError("negative ladder power");
  LaurentBi out = f;
  for (int i = 0; i < n; ++i) {
    LaurentBi step(out.var_first(), out.var_second());
    for (const auto& [e, c] : out.terms()) {
      if (which == Which::First)
        step.add_term(e.first - 2, e.second, c * ScalarExt(Rational(e.first)));
      else
        step.add_term(e.first, e.second - 2, c * ScalarExt(Rational(e.second)));
    }
    out = step;
  }
  return out;
}

LaurentBi ladder_II(const LaurentBi& f, Which which, int n) {
  if (n < 0) throw DomainError("negative ladder power");
  LaurentBi out = f;
  for (int i = 0; i < n; ++i) {
    LaurentBi step(out.var_first(), out.var_second());
    for (const auto& [e, c] : out.terms()) {
      if (which == Which::First)
        step.add_term(e.first - 2, e.second, c * ScalarExt(Rational(e.first - 1)));
      else
        step.add_term(e.first, e.second - 2, c * ScalarExt(Rational(e.second - 1)));
    }
    out = step;
  }
  return out;
}

}  // namespace ffh
