#include "ffh/cli.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "ffh/gegenbauer.hpp"

namespace ffh::cli {

using nlohmann::json;

namespace {

std::string format_double(double v) {
  std::array<char, 32> buf;
  auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

// ---------------------------------------------------------------------------
// Shared lexer

enum class TokKind { Plus, Minus, Star, Slash, Caret, Int, Ident, End };

struct Token {
  TokKind kind;
  std::size_t pos;
  std::string text;  // Int digits or Ident name
};

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> toks;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    switch (c) {
      case '+': toks.push_back({TokKind::Plus, i++, "+"}); continue;
      case '-': toks.push_back({TokKind::Minus, i++, "-"}); continue;
      case '*': toks.push_back({TokKind::Star, i++, "*"}); continue;
      case '/': toks.push_back({TokKind::Slash, i++, "/"}); continue;
      case '^': toks.push_back({TokKind::Caret, i++, "^"}); continue;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      toks.push_back({TokKind::Int, start, text.substr(start, i - start)});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = i++;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      toks.push_back({TokKind::Ident, start, text.substr(start, i - start)});
      continue;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", i);
  }
  toks.push_back({TokKind::End, text.size(), ""});
  return toks;
}

class TokenStream {
public:
  explicit TokenStream(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(int ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }
  Token next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool accept(TokKind k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  Token expect(TokKind k, const std::string& what) {
    if (peek().kind != k) throw ParseError("expected " + what, peek().pos);
    return next();
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

Integer parse_integer(const Token& t) {
  if (t.text.size() > 4000) throw ParseError("integer literal too long", t.pos);
  return Integer(t.text);
}

int parse_small_int(const Token& t, int limit, const std::string& what) {
  Integer v = parse_integer(t);
  if (v > limit) throw ParseError(what + " too large", t.pos);
  return static_cast<int>(v);
}

Rational parse_rational(TokenStream& ts) {
  Token num = ts.expect(TokKind::Int, "a number");
  Rational r(parse_integer(num));
  if (ts.accept(TokKind::Slash)) {
    Token den = ts.expect(TokKind::Int, "a denominator");
    Integer d = parse_integer(den);
    if (d == 0) throw ParseError("zero denominator", den.pos);
    r /= Rational(d);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Holomorphic grammar

// [coef '*'] 'z' ['^' uint] | coef, with coef = rational | rational '*i' | 'i'
std::pair<GaussianRational, int> parse_h_term(TokenStream& ts) {
  GaussianRational coef{1, 0};
  bool have_coef = false;
  bool want_z = false;

  const Token& t = ts.peek();
  if (t.kind == TokKind::Int) {
    Rational r = parse_rational(ts);
    coef = {r, 0};
    have_coef = true;
    if (ts.peek().kind == TokKind::Star) {
      if (ts.peek(1).kind == TokKind::Ident && ts.peek(1).text == "i") {
        ts.next();
        ts.next();
        coef = {0, r};
        if (ts.accept(TokKind::Star)) want_z = true;
      } else {
        ts.next();
        want_z = true;
      }
    }
  } else if (t.kind == TokKind::Ident && t.text == "i") {
    ts.next();
    coef = {0, 1};
    have_coef = true;
    if (ts.accept(TokKind::Star)) want_z = true;
  }

  if (have_coef && !want_z) return {coef, 0};
  const Token& zt = ts.peek();
  bool has_z = zt.kind == TokKind::Ident && zt.text == "z";
  if (!has_z)
    throw ParseError(want_z ? "expected z after '*'" : "expected a term", zt.pos);

  ts.next();
  int power = 1;
  if (ts.accept(TokKind::Caret)) {
    const Token& e = ts.peek();
    if (e.kind == TokKind::Minus) throw ParseError("negative exponent", e.pos);
    Token et = ts.expect(TokKind::Int, "an exponent");
    power = parse_small_int(et, 1000, "exponent");
  }
  return {coef, power};
}

}  // namespace

HolomorphicInput parse_holomorphic(const std::string& text) {
  TokenStream ts(lex(text));
  std::map<int, GaussianRational> acc;

  int sign = 1;
  if (ts.accept(TokKind::Minus))
    sign = -1;
  else
    ts.accept(TokKind::Plus);

  for (;;) {
    auto [coef, power] = parse_h_term(ts);
    GaussianRational& slot = acc[power];
    slot.re += sign * coef.re;
    slot.im += sign * coef.im;
    if (ts.accept(TokKind::Plus))
      sign = 1;
    else if (ts.accept(TokKind::Minus))
      sign = -1;
    else
      break;
  }
  Token end = ts.expect(TokKind::End, "end of input");
  (void)end;

  int maxpow = 0;
  for (const auto& [n, c] : acc)
    if (!c.is_zero()) maxpow = std::max(maxpow, n);
  std::vector<GaussianRational> coeffs(maxpow + 1);
  for (const auto& [n, c] : acc)
    if (!c.is_zero()) coeffs[n] = c;
  return HolomorphicInput::exact(std::move(coeffs));
}

CartesianPoly parse_poly(const std::string& text, CartesianPoly::Shape shape) {
  TokenStream ts(lex(text));
  CartesianPoly out(shape);
  const int dim = shape.gens();

  int sign = 1;
  if (ts.accept(TokKind::Minus))
    sign = -1;
  else
    ts.accept(TokKind::Plus);

  for (;;) {
    Rational coef(sign);
    CartesianPoly::ExpVec exps(shape.nvars(), 0);
    Multivector mv = Multivector::scalar(dim, Rational(1));
    bool any_factor = false;

    for (;;) {
      const Token& t = ts.peek();
      if (t.kind == TokKind::Int) {
        coef *= parse_rational(ts);
        any_factor = true;
      } else if (t.kind == TokKind::Ident) {
        ts.next();
        if (t.text[0] == 'e') {
          if (t.text.size() < 2) throw ParseError("blade needs indices", t.pos);
          std::vector<int> idx;
          for (std::size_t j = 1; j < t.text.size(); ++j) {
            int g = t.text[j] - '0';
            if (g == 0) throw ParseError("blade index 0", t.pos);
            idx.push_back(g);
          }
          mv = mv * Multivector::term(dim, Blade::from_indices(idx, dim), Rational(1));
        } else if (t.text[0] == 'x' || t.text[0] == 'y') {
          if (t.text.size() < 2) throw ParseError("variable needs an index", t.pos);
          int index = parse_small_int({TokKind::Int, t.pos, t.text.substr(1)}, 1000,
                                      "variable index");
          Var v;
          if (t.text[0] == 'x' && index == 0) {
            if (!shape.axial) throw ParseError("unknown variable x0", t.pos);
            v = Var::axis();
          } else if (t.text[0] == 'x') {
            if (index > shape.p) throw ParseError("unknown variable " + t.text, t.pos);
            v = Var::x(index);
          } else {
            if (index < 1 || index > shape.q)
              throw ParseError("unknown variable " + t.text, t.pos);
            v = Var::y(index);
          }
          int exponent = 1;
          if (ts.accept(TokKind::Caret)) {
            const Token& e = ts.peek();
            if (e.kind == TokKind::Minus) throw ParseError("negative exponent", e.pos);
            Token et = ts.expect(TokKind::Int, "an exponent");
            exponent = parse_small_int(et, 1000, "exponent");
          }
          exps[out.var_index(v)] += exponent;
        } else {
          throw ParseError("unknown symbol " + t.text, t.pos);
        }
        any_factor = true;
      } else {
        throw ParseError("expected a factor", t.pos);
      }
      if (!ts.accept(TokKind::Star)) break;
    }
    if (!any_factor) throw ParseError("empty term", ts.peek().pos);
    out.add_term(exps, mv * coef);

    if (ts.accept(TokKind::Plus))
      sign = 1;
    else if (ts.accept(TokKind::Minus))
      sign = -1;
    else
      break;
  }
  ts.expect(TokKind::End, "end of input");
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Seeds and monogenics

const char* kArctanSeed = "1/(1+z^2)";

HolomorphicInput arctan_seed() {
  return HolomorphicInput::numeric(
      [](std::complex<double> z) { return 1.0 / (1.0 + z * z); },
      [](double, double rho) { return rho > 1.05; }, kArctanSeed);
}

std::string strip_ws(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

HolomorphicInput make_seed(const std::string& text) {
  if (strip_ws(text) == kArctanSeed) return arctan_seed();
  return parse_holomorphic(text);
}

SphericalMonogenic resolve_monogenic(const std::string& text, CartesianPoly::Shape shape,
                                     Block block, int degree) {
  if (text.empty()) return builtin_monogenic(shape, block, degree);
  CartesianPoly poly = parse_poly(text, shape);
  auto checked = validate_spherical_monogenic(poly, block, degree);
  if (auto* rej = std::get_if<MonogenicRejection>(&checked))
    throw DomainError((block == Block::X ? "--Pk: " : "--Pl: ") + to_string(*rej));
  return std::get<SphericalMonogenic>(checked);
}

// ---------------------------------------------------------------------------
// LaTeX rendering

std::string latex_var(const std::string& name) {
  if (name == "rho") return "\\rho";
  if (name == "theta") return "\\theta";
  if (name == "x0") return "x_0";
  return name;
}

std::string latex_rational(const Rational& r, bool lead_sign) {
  Rational mag = r < 0 ? Rational(-r) : r;
  std::string sign = r < 0 ? "-" : (lead_sign ? "+" : "");
  std::string body;
  if (denominator(mag) == 1)
    body = numerator(mag).str();
  else
    body = "\\frac{" + numerator(mag).str() + "}{" + denominator(mag).str() + "}";
  return sign + body;
}

std::string latex_power(const std::string& base, int e) {
  if (e == 1) return base;
  return base + "^{" + std::to_string(e) + "}";
}

std::string latex_laurent(const LaurentBi& f) {
  if (f.terms().empty()) return "0";
  std::string v1 = latex_var(f.var_first());
  std::string v2 = latex_var(f.var_second());
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    std::string vars;
    if (e.first != 0) vars += latex_power(v1, e.first);
    if (e.second != 0) vars += latex_power(v2, e.second);
    bool unit = c.rat == 1 || c.rat == -1;
    std::string piece;
    if (unit && (c.pi_pow > 0 || !vars.empty()))
      piece = c.rat < 0 ? "-" : (first ? "" : "+");
    else
      piece = latex_rational(c.rat, !first);
    if (first && piece.rfind('+', 0) == 0) piece.erase(0, 1);
    if (c.pi_pow > 0) piece += latex_power("\\pi", c.pi_pow);
    if (!vars.empty()) {
      if (!piece.empty() && piece != "-" && piece != "+") piece += "\\,";
      piece += vars;
    }
    out += piece;
    first = false;
  }
  return out;
}

std::string latex_radial(const RadialElement& e, bool with_monogenics) {
  if (e.is_zero()) return "0";
  std::string out = "\\left(" + latex_laurent(e.s1());
  if (!e.sw().is_zero())
    out += "+\\underline\\omega\\left(" + latex_laurent(e.sw()) + "\\right)";
  if (!e.sn().is_zero())
    out += "+\\underline\\nu\\left(" + latex_laurent(e.sn()) + "\\right)";
  if (!e.swn().is_zero())
    out += "+\\underline\\omega\\,\\underline\\nu\\left(" + latex_laurent(e.swn()) +
           "\\right)";
  out += "\\right)";
  if (with_monogenics) out += "P_k(\\underline x)P_\\ell(\\underline y)";
  return out;
}

// ---------------------------------------------------------------------------
// JSON rendering

json scalar_json(const ScalarExt& s) {
  return json{{"pi_pow", s.pi_pow}, {"rat", to_string(s.rat)}};
}

json laurent_json(const LaurentBi& f) {
  json arr = json::array();
  for (const auto& [e, c] : f.terms()) {
    json t = scalar_json(c);
    t["a"] = e.first;
    t["b"] = e.second;
    arr.push_back(std::move(t));
  }
  return arr;
}

json radial_json(const RadialElement& e) {
  return json{{"s1", laurent_json(e.s1())},
              {"sn", laurent_json(e.sn())},
              {"sw", laurent_json(e.sw())},
              {"swn", laurent_json(e.swn())}};
}

json poly_json(const CartesianPoly& poly) {
  json arr = json::array();
  for (const auto& [e, c] : poly.terms()) {
    json coef = json::array();
    for (const auto& [b, r] : c.terms()) {
      json ids = json::array();
      for (int i : b.indices()) ids.push_back(i);
      coef.push_back(json{{"blade", std::move(ids)}, {"coef", to_string(r)}});
    }
    arr.push_back(json{{"coef", std::move(coef)}, {"exps", e}});
  }
  return arr;
}

// ---------------------------------------------------------------------------
// Verbs

double default_tol(const Command::Options& o, double fallback) {
  return o.tol > 0 ? o.tol : fallback;
}

int cmd_transform(const Command::Options& o, std::ostream& out) {
  HolomorphicInput h = make_seed(o.h);

  if (o.numeric) {
    if (!o.has_at) throw DomainError("--numeric requires --at r,rho");
    NumericProfileValues vals = biaxial_transform_numeric(
        h, o.p, o.q, o.k, o.l, o.at_r, o.at_rho, NumericOptions::from_env());
    if (o.format == "json") {
      out << json{{"M", vals.M},
                  {"N", vals.N},
                  {"fd_check", vals.fd_check},
                  {"flagged", vals.flagged}}
                 .dump()
          << "\n";
    } else if (o.format == "latex") {
      out << "\\left(" << format_double(vals.M)
          << "+\\underline\\omega\\,\\underline\\nu\\left(" << format_double(vals.N)
          << "\\right)\\right)P_k(\\underline x)P_\\ell(\\underline y)\n";
      out << json{{"fd_check", vals.fd_check}, {"flagged", vals.flagged}}.dump() << "\n";
    } else {
      out << "M = " << format_double(vals.M) << "\n";
      out << "N = " << format_double(vals.N) << "\n";
      out << "fd_check = " << format_double(vals.fd_check) << "\n";
      out << "flagged = " << (vals.flagged ? "true" : "false") << "\n";
    }
    return 0;
  }

  if (!h.is_exact())
    throw DomainError("numeric seeds need --numeric --at r,rho");
  CartesianPoly::Shape shape{o.p, o.q, false};
  SphericalMonogenic Pk = resolve_monogenic(o.Pk, shape, Block::X, o.k);
  SphericalMonogenic Pl = resolve_monogenic(o.Pl, shape, Block::Y, o.l);
  TransformResult res = biaxial_transform(h, o.p, o.q, o.k, o.l, Pk, Pl);
  TransformResult shown = normalize(res);

  if (o.format == "json") {
    json doc{{"classification", to_string(res.classification)},
             {"h", o.h},
             {"k", o.k},
             {"l", o.l},
             {"normalization", scalar_json(res.normalization)},
             {"p", o.p},
             {"q", o.q},
             {"radial", radial_json(shown.radial)}};
    doc["cartesian"] = res.cartesian ? poly_json(*res.cartesian) : json(nullptr);
    out << doc.dump() << "\n";
  } else if (o.format == "latex") {
    out << latex_radial(shown.radial, true) << "\n";
    out << json{{"classification", to_string(res.classification)},
                {"normalization", to_string(res.normalization)}}
               .dump()
        << "\n";
  } else {
    out << "h = " << o.h << " (p=" << o.p << ", q=" << o.q << ", k=" << o.k
        << ", l=" << o.l << ")\n";
    out << "normalization = " << to_string(res.normalization) << "\n";
    out << "M = " << shown.radial.s1().to_string() << "\n";
    if (!shown.radial.sw().is_zero())
      out << "W = " << shown.radial.sw().to_string() << "\n";
    if (!shown.radial.sn().is_zero())
      out << "V = " << shown.radial.sn().to_string() << "\n";
    out << "N = " << shown.radial.swn().to_string() << "\n";
    out << "cartesian = "
        << (res.cartesian ? to_string(*res.cartesian) : std::string("(not polynomial)"))
        << "\n";
    out << "classification = " << to_string(res.classification) << "\n";
  }
  return 0;
}

int cmd_verify(const Command::Options& o, std::ostream& out) {
  HolomorphicInput h = make_seed(o.h);
  CartesianPoly::Shape shape{o.p, o.q, false};
  SphericalMonogenic Pk = resolve_monogenic(o.Pk, shape, Block::X, o.k);
  SphericalMonogenic Pl = resolve_monogenic(o.Pl, shape, Block::Y, o.l);

  if (o.numeric) {
    if (!o.has_at) throw DomainError("--numeric requires --at r,rho");
    std::vector<double> point(o.p + o.q, 0.0);
    point[0] = o.at_r;
    point[o.p] = o.at_rho;
    double tol = default_tol(o, 1e-4);
    double residual = numeric_dirac_residual(h, o.p, o.q, o.k, o.l, Pk, Pl, point,
                                             1e-3, NumericOptions::from_env());
    bool ok = residual <= tol;
    if (o.format == "json")
      out << json{{"passed", ok}, {"residual", residual}, {"tol", tol}}.dump() << "\n";
    else
      out << "dirac residual = " << format_double(residual) << " (tol "
          << format_double(tol) << ")\n"
          << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? 0 : 1;
  }

  if (!h.is_exact())
    throw DomainError("numeric seeds need --numeric --at r,rho");
  TransformResult res = biaxial_transform(h, o.p, o.q, o.k, o.l, Pk, Pl);
  VerifyReport rep = verify_monogenic(res);
  if (o.format == "json") {
    out << json{{"details", rep.details},
                {"dirac_zero", rep.dirac_zero},
                {"has_cartesian", rep.has_cartesian},
                {"passed", rep.passed()},
                {"stray_sectors_zero", rep.stray_sectors_zero},
                {"vekua_zero", rep.vekua_zero}}
               .dump()
        << "\n";
  } else {
    out << rep.details << "\n" << (rep.passed() ? "PASS" : "FAIL") << "\n";
  }
  return rep.passed() ? 0 : 1;
}

LaurentBi paper_sector(std::initializer_list<std::tuple<int, int, Rational>> terms) {
  LaurentBi f("r", "rho");
  for (const auto& [a, b, c] : terms) f.add_term(a, b, ScalarExt(c));
  return f;
}

RadialElement normalize_element(const RadialElement& e) {
  ScalarExt lead = e.leading_coefficient();
  return lead.is_zero() ? e : e.divided_by(lead);
}

struct ExampleOutcome {
  std::string name;
  bool pass;
  std::string detail;
};

ExampleOutcome check_exact_example(const std::string& name, const std::string& seed,
                                   int p, int q, int k, int l,
                                   const RadialElement& paper,
                                   Classification expected_class) {
  TransformResult res = normalize(biaxial_transform(make_seed(seed), p, q, k, l));
  RadialElement want = normalize_element(paper);
  bool ok = res.radial == want && res.classification == expected_class;
  std::string detail =
      ok ? "matches after normalization"
         : "got " + res.radial.to_string() + " [" + to_string(res.classification) +
               "], want " + want.to_string() + " [" + to_string(expected_class) + "]";
  return {name, ok, detail};
}

double paper_arctan_M(double r, double rho) {
  double d1 = r * r + (rho + 1) * (rho + 1);
  double d2 = r * r + (rho - 1) * (rho - 1);
  return 4.0 / (d1 * d2);
}

double paper_arctan_N(double r, double rho) {
  double d1 = r * r + (rho + 1) * (rho + 1);
  double d2 = r * r + (rho - 1) * (rho - 1);
  double rat = 2.0 * (r * r - rho * rho + 1) / (r * rho * d1 * d2);
  double at = (std::atan(r / (rho + 1)) + std::atan(r / (rho - 1))) / (r * r * rho * rho);
  return -(rat + at);
}

ExampleOutcome check_arctan_example() {
  HolomorphicInput h = arctan_seed();
  NumericOptions opt = NumericOptions::from_env();
  std::vector<double> comp, pap;
  for (int i = 0; i < 5; ++i) {
    double r = 0.2 + 1.8 * i / 4.0;
    for (int j = 0; j < 4; ++j) {
      double rho = 1.2 + 1.8 * j / 3.0;
      NumericProfileValues vals = biaxial_transform_numeric(h, 3, 3, 0, 0, r, rho, opt);
      comp.push_back(vals.M);
      comp.push_back(vals.N);
      pap.push_back(paper_arctan_M(r, rho));
      pap.push_back(paper_arctan_N(r, rho));
    }
  }
  double cp = 0.0, pp = 0.0;
  for (std::size_t i = 0; i < comp.size(); ++i) {
    cp += comp[i] * pap[i];
    pp += pap[i] * pap[i];
  }
  double scale = cp / pp;  // one global scalar fit
  double maxrel = 0.0;
  for (std::size_t i = 0; i < comp.size(); ++i)
    maxrel = std::max(maxrel, std::abs(comp[i] - scale * pap[i]) /
                                  std::abs(scale * pap[i]));
  bool ok = maxrel <= 1e-6;
  return {std::string("Ft_{3,3}[") + kArctanSeed + ",1,1] (numeric)", ok,
          "scale " + format_double(scale) + ", max rel err " + format_double(maxrel) +
              " over 20 grid points"};
}

int cmd_paper_examples(const Command::Options& o, std::ostream& out) {
  std::vector<ExampleOutcome> results;

  results.push_back(check_exact_example(
      "Ft_{3,3}[i*z,1,1]", "i*z", 3, 3, 0, 0,
      RadialElement::biaxial(3, 3, 0, 0, paper_sector({{0, -1, 1}}), LaurentBi("r", "rho"),
                             LaurentBi("r", "rho"),
                             paper_sector({{1, -2, Rational(-1) / 3}})),
      {Classification::Kind::NonPolynomial, 0}));

  results.push_back(check_exact_example(
      "Ft_{4,3}[i*z^4,P1,1]", "i*z^4", 4, 3, 1, 0,
      RadialElement::biaxial(4, 3, 1, 0, paper_sector({{2, -1, 1}, {0, 1, -6}}),
                             LaurentBi("r", "rho"), LaurentBi("r", "rho"),
                             paper_sector({{3, -2, Rational(-1) / 8}, {1, 0, -1}})),
      {Classification::Kind::NonPolynomial, 0}));

  {
    TransformResult res = biaxial_transform(make_seed("z^4"), 3, 3, 0, 0);
    RadialElement want = RadialElement::biaxial(
        3, 3, 0, 0, paper_sector({{2, 0, -1}, {0, 2, 1}}), LaurentBi("r", "rho"),
        LaurentBi("r", "rho"), paper_sector({{1, 1, Rational(2) / 3}}));
    CartesianPoly::Shape shape{3, 3, false};
    CartesianPoly bx = CartesianPoly::block_vector(shape, Block::X);
    CartesianPoly by = CartesianPoly::block_vector(shape, Block::Y);
    CartesianPoly expected =
        bx * bx + (bx * by) * Rational(2, 3) - by * by;  // x^2 + 2/3 xy - y^2
    bool ok = normalize(res).radial == normalize_element(want) && res.cartesian &&
              *res.cartesian == expected &&
              res.classification == Classification{Classification::Kind::Homogeneous, 2};
    results.push_back({"Ft_{3,3}[z^4,1,1]", ok,
                       ok ? "matches after normalization (sectors and cartesian form)"
                          : "mismatch"});
  }

  results.push_back(check_exact_example(
      "Ft_{3,3}[z^7,P1,1]", "z^7", 3, 3, 1, 0,
      RadialElement::biaxial(3, 3, 1, 0,
                             paper_sector({{4, 0, 3}, {2, 2, -14}, {0, 4, 7}}),
                             LaurentBi("r", "rho"), LaurentBi("r", "rho"),
                             paper_sector({{3, 1, -4}, {1, 3, Rational(28) / 5}})),
      {Classification::Kind::Homogeneous, 4}));

  results.push_back(check_arctan_example());

  bool all = true;
  for (const auto& r : results) all = all && r.pass;

  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : results)
      arr.push_back(json{{"detail", r.detail}, {"name", r.name}, {"pass", r.pass}});
    out << json{{"all_pass", all}, {"examples", std::move(arr)}}.dump() << "\n";
  } else {
    for (const auto& r : results)
      out << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail << "\n";
    out << (all ? "all examples match" : "some examples failed") << "\n";
  }
  return all ? 0 : 1;
}

int cmd_moments(const Command::Options& o, std::ostream& out) {
  int nmax = o.n > 0 ? o.n : 6;
  int kmax = o.k > 0 ? o.k : 3;
  if (o.format == "json") {
    json arr = json::array();
    for (int n = 0; n <= nmax; ++n)
      for (int k = 0; k <= kmax; ++k) {
        ScalarExt m = moment(n, k, o.p);
        arr.push_back(json{{"k", k},
                           {"n", n},
                           {"p", o.p},
                           {"pi_pow", m.pi_pow},
                           {"rat", to_string(m.rat)}});
      }
    out << arr.dump() << "\n";
  } else {
    out << "moment(n, k, p=" << o.p << ")\n";
    for (int n = 0; n <= nmax; ++n) {
      for (int k = 0; k <= kmax; ++k) {
        out << "n=" << n << " k=" << k << ": " << to_string(moment(n, k, o.p));
        out << (k == kmax ? "\n" : "   ");
      }
    }
  }
  return 0;
}

int cmd_classify(const Command::Options& o, std::ostream& out) {
  Classification c = classify_power(o.n, o.k, o.l, o.p, o.q);
  if (o.format == "json") {
    json doc{{"k", o.k},
             {"kind", to_string(c)},
             {"l", o.l},
             {"n", o.n},
             {"p", o.p},
             {"q", o.q}};
    if (c.kind == Classification::Kind::Homogeneous) doc["degree"] = c.degree;
    out << doc.dump() << "\n";
  } else {
    out << to_string(c) << "\n";
  }
  return 0;
}

int cmd_oracle(const Command::Options& o, std::ostream& out) {
  double tol = default_tol(o, 1e-8);
  if (o.p != 3) throw DomainError("the oracle tensor grid is built for p = 3");

  struct Fn {
    const char* name;
    std::function<double(double)> f;
  };
  const std::array<Fn, 5> fns = {{{"1", [](double) { return 1.0; }},
                                  {"t", [](double t) { return t; }},
                                  {"t^2", [](double t) { return t * t; }},
                                  {"t^3-t", [](double t) { return t * t * t - t; }},
                                  {"exp(t)", [](double t) { return std::exp(t); }}}};
  const std::array<std::array<double, 3>, 3> dirs = {
      {{0.0, 0.0, 1.0},
       {1.0, 0.0, 0.0},
       {1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0), 1.0 / std::sqrt(3.0)}}};

  CartesianPoly::Shape shape{3, 0, false};
  auto harmonic = [&](int k) {
    CartesianPoly y(shape);
    CartesianPoly::ExpVec e(3, 0);
    for (int i = 0; i < k; ++i) e[i] = 1;  // 1, x1, x1*x2, x1*x2*x3
    y.add_term(e, Multivector::scalar(3, Rational(1)));
    return y;
  };

  int kmin = 0, kmax = 3;
  if (o.k > 0) kmin = kmax = o.k;
  if (o.k > 3) throw DomainError("built-in harmonics cover k <= 3");

  bool all = true;
  json arr = json::array();
  for (int k = kmin; k <= kmax; ++k) {
    CartesianPoly yk = harmonic(k);
    for (const auto& fn : fns)
      for (const auto& xi : dirs) {
        auto [lhs, rhs] = funk_hecke_oracle(fn.f, yk, k, xi);
        double diff = 0.0, mag = 0.0;
        MultivectorD delta = lhs - rhs;
        for (const auto& [b, c] : delta.terms()) diff = std::max(diff, std::abs(c));
        for (const auto& [b, c] : rhs.terms()) mag = std::max(mag, std::abs(c));
        double err = diff / std::max(1.0, mag);
        bool ok = err <= tol;
        all = all && ok;
        if (o.format == "json") {
          arr.push_back(json{{"F", fn.name},
                             {"err", err},
                             {"k", k},
                             {"pass", ok},
                             {"xi", {xi[0], xi[1], xi[2]}}});
        } else {
          out << (ok ? "PASS" : "FAIL") << "  k=" << k << " F=" << fn.name << " xi=("
              << format_double(xi[0]) << "," << format_double(xi[1]) << ","
              << format_double(xi[2]) << ") err=" << format_double(err) << "\n";
        }
      }
  }
  if (o.format == "json")
    out << json{{"all_pass", all}, {"cases", std::move(arr)}}.dump() << "\n";
  else
    out << (all ? "oracle agreement within tolerance" : "oracle disagreement") << "\n";
  return all ? 0 : 1;
}

void validate_options(Command& cmd) {
  Command::Options& o = cmd.options;
  if (o.format != "plain" && o.format != "json" && o.format != "latex")
    throw DomainError("--format must be plain, json, or latex");
  bool needs_pq = cmd.verb == Command::Verb::Transform ||
                  cmd.verb == Command::Verb::Verify ||
                  cmd.verb == Command::Verb::Classify;
  if (needs_pq) {
    if (o.p < 3) throw DomainError("--p must be at least 3");
    if (o.q < 1 || o.q % 2 == 0) throw DomainError("--q must be odd and positive");
    if (o.k < 0 || o.l < 0) throw DomainError("--k and --l must be non-negative");
  }
  if (cmd.verb == Command::Verb::Moments && o.p < 3)
    throw DomainError("--p must be at least 3");
  if (o.has_at && (o.at_r <= 0.0 || o.at_rho <= 0.0))
    throw DomainError("--at needs r > 0 and rho > 0");
  if (o.numeric && !o.has_at) throw DomainError("--numeric requires --at r,rho");
}

}  // namespace

Command parse_command(const std::vector<std::string>& args) {
  CLI::App app{"biaxial monogenic transform toolkit"};
  app.set_help_flag("--help", "print usage");
  app.require_subcommand(1);

  Command cmd;
  std::string at_text;

  auto add_common = [&](CLI::App* sub, bool with_seed) {
    sub->set_help_flag("--help", "print usage");
    if (with_seed) {
      sub->add_option("--h", cmd.options.h, "holomorphic seed, e.g. \"z^4\" or \"i*z\"")
          ->required();
      sub->add_option("--Pk", cmd.options.Pk, "inner spherical monogenic override");
      sub->add_option("--Pl", cmd.options.Pl, "outer spherical monogenic override");
      sub->add_flag("--numeric", cmd.options.numeric, "evaluate numerically at --at");
      sub->add_option("--at", at_text, "evaluation point r,rho");
      sub->add_option("--tol", cmd.options.tol, "numeric tolerance");
    }
    sub->add_option("--p", cmd.options.p, "first block dimension");
    sub->add_option("--q", cmd.options.q, "second block dimension (odd)");
    sub->add_option("--k", cmd.options.k, "inner monogenic degree");
    sub->add_option("--l", cmd.options.l, "outer monogenic degree");
    sub->add_option("--format", cmd.options.format, "plain|json|latex");
  };

  CLI::App* t = app.add_subcommand("transform", "apply the transform to a seed");
  add_common(t, true);
  CLI::App* v = app.add_subcommand("verify", "check monogenicity of the result");
  add_common(v, true);
  CLI::App* pe = app.add_subcommand("paper-examples", "reproduce the worked examples");
  pe->set_help_flag("--help", "print usage");
  pe->add_option("--format", cmd.options.format, "plain|json");
  CLI::App* mo = app.add_subcommand("moments", "table of Gegenbauer moments");
  mo->set_help_flag("--help", "print usage");
  mo->add_option("--p", cmd.options.p, "weight dimension")->required();
  mo->add_option("--n", cmd.options.n, "max monomial power (default 6)");
  mo->add_option("--k", cmd.options.k, "max polynomial degree (default 3)");
  mo->add_option("--format", cmd.options.format, "plain|json");
  CLI::App* cl = app.add_subcommand("classify", "fate of the seed z^n");
  cl->set_help_flag("--help", "print usage");
  cl->add_option("--n", cmd.options.n, "power of z")->required();
  add_common(cl, false);
  CLI::App* orc = app.add_subcommand("oracle", "integral identity cross-check");
  orc->set_help_flag("--help", "print usage");
  orc->add_option("--k", cmd.options.k, "single harmonic degree (default battery 0..3)");
  orc->add_option("--p", cmd.options.p, "ambient dimension (only 3 supported)");
  orc->add_option("--tol", cmd.options.tol, "agreement tolerance (default 1e-8)");
  orc->add_option("--format", cmd.options.format, "plain|json");

  // moments/oracle reuse --k as a range bound; keep defaults out of their way
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream help;
    for (CLI::App* sub : app.get_subcommands())
      help << sub->help();
    if (app.get_subcommands().empty()) help << app.help();
    throw HelpRequested{help.str()};
  } catch (const CLI::ParseError& e) {
    throw DomainError(std::string("usage: ") + e.what());
  }

  if (t->parsed()) cmd.verb = Command::Verb::Transform;
  if (v->parsed()) cmd.verb = Command::Verb::Verify;
  if (pe->parsed()) cmd.verb = Command::Verb::PaperExamples;
  if (mo->parsed()) {
    cmd.verb = Command::Verb::Moments;
    if (mo->count("--k") == 0) cmd.options.k = 0;
  }
  if (cl->parsed()) cmd.verb = Command::Verb::Classify;
  if (orc->parsed()) {
    cmd.verb = Command::Verb::Oracle;
    if (orc->count("--k") == 0) cmd.options.k = 0;
  }

  if (!at_text.empty()) {
    std::size_t comma = at_text.find(',');
    if (comma == std::string::npos)
      throw DomainError("--at expects r,rho");
    try {
      cmd.options.at_r = std::stod(at_text.substr(0, comma));
      cmd.options.at_rho = std::stod(at_text.substr(comma + 1));
    } catch (const std::exception&) {
      throw DomainError("--at expects two numbers r,rho");
    }
    cmd.options.has_at = true;
  }

  validate_options(cmd);
  return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    switch (cmd.verb) {
      case Command::Verb::Transform: return cmd_transform(cmd.options, out);
      case Command::Verb::Verify: return cmd_verify(cmd.options, out);
      case Command::Verb::PaperExamples: return cmd_paper_examples(cmd.options, out);
      case Command::Verb::Moments: return cmd_moments(cmd.options, out);
      case Command::Verb::Classify: return cmd_classify(cmd.options, out);
      case Command::Verb::Oracle: return cmd_oracle(cmd.options, out);
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Command cmd = parse_command(args);
    return run(cmd, out, err);
  } catch (const HelpRequested& h) {
    out << h.text;
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace ffh::cli
