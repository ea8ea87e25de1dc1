#include "ffh/transform.hpp"

#include <array>
#include <cmath>
#include <cstdlib>

namespace ffh {

FunkHeckeProfile funk_hecke_profile(const HolomorphicInput& h, int p, int k) {
  if (p < 3) throw DomainError("ambient dimension must be >= 3");
  if (k < 0) throw DomainError("negative degree");
  if (!h.is_exact()) throw DomainError("profile extraction needs an exact input");
  auto [u, v] = extract_uv(h);
  ScalarExt ck(gegenbauer(k, Rational(p - 2) / 2).at_one());
  ScalarExt ck_next(gegenbauer(k + 1, Rational(p - 2) / 2).at_one());

  FunkHeckeProfile out;
  out.p = p;
  out.k = k;
  // theta -> r t turns a theta-power into the matching Gegenbauer moment;
  // vanishing moments (orthogonality) keep all r-exponents non-negative.
  for (const auto& [e, c] : u.terms()) {
    ScalarExt m = moment(e.first, k, p);
    if (m.is_zero()) continue;
    out.A.add_term(e.first - k, e.second, c * m / ck);
  }
  for (const auto& [e, c] : v.terms()) {
    ScalarExt m = moment(e.first, k + 1, p);
    if (m.is_zero()) continue;
    out.B.add_term(e.first - k, e.second, c * m / ck_next);
  }
  return out;
}

std::string to_string(const Classification& c) {
  switch (c.kind) {
    case Classification::Kind::Zero: return "Zero";
    case Classification::Kind::Homogeneous:
      return "Homogeneous(" + std::to_string(c.degree) + ")";
    case Classification::Kind::Inhomogeneous: return "Inhomogeneous";
    case Classification::Kind::NonPolynomial: return "NonPolynomial";
  }
  return "?";
}

namespace {

// Degree of the polynomial factor in front of Pk Pl: every sector term
// r^a rho^b contributes a+b (the unit vectors fold into the exponents).
// Empty when the terms mix total degrees.
std::optional<int> radial_homogeneity(const RadialElement& e) {
  std::optional<int> deg;
  for (int eps = 0; eps < 2; ++eps)
    for (int delta = 0; delta < 2; ++delta)
      for (const auto& [ex, c] : e.sector(eps, delta).terms()) {
        int d = ex.first + ex.second;
        if (!deg)
          deg = d;
        else if (*deg != d)
          return std::nullopt;
      }
  return deg;
}

}  // namespace

TransformResult biaxial_transform(const HolomorphicInput& h, int p, int q, int k, int l,
                                  const SphericalMonogenic& Pk,
                                  const SphericalMonogenic& Pl) {
  if (q % 2 == 0) throw DomainError("q must be odd");
  if (p < 3) throw DomainError("p must be >= 3");
  if (k < 0 || l < 0) throw DomainError("negative degree");
  CartesianPoly::Shape shape{p, q, false};
  if (Pk.block != Block::X || Pk.degree != k || !(Pk.poly.shape() == shape))
    throw DomainError("Pk does not match parameters (p, k)");
  if (Pl.block != Block::Y || Pl.degree != l || !(Pl.poly.shape() == shape))
    throw DomainError("Pl does not match parameters (q, l)");

  FunkHeckeProfile prof = funk_hecke_profile(h, p, k);
  LaurentBi zero("r", "rho");
  RadialElement seed =
      RadialElement::biaxial(p, q, k, l, prof.A, zero, zero, -prof.B);

  TransformResult res;
  res.p = p;
  res.q = q;
  res.k = k;
  res.l = l;
  res.Pk = Pk;
  res.Pl = Pl;
  res.radial = iterated_radial_laplacian(seed, l + (q - 1) / 2);

  ScalarExt lead = res.radial.leading_coefficient();
  res.normalization = lead.is_zero() ? ScalarExt(1) : lead;

  if (res.radial.is_zero()) {
    res.classification = {Classification::Kind::Zero, 0};
    res.cartesian = to_cartesian(res.radial, Pk, Pl);
    return res;
  }
  try {
    res.cartesian = to_cartesian(res.radial.divided_by(res.normalization), Pk, Pl);
    std::optional<int> deg = radial_homogeneity(res.radial);
    res.classification = deg ? Classification{Classification::Kind::Homogeneous, *deg}
                             : Classification{Classification::Kind::Inhomogeneous, 0};
  } catch (const NotConvertibleError&) {
    res.cartesian = std::nullopt;
    res.classification = {Classification::Kind::NonPolynomial, 0};
  }
  return res;
}

TransformResult biaxial_transform(const HolomorphicInput& h, int p, int q, int k,
                                  int l) {
  CartesianPoly::Shape shape{p, q, false};
  return biaxial_transform(h, p, q, k, l, builtin_monogenic(shape, Block::X, k),
                           builtin_monogenic(shape, Block::Y, l));
}

TransformResult normalize(TransformResult res) {
  ScalarExt lead = res.radial.leading_coefficient();
  if (!lead.is_zero()) res.radial = res.radial.divided_by(lead);
  return res;
}

Classification classify_power(int n, int k, int l, int p, int q) {
  if (q % 2 == 0) throw DomainError("q must be odd");
  if (p < 3) throw DomainError("p must be >= 3");
  if (n < 0 || k < 0 || l < 0) throw DomainError("negative parameters");
  int threshold = k + 2 * l + q - 1;
  if ((k - n) % 2 != 0 || n < threshold) return {Classification::Kind::Zero, 0};
  return {Classification::Kind::Homogeneous, n - threshold};
}

std::pair<LaurentBi, LaurentBi> fuesom_profiles(const HolomorphicInput& h, int q,
                                                int l) {
  if (q % 2 == 0) throw DomainError("q must be odd");
  if (l < 0) throw DomainError("negative degree");
  auto [u, v] = extract_uv(h);
  int n = l + (q - 1) / 2;
  return {ladder_I(u, Which::Second, n), ladder_II(v, Which::Second, n)};
}

RadialElement fueter_axial(const HolomorphicInput& h, int m,
                           const SphericalMonogenic& Pk) {
  if (m % 2 == 0 || m < 1) throw DomainError("the vector dimension must be odd");
  CartesianPoly::Shape shape{0, m, true};
  if (Pk.block != Block::Y || !(Pk.poly.shape() == shape))
    throw DomainError("Pk must live on the vector block of the axial shape");
  auto [u, v] = extract_uv(h);
  RadialElement seed = RadialElement::axial(m, Pk.degree, renamed(u, "x0", "R"),
                                            renamed(v, "x0", "R"));
  return iterated_radial_laplacian(seed, Pk.degree + (m - 1) / 2);
}

NumericOptions NumericOptions::from_env() {
  NumericOptions opt;
  if (const char* s = std::getenv("FFH_QUAD_ORDER")) {
    int v = std::atoi(s);
    if (v >= 1) opt.base_order = v;
  }
  return opt;
}

namespace {

// Quadrature-backed evaluator for A, B.  The order is fixed by adaptive
// doubling at the construction point and reused for every stencil point so
// the values stay smooth in (r, rho).
class ProfileEvaluator {
public:
  ProfileEvaluator(const HolomorphicInput& h, int p, int k, double r0, double rho0,
                   const NumericOptions& opt)
      : h_(&h), k_(k) {
    Rational lambda = Rational(p - 2) / 2;
    GegenbauerPoly Ck = gegenbauer(k, lambda);
    GegenbauerPoly Ck_next = gegenbauer(k + 1, lambda);
    ck_ = to_double(Ck.at_one());
    ck_next_ = to_double(Ck_next.at_one());

    int order = std::max(1, opt.base_order);
    set_rule(gauss_jacobi_rule(order, p), Ck, Ck_next);
    auto prev = eval(r0, rho0);
    for (;;) {
      if (2 * order > opt.max_order)
        throw QuadratureError("quadrature did not converge below order " +
                              std::to_string(opt.max_order) + " at (r, rho) = (" +
                              std::to_string(r0) + ", " + std::to_string(rho0) + ")");
      order *= 2;
      set_rule(gauss_jacobi_rule(order, p), Ck, Ck_next);
      auto cur = eval(r0, rho0);
      double scale = std::max({1.0, std::abs(cur.first), std::abs(cur.second)});
      if (std::abs(cur.first - prev.first) <= opt.quad_tol * scale &&
          std::abs(cur.second - prev.second) <= opt.quad_tol * scale)
        break;
      prev = cur;
    }
  }

  // (A, B) at the point; refuses invalid quadrature evaluation points.
  std::pair<double, double> eval(double r, double rho) const {
    if (r <= 0.0 || rho <= 0.0)
      throw DomainError("numeric profiles need r > 0 and rho > 0");
    double a = 0.0, b = 0.0;
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      double theta = r * nodes_[i];
      if (!h_->valid_at(theta, rho))
        throw DomainError("evaluation stencil leaves the declared validity region");
      std::complex<double> hv = h_->eval({theta, rho});
      a += weights_[i] * hv.real() * ck_vals_[i];
      b += weights_[i] * hv.imag() * ck_next_vals_[i];
    }
    double rk = std::pow(r, -k_);
    return {rk * a / ck_, rk * b / ck_next_};
  }

private:
  void set_rule(QuadratureRule rule, const GegenbauerPoly& Ck,
                const GegenbauerPoly& Ck_next) {
    nodes_ = std::move(rule.nodes);
    weights_ = std::move(rule.weights);
    ck_vals_.resize(nodes_.size());
    ck_next_vals_.resize(nodes_.size());
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      ck_vals_[i] = Ck.evaluate(nodes_[i]);
      ck_next_vals_[i] = Ck_next.evaluate(nodes_[i]);
    }
  }

  const HolomorphicInput* h_;
  int k_;
  double ck_ = 1.0, ck_next_ = 1.0;
  std::vector<double> nodes_, weights_, ck_vals_, ck_next_vals_;
};

struct SectorPair {
  double M, N;
};

// 4th-order central stencils over 5 values at offsets -2..2.
double stencil_d1(const std::array<double, 5>& f, double h) {
  return (f[0] - 8.0 * f[1] + 8.0 * f[3] - f[4]) / (12.0 * h);
}

double stencil_d2(const std::array<double, 5>& f, double h) {
  return (-f[0] + 16.0 * f[1] - 30.0 * f[2] + 16.0 * f[3] - f[4]) / (12.0 * h * h);
}

// (M, N) after `level` applications of the reduction rules, by nested
// central differences on the quadrature profiles.
SectorPair level_eval(const ProfileEvaluator& prof, int cx, int cy, int level,
                      double r, double rho, double base_step, double growth) {
  if (level == 0) {
    auto [a, b] = prof.eval(r, rho);
    return {a, -b};
  }
  double scale = std::pow(growth, level - 1);
  double hr = base_step * std::max(1.0, std::abs(r)) * scale;
  double hrho = base_step * std::max(1.0, std::abs(rho)) * scale;

  std::array<SectorPair, 5> fr, fo;
  for (int s = -2; s <= 2; ++s) {
    fr[s + 2] = level_eval(prof, cx, cy, level - 1, r + s * hr, rho, base_step, growth);
    fo[s + 2] = s == 0 ? fr[2]
                       : level_eval(prof, cx, cy, level - 1, r, rho + s * hrho,
                                    base_step, growth);
  }

  std::array<double, 5> m_r, m_o, n_r, n_o, n_r_div, n_o_div;
  for (int i = 0; i < 5; ++i) {
    m_r[i] = fr[i].M;
    m_o[i] = fo[i].M;
    n_r[i] = fr[i].N;
    n_o[i] = fo[i].N;
    n_r_div[i] = fr[i].N / (r + (i - 2) * hr);
    n_o_div[i] = fo[i].N / (rho + (i - 2) * hrho);
  }

  SectorPair out;
  out.M = stencil_d2(m_r, hr) + cx * stencil_d1(m_r, hr) / r +
          stencil_d2(m_o, hrho) + cy * stencil_d1(m_o, hrho) / rho;
  out.N = stencil_d2(n_r, hr) + cx * stencil_d1(n_r_div, hr) +
          stencil_d2(n_o, hrho) + cy * stencil_d1(n_o_div, hrho);
  return out;
}

}  // namespace

NumericProfileValues biaxial_transform_numeric(const HolomorphicInput& h, int p, int q,
                                               int k, int l, double r, double rho,
                                               const NumericOptions& opt) {
  if (q % 2 == 0) throw DomainError("q must be odd");
  if (p < 3) throw DomainError("p must be >= 3");
  if (k < 0 || l < 0) throw DomainError("negative degree");
  if (r <= 0.0 || rho <= 0.0) throw DomainError("point needs r > 0 and rho > 0");

  int level = l + (q - 1) / 2;
  int cx = 2 * k + p - 1;
  int cy = 2 * l + q - 1;
  ProfileEvaluator prof(h, p, k, r, rho, opt);

  SectorPair base = level_eval(prof, cx, cy, level, r, rho, opt.fd_step, opt.fd_growth);
  SectorPair halved =
      level_eval(prof, cx, cy, level, r, rho, opt.fd_step / 2, opt.fd_growth);

  NumericProfileValues out;
  out.M = base.M;
  out.N = base.N;
  double scale = std::max({1.0, std::abs(base.M), std::abs(base.N)});
  out.fd_check =
      std::max(std::abs(base.M - halved.M), std::abs(base.N - halved.N)) / scale;
  out.flagged = out.fd_check > 10.0 * opt.check_tol;
  return out;
}

VerifyReport verify_monogenic(const TransformResult& res) {
  VerifyReport rep;
  auto [r1, r2] = vekua_residual_biaxial(res.radial.s1(), res.radial.swn(), res.p,
                                         res.q, res.k, res.l);
  rep.vekua_zero = r1.is_zero() && r2.is_zero();
  rep.stray_sectors_zero = res.radial.sw().is_zero() && res.radial.sn().is_zero();
  rep.has_cartesian = res.cartesian.has_value();
  if (res.cartesian) rep.dirac_zero = res.cartesian->dirac(Block::Full).is_zero();

  rep.details = "vekua residuals (" + r1.to_string() + ", " + r2.to_string() + ")";
  if (rep.has_cartesian)
    rep.details += std::string("; cartesian dirac ") + (rep.dirac_zero ? "0" : "nonzero");
  if (!rep.stray_sectors_zero) rep.details += "; unexpected w or n sector";
  return rep;
}

double numeric_dirac_residual(const HolomorphicInput& h, int p, int q, int k, int l,
                              const SphericalMonogenic& Pk, const SphericalMonogenic& Pl,
                              std::span<const double> point, double step,
                              const NumericOptions& opt) {
  if (static_cast<int>(point.size()) != p + q)
    throw DimensionMismatchError("point length does not match p+q");
  const int dim = p + q;

  auto field = [&](const std::vector<double>& pt) -> MultivectorD {
    double r = 0.0, rho = 0.0;
    for (int i = 0; i < p; ++i) r += pt[i] * pt[i];
    for (int j = 0; j < q; ++j) rho += pt[p + j] * pt[p + j];
    r = std::sqrt(r);
    rho = std::sqrt(rho);
    NumericProfileValues vals = biaxial_transform_numeric(h, p, q, k, l, r, rho, opt);
    MultivectorD omega(dim), nu(dim);
    for (int i = 0; i < p; ++i)
      omega += MultivectorD::basis_vector(dim, i + 1) * (pt[i] / r);
    for (int j = 0; j < q; ++j)
      nu += MultivectorD::basis_vector(dim, p + j + 1) * (pt[p + j] / rho);
    MultivectorD radial_part =
        MultivectorD::scalar(dim, vals.M) + omega * nu * vals.N;
    return radial_part * Pk.poly.evaluate(pt) * Pl.poly.evaluate(pt);
  };

  MultivectorD dirac(dim);
  std::vector<double> pt(point.begin(), point.end());
  for (int j = 0; j < dim; ++j) {
    double hj = step * std::max(1.0, std::abs(pt[j]));
    std::array<MultivectorD, 4> f = {MultivectorD(dim), MultivectorD(dim),
                                     MultivectorD(dim), MultivectorD(dim)};
    int slot = 0;
    for (int s : {-2, -1, 1, 2}) {
      std::vector<double> moved = pt;
      moved[j] += s * hj;
      f[slot++] = field(moved);
    }
    MultivectorD deriv =
        (f[0] - f[1] * 8.0 + f[2] * 8.0 - f[3]) * (1.0 / (12.0 * hj));
    dirac += MultivectorD::basis_vector(dim, j + 1) * deriv;
  }

  double max_abs = 0.0;
  for (const auto& [b, c] : dirac.terms()) max_abs = std::max(max_abs, std::abs(c));
  return max_abs;
}

}  // namespace ffh
