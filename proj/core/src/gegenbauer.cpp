#include "ffh/gegenbauer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace ffh {

Rational GegenbauerPoly::evaluate(const Rational& t) const {
  Rational out(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * t + *it;
  return out;
}

double GegenbauerPoly::evaluate(double t) const {
  double out = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    out = out * t + to_double(*it);
  return out;
}

GegenbauerPoly gegenbauer(int k, const Rational& lambda) {
  if (k < 0) throw DomainError("negative Gegenbauer degree");
  if (lambda <= 0)
    throw DomainError("Gegenbauer parameter must be positive (ambient dimension "
                      ">= 3); the lambda = 0 normalization is unsupported");
  std::vector<Rational> prev = {Rational(1)};             // C_0
  if (k == 0) return GegenbauerPoly(0, lambda, prev);
  std::vector<Rational> cur = {Rational(0), 2 * lambda};  // C_1
  for (int j = 2; j <= k; ++j) {
    std::vector<Rational> next(j + 1, Rational(0));
    Rational a = 2 * (j + lambda - 1) / j;
    Rational b = (j + 2 * lambda - 2) / j;
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += a * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= b * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return GegenbauerPoly(k, lambda, cur);
}

namespace {

// Gamma(n/2) = rat * pi^(half/2) with half in {0,1}; n >= 1.
std::pair<Rational, int> gamma_half(int n) {
  if (n < 1) throw DomainError("gamma argument out of range");
  if (n % 2 == 0) {
    Rational r(factorial(n / 2 - 1));
    return {r, 0};
  }
  // Gamma(1/2) = sqrt(pi); Gamma(n/2) = (n-2)!! / 2^((n-1)/2) * sqrt(pi).
  Rational r(double_factorial(n - 2));
  r /= rational_pow(Rational(2), (n - 1) / 2);
  return {r, 1};
}

// Integral of t^j (1-t^2)^((p-3)/2) over [-1,1]: Beta((j+1)/2, (p-1)/2)
// for even j, zero for odd j.
ScalarExt monomial_moment(int j, int p) {
  if (j % 2 != 0) return {};
  auto [gx, hx] = gamma_half(j + 1);
  auto [gy, hy] = gamma_half(p - 1);
  auto [gs, hs] = gamma_half(j + p);
  int half = hx + hy - hs;  // 0 or 2: integer pi powers only
  return ScalarExt(gx * gy / gs, half / 2);
}

}  // namespace

ScalarExt moment(int n, int k, int p) {
  if (n < 0 || k < 0) throw DomainError("negative moment parameters");
  if (p < 3) throw DomainError("ambient dimension must be >= 3");
  if (n < k || (n - k) % 2 != 0) return {};
  GegenbauerPoly C = gegenbauer(k, Rational(p - 2) / 2);
  ScalarExt out;
  for (std::size_t j = 0; j < C.coeffs().size(); ++j) {
    if (C.coeffs()[j] == 0) continue;
    out += ScalarExt(C.coeffs()[j]) * monomial_moment(n + static_cast<int>(j), p);
  }
  return out;
}

ScalarExt surface_area(int d) {
  if (d < 1) throw DomainError("sphere dimension must be positive");
  auto [g, h] = gamma_half(d);
  // 2 pi^(d/2) / (g pi^(h/2)); d - h is even by construction.
  return ScalarExt(Rational(2) / g, (d - h) / 2);
}

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  double out = 0.0;
  for (int i = 0; i < order(); ++i) out += weights[i] * f(nodes[i]);
  return out;
}

QuadratureRule gauss_jacobi_rule(int order, int p) {
  if (order < 1) throw DomainError("quadrature order must be >= 1");
  if (p < 3) throw DomainError("ambient dimension must be >= 3");
  const int n = order;
  const double gamma = (p - 3) / 2.0;

  // Monic recurrence for the weight (1-t^2)^gamma: diagonal zero,
  // beta_k = k(k+2 gamma)/((2k+2 gamma)^2 - 1).
  std::vector<double> d(n, 0.0), e(n, 0.0), z(n, 0.0);
  for (int k = 1; k < n; ++k) {
    double beta = k * (k + 2 * gamma) / (std::pow(2 * k + 2 * gamma, 2) - 1.0);
    e[k - 1] = std::sqrt(beta);
  }
  z[0] = 1.0;

  // Implicit-shift QL on the symmetric tridiagonal Jacobi matrix, rotating
  // the first eigenvector row along.
  const double eps = std::numeric_limits<double>::epsilon();
  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60)
          throw QuadratureError("quadrature construction did not converge (order " +
                                std::to_string(order) + ")");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, pp = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= pp;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - pp;
          r = (d[i] - g) * s + 2.0 * c * b;
          pp = s * r;
          d[i + 1] = g + pp;
          g = c * r - b;
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= pp;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  double mu0 = to_double(moment(0, 0, p));
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

  QuadratureRule rule;
  rule.p = p;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.nodes[i] = d[idx[i]];
    rule.weights[i] = mu0 * z[idx[i]] * z[idx[i]];
  }
  return rule;
}

std::pair<MultivectorD, MultivectorD> funk_hecke_oracle(
    const std::function<double(double)>& F, const CartesianPoly& Yk, int k,
    std::array<double, 3> xi, int polar_order, int azimuth_order) {
  const CartesianPoly::Shape shape = Yk.shape();
  if (shape.p != 3 || shape.q != 0 || shape.axial)
    throw DomainError("oracle expects a polynomial in three x-variables");
  double norm = std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
  if (std::abs(norm - 1.0) > 1e-12) throw DomainError("xi must be a unit vector");

  QuadratureRule polar = gauss_jacobi_rule(polar_order, 3);

  // Surface integral: eta = (sin phi cos psi, sin phi sin psi, cos phi),
  // dS = d(cos phi) d psi; trapezoid in psi is exact-grade for periodic
  // smooth integrands.
  MultivectorD lhs(shape.gens());
  const double dpsi = 2.0 * std::numbers::pi / azimuth_order;
  for (int i = 0; i < polar.order(); ++i) {
    double c = polar.nodes[i];
    double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    for (int j = 0; j < azimuth_order; ++j) {
      double psi = j * dpsi;
      std::array<double, 3> eta = {s * std::cos(psi), s * std::sin(psi), c};
      double dot = xi[0] * eta[0] + xi[1] * eta[1] + xi[2] * eta[2];
      lhs += Yk.evaluate(eta) * (polar.weights[i] * dpsi * F(dot));
    }
  }

  GegenbauerPoly C = gegenbauer(k, Rational(1) / 2);
  double integral =
      polar.integrate([&](double t) { return F(t) * C.evaluate(t); });
  double factor =
      to_double(surface_area(2)) / to_double(C.at_one()) * integral;
  MultivectorD rhs = Yk.evaluate(xi) * factor;
  return {std::move(lhs), std::move(rhs)};
}

}  // namespace ffh
