#include <cmath>
#include <complex>
#include <cstdlib>
#include <random>
#include <vector>

#include "doctest.h"
#include "ffh/transform.hpp"

using namespace ffh;

namespace {

using Term = std::tuple<int, int, ScalarExt>;

ScalarExt S(long long n, long long d = 1) { return ScalarExt(Rational(n, d)); }

LaurentBi poly2(const char* v1, const char* v2, std::vector<Term> terms) {
  LaurentBi out(v1, v2);
  for (const auto& [a, b, c] : terms) out.add_term(a, b, c);
  return out;
}

LaurentBi rr(std::vector<Term> t) { return poly2("r", "rho", std::move(t)); }
LaurentBi tr(std::vector<Term> t) { return poly2("theta", "rho", std::move(t)); }
LaurentBi xR(std::vector<Term> t) { return poly2("x0", "R", std::move(t)); }

// z^n, coefficient c (real part) or ci (imaginary part).
HolomorphicInput zpow(int n, Rational c = Rational(1), Rational ci = Rational(0)) {
  std::vector<GaussianRational> cs(n + 1);
  cs[n] = {c, ci};
  return HolomorphicInput::exact(std::move(cs));
}

HolomorphicInput random_h(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  std::vector<GaussianRational> cs(1 + rng() % (max_deg + 1));
  for (auto& c : cs)
    c = {Rational(num(rng), den(rng)), Rational(num(rng), den(rng))};
  return HolomorphicInput::exact(std::move(cs));
}

HolomorphicInput arctan_seed() {
  return HolomorphicInput::numeric(
      [](std::complex<double> z) { return 1.0 / (1.0 + z * z); },
      [](double, double rho) { return rho > 1.05; }, "1/(1+z^2)");
}

const CartesianPoly::Shape kSh33{3, 3, false};

}  // namespace

TEST_CASE("holomorphic input plumbing") {
  HolomorphicInput h = HolomorphicInput::exact(
      {{Rational(1), Rational(0)}, {Rational(0), Rational(0)}});
  CHECK(h.coeffs().size() == 1);  // trailing zeros trimmed

  HolomorphicInput zero = HolomorphicInput::exact({});
  CHECK(zero.coeffs().empty());
  CHECK(to_string(zero) == "0");

  HolomorphicInput h4 = zpow(4, Rational(1), Rational(0));
  std::complex<double> z(0.5, 0.25);
  CHECK(std::abs(h4.eval(z) - std::pow(z, 4)) < 1e-15);
  CHECK(h4.valid_at(100.0, -3.0));  // exact inputs are everywhere valid

  HolomorphicInput num = arctan_seed();
  CHECK(num.label() == "1/(1+z^2)");
  CHECK(num.valid_at(0.0, 2.0));
  CHECK_FALSE(num.valid_at(0.0, 1.0));
  CHECK_THROWS_AS(num.coeffs(), DomainError);
  CHECK_THROWS_AS(extract_uv(num), DomainError);
}

TEST_CASE("holomorphic printing") {
  HolomorphicInput h = HolomorphicInput::exact({{Rational(0), Rational(0)},
                                                {Rational(0), Rational(3, 2)},
                                                {Rational(-2), Rational(0)},
                                                {Rational(0), Rational(0)},
                                                {Rational(1), Rational(1)}});
  CHECK(to_string(h) == "z^4 + i*z^4 - 2*z^2 + 3/2*i*z");
  CHECK(to_string(zpow(1, Rational(0), Rational(-1))) == "-i*z");
  CHECK(to_string(zpow(0, Rational(0), Rational(-1))) == "-i");
  CHECK(to_string(arctan_seed()) == "1/(1+z^2)");
}

TEST_CASE("real and imaginary part extraction") {
  auto [u2, v2] = extract_uv(zpow(2));
  CHECK(u2 == tr({{2, 0, S(1)}, {0, 2, S(-1)}}));
  CHECK(v2 == tr({{1, 1, S(2)}}));

  auto [ui, vi] = extract_uv(zpow(1, Rational(0), Rational(1)));
  CHECK(ui == tr({{0, 1, S(-1)}}));
  CHECK(vi == tr({{1, 0, S(1)}}));

  auto [u4, v4] = extract_uv(zpow(4));
  CHECK(u4 == tr({{4, 0, S(1)}, {2, 2, S(-6)}, {0, 4, S(1)}}));
  CHECK(v4 == tr({{3, 1, S(4)}, {1, 3, S(-4)}}));

  SUBCASE("cauchy-riemann relations hold for random inputs") {
    std::mt19937 rng(140193);
    for (int trial = 0; trial < 20; ++trial) {
      auto [u, v] = extract_uv(random_h(rng, 7));
      CHECK(laurent_derivative(u, Which::First) ==
            laurent_derivative(v, Which::Second));
      CHECK(laurent_derivative(u, Which::Second) ==
            -laurent_derivative(v, Which::First));
    }
  }

  SUBCASE("variable renaming") {
    LaurentBi f = renamed(tr({{1, 2, S(5)}}), "x0", "R");
    CHECK(f == xR({{1, 2, S(5)}}));
  }
}

TEST_CASE("funk-hecke profiles") {
  FunkHeckeProfile iz = funk_hecke_profile(zpow(1, Rational(0), Rational(1)), 3, 0);
  CHECK(iz.A == rr({{0, 1, S(-2)}}));
  CHECK(iz.B == rr({{1, 0, S(2, 3)}}));

  FunkHeckeProfile z4 = funk_hecke_profile(zpow(4), 3, 0);
  CHECK(z4.A == rr({{4, 0, S(2, 5)}, {2, 2, S(-4)}, {0, 4, S(2)}}));
  CHECK(z4.B == rr({{3, 1, S(8, 5)}, {1, 3, S(-8, 3)}}));

  FunkHeckeProfile z3 = funk_hecke_profile(zpow(3), 3, 0);
  CHECK(z3.A.is_zero());
  CHECK(z3.B.is_zero());

  SUBCASE("pure powers give clean homogeneous profiles") {
    // Orthogonality absorbs the r^-k prefactor: no negative exponents.
    for (int n = 0; n <= 8; ++n)
      for (int k = 0; k <= 3; ++k) {
        FunkHeckeProfile pr = funk_hecke_profile(zpow(n), 3, k);
        for (const LaurentBi* f : {&pr.A, &pr.B})
          for (const auto& [e, c] : f->terms()) {
            CHECK(e.first >= 0);
            CHECK(e.second >= 0);
            CHECK(e.first + e.second == n - k);
          }
        if ((n - k) % 2 != 0 || n < k) CHECK(pr.A.is_zero());
      }
  }

  CHECK_THROWS_AS(funk_hecke_profile(zpow(2), 2, 0), DomainError);
  CHECK_THROWS_AS(funk_hecke_profile(arctan_seed(), 3, 0), DomainError);
}

TEST_CASE("biaxial transform raw values") {
  SUBCASE("iz: Laurent result, not polynomial") {
    TransformResult res = biaxial_transform(zpow(1, Rational(0), Rational(1)),
                                            3, 3, 0, 0);
    CHECK(res.radial.s1() == rr({{0, -1, S(-4)}}));
    CHECK(res.radial.swn() == rr({{1, -2, S(4, 3)}}));
    CHECK(res.radial.sw().is_zero());
    CHECK(res.radial.sn().is_zero());
    CHECK(res.normalization == S(-4));
    CHECK_FALSE(res.cartesian.has_value());
    CHECK(res.classification.kind == Classification::Kind::NonPolynomial);

    TransformResult canon = normalize(res);
    CHECK(canon.radial.s1() == rr({{0, -1, S(1)}}));
    CHECK(canon.radial.swn() == rr({{1, -2, S(-1, 3)}}));
    CHECK(canon.normalization == S(-4));  // audit value survives
  }

  SUBCASE("z^2: constant") {
    TransformResult res = biaxial_transform(zpow(2), 3, 3, 0, 0);
    CHECK(res.radial.s1() == rr({{0, 0, S(-8)}}));
    CHECK(res.radial.swn().is_zero());
    CHECK(res.classification == Classification{Classification::Kind::Homogeneous, 0});
    REQUIRE(res.cartesian.has_value());
    CHECK(*res.cartesian == CartesianPoly::constant(kSh33, Rational(1)));
  }

  SUBCASE("z^3: killed by parity") {
    TransformResult res = biaxial_transform(zpow(3), 3, 3, 0, 0);
    CHECK(res.radial.is_zero());
    CHECK(res.classification.kind == Classification::Kind::Zero);
    CHECK(res.normalization == S(1));
    CHECK(normalize(res).radial.is_zero());
  }

  SUBCASE("z^4: the quadratic example") {
    TransformResult res = biaxial_transform(zpow(4), 3, 3, 0, 0);
    CHECK(res.radial.s1() == rr({{2, 0, S(-16)}, {0, 2, S(16)}}));
    CHECK(res.radial.swn() == rr({{1, 1, S(32, 3)}}));
    CHECK(res.normalization == S(16));
    CHECK(res.classification == Classification{Classification::Kind::Homogeneous, 2});

    REQUIRE(res.cartesian.has_value());
    CartesianPoly bx = CartesianPoly::block_vector(kSh33, Block::X);
    CartesianPoly by = CartesianPoly::block_vector(kSh33, Block::Y);
    CHECK(*res.cartesian == bx * bx + (bx * by) * Rational(2, 3) - by * by);
    CHECK(res.cartesian->dirac(Block::Full).is_zero());
  }

  SUBCASE("z^7 with P_1(x)") {
    TransformResult res = biaxial_transform(zpow(7), 3, 3, 1, 0);
    CHECK(res.radial.s1() ==
          rr({{4, 0, S(-24)}, {2, 2, S(112)}, {0, 4, S(-56)}}));
    CHECK(res.radial.swn() == rr({{3, 1, S(32)}, {1, 3, S(-224, 5)}}));
    CHECK(res.normalization == S(-56));
    CHECK(res.classification == Classification{Classification::Kind::Homogeneous, 4});

    // The stored polynomial includes the P_1 factor: degree 4 + 1.
    REQUIRE(res.cartesian.has_value());
    CHECK(res.cartesian->dirac(Block::Full).is_zero());
    CHECK(res.cartesian->homogeneous_degree() ==
          Homogeneity{Homogeneity::Kind::Homogeneous, 5});
  }

  SUBCASE("iz^4 at (p,q) = (4,3): pi-weighted Laurent result") {
    TransformResult res = biaxial_transform(zpow(4, Rational(0), Rational(1)),
                                            4, 3, 1, 0);
    CHECK(res.radial.s1() ==
          rr({{0, 1, ScalarExt(Rational(3), 1)}, {2, -1, ScalarExt(Rational(-1, 2), 1)}}));
    CHECK(res.radial.swn() ==
          rr({{1, 0, ScalarExt(Rational(1, 2), 1)}, {3, -2, ScalarExt(Rational(1, 16), 1)}}));
    CHECK(res.normalization == ScalarExt(Rational(3), 1));
    CHECK(res.classification.kind == Classification::Kind::NonPolynomial);

    TransformResult canon = normalize(res);
    CHECK(canon.radial.s1() == rr({{0, 1, S(1)}, {2, -1, S(-1, 6)}}));
    CHECK(canon.radial.swn() == rr({{1, 0, S(1, 6)}, {3, -2, S(1, 48)}}));
  }
}

TEST_CASE("transform input validation") {
  CHECK_THROWS_AS(biaxial_transform(zpow(2), 3, 4, 0, 0), DomainError);  // even q
  CHECK_THROWS_AS(biaxial_transform(zpow(2), 2, 3, 0, 0), DomainError);  // p < 3
  CHECK_THROWS_AS(biaxial_transform(zpow(2), 3, 3, -1, 0), DomainError);

  SphericalMonogenic p2 = builtin_monogenic(kSh33, Block::X, 2);
  SphericalMonogenic l0 = builtin_monogenic(kSh33, Block::Y, 0);
  CHECK_THROWS_AS(biaxial_transform(zpow(4), 3, 3, 1, 0, p2, l0), DomainError);
  CHECK_THROWS_AS(biaxial_transform(zpow(4), 3, 3, 2, 0, l0, p2), DomainError);

  SphericalMonogenic wide = builtin_monogenic(CartesianPoly::Shape{4, 3, false},
                                              Block::X, 1);
  CHECK_THROWS_AS(biaxial_transform(zpow(4), 3, 3, 1, 0, wide, l0), DomainError);
}

TEST_CASE("normalization is idempotent and keeps the audit scalar") {
  TransformResult res = biaxial_transform(zpow(4), 3, 3, 0, 0);
  TransformResult once = normalize(res);
  CHECK(once.radial.leading_coefficient() == S(1));
  TransformResult twice = normalize(once);
  CHECK(twice.radial == once.radial);
  CHECK(twice.normalization == once.normalization);
}

TEST_CASE("power classification") {
  CHECK(classify_power(4, 0, 0, 3, 3) ==
        Classification{Classification::Kind::Homogeneous, 2});
  CHECK(classify_power(7, 1, 0, 3, 3) ==
        Classification{Classification::Kind::Homogeneous, 4});
  CHECK(classify_power(3, 0, 0, 3, 3).kind == Classification::Kind::Zero);

  SUBCASE("agrees with the computed transform on a small sweep") {
    for (int n = 0; n <= 6; ++n)
      for (int k = 0; k <= 1; ++k)
        for (int l = 0; l <= 1; ++l) {
          TransformResult res = biaxial_transform(zpow(n), 3, 3, k, l);
          CHECK(res.classification == classify_power(n, k, l, 3, 3));
        }
  }
}

TEST_CASE("transform is linear over rational scalars on raw results") {
  std::mt19937 rng(709214);
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  for (int trial = 0; trial < 10; ++trial) {
    HolomorphicInput h1 = random_h(rng, 5), h2 = random_h(rng, 5);
    Rational alpha(num(rng), den(rng)), beta(num(rng), den(rng));

    std::size_t nc = std::max(h1.coeffs().size(), h2.coeffs().size());
    std::vector<GaussianRational> cs(nc);
    for (std::size_t i = 0; i < nc; ++i) {
      GaussianRational c1 = i < h1.coeffs().size() ? h1.coeffs()[i] : GaussianRational{};
      GaussianRational c2 = i < h2.coeffs().size() ? h2.coeffs()[i] : GaussianRational{};
      cs[i] = {alpha * c1.re + beta * c2.re, alpha * c1.im + beta * c2.im};
    }
    HolomorphicInput mix = HolomorphicInput::exact(std::move(cs));

    int k = trial % 2, l = (trial / 2) % 2;
    RadialElement want = biaxial_transform(h1, 3, 3, k, l).radial.scaled(ScalarExt(alpha)) +
                         biaxial_transform(h2, 3, 3, k, l).radial.scaled(ScalarExt(beta));
    CHECK(biaxial_transform(mix, 3, 3, k, l).radial == want);
  }
}

TEST_CASE("axis-sphere profile pairs") {
  auto [m3, n3] = fuesom_profiles(zpow(3), 3, 0);
  CHECK(m3 == tr({{1, 0, S(-6)}}));
  CHECK(n3 == tr({{0, 1, S(-2)}}));

  auto [m1, n1] = fuesom_profiles(zpow(1), 3, 0);
  CHECK(m1.is_zero());
  CHECK(n1.is_zero());

  auto [m2, n2] = fuesom_profiles(zpow(2), 3, 0);
  CHECK(m2 == tr({{0, 0, S(-2)}}));
  CHECK(n2.is_zero());

  CHECK_THROWS_AS(fuesom_profiles(zpow(2), 4, 0), DomainError);

  SUBCASE("every output pair solves the axis-sphere system exactly") {
    for (int q : {3, 5})
      for (int l = 0; l <= 2; ++l)
        for (int n = 0; n <= 8; ++n) {
          auto [M, N] = fuesom_profiles(zpow(n), q, l);
          auto [r1, r2] = vekua_residual_axial(M, N, l, q);
          CHECK(r1.is_zero());
          CHECK(r2.is_zero());
        }
  }
}

TEST_CASE("classical axial map") {
  using Shape = CartesianPoly::Shape;
  Shape ax3{0, 3, true};
  SphericalMonogenic P0 = builtin_monogenic(ax3, Block::Y, 0);

  RadialElement res = fueter_axial(zpow(3), 3, P0);
  CHECK(res.s1() == xR({{1, 0, S(-12)}}));
  CHECK(res.sn() == xR({{0, 1, S(-4)}}));

  SUBCASE("cartesian laplacian oracle for the z^3 case") {
    CartesianPoly x0 = CartesianPoly::variable(ax3, Var::axis());
    CartesianPoly by = CartesianPoly::block_vector(ax3, Block::Y);
    CartesianPoly normy = CartesianPoly::zero(ax3);
    for (int j = 1; j <= 3; ++j)
      normy += CartesianPoly::variable(ax3, Var::y(j)) *
               CartesianPoly::variable(ax3, Var::y(j));

    // (x0^3 - 3 x0 |y|^2) + y (3 x0^2 - |y|^2), i.e. u + nu v R-extracted.
    CartesianPoly field = x0 * x0 * x0 - (x0 * normy) * Rational(3) +
                          by * (x0 * x0 * Rational(3) - normy);
    CHECK(field.laplacian(Block::Full) == to_cartesian(res, P0));
    CHECK(to_cartesian(res, P0) == x0 * Rational(-12) + by * Rational(-4));
  }

  CHECK(fueter_axial(zpow(0), 3, P0).is_zero());
  CHECK(fueter_axial(zpow(1), 3, P0).is_zero());

  CHECK_THROWS_AS(fueter_axial(zpow(3), 4, P0), DomainError);  // even m
  SphericalMonogenic bad = builtin_monogenic(kSh33, Block::Y, 0);
  CHECK_THROWS_AS(fueter_axial(zpow(3), 3, bad), DomainError);  // wrong shape

  SUBCASE("axial vekua system holds across the sweep") {
    for (int m : {3, 5})
      for (int k = 0; k <= 2; ++k) {
        SphericalMonogenic Pk = builtin_monogenic(Shape{0, m, true}, Block::Y, k);
        for (int n = 0; n <= 8; ++n) {
          RadialElement e = fueter_axial(zpow(n), m, Pk);
          auto [r1, r2] = vekua_residual_axial(e.s1(), e.sn(), k, m);
          CHECK(r1.is_zero());
          CHECK(r2.is_zero());
        }
      }
  }
}

TEST_CASE("numeric path matches the exact path") {
  NumericOptions opt;

  SUBCASE("iz as a numeric callable at (1,1)") {
    HolomorphicInput num = HolomorphicInput::numeric(
        [](std::complex<double> z) { return std::complex<double>(0, 1) * z; },
        [](double, double) { return true; }, "iz");
    NumericProfileValues v = biaxial_transform_numeric(num, 3, 3, 0, 0, 1.0, 1.0, opt);
    CHECK(std::abs(v.M - (-4.0)) < 1e-8);
    CHECK(std::abs(v.N - (4.0 / 3.0)) < 1e-8);
    CHECK_FALSE(v.flagged);
  }

  SUBCASE("z^4 numeric at (2, 1/3)") {
    HolomorphicInput num = HolomorphicInput::numeric(
        [](std::complex<double> z) { return std::pow(z, 4); },
        [](double, double) { return true; }, "z^4");
    TransformResult exact = biaxial_transform(zpow(4), 3, 3, 0, 0);
    double r = 2.0, rho = 1.0 / 3.0;
    NumericProfileValues v = biaxial_transform_numeric(num, 3, 3, 0, 0, r, rho, opt);
    double wantM = exact.radial.s1().evaluate(r, rho);
    double wantN = exact.radial.swn().evaluate(r, rho);
    CHECK(std::abs(v.M - wantM) <= 1e-8 * std::max(1.0, std::abs(wantM)));
    CHECK(std::abs(v.N - wantN) <= 1e-8 * std::max(1.0, std::abs(wantN)));
  }

  SUBCASE("ten random points agree to 1e-8 relative") {
    HolomorphicInput num = HolomorphicInput::numeric(
        [](std::complex<double> z) { return std::pow(z, 4); },
        [](double, double) { return true; }, "z^4");
    TransformResult exact = biaxial_transform(zpow(4), 3, 3, 0, 0);
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> coord(0.5, 2.0);
    for (int i = 0; i < 10; ++i) {
      double r = coord(rng), rho = coord(rng);
      NumericProfileValues v = biaxial_transform_numeric(num, 3, 3, 0, 0, r, rho, opt);
      double wantM = exact.radial.s1().evaluate(r, rho);
      double wantN = exact.radial.swn().evaluate(r, rho);
      CHECK(std::abs(v.M - wantM) <= 1e-8 * std::max(1.0, std::abs(wantM)));
      CHECK(std::abs(v.N - wantN) <= 1e-8 * std::max(1.0, std::abs(wantN)));
    }
  }

  SUBCASE("outside the declared validity region") {
    CHECK_THROWS_AS(
        biaxial_transform_numeric(arctan_seed(), 3, 3, 0, 0, 1.0, 0.5, opt),
        DomainError);
  }

  SUBCASE("environment override of the quadrature order") {
    setenv("FFH_QUAD_ORDER", "128", 1);
    CHECK(NumericOptions::from_env().base_order == 128);
    unsetenv("FFH_QUAD_ORDER");
    CHECK(NumericOptions::from_env().base_order == 64);
  }
}

TEST_CASE("monogenicity verification") {
  VerifyReport z4 = verify_monogenic(biaxial_transform(zpow(4), 3, 3, 0, 0));
  CHECK(z4.passed());
  CHECK(z4.has_cartesian);
  CHECK(z4.dirac_zero);
  CHECK(z4.vekua_zero);

  VerifyReport iz = verify_monogenic(
      biaxial_transform(zpow(1, Rational(0), Rational(1)), 3, 3, 0, 0));
  CHECK(iz.passed());
  CHECK_FALSE(iz.has_cartesian);
  CHECK(iz.vekua_zero);

  SUBCASE("numeric dirac residual of the arctan seed") {
    SphericalMonogenic Pk = builtin_monogenic(kSh33, Block::X, 0);
    SphericalMonogenic Pl = builtin_monogenic(kSh33, Block::Y, 0);
    for (auto [r, rho] : {std::pair{1.0, 2.0}, std::pair{0.5, 1.5}}) {
      std::vector<double> pt = {r, 0.0, 0.0, rho, 0.0, 0.0};
      double resid = numeric_dirac_residual(arctan_seed(), 3, 3, 0, 0, Pk, Pl, pt);
      CHECK(resid < 1e-5);
    }
  }

  SUBCASE("numeric profile tracks the closed form up to one scalar") {
    // M = 4/D with D = (r^2+(rho+1)^2)(r^2+(rho-1)^2); shared scale 2.
    double r = 0.5, rho = 2.0;
    NumericProfileValues v =
        biaxial_transform_numeric(arctan_seed(), 3, 3, 0, 0, r, rho);
    double D = (r * r + (rho + 1) * (rho + 1)) * (r * r + (rho - 1) * (rho - 1));
    double paperM = 4.0 / D;
    double atanp = std::atan2(r, rho + 1), atanm = std::atan2(r, rho - 1);
    double paperN = -(2.0 * (r * r - rho * rho + 1.0) / (r * rho * D) +
                      (atanp + atanm) / (r * r * rho * rho));
    double scale = v.M / paperM;
    CHECK(std::abs(v.N - scale * paperN) <= 1e-6 * std::abs(scale * paperN));
    CHECK(scale == doctest::Approx(2.0).epsilon(1e-6));
  }
}
