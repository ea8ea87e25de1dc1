#include <benchmark/benchmark.h>

#include "ffh/cli.hpp"
#include "ffh/gegenbauer.hpp"
#include "ffh/transform.hpp"

namespace {

void BM_GeometricProduct(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  ffh::Multivector a = ffh::Multivector::zero(dim);
  ffh::Multivector b = ffh::Multivector::zero(dim);
  for (int i = 1; i <= dim; ++i) {
    a += ffh::Multivector::basis_vector(dim, i) * ffh::Rational(i, 3);
    b += ffh::Multivector::basis_vector(dim, i) *
         ffh::Multivector::basis_vector(dim, i % dim + 1) * ffh::Rational(2, i + 1);
  }
  for (auto _ : state) {
    ffh::Multivector c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_GeometricProduct)->Arg(4)->Arg(8)->Arg(12);

void BM_Transform(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::string seed = "z^" + std::to_string(n);
  ffh::HolomorphicInput h = ffh::cli::parse_holomorphic(seed);
  for (auto _ : state) {
    ffh::TransformResult res = ffh::biaxial_transform(h, 3, 3, 1, 1);
    benchmark::DoNotOptimize(res);
  }
}
BENCHMARK(BM_Transform)->Arg(6)->Arg(10)->Arg(14);

void BM_QuadratureRule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ffh::QuadratureRule rule = ffh::gauss_jacobi_rule(order, 3);
    benchmark::DoNotOptimize(rule);
  }
}
BENCHMARK(BM_QuadratureRule)->Arg(64)->Arg(256);

void BM_NumericPoint(benchmark::State& state) {
  ffh::HolomorphicInput h = ffh::cli::parse_holomorphic("z^4");
  ffh::NumericOptions opt;
  for (auto _ : state) {
    ffh::NumericProfileValues vals =
        ffh::biaxial_transform_numeric(h, 3, 3, 0, 0, 1.5, 2.0, opt);
    benchmark::DoNotOptimize(vals);
  }
}
BENCHMARK(BM_NumericPoint);

}  // namespace

BENCHMARK_MAIN();
