#include <benchmark/benchmark.h>

#include "qcspec/fem.hpp"
#include "qcspec/mesh.hpp"
#include "qcspec/qc_analysis.hpp"
#include "qcspec/special.hpp"

using namespace qcspec;

static void BM_BesselZero(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j0_first_zero());
}
BENCHMARK(BM_BesselZero);

static void BM_LogGamma(benchmark::State& state) {
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(log_gamma(x));
    x = x > 50.0 ? 0.1 : x + 0.37;
  }
}
BENCHMARK(BM_LogGamma);

static void BM_Assemble(benchmark::State& state) {
  const Mesh mesh = pushforward_mesh(unit_disc_mesh(static_cast<int>(state.range(0))), RosePetal{0.7});
  for (auto _ : state) benchmark::DoNotOptimize(assemble_p1(mesh));
  state.SetComplexityN(static_cast<long>(mesh.triangles.size()));
}
BENCHMARK(BM_Assemble)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

static void BM_EigenSolve(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(principal_eigenvalue(Ellipse{0.125}, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_EigenSolve)->Arg(32)->Unit(benchmark::kMillisecond);

static void BM_GridSupNorm(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(
        jacobian_sup_norm(Epicycloid{0.2, 0.05, 3}, SupMethod::Grid, PolarGrid{m, m}));
}
BENCHMARK(BM_GridSupNorm)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
