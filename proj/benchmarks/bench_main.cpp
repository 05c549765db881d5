#include <benchmark/benchmark.h>

#include "superreal/group.hpp"
#include "superreal/sampling.hpp"

using namespace superreal;

namespace {

SuperHermitianForm diagonal_form(SuperDim d, int s) {
  ScalarMatrix h = ScalarMatrix::identity(static_cast<std::size_t>(d.total()), 1);
  for (int k = d.even; k < d.total(); ++k) h(k, k) = GaussianRational::i() * s;
  return SuperHermitianForm::on(d, h);
}

}  // namespace

static void BM_GrassmannProduct(benchmark::State& state) {
  GrassmannSpec spec{static_cast<int>(state.range(0)), Kind::standard};
  Sampler smp(1);
  GrassmannElement a = smp.element(spec, 0) + smp.element(spec, 1);
  GrassmannElement b = smp.element(spec, 0) + smp.element(spec, 1);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_GrassmannProduct)->DenseRange(1, 4);

static void BM_BuildAlgebra(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_osp(2, 2 * static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildAlgebra)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

static void BM_KillingForm(benchmark::State& state) {
  auto g = build_sl(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(killing_form(g));
}
BENCHMARK(BM_KillingForm)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_OmegaCompact(benchmark::State& state) {
  auto g = build_sl(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(omega_compact(g));
}
BENCHMARK(BM_OmegaCompact)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

static void BM_AdjointStar(benchmark::State& state) {
  SuperDim dim{2, 2};
  Kind kind = state.range(0) ? Kind::graded : Kind::standard;
  GrassmannSpec spec{2, kind};
  SuperHermitianForm b = diagonal_form(dim, 1);
  Sampler smp(2);
  GrassmannMatrix m = smp.even_matrix(dim, spec);
  for (auto _ : state) benchmark::DoNotOptimize(adjoint_star(m, b, kind));
}
BENCHMARK(BM_AdjointStar)->Arg(0)->Arg(1);

static void BM_Factorize(benchmark::State& state) {
  SuperDim dim{2, 2};
  GrassmannSpec spec{static_cast<int>(state.range(0)), Kind::standard};
  Sampler smp(3);
  GroupPoint g{dim, smp.invertible_point(dim, spec)};
  for (auto _ : state) benchmark::DoNotOptimize(factorize_point(g));
}
BENCHMARK(BM_Factorize)->DenseRange(1, 3);

static void BM_UnitaryStarPoint(benchmark::State& state) {
  SuperDim dim{2, 2};
  Kind kind = state.range(0) ? Kind::graded : Kind::standard;
  GrassmannSpec spec{2, kind};
  SuperHermitianForm b = diagonal_form(dim, -1);
  Sampler smp(4);
  GroupPoint g{dim, smp.invertible_point(dim, spec)};
  for (auto _ : state) benchmark::DoNotOptimize(unitary_star_point(g, b, kind));
}
BENCHMARK(BM_UnitaryStarPoint)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
