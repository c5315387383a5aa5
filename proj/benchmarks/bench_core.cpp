#include <benchmark/benchmark.h>

#include "sjgeo/dynamics.hpp"
#include "sjgeo/extrinsic.hpp"
#include "sjgeo/momentum.hpp"

using namespace sjgeo;

namespace {

TangentPoint bench_point() { return {0.3, -0.8, -0.4, 0.7}; }

}  // namespace

static void BM_FisherMetric(benchmark::State& state) {
  const NaturalPoint th(0.3, -0.8);
  for (auto _ : state) benchmark::DoNotOptimize(fisher_metric(th));
}
BENCHMARK(BM_FisherMetric);

static void BM_KahlerTensors(benchmark::State& state) {
  const TangentPoint p = bench_point();
  for (auto _ : state)
    benchmark::DoNotOptimize(kahler_tensors(p, Chart::Natural));
}
BENCHMARK(BM_KahlerTensors);

static void BM_SectionalCurvature(benchmark::State& state) {
  const NaturalPoint th(0.3, -0.8);
  for (auto _ : state) benchmark::DoNotOptimize(base_sectional_curvature(th));
}
BENCHMARK(BM_SectionalCurvature);

static void BM_KahlerResidual(benchmark::State& state) {
  const TangentPoint p = bench_point();
  auto f = [](const TangentPoint& q) {
    return kahler_value(AlgebraElement::G(), q);
  };
  for (auto _ : state) benchmark::DoNotOptimize(kahler_residual_norm(f, p));
}
BENCHMARK(BM_KahlerResidual);

static void BM_HamiltonianField(benchmark::State& state) {
  const TangentPoint p = bench_point();
  const AlgebraElement l = AlgebraElement::G() - AlgebraElement::F();
  for (auto _ : state) benchmark::DoNotOptimize(hamiltonian_field(l, p));
}
BENCHMARK(BM_HamiltonianField);

static void BM_GroupAction(benchmark::State& state) {
  Mat2 m;
  m << 1.2, 0.3, 0.0, 1.0 / 1.2;
  const ASpElement g(m, RowVec2(0.4, -0.2), +1);
  const SJPoint pt(cplx(0.1, 0.9), cplx(-0.3, 0.5));
  for (auto _ : state) benchmark::DoNotOptimize(group_action(g, pt));
}
BENCHMARK(BM_GroupAction);

static void BM_IsometryResidual(benchmark::State& state) {
  Mat2 m;
  m << 1.2, 0.3, 0.0, 1.0 / 1.2;
  const ASpElement g(m, RowVec2(0.4, -0.2), +1);
  const SJPoint pt(cplx(0.1, 0.9), cplx(-0.3, 0.5));
  auto mapping = [&g](const SJPoint& q) { return group_action(g, q); };
  for (auto _ : state) benchmark::DoNotOptimize(isometry_residual(mapping, pt));
}
BENCHMARK(BM_IsometryResidual);

static void BM_SpectralMeasure(benchmark::State& state) {
  Mat2 m;
  m << 2.0, 0.1, 0.0, 0.5;
  const ObservableDecomposition obs{GroupElement(m, RowVec2(1.0, 0.2), 0.0),
                                    {1.0, -0.5, 0.2}};
  const TangentPoint p = bench_point();
  const IntervalSet a = {{-1.0, 2.5}};
  for (auto _ : state) benchmark::DoNotOptimize(spectral_measure(obs, p, a));
}
BENCHMARK(BM_SpectralMeasure);

static void BM_Expectation(benchmark::State& state) {
  const TangentPoint p = bench_point();
  for (auto _ : state)
    benchmark::DoNotOptimize(expectation(AlgebraElement::G(), p));
}
BENCHMARK(BM_Expectation);

static void BM_IntegrateFlow(benchmark::State& state) {
  const TangentPoint p0(0.0, -0.5, 0.0, 0.0);
  const AlgebraElement l = AlgebraElement::G() - AlgebraElement::F();
  const double dt = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(integrate_flow(l, p0, 1.0, dt));
}
BENCHMARK(BM_IntegrateFlow)->Arg(100)->Arg(1000);

static void BM_SchrodingerResidual(benchmark::State& state) {
  const TangentPoint p0(0.0, -0.5, 0.0, 0.0);
  const AlgebraElement l = AlgebraElement::G() - AlgebraElement::F();
  const FlowTrajectory traj = integrate_flow(l, p0, 1.0, 1e-2);
  const WaveTrajectory wave = schrodinger_evolve(l, traj);
  const Grid1D grid(-6.0, 6.0, 100);
  for (auto _ : state)
    benchmark::DoNotOptimize(schrodinger_residual(l, wave, grid));
}
BENCHMARK(BM_SchrodingerResidual);

BENCHMARK_MAIN();
