#include <benchmark/benchmark.h>

#include "tnnlab/catalog.hpp"
#include "tnnlab/peterson.hpp"
#include "tnnlab/polytope.hpp"
#include "tnnlab/toric.hpp"

using namespace tnnlab;

namespace {

const char* kTypes[] = {"A2", "B3", "D4", "A4"};

RootDatum datum(int k) { return RootDatum(cartan_by_name(kTypes[k])); }

void BM_BuildPolytopeAndCubeCheck(benchmark::State& state) {
  auto d = datum(static_cast<int>(state.range(0)));
  RatVector rho(d.rank(), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(cube_check(build_polytope(d, rho)).ok);
  state.SetLabel(d.name());
}
BENCHMARK(BM_BuildPolytopeAndCubeCheck)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_HullOracle(benchmark::State& state) {
  auto d = datum(static_cast<int>(state.range(0)));
  RatVector rho(d.rank(), Rational(1));
  for (auto _ : state) benchmark::DoNotOptimize(hull_oracle(d, rho).size());
  state.SetLabel(d.name());
}
BENCHMARK(BM_HullOracle)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_Psi(benchmark::State& state) {
  GroupContext ctx(datum(static_cast<int>(state.range(0))));
  std::mt19937_64 rng(1);
  auto p = sample_peterson_point(ctx, ctx.datum().all_nodes(), rng);
  psi(ctx, p);  // fill the module cache outside the timed loop
  for (auto _ : state) benchmark::DoNotOptimize(psi(ctx, p).delta.size());
  state.SetLabel(ctx.datum().name());
}
BENCHMARK(BM_Psi)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_InvertDeltaA2(benchmark::State& state) {
  GroupContext ctx(RootDatum(cartan_by_name("A2")));
  for (auto _ : state) benchmark::DoNotOptimize(invert_delta(ctx, {3.0, 7.0}, 3).residual);
}
BENCHMARK(BM_InvertDeltaA2)->Unit(benchmark::kMillisecond);

void BM_MomentMap(benchmark::State& state) {
  auto d = datum(static_cast<int>(state.range(0)));
  MomentMap mu(d, build_polytope(d, RatVector(d.rank(), Rational(1))));
  std::mt19937_64 rng(2);
  auto p = random_cox_point(d.rank(), {0, d.all_nodes()}, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mu(p)[0]);
  state.SetLabel(d.name() + " N=" + std::to_string(mu.dilation()) + " points=" + std::to_string(mu.lattice_point_count()));
}
BENCHMARK(BM_MomentMap)->DenseRange(0, 3)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
