#include <benchmark/benchmark.h>

#include "wog/classify.hpp"
#include "wog/covers.hpp"
#include "wog/graph_io.hpp"
#include "wog/homology.hpp"
#include "wog/linear_quotients.hpp"
#include "wog/polarization.hpp"
#include "wog/sweep.hpp"

namespace {

const wog::WeightedOrientedGraph& fixture(int which) {
  static const wog::WeightedOrientedGraph graphs[] = {wog::fixture_path(), wog::fixture_whiskered(),
                                                      wog::fixture_bipartite()};
  return graphs[which];
}

void BM_Polarize(benchmark::State& state) {
  const auto ideal = wog::edge_ideal(fixture(static_cast<int>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(wog::polarize(ideal));
}
BENCHMARK(BM_Polarize)->DenseRange(0, 2);

void BM_AlexanderDual(benchmark::State& state) {
  const auto pol = wog::polarize(wog::edge_ideal(fixture(static_cast<int>(state.range(0))))).ideal();
  for (auto _ : state) benchmark::DoNotOptimize(wog::alexander_dual(pol));
}
BENCHMARK(BM_AlexanderDual)->DenseRange(0, 2);

void BM_StrongCovers(benchmark::State& state) {
  const auto& d = fixture(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(wog::strong_vertex_covers(d));
}
BENCHMARK(BM_StrongCovers)->DenseRange(0, 2);

void BM_LinearQuotients(benchmark::State& state) {
  const auto ord = wog::canonical_dual_ordering(fixture(1));
  for (auto _ : state) benchmark::DoNotOptimize(wog::verify_linear_quotients(ord));
}
BENCHMARK(BM_LinearQuotients);

void BM_OracleCM(benchmark::State& state) {
  const auto ideal = wog::edge_ideal(fixture(static_cast<int>(state.range(0))));
  wog::OracleOptions opt;
  opt.field = state.range(1) == 0 ? wog::Field::prime(2) : wog::Field::rationals();
  for (auto _ : state) benchmark::DoNotOptimize(wog::oracle_cm_monomial(ideal, opt));
}
BENCHMARK(BM_OracleCM)->ArgsProduct({{0, 1, 2}, {0, 1}})->Unit(benchmark::kMicrosecond);

void BM_DepthSkeleton(benchmark::State& state) {
  const auto ideal = wog::edge_ideal(fixture(1));
  for (auto _ : state) benchmark::DoNotOptimize(wog::depth_skeleton(ideal));
}
BENCHMARK(BM_DepthSkeleton)->Unit(benchmark::kMicrosecond);

void BM_ClassifyWithOracle(benchmark::State& state) {
  const auto& d = fixture(static_cast<int>(state.range(0)));
  wog::ClassifyOptions opt;
  opt.oracle = true;
  for (auto _ : state) benchmark::DoNotOptimize(wog::classify(d, opt));
}
BENCHMARK(BM_ClassifyWithOracle)->DenseRange(0, 2)->Unit(benchmark::kMicrosecond);

void BM_WhiskeredSweep(benchmark::State& state) {
  wog::SweepOptions opt;
  opt.spec.base_max = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(wog::run_sweep(opt));
}
BENCHMARK(BM_WhiskeredSweep)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
