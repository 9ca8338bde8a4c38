// Serial reference vs OpenMP route counting, plus the simulation kernel.

#include <benchmark/benchmark.h>

#include "dhtcost/engine.hpp"
#include "dhtcost/topology.hpp"

namespace {

using namespace dhtcost;

GeometrySpec pick(int which) {
  switch (which) {
    case 0:
      return DeBruijn{3, 6};
    case 1:
      return PlaxtonTree{4, 5};
    case 2:
      return Torus{3, 9};
    case 3:
      return ChordRing{10};
    default:
      return Star{1000};
  }
}

void BM_CountRoutesSerial(benchmark::State& state) {
  const auto topo = build(pick(static_cast<int>(state.range(0))));
  state.SetLabel(describe(topo.spec()));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_routes_serial(topo));
  state.SetItemsProcessed(state.iterations() * std::int64_t{topo.node_count()} * topo.node_count());
}

void BM_CountRoutesParallel(benchmark::State& state) {
  const auto topo = build(pick(static_cast<int>(state.range(0))));
  state.SetLabel(describe(topo.spec()));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::count_routes_parallel(topo));
  state.SetItemsProcessed(state.iterations() * std::int64_t{topo.node_count()} * topo.node_count());
}

void BM_SimulateTally(benchmark::State& state) {
  const auto topo = build(pick(static_cast<int>(state.range(0))));
  state.SetLabel(describe(topo.spec()));
  for (auto _ : state) benchmark::DoNotOptimize(kernels::simulate_tally(topo, 100'000, 7));
  state.SetItemsProcessed(state.iterations() * 100'000);
}

BENCHMARK(BM_CountRoutesSerial)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CountRoutesParallel)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimulateTally)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
