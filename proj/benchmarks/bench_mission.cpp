#include <benchmark/benchmark.h>

#include "sfcplan/simulator.hpp"

using namespace sfcplan;

namespace {

ScenarioConfig random_config(int k, double density, std::uint64_t seed) {
  ScenarioConfig config;
  config.spec.iteration = k;
  config.spec.side = 1.0;
  config.connectivity = Connectivity::FourConnected;
  config.obstacles = RandomObstacles{density, seed};
  return config;
}

void BM_NeighborExpansion(benchmark::State& state) {
  const WaypointGraph graph(
      CurveSpec{static_cast<int>(state.range(0)), {0, 0}, 1.0,
                Orientation::Canonical},
      Connectivity::EightConnected);
  std::vector<WaypointIndex> nbrs;
  WaypointIndex d = 0;
  for (auto _ : state) {
    graph.neighbors(d, nbrs);
    benchmark::DoNotOptimize(nbrs.data());
    d = (d + 7) & (graph.vertex_count() - 1);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NeighborExpansion)->Arg(4)->Arg(8);

void BM_Mission(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const double density = static_cast<double>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const ScenarioConfig config = random_config(k, density, seed++);
    const WorldOracle world = build_world(config);
    benchmark::DoNotOptimize(run_mission(config, world));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_Mission)->Args({4, 20})->Args({5, 20})->Args({6, 20});

void BM_ReachableSet(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  const ScenarioConfig config = random_config(k, 20.0, 2);
  const WorldOracle world = build_world(config);
  const WaypointGraph graph(world.spec, Connectivity::FourConnected);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reachable_set(graph, 0, world.blocked));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ReachableSet)->Arg(5)->Arg(7);

}  // namespace

BENCHMARK_MAIN();
