#include <benchmark/benchmark.h>

#include "sfcplan/curve.hpp"

using namespace sfcplan;

namespace {

CurveSpec spec_k(int k) {
  CurveSpec spec;
  spec.iteration = k;
  spec.side = 1.0;
  return spec;
}

void BM_IndexToCell(benchmark::State& state) {
  const CurveSpec spec = spec_k(static_cast<int>(state.range(0)));
  WaypointIndex d = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(index_to_cell(spec, d));
    d = (d + 1) & (spec.waypoint_count() - 1);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_IndexToCell)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_CellToIndex(benchmark::State& state) {
  const CurveSpec spec = spec_k(static_cast<int>(state.range(0)));
  const std::uint32_t n = spec.grid_side();
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cell_to_index(spec, {x, y}));
    x = (x + 1) & (n - 1);
    y = (y + 3) & (n - 1);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_CellToIndex)->Arg(4)->Arg(8)->Arg(12)->Arg(16);

void BM_RoundTrip(benchmark::State& state) {
  const CurveSpec spec = spec_k(static_cast<int>(state.range(0)));
  WaypointIndex d = 1;
  for (auto _ : state) {
    d = cell_to_index(spec, index_to_cell(spec, d));
    d = (d * 2862933555777941757ull + 3037000493ull) &
        (spec.waypoint_count() - 1);
    benchmark::DoNotOptimize(d);
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_RoundTrip)->Arg(8)->Arg(16);

}  // namespace
