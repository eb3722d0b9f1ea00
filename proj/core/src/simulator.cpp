#include "sfcplan/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sfcplan/trace_io.hpp"

namespace sfcplan {
namespace {

// Overlaps below this fraction of a cell side count as boundary contact,
// not blockage.
constexpr double kGeomTolFraction = 1e-9;

ConfinementReport make_confinement(const VisitSet& visited,
                                   const ObstacleSet& obstacles) {
  const auto max_visited = visited.max_element();
  if (!max_visited) {
    throw std::logic_error("confinement check on an empty visited set");
  }
  return confinement_check(visited, obstacles, *max_visited);
}

}  // namespace

bool sense(const WorldOracle& world, const WaypointGraph& graph,
           WaypointIndex at, WaypointIndex target) {
  if (at >= world.spec.waypoint_count() ||
      target >= world.spec.waypoint_count()) {
    throw std::out_of_range("sense query outside the tessellation");
  }
  if (world.blocked.contains(at)) {
    throw std::logic_error("sensing from a blocked waypoint");
  }
  if (!graph.adjacent(at, target)) {
    throw std::invalid_argument(
        "sense range is one cell: " + std::to_string(at) + " and " +
        std::to_string(target) + " are not adjacent");
  }
  return world.blocked.contains(target);
}

std::vector<WaypointIndex> rasterize_rects(const CurveSpec& spec,
                                           std::span<const Rect> rects) {
  spec.validate();
  const double cs = spec.cell_side();
  const double tol = cs * kGeomTolFraction;
  const auto n = static_cast<std::int64_t>(spec.grid_side());
  std::vector<bool> hit(spec.waypoint_count(), false);
  for (const Rect& r : rects) {
    if (!(r.x1 > r.x0) || !(r.y1 > r.y0)) {
      throw std::invalid_argument("obstacle rectangle has no area");
    }
    const auto clamp_idx = [&](double v) {
      return std::clamp<std::int64_t>(
          static_cast<std::int64_t>(std::floor(v)), 0, n - 1);
    };
    const std::int64_t ix0 = clamp_idx((r.x0 - spec.origin.x) / cs);
    const std::int64_t ix1 = clamp_idx((r.x1 - spec.origin.x) / cs);
    const std::int64_t iy0 = clamp_idx((r.y0 - spec.origin.y) / cs);
    const std::int64_t iy1 = clamp_idx((r.y1 - spec.origin.y) / cs);
    for (std::int64_t iy = iy0; iy <= iy1; ++iy) {
      for (std::int64_t ix = ix0; ix <= ix1; ++ix) {
        const double cx0 = spec.origin.x + cs * static_cast<double>(ix);
        const double cy0 = spec.origin.y + cs * static_cast<double>(iy);
        const double ow = std::min(cx0 + cs, r.x1) - std::max(cx0, r.x0);
        const double oh = std::min(cy0 + cs, r.y1) - std::max(cy0, r.y0);
        if (ow > tol && oh > tol) {
          hit[cell_to_index(spec, {static_cast<std::uint32_t>(ix),
                                   static_cast<std::uint32_t>(iy)})] = true;
        }
      }
    }
  }
  std::vector<WaypointIndex> blocked;
  for (WaypointIndex d = 0; d < hit.size(); ++d) {
    if (hit[d]) {
      blocked.push_back(d);
    }
  }
  return blocked;
}

WorldOracle make_random_world(const CurveSpec& spec, double density_percent,
                              std::uint64_t seed, WaypointIndex start) {
  spec.validate();
  const WaypointIndex n = spec.waypoint_count();
  if (start >= n) {
    throw std::out_of_range("start waypoint out of range");
  }
  if (!(density_percent >= 0.0) || density_percent >= 100.0) {
    throw std::invalid_argument("obstacle density must be in [0, 100)");
  }
  const auto count = static_cast<std::uint64_t>(
      std::llround(density_percent * static_cast<double>(n) / 100.0));
  if (count >= n) {
    throw std::invalid_argument("requested obstacle count covers the grid");
  }
  std::vector<WaypointIndex> pool;
  pool.reserve(n - 1);
  for (WaypointIndex d = 0; d < n; ++d) {
    if (d != start) {
      pool.push_back(d);
    }
  }
  SplitMix64 rng(seed);
  WorldOracle world{spec, IndexSet(n)};
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t j = i + rng.next() % (pool.size() - i);
    std::swap(pool[i], pool[j]);
    world.blocked.insert(pool[i]);
  }
  return world;
}

WorldOracle make_world_from_indices(const CurveSpec& spec,
                                    std::span<const WaypointIndex> blocked) {
  spec.validate();
  WorldOracle world{spec, IndexSet(spec.waypoint_count())};
  for (const WaypointIndex d : blocked) {
    if (d >= spec.waypoint_count()) {
      throw std::out_of_range("blocked waypoint " + std::to_string(d) +
                              " out of range");
    }
    world.blocked.insert(d);
  }
  return world;
}

std::vector<Rect> obstacle_geometry(const ScenarioConfig& config) {
  const CurveSpec& spec = config.spec;
  const double cs = spec.cell_side();
  const auto cell_rect = [&](CellCoord c) {
    const double x0 = spec.origin.x + cs * c.x;
    const double y0 = spec.origin.y + cs * c.y;
    return Rect{x0, y0, x0 + cs, y0 + cs};
  };
  std::vector<Rect> rects;
  if (const auto* indices =
          std::get_if<std::vector<WaypointIndex>>(&config.obstacles)) {
    for (const WaypointIndex d : *indices) {
      rects.push_back(cell_rect(index_to_cell(spec, d)));
    }
  } else if (const auto* cells =
                 std::get_if<std::vector<CellCoord>>(&config.obstacles)) {
    for (const CellCoord c : *cells) {
      if (c.x >= spec.grid_side() || c.y >= spec.grid_side()) {
        throw std::out_of_range("obstacle cell out of range");
      }
      rects.push_back(cell_rect(c));
    }
  } else if (const auto* random =
                 std::get_if<RandomObstacles>(&config.obstacles)) {
    const WorldOracle base = make_random_world(spec, random->density_percent,
                                               random->seed, config.start);
    for (const WaypointIndex d : base.blocked.to_vector()) {
      rects.push_back(cell_rect(index_to_cell(spec, d)));
    }
  } else if (const auto* given =
                 std::get_if<std::vector<Rect>>(&config.obstacles)) {
    rects = *given;
  }
  return rects;
}

WorldOracle build_world_at(const ScenarioConfig& config,
                           const CurveSpec& spec) {
  const std::vector<Rect> rects = obstacle_geometry(config);
  WorldOracle world = make_world_from_indices(
      spec, rasterize_rects(spec, rects));
  return world;
}

WorldOracle build_world(const ScenarioConfig& config) {
  if (config.is_composite()) {
    throw std::invalid_argument(
        "composite scenarios build one world per subregion");
  }
  // Random sources must reproduce make_random_world exactly at the base
  // iteration; index and cell sources likewise rasterize back to themselves.
  WorldOracle world = build_world_at(config, config.spec);
  if (world.blocked.contains(config.start)) {
    throw std::invalid_argument("start waypoint is blocked in this world");
  }
  return world;
}

std::vector<WaypointIndex> visit_order(const MissionTrace& trace) {
  std::vector<WaypointIndex> order{trace.start};
  for (const Event& event : trace.events) {
    if (const auto* visit = std::get_if<VisitEvent>(&event)) {
      order.push_back(visit->waypoint);
    }
  }
  return order;
}

MissionTrace run_mission(const WaypointGraph& graph, const WorldOracle& world,
                         WaypointIndex start,
                         const IndexSet* initial_obstacles) {
  if (graph.spec() != world.spec) {
    throw std::invalid_argument("graph and world use different tessellations");
  }
  if (start >= graph.vertex_count()) {
    throw std::out_of_range("start waypoint out of range");
  }
  if (world.blocked.contains(start)) {
    throw std::invalid_argument("start waypoint is blocked");
  }

  MissionTrace trace;
  trace.spec = graph.spec();
  trace.connectivity = graph.connectivity();
  trace.start = start;
  if (initial_obstacles != nullptr) {
    trace.initial_obstacles = initial_obstacles->to_vector();
  }

  PlannerState state =
      initial_obstacles != nullptr
          ? PlannerState(graph, start, *initial_obstacles)
          : PlannerState(graph, start);
  const SenseFn sensor = [&](WaypointIndex at, WaypointIndex target) {
    return sense(world, graph, at, target);
  };
  while (state.status() == PlannerStatus::Running) {
    std::vector<Event> step = planner_step(state, sensor);
    trace.events.insert(trace.events.end(), step.begin(), step.end());
  }
  if (state.status() == PlannerStatus::Terminated && trace.events.empty()) {
    trace.events.push_back(TerminateEvent{});  // frontier empty at entry
  }

  MissionMetrics& m = trace.metrics;
  IndexSet seen(graph.vertex_count());
  seen.insert(start);
  for (const Event& event : trace.events) {
    if (const auto* move = std::get_if<MoveEvent>(&event)) {
      ++m.edges_traversed;
      if (seen.contains(move->to)) {
        ++m.revisit_count;
      }
    } else if (const auto* visit = std::get_if<VisitEvent>(&event)) {
      seen.insert(visit->waypoint);
    }
  }
  m.cells_visited = state.visited().size();
  m.obstacles_found = state.obstacles().size();
  m.confinement = make_confinement(state.visited(), state.obstacles());

  const std::vector<std::string> violations = verify_trace(trace, world);
  if (!violations.empty()) {
    throw std::logic_error("mission trace violates invariants: " +
                           violations.front());
  }
  return trace;
}

MissionTrace run_mission(const ScenarioConfig& config,
                         const WorldOracle& world) {
  if (config.is_composite()) {
    throw std::invalid_argument(
        "composite scenarios run through run_composite_mission");
  }
  const WaypointGraph graph(world.spec, config.connectivity);
  return run_mission(graph, world, config.start, nullptr);
}

}  // namespace sfcplan
