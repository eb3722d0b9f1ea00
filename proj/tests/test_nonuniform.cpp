#include <doctest.h>

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include "sfcplan/nonuniform.hpp"
#include "support/oracles.hpp"

using namespace sfcplan;

namespace {

CurveSpec square(double ox, double oy, double side, int k) {
  CurveSpec spec;
  spec.origin = {ox, oy};
  spec.side = side;
  spec.iteration = k;
  return spec;
}

/// Four unit-iteration quadrants of an 8x8 region, traversed
/// TL -> TR -> BR -> BL.
CompositeRegion quadrant_ring(int k_tl, int k_tr, int k_br, int k_bl) {
  CompositeRegion region;
  region.subregions = {
      {square(0, 4, 4, k_tl), 0},
      {square(4, 4, 4, k_tr), 1},
      {square(4, 0, 4, k_br), 2},
      {square(0, 0, 4, k_bl), 3},
  };
  return region;
}

std::vector<WorldOracle> empty_worlds(const CompositeRegion& region) {
  std::vector<WorldOracle> worlds;
  for (const Subregion& sub : region.subregions) {
    worlds.push_back({sub.spec, IndexSet(sub.spec.waypoint_count())});
  }
  return worlds;
}

}  // namespace

TEST_CASE("shared_edge finds the touching segment") {
  const CurveSpec a = square(0, 0, 4, 1);
  const CurveSpec b = square(4, 1, 2, 1);
  const auto edge = shared_edge(a, b);
  REQUIRE(edge.has_value());
  CHECK(edge->vertical);
  CHECK(edge->coord == 4.0);
  CHECK(edge->lo == 1.0);
  CHECK(edge->hi == 3.0);

  // Corner touch only.
  CHECK(!shared_edge(square(0, 0, 2, 1), square(2, 2, 2, 1)).has_value());
  // Fully apart.
  CHECK(!shared_edge(square(0, 0, 2, 1), square(5, 0, 2, 1)).has_value());
  // Horizontal contact, b below a.
  const auto horizontal = shared_edge(square(0, 2, 2, 1), square(1, 0, 2, 1));
  REQUIRE(horizontal.has_value());
  CHECK(!horizontal->vertical);
  CHECK(horizontal->coord == 2.0);
  CHECK(horizontal->lo == 1.0);
  CHECK(horizontal->hi == 2.0);
}

TEST_CASE("waypoints_on_edge lists the touching cells") {
  const CurveSpec left = square(0, 0, 4, 2);  // 4x4 cells of side 1
  const CurveSpec right = square(4, 0, 4, 1);  // 2x2 cells of side 2
  const auto edge = shared_edge(left, right);
  REQUIRE(edge.has_value());

  const auto on_left = waypoints_on_edge(left, *edge);
  CHECK(on_left.size() == 4);  // the x = 3 column
  for (const WaypointIndex d : on_left) {
    CHECK(index_to_cell(left, d).x == 3);
  }
  const auto on_right = waypoints_on_edge(right, *edge);
  CHECK(on_right.size() == 2);  // the x = 0 column of the coarse grid
  for (const WaypointIndex d : on_right) {
    CHECK(index_to_cell(right, d).x == 0);
  }
}

TEST_CASE("composite validation rejects broken layouts") {
  CompositeRegion overlapping;
  overlapping.subregions = {{square(0, 0, 4, 1), 0}, {square(2, 0, 4, 1), 1}};
  CHECK_THROWS_AS(overlapping.validate(), std::invalid_argument);

  CompositeRegion disconnected;
  disconnected.subregions = {{square(0, 0, 2, 1), 0},
                             {square(4, 0, 2, 1), 1}};
  CHECK_THROWS_AS(disconnected.validate(), std::invalid_argument);

  CHECK_THROWS_AS(CompositeRegion{}.validate(), std::invalid_argument);
}

TEST_CASE("obstacle-free quadrant ring covers every cell with 3 transitions") {
  const CompositeRegion region = quadrant_ring(1, 1, 1, 1);
  const auto worlds = empty_worlds(region);
  const CompositeMissionResult result =
      run_composite_mission(region, worlds, Connectivity::FourConnected);

  REQUIRE(result.transitions.size() == 3);
  for (const TransitionRecord& tr : result.transitions) {
    CHECK(!tr.skipped);
  }
  for (std::size_t i = 0; i < region.subregions.size(); ++i) {
    REQUIRE(result.traces[i].has_value());
    CHECK(result.traces[i]->metrics.cells_visited == 4);
  }
}

TEST_CASE("terminal already on the shared edge exits without travel") {
  // k=1 square ends at its lower-right cell, which touches the right
  // neighbor's edge, so B == A and the walk is a single waypoint.
  CompositeRegion region;
  region.subregions = {{square(0, 0, 2, 1), 0}, {square(2, 0, 2, 1), 1}};
  const auto worlds = empty_worlds(region);
  const CompositeMissionResult result =
      run_composite_mission(region, worlds, Connectivity::FourConnected);
  REQUIRE(result.transitions.size() == 1);
  const TransitionRecord& tr = result.transitions[0];
  CHECK(!tr.skipped);
  CHECK(tr.terminal_a == tr.exit_b);
  CHECK(tr.route_to_exit == std::vector<WaypointIndex>{tr.exit_b});
}

TEST_CASE("equidistant entry candidates resolve to the smaller index") {
  // Coarse 2x2 on the left, fine 4x4 on the right. The exit cell's center
  // sits level with the midline, making two right-column cells equidistant.
  CompositeRegion region;
  region.subregions = {{square(0, 0, 4, 1), 0}, {square(4, 0, 4, 2), 1}};
  const auto edge = shared_edge(region.subregions[0].spec,
                                region.subregions[1].spec);
  REQUIRE(edge.has_value());

  const auto worlds = empty_worlds(region);
  const CompositeMissionResult result =
      run_composite_mission(region, worlds, Connectivity::FourConnected);
  REQUIRE(result.transitions.size() == 1);
  const TransitionRecord& tr = result.transitions[0];
  REQUIRE(!tr.skipped);

  // Exhaustive check of the tie-break rule.
  const CurveSpec& next_spec = region.subregions[1].spec;
  const Point b = waypoint_position(region.subregions[0].spec, tr.exit_b);
  double best = 1e300;
  WaypointIndex best_index = 0;
  for (const WaypointIndex c : waypoints_on_edge(next_spec, *edge)) {
    const Point p = waypoint_position(next_spec, c);
    const double dist = std::hypot(p.x - b.x, p.y - b.y);
    if (dist < best - 1e-12) {
      best = dist;
      best_index = c;
    } else if (std::abs(dist - best) <= 1e-12 && c < best_index) {
      best_index = c;
    }
  }
  CHECK(tr.entry_c == best_index);

  // The tie really exists: two candidates at the minimum distance.
  int at_minimum = 0;
  for (const WaypointIndex c : waypoints_on_edge(next_spec, *edge)) {
    const Point p = waypoint_position(next_spec, c);
    if (std::abs(std::hypot(p.x - b.x, p.y - b.y) - best) <= 1e-12) {
      ++at_minimum;
    }
  }
  CHECK(at_minimum >= 2);
}

TEST_CASE("blocked entry candidates are probed and pre-seeded") {
  CompositeRegion region;
  region.subregions = {{square(0, 0, 2, 1), 0}, {square(2, 0, 2, 1), 1}};
  std::vector<WorldOracle> worlds = empty_worlds(region);
  // Next region's left column is 0:(0,0) and 1:(0,1); block the nearest.
  const WaypointIndex nearest = 0;
  worlds[1].blocked.insert(nearest);

  const CompositeMissionResult result =
      run_composite_mission(region, worlds, Connectivity::FourConnected);
  REQUIRE(result.transitions.size() == 1);
  const TransitionRecord& tr = result.transitions[0];
  REQUIRE(!tr.skipped);
  REQUIRE(tr.probes.size() == 2);
  CHECK(tr.probes[0].waypoint == nearest);
  CHECK(tr.probes[0].blocked);
  CHECK(!tr.probes[1].blocked);
  CHECK(tr.entry_c == tr.probes[1].waypoint);

  REQUIRE(result.traces[1].has_value());
  CHECK(result.traces[1]->initial_obstacles ==
        std::vector<WaypointIndex>{nearest});
  CHECK(result.traces[1]->metrics.obstacles_found == 1);
}

TEST_CASE("fully walled-off shared edge skips the subregion") {
  CompositeRegion region;
  region.subregions = {{square(0, 0, 2, 1), 0}, {square(2, 0, 2, 1), 1}};
  std::vector<WorldOracle> worlds = empty_worlds(region);
  worlds[1].blocked.insert(0);
  worlds[1].blocked.insert(1);

  const CompositeMissionResult result =
      run_composite_mission(region, worlds, Connectivity::FourConnected);
  REQUIRE(result.transitions.size() == 1);
  CHECK(result.transitions[0].skipped);
  CHECK(!result.transitions[0].skip_reason.empty());
  CHECK(!result.traces[1].has_value());
}

TEST_CASE("per-subregion coverage equals the flood-fill oracle") {
  const CompositeRegion region = quadrant_ring(3, 2, 1, 2);
  std::vector<WorldOracle> worlds = empty_worlds(region);
  // Scatter obstacles: a few cells in the fine quadrant, one in each coarse.
  for (const WaypointIndex d : {5ull, 22ull, 40ull, 41ull, 50ull}) {
    worlds[0].blocked.insert(d);
  }
  worlds[1].blocked.insert(7);
  worlds[3].blocked.insert(9);

  const CompositeMissionResult result =
      run_composite_mission(region, worlds, Connectivity::FourConnected);

  // Inter-region walks never leave the visited cells of their subregion.
  for (const TransitionRecord& tr : result.transitions) {
    REQUIRE(!tr.skipped);
    const auto order = visit_order(*result.traces[tr.from_id]);
    const std::set<WaypointIndex> visited(order.begin(), order.end());
    for (const WaypointIndex d : tr.route_to_exit) {
      CHECK(visited.contains(d));
    }
  }

  for (std::size_t i = 0; i < region.subregions.size(); ++i) {
    REQUIRE(result.traces[i].has_value());
    const MissionTrace& trace = *result.traces[i];
    std::set<WaypointIndex> blocked_members;
    for (const WaypointIndex d : worlds[i].blocked.to_vector()) {
      blocked_members.insert(d);
    }
    const auto reachable = oracles::flood_fill_reachable(
        oracles::hilbert_sequence(region.subregions[i].spec.iteration),
        trace.start, blocked_members, false);
    const auto order = visit_order(trace);
    CHECK(std::set<WaypointIndex>(order.begin(), order.end()) == reachable);
  }
}
