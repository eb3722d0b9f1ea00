#ifndef SFCPLAN_NONUNIFORM_HPP
#define SFCPLAN_NONUNIFORM_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sfcplan/simulator.hpp"

namespace sfcplan {

/// One square of a composite region, covered by its own curve iteration.
struct Subregion {
  CurveSpec spec;
  int id = 0;
};

/// Boundary segment two subregion squares share: a vertical or horizontal
/// line piece of positive length.
struct SharedEdge {
  bool vertical = false;  // true: x == coord, false: y == coord
  double coord = 0.0;
  double lo = 0.0;  // segment extent along the edge axis
  double hi = 0.0;
};

/// Ordered list of subregions, traversed in list order. Interiors must be
/// disjoint and each consecutive pair must share a boundary segment.
struct CompositeRegion {
  std::vector<Subregion> subregions;

  /// Throws std::invalid_argument when the layout breaks the rules above.
  void validate() const;
};

/// Shared boundary segment of two squares, or nullopt when they only touch
/// at a point (or not at all).
std::optional<SharedEdge> shared_edge(const CurveSpec& a, const CurveSpec& b);

/// Waypoints of `spec` whose cell has a side lying on the shared edge with
/// positive overlap, ascending.
std::vector<WaypointIndex> waypoints_on_edge(const CurveSpec& spec,
                                             const SharedEdge& edge);

struct CandidateProbe {
  WaypointIndex waypoint = 0;
  bool blocked = false;
};

/// Log of one inter-subregion handover: walk from the terminal waypoint A
/// to the visited edge waypoint B nearest to A, then cross to the next
/// curve's edge waypoint C nearest to B, probing candidates in increasing
/// distance order until one is free.
struct TransitionRecord {
  int from_id = 0;
  int to_id = 0;
  WaypointIndex terminal_a = 0;
  WaypointIndex exit_b = 0;
  std::vector<WaypointIndex> route_to_exit;  // A..B through visited cells
  std::vector<CandidateProbe> probes;        // entry candidates, tried order
  std::optional<WaypointIndex> entry_c;
  bool skipped = false;
  std::string skip_reason;
};

/// Plans one handover. Blocked entry candidates are added to
/// `next_initial_obstacles` so the next mission starts knowing them.
TransitionRecord plan_transition(const Subregion& current,
                                 const WaypointGraph& current_graph,
                                 const VisitSet& current_visited,
                                 WaypointIndex terminal_a,
                                 const Subregion& next,
                                 const WorldOracle& next_world,
                                 IndexSet& next_initial_obstacles);

/// Per-subregion outcome: a trace for every subregion actually entered.
struct CompositeMissionResult {
  std::vector<std::optional<MissionTrace>> traces;
  std::vector<TransitionRecord> transitions;
};

/// Runs the strategy over every subregion in order: subregion 0 starts at
/// waypoint 0, each later one at the entry waypoint its transition chose
/// (with V reset to that single waypoint). A subregion whose shared edge
/// cannot be crossed is skipped and recorded; traversal then continues from
/// the last subregion actually entered.
CompositeMissionResult run_composite_mission(const CompositeRegion& region,
                                             std::span<const WorldOracle> worlds,
                                             Connectivity connectivity);

}  // namespace sfcplan

#endif  // SFCPLAN_NONUNIFORM_HPP
