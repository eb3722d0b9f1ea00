#ifndef SFCPLAN_PLANNER_HPP
#define SFCPLAN_PLANNER_HPP

#include <functional>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "sfcplan/grid_graph.hpp"

namespace sfcplan {

struct MoveEvent {
  WaypointIndex from = 0;
  WaypointIndex to = 0;

  friend bool operator==(const MoveEvent&, const MoveEvent&) = default;
};

struct SenseEvent {
  WaypointIndex at = 0;
  WaypointIndex target = 0;
  bool result = false;  // true when the target is blocked

  friend bool operator==(const SenseEvent&, const SenseEvent&) = default;
};

struct AbortEvent {
  WaypointIndex target = 0;

  friend bool operator==(const AbortEvent&, const AbortEvent&) = default;
};

struct VisitEvent {
  WaypointIndex waypoint = 0;

  friend bool operator==(const VisitEvent&, const VisitEvent&) = default;
};

// Frontier exhausted: every reachable waypoint has been seen.
struct TerminateEvent {
  friend bool operator==(const TerminateEvent&, const TerminateEvent&) =
      default;
};

using Event =
    std::variant<MoveEvent, SenseEvent, AbortEvent, VisitEvent, TerminateEvent>;

/// Answers "is `target` blocked?" asked from the adjacent waypoint `at`.
using SenseFn = std::function<bool(WaypointIndex at, WaypointIndex target)>;

enum class PlannerStatus { Running, Terminated };

/// Mutable state of one online coverage mission: the visited set V, the
/// detected-obstacle set O, the agent position, and the pending route.
/// The frontier A(V,G)-O is maintained incrementally as an ordered set so
/// the minimum-numbered candidate is always at hand.
class PlannerState {
 public:
  PlannerState(const WaypointGraph& graph, WaypointIndex start);
  PlannerState(const WaypointGraph& graph, WaypointIndex start,
               const IndexSet& initial_obstacles);

  /// Resumes from a snapshot: current must be visited, V and O disjoint.
  PlannerState(const WaypointGraph& graph, VisitSet visited,
               ObstacleSet obstacles, WaypointIndex current);

  const WaypointGraph& graph() const { return *graph_; }
  const VisitSet& visited() const { return visited_; }
  const ObstacleSet& obstacles() const { return obstacles_; }
  WaypointIndex current() const { return current_; }
  WaypointIndex start() const { return start_; }
  PlannerStatus status() const { return status_; }

  /// Route the agent is executing, empty between iterations.
  const std::vector<WaypointIndex>& route() const { return route_; }

  /// Incrementally maintained A(V,G) - O.
  const std::set<WaypointIndex>& frontier_set() const { return frontier_; }

  friend std::vector<Event> planner_step(PlannerState& state,
                                         const SenseFn& sense);

 private:
  void extend_frontier_around(WaypointIndex d);

  const WaypointGraph* graph_;
  VisitSet visited_;
  ObstacleSet obstacles_;
  WaypointIndex start_;
  WaypointIndex current_;
  std::vector<WaypointIndex> route_;
  std::set<WaypointIndex> frontier_;
  PlannerStatus status_ = PlannerStatus::Running;
  std::vector<WaypointIndex> scratch_;
};

/// min(A(V,G) - O), or nullopt when the frontier is empty and the mission
/// is over. Computed from scratch; PlannerState keeps the same value
/// incrementally.
std::optional<WaypointIndex> select_target(const WaypointGraph& graph,
                                           const IndexSet& visited,
                                           const IndexSet& obstacles);

/// Minimum-hop route from `from` to `to` whose interior stays inside the
/// visited set; ties broken toward the lexicographically smallest waypoint
/// sequence. `from` must be visited. Throws std::logic_error when no route
/// exists, which a valid mission never produces.
std::vector<WaypointIndex> shortest_route(const WaypointGraph& graph,
                                          const IndexSet& visited,
                                          WaypointIndex from, WaypointIndex to);

/// One iteration of the online strategy: pick the minimum-numbered frontier
/// waypoint, walk the shortest route through visited cells to its last-but-one
/// waypoint, sense the target from there, then either abort (target joins O,
/// agent stays) or step onto the target (it joins V). Emits the Move/Sense/
/// Abort/Visit events in execution order, plus Terminate once the frontier
/// empties.
std::vector<Event> planner_step(PlannerState& state, const SenseFn& sense);

/// Post-mission indicator that reachable space may have been sealed off at
/// this iteration. `flagged` evaluates n(V) + n(O) < c' verbatim, where c'
/// is the highest visited index; missing_below_max lists every index <= c'
/// in neither V nor O.
struct ConfinementReport {
  bool flagged = false;
  WaypointIndex c_prime = 0;
  std::vector<WaypointIndex> missing_below_max;
};

ConfinementReport confinement_check(const VisitSet& visited,
                                    const ObstacleSet& obstacles,
                                    WaypointIndex c_prime);

}  // namespace sfcplan

#endif  // SFCPLAN_PLANNER_HPP
