#include "sfcplan/planner.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <string>

namespace sfcplan {

PlannerState::PlannerState(const WaypointGraph& graph, WaypointIndex start)
    : PlannerState(graph, start, IndexSet()) {}

PlannerState::PlannerState(const WaypointGraph& graph, WaypointIndex start,
                           const IndexSet& initial_obstacles)
    : graph_(&graph),
      visited_(graph.vertex_count()),
      obstacles_(graph.vertex_count()),
      start_(start),
      current_(start) {
  if (start >= graph.vertex_count()) {
    throw std::out_of_range("start waypoint out of range");
  }
  if (initial_obstacles.universe() != 0) {
    if (initial_obstacles.contains(start)) {
      throw std::invalid_argument("start waypoint is a known obstacle");
    }
    for (const WaypointIndex d : initial_obstacles.to_vector()) {
      obstacles_.insert(d);
    }
  }
  visited_.insert(start);
  extend_frontier_around(start);
  if (frontier_.empty()) {
    status_ = PlannerStatus::Terminated;
  }
}

PlannerState::PlannerState(const WaypointGraph& graph, VisitSet visited,
                           ObstacleSet obstacles, WaypointIndex current)
    : graph_(&graph),
      visited_(std::move(visited)),
      obstacles_(std::move(obstacles)),
      start_(current),
      current_(current) {
  if (visited_.universe() != graph.vertex_count() ||
      obstacles_.universe() != graph.vertex_count()) {
    throw std::invalid_argument("set universes do not match the graph");
  }
  if (!visited_.contains(current)) {
    throw std::invalid_argument("current waypoint must be visited");
  }
  for (const WaypointIndex d : obstacles_.to_vector()) {
    if (visited_.contains(d)) {
      throw std::invalid_argument("visited and obstacle sets overlap");
    }
  }
  for (const WaypointIndex d : visited_.to_vector()) {
    extend_frontier_around(d);
  }
  if (frontier_.empty()) {
    status_ = PlannerStatus::Terminated;
  }
}

void PlannerState::extend_frontier_around(WaypointIndex d) {
  graph_->neighbors(d, scratch_);
  for (const WaypointIndex nb : scratch_) {
    if (!visited_.contains(nb) && !obstacles_.contains(nb)) {
      frontier_.insert(nb);
    }
  }
}

std::optional<WaypointIndex> select_target(const WaypointGraph& graph,
                                           const IndexSet& visited,
                                           const IndexSet& obstacles) {
  const std::vector<WaypointIndex> front = frontier(graph, visited, obstacles);
  if (front.empty()) {
    return std::nullopt;
  }
  return front.front();
}

std::vector<WaypointIndex> shortest_route(const WaypointGraph& graph,
                                          const IndexSet& visited,
                                          WaypointIndex from,
                                          WaypointIndex to) {
  if (!visited.contains(from)) {
    throw std::invalid_argument("route origin must be a visited waypoint");
  }
  if (to >= graph.vertex_count()) {
    throw std::out_of_range("route target out of range");
  }
  if (from == to) {
    return {from};
  }
  const auto allowed = [&](WaypointIndex d) {
    return d == to || visited.contains(d);
  };

  // Distances from the target over the allowed vertices, then a greedy
  // forward walk that always takes the smallest-index neighbor one step
  // closer. That walk is the lexicographically smallest shortest sequence.
  constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(graph.vertex_count(), kUnreached);
  dist[to] = 0;
  std::deque<WaypointIndex> queue{to};
  std::vector<WaypointIndex> nbrs;
  while (!queue.empty() && dist[from] == kUnreached) {
    const WaypointIndex cur = queue.front();
    queue.pop_front();
    graph.neighbors(cur, nbrs);
    for (const WaypointIndex nb : nbrs) {
      if (dist[nb] == kUnreached && allowed(nb)) {
        dist[nb] = dist[cur] + 1;
        queue.push_back(nb);
      }
    }
  }
  if (dist[from] == kUnreached) {
    throw std::logic_error(
        "no route from " + std::to_string(from) + " to " + std::to_string(to) +
        " through visited waypoints; mission state is inconsistent");
  }

  std::vector<WaypointIndex> route{from};
  WaypointIndex cur = from;
  while (cur != to) {
    graph.neighbors(cur, nbrs);
    WaypointIndex next = cur;
    bool found = false;
    for (const WaypointIndex nb : nbrs) {  // ascending, first hit is smallest
      if (allowed(nb) && dist[nb] == dist[cur] - 1) {
        next = nb;
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::logic_error("distance field corrupt during route extraction");
    }
    route.push_back(next);
    cur = next;
  }
  return route;
}

std::vector<Event> planner_step(PlannerState& state, const SenseFn& sense) {
  if (state.status_ != PlannerStatus::Running) {
    throw std::logic_error("planner_step called on a terminated mission");
  }
  std::vector<Event> events;
  if (state.frontier_.empty()) {
    state.status_ = PlannerStatus::Terminated;
    events.push_back(TerminateEvent{});
    return events;
  }

  const WaypointIndex target = *state.frontier_.begin();
  if (state.obstacles_.contains(target)) {
    throw std::logic_error("frontier offered a known obstacle as target");
  }
  state.route_ =
      shortest_route(*state.graph_, state.visited_, state.current_, target);
  const std::vector<WaypointIndex>& route = state.route_;

  // Walk to the penultimate waypoint. Interior waypoints are visited cells,
  // so this travel is known safe.
  for (std::size_t i = 1; i + 1 < route.size(); ++i) {
    events.push_back(MoveEvent{route[i - 1], route[i]});
    state.current_ = route[i];
  }
  const WaypointIndex sense_from = route[route.size() - 2];
  const bool blocked = sense(sense_from, target);
  events.push_back(SenseEvent{sense_from, target, blocked});
  if (blocked) {
    state.obstacles_.insert(target);
    state.frontier_.erase(target);
    events.push_back(AbortEvent{target});
  } else {
    events.push_back(MoveEvent{sense_from, target});
    state.current_ = target;
    state.visited_.insert(target);
    state.frontier_.erase(target);
    state.extend_frontier_around(target);
    events.push_back(VisitEvent{target});
  }
  state.route_.clear();

  if (state.frontier_.empty()) {
    state.status_ = PlannerStatus::Terminated;
    events.push_back(TerminateEvent{});
  }
  return events;
}

ConfinementReport confinement_check(const VisitSet& visited,
                                    const ObstacleSet& obstacles,
                                    WaypointIndex c_prime) {
  ConfinementReport report;
  report.c_prime = c_prime;
  report.flagged = visited.size() + obstacles.size() < c_prime;
  for (WaypointIndex d = 0; d <= c_prime; ++d) {
    if (!visited.contains(d) && !obstacles.contains(d)) {
      report.missing_below_max.push_back(d);
    }
  }
  return report;
}

}  // namespace sfcplan
