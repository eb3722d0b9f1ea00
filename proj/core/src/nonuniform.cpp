#include "sfcplan/nonuniform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace sfcplan {
namespace {

constexpr double kEdgeTolFraction = 1e-9;

double overlap_length(double a0, double a1, double b0, double b1) {
  return std::min(a1, b1) - std::max(a0, b0);
}

double edge_tol(const CurveSpec& a, const CurveSpec& b) {
  return std::max(a.side, b.side) * kEdgeTolFraction;
}

struct CellRect {
  double x0, y0, x1, y1;
};

CellRect cell_rect(const CurveSpec& spec, WaypointIndex d) {
  const CellCoord c = index_to_cell(spec, d);
  const double cs = spec.cell_side();
  const double x0 = spec.origin.x + cs * c.x;
  const double y0 = spec.origin.y + cs * c.y;
  return {x0, y0, x0 + cs, y0 + cs};
}

double center_distance(const CurveSpec& sa, WaypointIndex a,
                       const CurveSpec& sb, WaypointIndex b) {
  const Point pa = waypoint_position(sa, a);
  const Point pb = waypoint_position(sb, b);
  return std::hypot(pa.x - pb.x, pa.y - pb.y);
}

/// Candidates ordered by (distance to the reference waypoint, index).
std::vector<WaypointIndex> order_by_distance(
    const std::vector<WaypointIndex>& candidates, const CurveSpec& cand_spec,
    const CurveSpec& ref_spec, WaypointIndex reference) {
  std::vector<WaypointIndex> ordered = candidates;
  std::stable_sort(ordered.begin(), ordered.end(),
                   [&](WaypointIndex lhs, WaypointIndex rhs) {
                     const double dl =
                         center_distance(cand_spec, lhs, ref_spec, reference);
                     const double dr =
                         center_distance(cand_spec, rhs, ref_spec, reference);
                     if (dl != dr) {
                       return dl < dr;
                     }
                     return lhs < rhs;
                   });
  return ordered;
}

}  // namespace

std::optional<SharedEdge> shared_edge(const CurveSpec& a, const CurveSpec& b) {
  const double tol = edge_tol(a, b);
  const double ax1 = a.origin.x + a.side;
  const double ay1 = a.origin.y + a.side;
  const double bx1 = b.origin.x + b.side;
  const double by1 = b.origin.y + b.side;

  // Vertical contact: a's right on b's left, or the reverse.
  for (const auto& [coord_a, coord_b] :
       {std::pair{ax1, b.origin.x}, std::pair{a.origin.x, bx1}}) {
    if (std::abs(coord_a - coord_b) <= tol) {
      const double lo = std::max(a.origin.y, b.origin.y);
      const double hi = std::min(ay1, by1);
      if (hi - lo > tol) {
        return SharedEdge{true, coord_a, lo, hi};
      }
    }
  }
  for (const auto& [coord_a, coord_b] :
       {std::pair{ay1, b.origin.y}, std::pair{a.origin.y, by1}}) {
    if (std::abs(coord_a - coord_b) <= tol) {
      const double lo = std::max(a.origin.x, b.origin.x);
      const double hi = std::min(ax1, bx1);
      if (hi - lo > tol) {
        return SharedEdge{false, coord_a, lo, hi};
      }
    }
  }
  return std::nullopt;
}

std::vector<WaypointIndex> waypoints_on_edge(const CurveSpec& spec,
                                             const SharedEdge& edge) {
  const double tol = spec.side * kEdgeTolFraction;
  std::vector<WaypointIndex> out;
  for (WaypointIndex d = 0; d < spec.waypoint_count(); ++d) {
    const CellRect r = cell_rect(spec, d);
    if (edge.vertical) {
      if ((std::abs(r.x0 - edge.coord) <= tol ||
           std::abs(r.x1 - edge.coord) <= tol) &&
          overlap_length(r.y0, r.y1, edge.lo, edge.hi) > tol) {
        out.push_back(d);
      }
    } else {
      if ((std::abs(r.y0 - edge.coord) <= tol ||
           std::abs(r.y1 - edge.coord) <= tol) &&
          overlap_length(r.x0, r.x1, edge.lo, edge.hi) > tol) {
        out.push_back(d);
      }
    }
  }
  return out;
}

void CompositeRegion::validate() const {
  if (subregions.empty()) {
    throw std::invalid_argument("composite region has no subregions");
  }
  for (const Subregion& sub : subregions) {
    sub.spec.validate();
  }
  for (std::size_t i = 0; i < subregions.size(); ++i) {
    for (std::size_t j = i + 1; j < subregions.size(); ++j) {
      const CurveSpec& a = subregions[i].spec;
      const CurveSpec& b = subregions[j].spec;
      const double tol = edge_tol(a, b);
      const double ow = overlap_length(a.origin.x, a.origin.x + a.side,
                                       b.origin.x, b.origin.x + b.side);
      const double oh = overlap_length(a.origin.y, a.origin.y + a.side,
                                       b.origin.y, b.origin.y + b.side);
      if (ow > tol && oh > tol) {
        throw std::invalid_argument(
            "subregions " + std::to_string(subregions[i].id) + " and " +
            std::to_string(subregions[j].id) + " overlap");
      }
    }
  }
  for (std::size_t i = 0; i + 1 < subregions.size(); ++i) {
    if (!shared_edge(subregions[i].spec, subregions[i + 1].spec)) {
      throw std::invalid_argument(
          "consecutive subregions " + std::to_string(subregions[i].id) +
          " and " + std::to_string(subregions[i + 1].id) +
          " share no boundary segment");
    }
  }
}

TransitionRecord plan_transition(const Subregion& current,
                                 const WaypointGraph& current_graph,
                                 const VisitSet& current_visited,
                                 WaypointIndex terminal_a,
                                 const Subregion& next,
                                 const WorldOracle& next_world,
                                 IndexSet& next_initial_obstacles) {
  TransitionRecord record;
  record.from_id = current.id;
  record.to_id = next.id;
  record.terminal_a = terminal_a;

  const std::optional<SharedEdge> edge =
      shared_edge(current.spec, next.spec);
  if (!edge) {
    record.skipped = true;
    record.skip_reason = "no shared boundary segment";
    return record;
  }

  std::vector<WaypointIndex> exit_candidates;
  for (const WaypointIndex d : waypoints_on_edge(current.spec, *edge)) {
    if (current_visited.contains(d)) {
      exit_candidates.push_back(d);
    }
  }
  if (exit_candidates.empty()) {
    record.skipped = true;
    record.skip_reason = "no visited waypoint on the shared edge";
    return record;
  }
  const WaypointIndex exit_b =
      order_by_distance(exit_candidates, current.spec, current.spec,
                        terminal_a)
          .front();
  record.exit_b = exit_b;
  record.route_to_exit =
      shortest_route(current_graph, current_visited, terminal_a, exit_b);

  const std::vector<WaypointIndex> entry_candidates =
      order_by_distance(waypoints_on_edge(next.spec, *edge), next.spec,
                        current.spec, exit_b);
  for (const WaypointIndex candidate : entry_candidates) {
    const bool blocked = next_world.blocked.contains(candidate);
    record.probes.push_back({candidate, blocked});
    if (!blocked) {
      record.entry_c = candidate;
      break;
    }
    next_initial_obstacles.insert(candidate);
  }
  if (!record.entry_c) {
    record.skipped = true;
    record.skip_reason = entry_candidates.empty()
                             ? "next curve has no waypoint on the shared edge"
                             : "every shared-edge waypoint of the next curve "
                               "is blocked";
  }
  return record;
}

CompositeMissionResult run_composite_mission(const CompositeRegion& region,
                                             std::span<const WorldOracle> worlds,
                                             Connectivity connectivity) {
  region.validate();
  if (worlds.size() != region.subregions.size()) {
    throw std::invalid_argument("one world per subregion required");
  }
  for (std::size_t i = 0; i < worlds.size(); ++i) {
    if (worlds[i].spec != region.subregions[i].spec) {
      throw std::invalid_argument("world " + std::to_string(i) +
                                  " does not match its subregion spec");
    }
  }

  CompositeMissionResult result;
  result.traces.resize(region.subregions.size());

  const WaypointGraph first_graph(region.subregions[0].spec, connectivity);
  result.traces[0] = run_mission(first_graph, worlds[0], 0, nullptr);

  std::size_t active = 0;
  WaypointGraph active_graph = first_graph;
  for (std::size_t i = 1; i < region.subregions.size(); ++i) {
    const Subregion& cur = region.subregions[active];
    const Subregion& next = region.subregions[i];

    // Rebuild the active planner view from its trace.
    const MissionTrace& active_trace = *result.traces[active];
    VisitSet visited(active_graph.vertex_count());
    for (const WaypointIndex d : visit_order(active_trace)) {
      visited.insert(d);
    }
    WaypointIndex terminal = active_trace.start;
    for (const Event& event : active_trace.events) {
      if (const auto* move = std::get_if<MoveEvent>(&event)) {
        terminal = move->to;
      }
    }

    IndexSet entry_obstacles(next.spec.waypoint_count());
    TransitionRecord record =
        plan_transition(cur, active_graph, visited, terminal, next, worlds[i],
                        entry_obstacles);
    result.transitions.push_back(record);
    if (record.skipped) {
      continue;
    }
    WaypointGraph next_graph(next.spec, connectivity);
    result.traces[i] =
        run_mission(next_graph, worlds[i], *record.entry_c, &entry_obstacles);
    active = i;
    active_graph = next_graph;
  }
  return result;
}

}  // namespace sfcplan
