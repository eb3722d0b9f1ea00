#include "sfcplan/grid_graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <stdexcept>
#include <string>

namespace sfcplan {

std::string_view to_string(Connectivity c) {
  return c == Connectivity::FourConnected ? "four" : "eight";
}

bool IndexSet::insert(WaypointIndex d) {
  if (d >= bits_.size()) {
    throw std::out_of_range("index " + std::to_string(d) +
                            " outside set universe of " +
                            std::to_string(bits_.size()));
  }
  if (bits_[d]) {
    return false;
  }
  bits_[d] = true;
  ++count_;
  if (!max_ || d > *max_) {
    max_ = d;
  }
  return true;
}

std::vector<WaypointIndex> IndexSet::to_vector() const {
  std::vector<WaypointIndex> out;
  out.reserve(count_);
  for (WaypointIndex d = 0; d < bits_.size(); ++d) {
    if (bits_[d]) {
      out.push_back(d);
    }
  }
  return out;
}

WaypointGraph::WaypointGraph(CurveSpec spec, Connectivity connectivity)
    : spec_(spec), connectivity_(connectivity) {
  spec_.validate();
}

void WaypointGraph::neighbors(WaypointIndex d,
                              std::vector<WaypointIndex>& out) const {
  out.clear();
  const CellCoord c = index_to_cell(spec_, d);
  const std::int64_t n = spec_.grid_side();
  const int span = connectivity_ == Connectivity::EightConnected ? 1 : 0;
  for (int dy = -1; dy <= 1; ++dy) {
    for (int dx = -1; dx <= 1; ++dx) {
      if (dx == 0 && dy == 0) {
        continue;
      }
      if (span == 0 && dx != 0 && dy != 0) {
        continue;
      }
      const std::int64_t nx = static_cast<std::int64_t>(c.x) + dx;
      const std::int64_t ny = static_cast<std::int64_t>(c.y) + dy;
      if (nx < 0 || ny < 0 || nx >= n || ny >= n) {
        continue;
      }
      out.push_back(cell_to_index(spec_, {static_cast<std::uint32_t>(nx),
                                          static_cast<std::uint32_t>(ny)}));
    }
  }
  std::sort(out.begin(), out.end());
}

std::vector<WaypointIndex> WaypointGraph::neighbors(WaypointIndex d) const {
  std::vector<WaypointIndex> out;
  neighbors(d, out);
  return out;
}

bool WaypointGraph::adjacent(WaypointIndex a, WaypointIndex b) const {
  if (a == b) {
    return false;
  }
  const CellCoord ca = index_to_cell(spec_, a);
  const CellCoord cb = index_to_cell(spec_, b);
  const auto dx = std::abs(static_cast<std::int64_t>(ca.x) -
                           static_cast<std::int64_t>(cb.x));
  const auto dy = std::abs(static_cast<std::int64_t>(ca.y) -
                           static_cast<std::int64_t>(cb.y));
  if (connectivity_ == Connectivity::FourConnected) {
    return dx + dy == 1;
  }
  return dx <= 1 && dy <= 1;
}

std::uint64_t WaypointGraph::edge_count() const {
  const std::uint64_t n = spec_.grid_side();
  if (connectivity_ == Connectivity::FourConnected) {
    return 2 * n * (n - 1);
  }
  // Orthogonal edges plus two diagonals per interior lattice point.
  return 2 * n * (n - 1) + 2 * (n - 1) * (n - 1);
}

std::vector<WaypointIndex> frontier(const WaypointGraph& graph,
                                    const IndexSet& visited,
                                    const IndexSet& obstacles) {
  if (visited.empty()) {
    throw std::invalid_argument("frontier requires a nonempty visited set");
  }
  std::vector<bool> in_frontier(graph.vertex_count(), false);
  std::vector<WaypointIndex> result;
  std::vector<WaypointIndex> nbrs;
  for (WaypointIndex d = 0; d < graph.vertex_count(); ++d) {
    if (!visited.contains(d)) {
      continue;
    }
    graph.neighbors(d, nbrs);
    for (const WaypointIndex nb : nbrs) {
      if (in_frontier[nb] || visited.contains(nb) || obstacles.contains(nb)) {
        continue;
      }
      in_frontier[nb] = true;
      result.push_back(nb);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

IndexSet reachable_set(const WaypointGraph& graph, WaypointIndex start,
                       const IndexSet& blocked) {
  if (start >= graph.vertex_count()) {
    throw std::out_of_range("start waypoint out of range");
  }
  if (blocked.contains(start)) {
    throw std::invalid_argument("start waypoint is blocked");
  }
  IndexSet reached(graph.vertex_count());
  reached.insert(start);
  std::deque<WaypointIndex> queue{start};
  std::vector<WaypointIndex> nbrs;
  while (!queue.empty()) {
    const WaypointIndex cur = queue.front();
    queue.pop_front();
    graph.neighbors(cur, nbrs);
    for (const WaypointIndex nb : nbrs) {
      if (!reached.contains(nb) && !blocked.contains(nb)) {
        reached.insert(nb);
        queue.push_back(nb);
      }
    }
  }
  return reached;
}

}  // namespace sfcplan
