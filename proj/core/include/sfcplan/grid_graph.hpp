#ifndef SFCPLAN_GRID_GRAPH_HPP
#define SFCPLAN_GRID_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sfcplan/curve.hpp"

namespace sfcplan {

/// Cell adjacency used for graph edges, sensing and movement.
enum class Connectivity {
  FourConnected,   // edge-sharing cells (Manhattan distance 1)
  EightConnected,  // edge- or corner-sharing cells (Chebyshev distance 1)
};

std::string_view to_string(Connectivity c);

/// Dense membership set over waypoint indices 0..universe-1. Used for both
/// visited and obstacle bookkeeping; tracks size and maximum element.
class IndexSet {
 public:
  IndexSet() = default;
  explicit IndexSet(WaypointIndex universe) : bits_(universe, false) {}

  WaypointIndex universe() const { return bits_.size(); }
  std::size_t size() const { return count_; }
  bool empty() const { return count_ == 0; }

  bool contains(WaypointIndex d) const { return d < bits_.size() && bits_[d]; }

  /// Inserts d; returns false when it was already present.
  bool insert(WaypointIndex d);

  std::optional<WaypointIndex> max_element() const { return max_; }

  /// Ascending order.
  std::vector<WaypointIndex> to_vector() const;

 private:
  std::vector<bool> bits_;
  std::size_t count_ = 0;
  std::optional<WaypointIndex> max_;
};

using VisitSet = IndexSet;
using ObstacleSet = IndexSet;

/// Dual graph of the tessellation: waypoints are vertices, geometric cell
/// adjacency gives the edges. Adjacency is computed from coordinates on
/// demand; the graph itself stores nothing but the spec.
class WaypointGraph {
 public:
  WaypointGraph(CurveSpec spec, Connectivity connectivity);

  const CurveSpec& spec() const { return spec_; }
  Connectivity connectivity() const { return connectivity_; }
  WaypointIndex vertex_count() const { return spec_.waypoint_count(); }

  /// Neighbor indices of d in ascending order. A corner cell has 2 (four-)
  /// or 3 (eight-connected) neighbors, an interior cell 4 or 8.
  std::vector<WaypointIndex> neighbors(WaypointIndex d) const;
  void neighbors(WaypointIndex d, std::vector<WaypointIndex>& out) const;

  bool adjacent(WaypointIndex a, WaypointIndex b) const;

  /// Number of undirected edges; 2n(n-1) for a four-connected n x n grid.
  std::uint64_t edge_count() const;

 private:
  CurveSpec spec_;
  Connectivity connectivity_;
};

/// A(V,G) - O: vertices outside V and O with at least one neighbor in V,
/// in ascending index order. V must be nonempty.
std::vector<WaypointIndex> frontier(const WaypointGraph& graph,
                                    const IndexSet& visited,
                                    const IndexSet& obstacles);

/// Breadth-first reachability from start, never entering blocked vertices.
/// Includes start; start itself must not be blocked.
IndexSet reachable_set(const WaypointGraph& graph, WaypointIndex start,
                       const IndexSet& blocked);

}  // namespace sfcplan

#endif  // SFCPLAN_GRID_GRAPH_HPP
