#ifndef SFCPLAN_CURVE_HPP
#define SFCPLAN_CURVE_HPP

#include <cstdint>
#include <string_view>

namespace sfcplan {

/// Position along the curve, 0..4^k-1.
using WaypointIndex = std::uint64_t;

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// Grid cell, (0,0) is the left-bottom cell and y grows upward.
struct CellCoord {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  friend bool operator==(const CellCoord&, const CellCoord&) = default;
};

/// Dihedral placement of the curve inside its square. Canonical starts in
/// the left-bottom cell and ends in the right-bottom cell; the other seven
/// values transform the canonical cell layout.
enum class Orientation {
  Canonical,
  Rot90,
  Rot180,
  Rot270,
  FlipX,
  FlipY,
  Transpose,
  AntiTranspose,
};

/// Iterations above this would push 4^k past what fits comfortably in
/// 64-bit index arithmetic used throughout.
inline constexpr int kMaxIteration = 16;

/// A Hilbert-curve tessellation of a square region: iteration k splits the
/// square into 2^k x 2^k cells whose centers, joined in index order, form
/// the curve polyline.
struct CurveSpec {
  int iteration = 1;
  Point origin{0.0, 0.0};
  double side = 1.0;
  Orientation orientation = Orientation::Canonical;

  std::uint32_t grid_side() const;       // 2^k
  WaypointIndex waypoint_count() const;  // 4^k
  double cell_side() const;

  /// Throws std::invalid_argument when iteration or side is out of range.
  void validate() const;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

bool operator==(const Point& a, const Point& b);

/// How min_iteration maps (area, sensing radius) to an iteration.
enum class IterationRule {
  /// ceil(log2(area / (s * sqrt(2)) - 1)), clamped to >= 1. Mixes area and
  /// length dimensionally but is kept as the default rule.
  Verbatim,
  /// Smallest k >= 1 whose cell diagonal fits inside the sensing diameter,
  /// i.e. sqrt(2) * side / 2^k <= 2 * s.
  DiagonalSafe,
};

/// Picks the curve iteration for a square of the given area so that an agent
/// at a cell center can scan the whole cell with the given sensing radius.
/// Throws std::domain_error under IterationRule::Verbatim when
/// area / (s * sqrt(2)) - 1 <= 0; that means the sensing radius already
/// covers the region and iteration 1 is enough.
int min_iteration(double area, double sensing_radius,
                  IterationRule rule = IterationRule::Verbatim);

/// Maps an index along the curve to its grid cell. Bijective over
/// 0..4^k-1; consecutive indices land on edge-sharing cells.
CellCoord index_to_cell(const CurveSpec& spec, WaypointIndex d);

/// Inverse of index_to_cell.
WaypointIndex cell_to_index(const CurveSpec& spec, CellCoord cell);

/// Center of the cell holding waypoint d, in region coordinates.
Point waypoint_position(const CurveSpec& spec, WaypointIndex d);

std::string_view to_string(Orientation o);

}  // namespace sfcplan

#endif  // SFCPLAN_CURVE_HPP
