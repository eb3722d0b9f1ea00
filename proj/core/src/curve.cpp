#include "sfcplan/curve.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace sfcplan {
namespace {

// Snap ceil(log2(x)) results that sit within one part in 1e9 of an integer
// boundary, so values meant to be exact powers of two do not round up.
constexpr double kLogBoundaryTol = 1e-9;

void rotate_quadrant(std::uint32_t s, std::uint32_t& x, std::uint32_t& y,
                     std::uint32_t rx, std::uint32_t ry) {
  if (ry == 0) {
    if (rx == 1) {
      x = s - 1 - x;
      y = s - 1 - y;
    }
    std::swap(x, y);
  }
}

CellCoord apply_orientation(Orientation o, std::uint32_t n, CellCoord c) {
  const std::uint32_t m = n - 1;
  switch (o) {
    case Orientation::Canonical:
      return c;
    case Orientation::Rot90:
      return {m - c.y, c.x};
    case Orientation::Rot180:
      return {m - c.x, m - c.y};
    case Orientation::Rot270:
      return {c.y, m - c.x};
    case Orientation::FlipX:
      return {m - c.x, c.y};
    case Orientation::FlipY:
      return {c.x, m - c.y};
    case Orientation::Transpose:
      return {c.y, c.x};
    case Orientation::AntiTranspose:
      return {m - c.y, m - c.x};
  }
  throw std::logic_error("unknown orientation");
}

CellCoord unapply_orientation(Orientation o, std::uint32_t n, CellCoord c) {
  switch (o) {
    case Orientation::Rot90:
      return apply_orientation(Orientation::Rot270, n, c);
    case Orientation::Rot270:
      return apply_orientation(Orientation::Rot90, n, c);
    default:
      // The remaining transforms are involutions.
      return apply_orientation(o, n, c);
  }
}

}  // namespace

bool operator==(const Point& a, const Point& b) {
  return a.x == b.x && a.y == b.y;
}

std::uint32_t CurveSpec::grid_side() const {
  return std::uint32_t{1} << iteration;
}

WaypointIndex CurveSpec::waypoint_count() const {
  return WaypointIndex{1} << (2 * iteration);
}

double CurveSpec::cell_side() const { return side / grid_side(); }

void CurveSpec::validate() const {
  if (iteration < 1 || iteration > kMaxIteration) {
    throw std::invalid_argument("curve iteration must be in [1, " +
                                std::to_string(kMaxIteration) + "], got " +
                                std::to_string(iteration));
  }
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw std::invalid_argument("region side must be positive and finite");
  }
  if (!std::isfinite(origin.x) || !std::isfinite(origin.y)) {
    throw std::invalid_argument("region origin must be finite");
  }
}

int min_iteration(double area, double sensing_radius, IterationRule rule) {
  if (!(area > 0.0) || !std::isfinite(area)) {
    throw std::invalid_argument("area must be positive");
  }
  if (!(sensing_radius > 0.0) || !std::isfinite(sensing_radius)) {
    throw std::invalid_argument("sensing radius must be positive");
  }
  if (rule == IterationRule::Verbatim) {
    const double x = area / (sensing_radius * std::sqrt(2.0)) - 1.0;
    if (x <= 0.0) {
      throw std::domain_error(
          "sensing radius already covers the region (area / (s*sqrt(2)) - 1 "
          "<= 0); use iteration 1");
    }
    const int k = static_cast<int>(std::ceil(std::log2(x) - kLogBoundaryTol));
    return k < 1 ? 1 : k;
  }
  // DiagonalSafe: smallest k with cell diagonal <= sensing diameter.
  const double region_side = std::sqrt(area);
  for (int k = 1; k <= kMaxIteration; ++k) {
    const double diagonal =
        std::sqrt(2.0) * region_side / static_cast<double>(1u << k);
    if (diagonal <= 2.0 * sensing_radius * (1.0 + kLogBoundaryTol)) {
      return k;
    }
  }
  throw std::domain_error("sensing radius too small: no iteration <= " +
                          std::to_string(kMaxIteration) +
                          " yields cells it can cover");
}

CellCoord index_to_cell(const CurveSpec& spec, WaypointIndex d) {
  spec.validate();
  if (d >= spec.waypoint_count()) {
    throw std::out_of_range("waypoint index " + std::to_string(d) +
                            " out of range for iteration " +
                            std::to_string(spec.iteration));
  }
  const std::uint32_t n = spec.grid_side();
  std::uint32_t x = 0;
  std::uint32_t y = 0;
  WaypointIndex t = d;
  for (std::uint32_t s = 1; s < n; s <<= 1) {
    const auto rx = static_cast<std::uint32_t>(1u & (t >> 1));
    const auto ry = static_cast<std::uint32_t>(1u & (t ^ rx));
    rotate_quadrant(s, x, y, rx, ry);
    x += s * rx;
    y += s * ry;
    t >>= 2;
  }
  return apply_orientation(spec.orientation, n, {x, y});
}

WaypointIndex cell_to_index(const CurveSpec& spec, CellCoord cell) {
  spec.validate();
  const std::uint32_t n = spec.grid_side();
  if (cell.x >= n || cell.y >= n) {
    throw std::out_of_range("cell (" + std::to_string(cell.x) + ", " +
                            std::to_string(cell.y) +
                            ") out of range for iteration " +
                            std::to_string(spec.iteration));
  }
  CellCoord c = unapply_orientation(spec.orientation, n, cell);
  std::uint32_t x = c.x;
  std::uint32_t y = c.y;
  WaypointIndex d = 0;
  for (std::uint32_t s = n >> 1; s > 0; s >>= 1) {
    const std::uint32_t rx = (x & s) ? 1u : 0u;
    const std::uint32_t ry = (y & s) ? 1u : 0u;
    d += static_cast<WaypointIndex>(s) * s * ((3u * rx) ^ ry);
    // Reduce to block-local coordinates before descending.
    x &= s - 1;
    y &= s - 1;
    if (ry == 0) {
      if (rx == 1) {
        x = s - 1 - x;
        y = s - 1 - y;
      }
      std::swap(x, y);
    }
  }
  return d;
}

Point waypoint_position(const CurveSpec& spec, WaypointIndex d) {
  const CellCoord c = index_to_cell(spec, d);
  const double cs = spec.cell_side();
  return {spec.origin.x + cs * (c.x + 0.5), spec.origin.y + cs * (c.y + 0.5)};
}

std::string_view to_string(Orientation o) {
  switch (o) {
    case Orientation::Canonical:
      return "canonical";
    case Orientation::Rot90:
      return "rot90";
    case Orientation::Rot180:
      return "rot180";
    case Orientation::Rot270:
      return "rot270";
    case Orientation::FlipX:
      return "flip_x";
    case Orientation::FlipY:
      return "flip_y";
    case Orientation::Transpose:
      return "transpose";
    case Orientation::AntiTranspose:
      return "anti_transpose";
  }
  return "unknown";
}

}  // namespace sfcplan
