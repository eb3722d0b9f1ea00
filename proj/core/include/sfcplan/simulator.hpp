#ifndef SFCPLAN_SIMULATOR_HPP
#define SFCPLAN_SIMULATOR_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sfcplan/planner.hpp"

namespace sfcplan {

/// Hidden ground truth: which waypoints of a tessellation are blocked.
/// The planner never reads this directly; it only gets one-cell-range
/// sense answers.
struct WorldOracle {
  CurveSpec spec;
  IndexSet blocked;
};

/// True iff `target` is blocked, asked from the adjacent waypoint `at`.
/// The sensor has one-cell range: non-adjacent queries are rejected, and
/// the querying agent can never legally stand on a blocked cell.
bool sense(const WorldOracle& world, const WaypointGraph& graph,
           WaypointIndex at, WaypointIndex target);

/// Axis-aligned rectangle in region coordinates, used as the geometric
/// obstacle primitive. Arbitrary obstacle footprints are unions of these.
struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;
};

/// Cells whose interior overlaps any of the rectangles. Touching only along
/// a boundary line does not block a cell.
std::vector<WaypointIndex> rasterize_rects(const CurveSpec& spec,
                                           std::span<const Rect> rects);

/// splitmix64: the fixed 64-bit generator behind every seeded scenario, so
/// worlds reproduce bit-exactly across platforms and reimplementations.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

/// Blocks round(density_percent * N / 100) distinct waypoints drawn without
/// replacement from 0..N-1 excluding `start`, via a partial Fisher-Yates
/// shuffle indexed by SplitMix64(seed): step i swaps slot i with slot
/// i + next() % (pool - i). Same seed, same world, on every platform.
WorldOracle make_random_world(const CurveSpec& spec, double density_percent,
                              std::uint64_t seed, WaypointIndex start);

WorldOracle make_world_from_indices(const CurveSpec& spec,
                                    std::span<const WaypointIndex> blocked);

struct RandomObstacles {
  double density_percent = 0.0;
  std::uint64_t seed = 0;
};

/// Where a scenario's blocked cells come from. Index and cell lists are
/// interpreted at the scenario's base iteration; rectangles are pure
/// geometry and survive iteration refinement unchanged.
using ObstacleSource =
    std::variant<std::monostate, std::vector<WaypointIndex>,
                 std::vector<CellCoord>, RandomObstacles, std::vector<Rect>>;

struct SubregionSpec {
  Point origin;
  double side = 1.0;
  int iteration = 1;
};

/// A fully resolved scenario: either one region (spec) or a composite list
/// of subregions traversed in order.
struct ScenarioConfig {
  CurveSpec spec;
  Connectivity connectivity = Connectivity::FourConnected;
  WaypointIndex start = 0;
  ObstacleSource obstacles;
  std::vector<SubregionSpec> composite;  // empty for single-region scenarios
  bool auto_refine_on_confinement = false;

  bool is_composite() const { return !composite.empty(); }
};

/// Obstacle geometry of a scenario, independent of any iteration. Random
/// and index/cell sources are frozen into cell rectangles at the base
/// iteration; re-rasterizing at a finer iteration keeps the same footprint.
std::vector<Rect> obstacle_geometry(const ScenarioConfig& config);

/// Ground truth for the scenario at its base iteration.
WorldOracle build_world(const ScenarioConfig& config);

/// Ground truth for the same geometry rasterized at `spec` (used when a
/// confined mission is re-run at a higher iteration).
WorldOracle build_world_at(const ScenarioConfig& config, const CurveSpec& spec);

struct MissionMetrics {
  std::uint64_t edges_traversed = 0;
  std::uint64_t cells_visited = 0;
  std::uint64_t obstacles_found = 0;
  std::uint64_t revisit_count = 0;
  ConfinementReport confinement;
};

/// Ordered event log of one mission plus the derived metrics.
struct MissionTrace {
  CurveSpec spec;
  Connectivity connectivity = Connectivity::FourConnected;
  WaypointIndex start = 0;
  std::vector<WaypointIndex> initial_obstacles;  // pre-seeded, usually empty
  std::vector<Event> events;
  MissionMetrics metrics;
};

/// Waypoints in the order the agent first reached them, starting with the
/// start waypoint.
std::vector<WaypointIndex> visit_order(const MissionTrace& trace);

/// Runs the online strategy to termination against the hidden world and
/// returns the full trace. The start waypoint must be unblocked. The trace
/// is checked against the mission invariants before it is returned; a
/// violation throws std::logic_error.
MissionTrace run_mission(const ScenarioConfig& config,
                         const WorldOracle& world);

/// Same, with explicit start and pre-seeded obstacles (used by composite
/// missions where entry probing may already have found blocked cells).
MissionTrace run_mission(const WaypointGraph& graph, const WorldOracle& world,
                         WaypointIndex start,
                         const IndexSet* initial_obstacles = nullptr);

}  // namespace sfcplan

#endif  // SFCPLAN_SIMULATOR_HPP
