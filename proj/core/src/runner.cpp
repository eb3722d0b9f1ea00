#include "sfcplan/runner.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "sfcplan/nonuniform.hpp"
#include "sfcplan/render_svg.hpp"
#include "sfcplan/scenario.hpp"
#include "sfcplan/trace_io.hpp"

namespace sfcplan {
namespace {

namespace fs = std::filesystem;

// Auto-refine re-runs the whole mission at k+1; give up after a few climbs.
constexpr int kMaxRefineRuns = 4;

void write_mission_outputs(const fs::path& dir, const MissionTrace& trace,
                           const WorldOracle& world, bool write_svg) {
  fs::create_directories(dir);
  write_text_file(dir / "trace.jsonl", serialize_trace_jsonl(trace));
  write_text_file(dir / "metrics.json", serialize_metrics_json(trace.metrics));
  if (write_svg) {
    write_text_file(dir / "path.svg", render_mission_svg(trace, world));
  }
}

/// Start waypoint for a refined iteration: the cell holding the base start
/// cell's center. Waypoint 0 stays waypoint 0 at every iteration.
WaypointIndex start_at(const ScenarioConfig& config, const CurveSpec& spec) {
  const Point p = waypoint_position(config.spec, config.start);
  const double cs = spec.cell_side();
  const auto ix = static_cast<std::uint32_t>(
      std::floor((p.x - spec.origin.x) / cs));
  const auto iy = static_cast<std::uint32_t>(
      std::floor((p.y - spec.origin.y) / cs));
  return cell_to_index(spec, {ix, iy});
}

bool run_single(const ScenarioConfig& config, const fs::path& out_dir,
                const RunOptions& options) {
  CurveSpec spec = config.spec;
  bool flagged = false;
  for (int run = 1; run <= kMaxRefineRuns; ++run) {
    ScenarioConfig run_config = config;
    run_config.spec = spec;
    run_config.start = run == 1 ? config.start : start_at(config, spec);
    const WorldOracle world = build_world_at(config, spec);
    if (world.blocked.contains(run_config.start)) {
      throw std::invalid_argument("start waypoint is blocked in this world");
    }
    const WaypointGraph graph(spec, config.connectivity);
    const MissionTrace trace =
        run_mission(graph, world, run_config.start, nullptr);
    const fs::path dir =
        run == 1 ? out_dir : out_dir / ("run-" + std::to_string(run));
    write_mission_outputs(dir, trace, world, options.write_svg);
    flagged = trace.metrics.confinement.flagged;
    if (!config.auto_refine_on_confinement || !flagged ||
        spec.iteration >= kMaxIteration) {
      break;
    }
    ++spec.iteration;
  }
  return flagged;
}

bool run_composite(const ScenarioConfig& config, const fs::path& out_dir,
                   const RunOptions& options) {
  const CompositeRegion region = composite_region_of(config);
  const std::vector<Rect> rects =
      std::holds_alternative<std::vector<Rect>>(config.obstacles)
          ? std::get<std::vector<Rect>>(config.obstacles)
          : std::vector<Rect>{};
  std::vector<WorldOracle> worlds;
  for (const Subregion& sub : region.subregions) {
    worlds.push_back(
        make_world_from_indices(sub.spec, rasterize_rects(sub.spec, rects)));
  }
  if (worlds[0].blocked.contains(0)) {
    throw std::invalid_argument(
        "first subregion's start waypoint is blocked");
  }

  const CompositeMissionResult result =
      run_composite_mission(region, worlds, config.connectivity);

  fs::create_directories(out_dir);
  bool any_flagged = false;
  nlohmann::ordered_json summary;
  summary["composite"] = true;
  summary["subregions"] = nlohmann::ordered_json::array();
  nlohmann::ordered_json totals;
  std::uint64_t total_edges = 0;
  std::uint64_t total_cells = 0;
  std::uint64_t total_obstacles = 0;
  std::uint64_t total_revisits = 0;
  for (std::size_t i = 0; i < region.subregions.size(); ++i) {
    nlohmann::ordered_json entry;
    entry["id"] = region.subregions[i].id;
    if (result.traces[i].has_value()) {
      const MissionTrace& trace = *result.traces[i];
      entry["entered"] = true;
      entry["start"] = trace.start;
      entry["metrics"] =
          nlohmann::ordered_json::parse(serialize_metrics_json(trace.metrics));
      write_mission_outputs(out_dir / ("sub-" + std::to_string(i)), trace,
                            worlds[i], options.write_svg);
      any_flagged = any_flagged || trace.metrics.confinement.flagged;
      total_edges += trace.metrics.edges_traversed;
      total_cells += trace.metrics.cells_visited;
      total_obstacles += trace.metrics.obstacles_found;
      total_revisits += trace.metrics.revisit_count;
    } else {
      entry["entered"] = false;
      for (const TransitionRecord& tr : result.transitions) {
        if (tr.to_id == region.subregions[i].id && tr.skipped) {
          entry["skip_reason"] = tr.skip_reason;
        }
      }
    }
    summary["subregions"].push_back(entry);
  }
  totals["edges_traversed"] = total_edges;
  totals["cells_visited"] = total_cells;
  totals["obstacles_found"] = total_obstacles;
  totals["revisit_count"] = total_revisits;
  summary["totals"] = totals;
  write_text_file(out_dir / "metrics.json", summary.dump(2) + "\n");

  nlohmann::ordered_json transitions = nlohmann::ordered_json::array();
  for (const TransitionRecord& tr : result.transitions) {
    nlohmann::ordered_json t;
    t["from"] = tr.from_id;
    t["to"] = tr.to_id;
    t["terminal_a"] = tr.terminal_a;
    if (!tr.skipped || !tr.route_to_exit.empty()) {
      t["exit_b"] = tr.exit_b;
      t["route_to_exit"] = tr.route_to_exit;
    }
    nlohmann::ordered_json probes = nlohmann::ordered_json::array();
    for (const CandidateProbe& probe : tr.probes) {
      probes.push_back({{"waypoint", probe.waypoint},
                        {"blocked", probe.blocked}});
    }
    t["probes"] = probes;
    if (tr.entry_c) {
      t["entry_c"] = *tr.entry_c;
    }
    t["skipped"] = tr.skipped;
    if (tr.skipped) {
      t["skip_reason"] = tr.skip_reason;
    }
    transitions.push_back(t);
  }
  write_text_file(out_dir / "transitions.json", transitions.dump(2) + "\n");

  if (options.write_svg) {
    write_text_file(out_dir / "path.svg",
                    render_composite_svg(region, result, worlds));
  }
  return any_flagged;
}

}  // namespace

int run_command(const ScenarioConfig& config, const fs::path& out_dir,
                const RunOptions& options) {
  ScenarioConfig effective = config;
  if (options.connectivity) {
    effective.connectivity = *options.connectivity;
  }
  if (options.seed || options.seeds) {
    if (!std::holds_alternative<RandomObstacles>(effective.obstacles)) {
      throw std::invalid_argument(
          "--seed/--seeds apply only to scenarios with random obstacles");
    }
    if (options.seed && options.seeds) {
      throw std::invalid_argument("--seed and --seeds are mutually exclusive");
    }
  }

  bool flagged = false;
  if (options.seeds) {
    const auto [first, last] = *options.seeds;
    if (last < first) {
      throw std::invalid_argument("seed range end before start");
    }
    for (std::uint64_t s = first; s <= last; ++s) {
      ScenarioConfig seeded = effective;
      std::get<RandomObstacles>(seeded.obstacles).seed = s;
      const bool f = run_single(seeded, out_dir / ("seed-" + std::to_string(s)),
                                options);
      flagged = flagged || f;
    }
  } else {
    if (options.seed) {
      std::get<RandomObstacles>(effective.obstacles).seed = *options.seed;
    }
    flagged = effective.is_composite()
                  ? run_composite(effective, out_dir, options)
                  : run_single(effective, out_dir, options);
  }
  return options.fail_on_confinement && flagged ? kExitConfined : kExitOk;
}

}  // namespace sfcplan
