#ifndef SFCPLAN_RUNNER_HPP
#define SFCPLAN_RUNNER_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <utility>

#include "sfcplan/simulator.hpp"

namespace sfcplan {

struct RunOptions {
  bool write_svg = true;
  bool fail_on_confinement = false;
  /// Replaces the seed of a random obstacle source (error otherwise).
  std::optional<std::uint64_t> seed;
  /// Inclusive seed range for batch runs; outputs go to seed-<n>/ subdirs.
  std::optional<std::pair<std::uint64_t, std::uint64_t>> seeds;
  std::optional<Connectivity> connectivity;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitConfined = 2;

/// Executes a scenario and writes trace.jsonl, metrics.json and path.svg
/// into out_dir (per-seed subdirectories for batch runs; run-2/, run-3/...
/// for auto-refined re-runs at higher iterations; sub-<i>/ per subregion
/// plus transitions.json for composite scenarios). Returns kExitOk, or
/// kExitConfined when fail_on_confinement is set and the final run of any
/// mission still reports confinement. I/O problems and option misuse throw.
int run_command(const ScenarioConfig& config,
                const std::filesystem::path& out_dir,
                const RunOptions& options);

}  // namespace sfcplan

#endif  // SFCPLAN_RUNNER_HPP
