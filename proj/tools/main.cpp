// sfcplan CLI: run coverage missions from scenario files and write the
// trace, metrics and SVG rendering.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "sfcplan/runner.hpp"
#include "sfcplan/scenario.hpp"

namespace {

std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_seed_range(
    const std::string& text) {
  const auto sep = text.find("..");
  if (sep == std::string::npos) {
    return std::nullopt;
  }
  try {
    const std::uint64_t first = std::stoull(text.substr(0, sep));
    const std::uint64_t last = std::stoull(text.substr(sep + 2));
    return std::pair{first, last};
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Space-filling-curve coverage planner with online obstacle "
               "evasion"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand(
      "run", "Run a scenario and write trace.jsonl, metrics.json, path.svg");
  std::string scenario_path;
  std::string out_dir = "out";
  std::string connectivity;
  std::string seeds_range;
  std::uint64_t seed = 0;
  bool have_seed = false;
  sfcplan::RunOptions options;
  run->add_option("--scenario", scenario_path, "Scenario JSON file")
      ->required();
  run->add_option("--out", out_dir, "Output directory")
      ->capture_default_str();
  run->add_flag("--svg,!--no-svg", options.write_svg,
                "Write path.svg (default on)");
  run->add_option("--seed", seed,
                  "Override the seed of a random obstacle source")
      ->each([&](const std::string&) { have_seed = true; });
  run->add_option("--seeds", seeds_range,
                  "Inclusive seed range A..B for batch runs");
  run->add_option("--connectivity", connectivity,
                  "Override connectivity: four or eight")
      ->check(CLI::IsMember({"four", "eight"}));
  run->add_flag("--fail-on-confinement", options.fail_on_confinement,
                "Exit with status 2 when the final run reports confinement");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : sfcplan::kExitUsage;
  }

  try {
    if (have_seed) {
      options.seed = seed;
    }
    if (!seeds_range.empty()) {
      options.seeds = parse_seed_range(seeds_range);
      if (!options.seeds) {
        std::cerr << "error: --seeds expects an inclusive range like 0..9\n";
        return sfcplan::kExitUsage;
      }
    }
    if (connectivity == "four") {
      options.connectivity = sfcplan::Connectivity::FourConnected;
    } else if (connectivity == "eight") {
      options.connectivity = sfcplan::Connectivity::EightConnected;
    }

    const sfcplan::ScenarioConfig config =
        sfcplan::parse_scenario(scenario_path);
    return sfcplan::run_command(config, out_dir, options);
  } catch (const sfcplan::ScenarioError& err) {
    std::cerr << "scenario error: " << err.what() << '\n';
    return sfcplan::kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return sfcplan::kExitUsage;
  }
}
