#ifndef SFCPLAN_SCENARIO_HPP
#define SFCPLAN_SCENARIO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>

#include "sfcplan/nonuniform.hpp"
#include "sfcplan/simulator.hpp"

namespace sfcplan {

/// Scenario file problem, with the offending field in the message.
class ScenarioError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses and validates a scenario document:
///
///   {
///     "region": {"origin": [0.0, 0.0], "side": 8.0},
///     "iteration": 3,                 // or "sensing_radius": 1.5
///     "connectivity": "four",         // or "eight" (default "four")
///     "start": 0,                     // default 0
///     "obstacles": {"indices": [22, 23]},
///         // or {"cells": [[1, 6], [1, 7]]}
///         // or {"random": {"density_percent": 10, "seed": 7}}
///         // or {"rects": [[x0, y0, x1, y1], ...]}  (region coordinates)
///     "auto_refine_on_confinement": false,
///     "composite": [{"origin": [0, 8], "side": 8, "iteration": 4}, ...]
///   }
///
/// Exactly one of iteration/sensing_radius; sensing_radius converts through
/// min_iteration. A composite scenario replaces region/iteration/start and
/// only accepts geometric ("rects") obstacles. Unknown or inconsistent
/// fields raise ScenarioError naming the field.
ScenarioConfig parse_scenario_text(const std::string& text);

ScenarioConfig parse_scenario(const std::filesystem::path& path);

/// Composite view of a parsed composite scenario (ids are list positions).
CompositeRegion composite_region_of(const ScenarioConfig& config);

}  // namespace sfcplan

#endif  // SFCPLAN_SCENARIO_HPP
