#ifndef SFCPLAN_RENDER_SVG_HPP
#define SFCPLAN_RENDER_SVG_HPP

#include <span>
#include <string>

#include "sfcplan/nonuniform.hpp"
#include "sfcplan/simulator.hpp"

namespace sfcplan {

/// Well-formed SVG of one mission: one rect per cell (detected obstacles
/// brown, undetected blocked cells dark), the curve polyline in a light
/// stroke, the executed path in a dark stroke, a star on the start cell and
/// an inverted triangle on the terminal cell.
std::string render_mission_svg(const MissionTrace& trace,
                               const WorldOracle& world);

/// Composite rendering: one <g> group per subregion (cells, curve, path)
/// plus an arrow per executed transition.
std::string render_composite_svg(const CompositeRegion& region,
                                 const CompositeMissionResult& result,
                                 std::span<const WorldOracle> worlds);

}  // namespace sfcplan

#endif  // SFCPLAN_RENDER_SVG_HPP
