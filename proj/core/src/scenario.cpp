#include "sfcplan/scenario.hpp"

#include <cmath>
#include <set>

#include <json.hpp>

#include "sfcplan/trace_io.hpp"

namespace sfcplan {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& message) {
  throw ScenarioError(field + ": " + message);
}

void reject_unknown_keys(const json& obj, const std::string& where,
                         const std::set<std::string>& allowed) {
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      fail(where.empty() ? key : where + "." + key, "unknown field");
    }
  }
}

double require_number(const json& obj, const std::string& field) {
  if (!obj.contains(field) || !obj[field].is_number()) {
    fail(field, "expected a number");
  }
  return obj[field].get<double>();
}

Point parse_origin(const json& region, const std::string& where) {
  if (!region.contains("origin")) {
    return {0.0, 0.0};
  }
  const json& o = region["origin"];
  if (!o.is_array() || o.size() != 2 || !o[0].is_number() ||
      !o[1].is_number()) {
    fail(where + ".origin", "expected [x, y]");
  }
  return {o[0].get<double>(), o[1].get<double>()};
}

int parse_subregion_iteration(const json& obj, const std::string& where) {
  if (!obj.contains("iteration") || !obj["iteration"].is_number_integer()) {
    fail(where + ".iteration", "expected an integer");
  }
  return obj["iteration"].get<int>();
}

ObstacleSource parse_obstacles(const json& obstacles, bool composite) {
  reject_unknown_keys(obstacles, "obstacles",
                      {"indices", "cells", "random", "rects"});
  if (obstacles.size() != 1) {
    fail("obstacles",
         "exactly one source required (indices, cells, random or rects)");
  }
  if (composite && !obstacles.contains("rects")) {
    fail("obstacles",
         "composite scenarios take geometric obstacles only (rects)");
  }
  if (obstacles.contains("indices")) {
    const json& arr = obstacles["indices"];
    if (!arr.is_array()) {
      fail("obstacles.indices", "expected an array of waypoint indices");
    }
    std::vector<WaypointIndex> indices;
    for (const json& v : arr) {
      if (!v.is_number_unsigned()) {
        fail("obstacles.indices", "indices must be non-negative integers");
      }
      indices.push_back(v.get<WaypointIndex>());
    }
    return indices;
  }
  if (obstacles.contains("cells")) {
    const json& arr = obstacles["cells"];
    if (!arr.is_array()) {
      fail("obstacles.cells", "expected an array of [x, y] cells");
    }
    std::vector<CellCoord> cells;
    for (const json& v : arr) {
      if (!v.is_array() || v.size() != 2 || !v[0].is_number_unsigned() ||
          !v[1].is_number_unsigned()) {
        fail("obstacles.cells", "each cell must be [x, y] with x, y >= 0");
      }
      cells.push_back(
          {v[0].get<std::uint32_t>(), v[1].get<std::uint32_t>()});
    }
    return cells;
  }
  if (obstacles.contains("random")) {
    const json& r = obstacles["random"];
    if (!r.is_object()) {
      fail("obstacles.random", "expected an object");
    }
    reject_unknown_keys(r, "obstacles.random", {"density_percent", "seed"});
    RandomObstacles random;
    random.density_percent = require_number(r, "density_percent");
    if (random.density_percent < 0.0 || random.density_percent >= 100.0) {
      fail("obstacles.random.density_percent", "must be in [0, 100)");
    }
    if (!r.contains("seed") || !r["seed"].is_number_unsigned()) {
      fail("obstacles.random.seed", "expected a non-negative integer");
    }
    random.seed = r["seed"].get<std::uint64_t>();
    return random;
  }
  const json& arr = obstacles["rects"];
  if (!arr.is_array()) {
    fail("obstacles.rects", "expected an array of [x0, y0, x1, y1]");
  }
  std::vector<Rect> rects;
  for (const json& v : arr) {
    if (!v.is_array() || v.size() != 4 || !v[0].is_number() ||
        !v[1].is_number() || !v[2].is_number() || !v[3].is_number()) {
      fail("obstacles.rects", "each rect must be [x0, y0, x1, y1]");
    }
    const Rect rect{v[0].get<double>(), v[1].get<double>(),
                    v[2].get<double>(), v[3].get<double>()};
    if (!(rect.x1 > rect.x0) || !(rect.y1 > rect.y0)) {
      fail("obstacles.rects", "rect has no area");
    }
    rects.push_back(rect);
  }
  return rects;
}

void validate_single_region(ScenarioConfig& config) {
  config.spec.validate();
  const WaypointIndex n = config.spec.waypoint_count();
  if (config.start >= n) {
    fail("start", "waypoint " + std::to_string(config.start) +
                      " out of range for iteration " +
                      std::to_string(config.spec.iteration));
  }
  if (const auto* indices =
          std::get_if<std::vector<WaypointIndex>>(&config.obstacles)) {
    for (const WaypointIndex d : *indices) {
      if (d >= n) {
        fail("obstacles.indices", "waypoint " + std::to_string(d) +
                                      " out of range for iteration " +
                                      std::to_string(config.spec.iteration));
      }
    }
  } else if (const auto* cells =
                 std::get_if<std::vector<CellCoord>>(&config.obstacles)) {
    for (const CellCoord c : *cells) {
      if (c.x >= config.spec.grid_side() || c.y >= config.spec.grid_side()) {
        fail("obstacles.cells", "cell out of range for iteration " +
                                    std::to_string(config.spec.iteration));
      }
    }
  }
}

}  // namespace

ScenarioConfig parse_scenario_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& err) {
    throw ScenarioError(std::string("invalid JSON: ") + err.what());
  }
  if (!doc.is_object()) {
    throw ScenarioError("scenario must be a JSON object");
  }
  reject_unknown_keys(doc, "",
                      {"region", "iteration", "sensing_radius", "connectivity",
                       "start", "obstacles", "composite",
                       "auto_refine_on_confinement"});

  ScenarioConfig config;

  if (doc.contains("connectivity")) {
    const std::string c = doc["connectivity"].is_string()
                              ? doc["connectivity"].get<std::string>()
                              : std::string();
    if (c == "four") {
      config.connectivity = Connectivity::FourConnected;
    } else if (c == "eight") {
      config.connectivity = Connectivity::EightConnected;
    } else {
      fail("connectivity", "expected \"four\" or \"eight\"");
    }
  }
  if (doc.contains("auto_refine_on_confinement")) {
    if (!doc["auto_refine_on_confinement"].is_boolean()) {
      fail("auto_refine_on_confinement", "expected a boolean");
    }
    config.auto_refine_on_confinement =
        doc["auto_refine_on_confinement"].get<bool>();
  }

  const bool composite = doc.contains("composite");
  if (composite) {
    for (const char* key : {"region", "iteration", "sensing_radius", "start"}) {
      if (doc.contains(key)) {
        fail(key, "not allowed in a composite scenario");
      }
    }
    if (config.auto_refine_on_confinement) {
      fail("auto_refine_on_confinement",
           "not supported for composite scenarios");
    }
    const json& subs = doc["composite"];
    if (!subs.is_array() || subs.empty()) {
      fail("composite", "expected a nonempty array of subregions");
    }
    for (std::size_t i = 0; i < subs.size(); ++i) {
      const std::string where = "composite[" + std::to_string(i) + "]";
      const json& sub = subs[i];
      if (!sub.is_object()) {
        fail(where, "expected an object");
      }
      reject_unknown_keys(sub, where, {"origin", "side", "iteration"});
      SubregionSpec s;
      s.origin = parse_origin(sub, where);
      s.side = require_number(sub, "side");
      if (!(s.side > 0.0)) {
        fail(where + ".side", "must be positive");
      }
      s.iteration = parse_subregion_iteration(sub, where);
      config.composite.push_back(s);
    }
  } else {
    if (!doc.contains("region") || !doc["region"].is_object()) {
      fail("region", "required object with origin and side");
    }
    const json& region = doc["region"];
    reject_unknown_keys(region, "region", {"origin", "side"});
    config.spec.origin = parse_origin(region, "region");
    config.spec.side = require_number(region, "side");
    if (!(config.spec.side > 0.0)) {
      fail("region.side", "must be positive");
    }

    const bool has_iteration = doc.contains("iteration");
    const bool has_radius = doc.contains("sensing_radius");
    if (has_iteration == has_radius) {
      fail("iteration",
           "exactly one of iteration or sensing_radius is required");
    }
    if (has_iteration) {
      if (!doc["iteration"].is_number_integer()) {
        fail("iteration", "expected an integer");
      }
      config.spec.iteration = doc["iteration"].get<int>();
    } else {
      const double radius = require_number(doc, "sensing_radius");
      if (!(radius > 0.0)) {
        fail("sensing_radius", "must be positive");
      }
      const double area = config.spec.side * config.spec.side;
      try {
        config.spec.iteration = min_iteration(area, radius);
      } catch (const std::domain_error&) {
        config.spec.iteration = 1;  // radius already covers the region
      }
    }
    if (doc.contains("start")) {
      if (!doc["start"].is_number_unsigned()) {
        fail("start", "expected a non-negative integer");
      }
      config.start = doc["start"].get<WaypointIndex>();
    }
  }

  if (doc.contains("obstacles")) {
    if (!doc["obstacles"].is_object()) {
      fail("obstacles", "expected an object");
    }
    config.obstacles = parse_obstacles(doc["obstacles"], composite);
  }

  try {
    if (composite) {
      composite_region_of(config).validate();
    } else {
      validate_single_region(config);
    }
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::invalid_argument& err) {
    throw ScenarioError(err.what());
  }
  return config;
}

ScenarioConfig parse_scenario(const std::filesystem::path& path) {
  return parse_scenario_text(read_text_file(path));
}

CompositeRegion composite_region_of(const ScenarioConfig& config) {
  if (!config.is_composite()) {
    throw std::invalid_argument("scenario is not composite");
  }
  CompositeRegion region;
  for (std::size_t i = 0; i < config.composite.size(); ++i) {
    const SubregionSpec& s = config.composite[i];
    CurveSpec spec;
    spec.origin = s.origin;
    spec.side = s.side;
    spec.iteration = s.iteration;
    region.subregions.push_back({spec, static_cast<int>(i)});
  }
  return region;
}

}  // namespace sfcplan
