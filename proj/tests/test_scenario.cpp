#include <doctest.h>

#include <string>

#include "sfcplan/scenario.hpp"

using namespace sfcplan;

TEST_CASE("minimal scenario parses with defaults") {
  const ScenarioConfig config = parse_scenario_text(
      R"({"region": {"side": 4.0}, "iteration": 2})");
  CHECK(config.spec.iteration == 2);
  CHECK(config.spec.waypoint_count() == 16);
  CHECK(config.spec.origin == Point{0.0, 0.0});
  CHECK(config.connectivity == Connectivity::FourConnected);
  CHECK(config.start == 0);
  CHECK(std::holds_alternative<std::monostate>(config.obstacles));
  CHECK(!config.auto_refine_on_confinement);
}

TEST_CASE("sensing radius converts to an iteration") {
  // Area 16 with s = 1: ceil(log2(16/sqrt(2) - 1)) = 4.
  const ScenarioConfig config = parse_scenario_text(
      R"({"region": {"side": 4.0}, "sensing_radius": 1.0})");
  CHECK(config.spec.iteration == 4);

  // Radius so large the formula leaves its domain: fall back to 1.
  const ScenarioConfig coarse = parse_scenario_text(
      R"({"region": {"side": 4.0}, "sensing_radius": 100.0})");
  CHECK(coarse.spec.iteration == 1);
}

TEST_CASE("every obstacle source parses") {
  CHECK(std::holds_alternative<std::vector<WaypointIndex>>(
      parse_scenario_text(
          R"({"region": {"side": 1}, "iteration": 3,
              "obstacles": {"indices": [22, 23, 24, 25]}})")
          .obstacles));
  CHECK(std::holds_alternative<std::vector<CellCoord>>(
      parse_scenario_text(
          R"({"region": {"side": 1}, "iteration": 3,
              "obstacles": {"cells": [[1, 6], [1, 7]]}})")
          .obstacles));
  CHECK(std::holds_alternative<RandomObstacles>(
      parse_scenario_text(
          R"({"region": {"side": 1}, "iteration": 3,
              "obstacles": {"random": {"density_percent": 10, "seed": 7}}})")
          .obstacles));
  CHECK(std::holds_alternative<std::vector<Rect>>(
      parse_scenario_text(
          R"({"region": {"side": 8}, "iteration": 2,
              "obstacles": {"rects": [[0, 2, 2, 4]]}})")
          .obstacles));
}

TEST_CASE("schema violations name the offending field") {
  const auto rejects = [](const std::string& text, const std::string& needle) {
    try {
      (void)parse_scenario_text(text);
      FAIL_CHECK("expected rejection: " << text);
    } catch (const ScenarioError& err) {
      const std::string what = err.what();
      CHECK_MESSAGE(what.find(needle) != std::string::npos,
                    "message \"" << what << "\" lacks \"" << needle << "\"");
    }
  };

  rejects("{", "invalid JSON");
  rejects(R"({"region": {"side": 4}})", "iteration");
  rejects(R"({"region": {"side": 4}, "iteration": 2, "sensing_radius": 1})",
          "iteration");
  rejects(R"({"region": {"side": 4}, "iteration": 0})", "iteration");
  rejects(R"({"region": {"side": -4}, "iteration": 2})", "region.side");
  rejects(R"({"region": {"side": 4}, "iteration": 2, "mystery": 1})",
          "mystery");
  rejects(R"({"region": {"side": 4, "extra": 1}, "iteration": 2})",
          "region.extra");
  rejects(R"({"region": {"side": 4}, "iteration": 2, "start": 16})", "start");
  rejects(R"({"region": {"side": 4}, "iteration": 2,
              "obstacles": {"indices": [99]}})",
          "obstacles.indices");
  rejects(R"({"region": {"side": 4}, "iteration": 2,
              "obstacles": {"cells": [[4, 0]]}})",
          "obstacles.cells");
  rejects(R"({"region": {"side": 4}, "iteration": 2,
              "obstacles": {"random": {"density_percent": 100, "seed": 0}}})",
          "density_percent");
  rejects(R"({"region": {"side": 4}, "iteration": 2,
              "obstacles": {"random": {"density_percent": 10}}})",
          "seed");
  rejects(R"({"region": {"side": 4}, "iteration": 2,
              "obstacles": {"indices": [1], "cells": [[0, 1]]}})",
          "obstacles");
  rejects(R"({"region": {"side": 4}, "iteration": 2,
              "obstacles": {"rects": [[0, 0, 0, 1]]}})",
          "rects");
  rejects(R"({"region": {"side": 4}, "iteration": 2, "connectivity": "six"})",
          "connectivity");
}

TEST_CASE("composite scenarios parse into subregion lists") {
  const ScenarioConfig config = parse_scenario_text(R"({
    "connectivity": "four",
    "composite": [
      {"origin": [0, 8], "side": 8, "iteration": 4},
      {"origin": [8, 8], "side": 8, "iteration": 3},
      {"origin": [8, 0], "side": 8, "iteration": 1},
      {"origin": [0, 0], "side": 8, "iteration": 2}
    ],
    "obstacles": {"rects": [[1, 9, 2, 10]]}
  })");
  REQUIRE(config.is_composite());
  CHECK(config.composite.size() == 4);
  const CompositeRegion region = composite_region_of(config);
  CHECK(region.subregions[0].spec.iteration == 4);
  CHECK(region.subregions[3].spec.side == 8.0);
}

TEST_CASE("composite scenarios reject single-region fields") {
  const auto rejects = [](const std::string& text) {
    CHECK_THROWS_AS((void)parse_scenario_text(text), ScenarioError);
  };
  rejects(R"({"iteration": 2,
              "composite": [{"origin": [0,0], "side": 4, "iteration": 1},
                            {"origin": [4,0], "side": 4, "iteration": 1}]})");
  rejects(R"({"composite": [{"origin": [0,0], "side": 4, "iteration": 1},
                            {"origin": [4,0], "side": 4, "iteration": 1}],
              "obstacles": {"indices": [1]}})");
  rejects(R"({"composite": [{"origin": [0,0], "side": 4, "iteration": 1},
                            {"origin": [4,0], "side": 4, "iteration": 1}],
              "auto_refine_on_confinement": true})");
  // Subregions out of contact.
  rejects(R"({"composite": [{"origin": [0,0], "side": 4, "iteration": 1},
                            {"origin": [9,0], "side": 4, "iteration": 1}]})");
}

TEST_CASE("parse_scenario surfaces missing files") {
  CHECK_THROWS(parse_scenario("/nonexistent/scenario.json"));
}
