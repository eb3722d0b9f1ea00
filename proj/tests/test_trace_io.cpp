#include <doctest.h>

#include <string>
#include <vector>

#include "sfcplan/trace_io.hpp"

using namespace sfcplan;

namespace {

ScenarioConfig obstacle_config(int k, Connectivity conn,
                               std::vector<WaypointIndex> blocked) {
  ScenarioConfig config;
  config.spec.iteration = k;
  config.spec.side = 1.0;
  config.connectivity = conn;
  config.obstacles = std::move(blocked);
  return config;
}

}  // namespace

TEST_CASE("trace serialization round-trips through the parser") {
  const ScenarioConfig config = obstacle_config(
      3, Connectivity::EightConnected, {22, 23, 24, 25, 40, 41});
  const WorldOracle world = build_world(config);
  const MissionTrace trace = run_mission(config, world);

  const std::string text = serialize_trace_jsonl(trace);
  const std::vector<Event> parsed = parse_trace_jsonl(text);
  REQUIRE(parsed.size() == trace.events.size());
  for (std::size_t i = 0; i < parsed.size(); ++i) {
    CHECK(parsed[i] == trace.events[i]);
  }

  const WaypointGraph graph(world.spec, config.connectivity);
  CHECK(verify_events(parsed, graph, world, trace.start, {}, &trace.metrics)
            .empty());
}

TEST_CASE("trace line format is stable") {
  MissionTrace trace;
  trace.spec.iteration = 1;
  trace.start = 0;
  trace.events = {SenseEvent{0, 1, false}, MoveEvent{0, 1}, VisitEvent{1},
                  AbortEvent{2}, TerminateEvent{}};
  CHECK(serialize_trace_jsonl(trace) ==
        "{\"t\":0,\"type\":\"sense\",\"at\":0,\"target\":1,\"result\":false}\n"
        "{\"t\":1,\"type\":\"move\",\"from\":0,\"to\":1}\n"
        "{\"t\":2,\"type\":\"visit\",\"waypoint\":1}\n"
        "{\"t\":3,\"type\":\"abort\",\"target\":2}\n"
        "{\"t\":4,\"type\":\"terminate\",\"reason\":\"all_reachable_visited\"}"
        "\n");
}

TEST_CASE("metrics document carries the normative field names") {
  MissionMetrics metrics;
  metrics.edges_traversed = 15;
  metrics.cells_visited = 16;
  metrics.confinement.c_prime = 15;
  const std::string text = serialize_metrics_json(metrics);
  CHECK(text.find("\"edges_traversed\": 15") != std::string::npos);
  CHECK(text.find("\"cells_visited\": 16") != std::string::npos);
  CHECK(text.find("\"obstacles_found\": 0") != std::string::npos);
  CHECK(text.find("\"revisit_count\": 0") != std::string::npos);
  CHECK(text.find("\"confinement\"") != std::string::npos);
  CHECK(text.find("\"flagged\": false") != std::string::npos);
  CHECK(text.find("\"c_prime\": 15") != std::string::npos);
  CHECK(text.find("\"missing_below_max\": []") != std::string::npos);
}

TEST_CASE("parser rejects malformed traces") {
  CHECK_THROWS_AS((void)parse_trace_jsonl("not json\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      (void)parse_trace_jsonl("{\"t\":1,\"type\":\"move\",\"from\":0,"
                              "\"to\":1}\n"),
      std::invalid_argument);  // t must start at 0
  CHECK_THROWS_AS(
      (void)parse_trace_jsonl("{\"t\":0,\"type\":\"warp\",\"from\":0}\n"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      (void)parse_trace_jsonl("{\"t\":0,\"type\":\"move\",\"from\":0}\n"),
      std::invalid_argument);
}

TEST_CASE("verifier flags corrupted event streams") {
  const ScenarioConfig config =
      obstacle_config(2, Connectivity::FourConnected, {6, 9});
  const WorldOracle world = build_world(config);
  const MissionTrace trace = run_mission(config, world);
  const WaypointGraph graph(world.spec, config.connectivity);

  CHECK(verify_trace(trace, world).empty());

  SUBCASE("teleporting move") {
    std::vector<Event> events = trace.events;
    for (Event& e : events) {
      if (auto* move = std::get_if<MoveEvent>(&e)) {
        move->to = 15;
        break;
      }
    }
    CHECK(!verify_events(events, graph, world, 0, {}, nullptr).empty());
  }
  SUBCASE("abort without a positive sense") {
    std::vector<Event> events = trace.events;
    events.insert(events.begin(), AbortEvent{5});
    CHECK(!verify_events(events, graph, world, 0, {}, nullptr).empty());
  }
  SUBCASE("sense result contradicting the world") {
    std::vector<Event> events = trace.events;
    for (Event& e : events) {
      if (auto* s = std::get_if<SenseEvent>(&e)) {
        s->result = !s->result;
        break;
      }
    }
    CHECK(!verify_events(events, graph, world, 0, {}, nullptr).empty());
  }
  SUBCASE("events after termination") {
    std::vector<Event> events = trace.events;
    events.push_back(VisitEvent{3});
    CHECK(!verify_events(events, graph, world, 0, {}, nullptr).empty());
  }
  SUBCASE("missing termination") {
    std::vector<Event> events = trace.events;
    events.pop_back();
    CHECK(!verify_events(events, graph, world, 0, {}, nullptr).empty());
  }
  SUBCASE("wrong metrics") {
    MissionMetrics metrics = trace.metrics;
    metrics.edges_traversed += 1;
    CHECK(!verify_events(trace.events, graph, world, 0, {}, &metrics).empty());
  }
}

TEST_CASE("file round trip") {
  const auto dir = std::filesystem::temp_directory_path() / "sfcplan_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "x.txt";
  write_text_file(path, "hello\nworld\n");
  CHECK(read_text_file(path) == "hello\nworld\n");
  std::filesystem::remove_all(dir);
}
