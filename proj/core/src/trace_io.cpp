#include "sfcplan/trace_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sfcplan {
namespace {

using nlohmann::json;

struct EventWriter {
  std::string& out;

  void operator()(const MoveEvent& e) const {
    out += "\"type\":\"move\",\"from\":" + std::to_string(e.from) +
           ",\"to\":" + std::to_string(e.to);
  }
  void operator()(const SenseEvent& e) const {
    out += "\"type\":\"sense\",\"at\":" + std::to_string(e.at) +
           ",\"target\":" + std::to_string(e.target) +
           ",\"result\":" + (e.result ? "true" : "false");
  }
  void operator()(const AbortEvent& e) const {
    out += "\"type\":\"abort\",\"target\":" + std::to_string(e.target);
  }
  void operator()(const VisitEvent& e) const {
    out += "\"type\":\"visit\",\"waypoint\":" + std::to_string(e.waypoint);
  }
  void operator()(const TerminateEvent&) const {
    out += "\"type\":\"terminate\",\"reason\":\"all_reachable_visited\"";
  }
};

std::uint64_t require_u64(const json& j, const char* key, std::size_t line) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw std::invalid_argument("trace line " + std::to_string(line) +
                                ": missing or invalid \"" + key + "\"");
  }
  return j[key].get<std::uint64_t>();
}

}  // namespace

std::string serialize_trace_jsonl(const MissionTrace& trace) {
  std::string out;
  out.reserve(trace.events.size() * 48);
  std::uint64_t t = 0;
  for (const Event& event : trace.events) {
    out += "{\"t\":" + std::to_string(t++) + ",";
    std::visit(EventWriter{out}, event);
    out += "}\n";
  }
  return out;
}

std::string serialize_metrics_json(const MissionMetrics& metrics) {
  nlohmann::ordered_json j;
  j["edges_traversed"] = metrics.edges_traversed;
  j["cells_visited"] = metrics.cells_visited;
  j["obstacles_found"] = metrics.obstacles_found;
  j["revisit_count"] = metrics.revisit_count;
  nlohmann::ordered_json confinement;
  confinement["flagged"] = metrics.confinement.flagged;
  confinement["c_prime"] = metrics.confinement.c_prime;
  confinement["missing_below_max"] = metrics.confinement.missing_below_max;
  j["confinement"] = confinement;
  return j.dump(2) + "\n";
}

std::vector<Event> parse_trace_jsonl(const std::string& text) {
  std::vector<Event> events;
  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (line.empty()) {
      continue;
    }
    json j;
    try {
      j = json::parse(line);
    } catch (const json::parse_error& err) {
      throw std::invalid_argument("trace line " + std::to_string(line_no) +
                                  ": " + err.what());
    }
    if (require_u64(j, "t", line_no) != events.size()) {
      throw std::invalid_argument("trace line " + std::to_string(line_no) +
                                  ": sequence number out of order");
    }
    const std::string type = j.value("type", "");
    if (type == "move") {
      events.push_back(MoveEvent{require_u64(j, "from", line_no),
                                 require_u64(j, "to", line_no)});
    } else if (type == "sense") {
      if (!j.contains("result") || !j["result"].is_boolean()) {
        throw std::invalid_argument("trace line " + std::to_string(line_no) +
                                    ": missing or invalid \"result\"");
      }
      events.push_back(SenseEvent{require_u64(j, "at", line_no),
                                  require_u64(j, "target", line_no),
                                  j["result"].get<bool>()});
    } else if (type == "abort") {
      events.push_back(AbortEvent{require_u64(j, "target", line_no)});
    } else if (type == "visit") {
      events.push_back(VisitEvent{require_u64(j, "waypoint", line_no)});
    } else if (type == "terminate") {
      events.push_back(TerminateEvent{});
    } else {
      throw std::invalid_argument("trace line " + std::to_string(line_no) +
                                  ": unknown event type \"" + type + "\"");
    }
  }
  return events;
}

std::vector<std::string> verify_events(
    const std::vector<Event>& events, const WaypointGraph& graph,
    const WorldOracle& world, WaypointIndex start,
    const std::vector<WaypointIndex>& initial_obstacles,
    const MissionMetrics* metrics) {
  std::vector<std::string> violations;
  const auto fail = [&](std::size_t idx, const std::string& message) {
    violations.push_back("event " + std::to_string(idx) + ": " + message);
  };

  const WaypointIndex n = graph.vertex_count();
  IndexSet visited(n);
  IndexSet obstacles(n);
  if (start >= n || world.blocked.contains(start)) {
    return {"start waypoint invalid or blocked"};
  }
  visited.insert(start);
  for (const WaypointIndex d : initial_obstacles) {
    if (d >= n) {
      return {"initial obstacle out of range"};
    }
    obstacles.insert(d);
  }

  WaypointIndex position = start;
  std::uint64_t edges = 0;
  std::uint64_t revisits = 0;
  bool terminated = false;

  for (std::size_t i = 0; i < events.size(); ++i) {
    if (terminated) {
      fail(i, "event after termination");
      break;
    }
    const Event& event = events[i];
    if (const auto* move = std::get_if<MoveEvent>(&event)) {
      if (move->from != position) {
        fail(i, "move does not start at the agent position");
      }
      if (!graph.adjacent(move->from, move->to)) {
        fail(i, "move between non-adjacent waypoints");
      }
      if (world.blocked.contains(move->to)) {
        fail(i, "move onto a blocked waypoint");
      }
      const bool lands_on_visited = visited.contains(move->to);
      const bool next_is_visit =
          i + 1 < events.size() &&
          std::holds_alternative<VisitEvent>(events[i + 1]) &&
          std::get<VisitEvent>(events[i + 1]).waypoint == move->to;
      if (!lands_on_visited && !next_is_visit) {
        // Route interiors must already be visited territory.
        fail(i, "move onto unvisited waypoint without visiting it");
      }
      if (lands_on_visited) {
        ++revisits;
      }
      position = move->to;
      ++edges;
    } else if (const auto* sense_ev = std::get_if<SenseEvent>(&event)) {
      if (sense_ev->at != position) {
        fail(i, "sense issued away from the agent position");
      }
      if (!graph.adjacent(sense_ev->at, sense_ev->target)) {
        fail(i, "sense between non-adjacent waypoints");
      }
      if (sense_ev->result != world.blocked.contains(sense_ev->target)) {
        fail(i, "sense result contradicts the world");
      }
    } else if (const auto* abort_ev = std::get_if<AbortEvent>(&event)) {
      const SenseEvent* prior =
          i > 0 ? std::get_if<SenseEvent>(&events[i - 1]) : nullptr;
      if (prior == nullptr || !prior->result ||
          prior->target != abort_ev->target) {
        fail(i, "abort not preceded by a positive sense of the same target");
      }
      if (obstacles.contains(abort_ev->target)) {
        fail(i, "obstacle detected twice");
      } else if (abort_ev->target < n) {
        obstacles.insert(abort_ev->target);
      } else {
        fail(i, "abort target out of range");
      }
    } else if (const auto* visit = std::get_if<VisitEvent>(&event)) {
      if (visit->waypoint != position) {
        fail(i, "visit away from the agent position");
      }
      if (visit->waypoint >= n || visited.contains(visit->waypoint)) {
        fail(i, "visit repeated or out of range");
      } else {
        visited.insert(visit->waypoint);
      }
    } else if (std::holds_alternative<TerminateEvent>(event)) {
      terminated = true;
      if (i + 1 != events.size()) {
        fail(i, "terminate is not the final event");
      }
    }
  }
  if (!terminated) {
    violations.push_back("trace does not terminate");
  }
  if (violations.empty() && !frontier(graph, visited, obstacles).empty()) {
    violations.push_back("terminated with a nonempty frontier");
  }
  if (violations.empty() && metrics != nullptr) {
    if (metrics->edges_traversed != edges) {
      violations.push_back("metrics edges_traversed mismatch");
    }
    if (metrics->cells_visited != visited.size()) {
      violations.push_back("metrics cells_visited mismatch");
    }
    if (metrics->obstacles_found != obstacles.size()) {
      violations.push_back("metrics obstacles_found mismatch");
    }
    if (metrics->revisit_count != revisits) {
      violations.push_back("metrics revisit_count mismatch");
    }
    if (edges != revisits + (visited.size() - 1)) {
      violations.push_back("edge/revisit accounting broken");
    }
    const ConfinementReport expected =
        confinement_check(visited, obstacles, *visited.max_element());
    if (expected.flagged != metrics->confinement.flagged ||
        expected.c_prime != metrics->confinement.c_prime ||
        expected.missing_below_max !=
            metrics->confinement.missing_below_max) {
      violations.push_back("confinement report mismatch");
    }
  }
  return violations;
}

std::vector<std::string> verify_trace(const MissionTrace& trace,
                                      const WorldOracle& world) {
  const WaypointGraph graph(trace.spec, trace.connectivity);
  return verify_events(trace.events, graph, world, trace.start,
                       trace.initial_obstacles, &trace.metrics);
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out.write(content.data(),
            static_cast<std::streamsize>(content.size()));
  if (!out) {
    throw std::runtime_error("failed writing " + path.string());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace sfcplan
