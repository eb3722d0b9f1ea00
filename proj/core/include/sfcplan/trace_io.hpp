#ifndef SFCPLAN_TRACE_IO_HPP
#define SFCPLAN_TRACE_IO_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "sfcplan/simulator.hpp"

namespace sfcplan {

/// One event per line, e.g.
///   {"t":0,"type":"sense","at":0,"target":1,"result":false}
///   {"t":1,"type":"move","from":0,"to":1}
///   {"t":2,"type":"visit","waypoint":1}
/// "t" is the running sequence number from 0. Output is byte-stable for a
/// given trace.
std::string serialize_trace_jsonl(const MissionTrace& trace);

/// Metrics document: edges_traversed, cells_visited, obstacles_found,
/// revisit_count, confinement{flagged, c_prime, missing_below_max}.
std::string serialize_metrics_json(const MissionMetrics& metrics);

/// Parses a trace.jsonl stream back into events. Throws
/// std::invalid_argument on malformed lines or non-sequential "t".
std::vector<Event> parse_trace_jsonl(const std::string& text);

/// Replays events against the mission's graph and ground truth and returns
/// every invariant violation found (empty means the trace is sound):
/// moves and senses happen between adjacent waypoints from the agent's
/// actual position, route interiors stay inside the visited set, the agent
/// never stands on a blocked cell, every abort follows a positive sense of
/// the same target, each obstacle is detected exactly once, visits are
/// distinct, termination is final and leaves an empty frontier, and the
/// metrics match a recount.
std::vector<std::string> verify_trace(const MissionTrace& trace,
                                      const WorldOracle& world);

/// Same checks for an externally parsed event stream.
std::vector<std::string> verify_events(const std::vector<Event>& events,
                                       const WaypointGraph& graph,
                                       const WorldOracle& world,
                                       WaypointIndex start,
                                       const std::vector<WaypointIndex>&
                                           initial_obstacles,
                                       const MissionMetrics* metrics);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

std::string read_text_file(const std::filesystem::path& path);

}  // namespace sfcplan

#endif  // SFCPLAN_TRACE_IO_HPP
