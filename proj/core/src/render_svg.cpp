#include "sfcplan/render_svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>
#include <variant>
#include <vector>

namespace sfcplan {
namespace {

constexpr const char* kFreeFill = "#ffffff";
constexpr const char* kDetectedFill = "#8b5a2b";   // detected obstacle
constexpr const char* kHiddenFill = "#3a3a3a";     // blocked, never sensed
constexpr const char* kCellStroke = "#c8c8c8";
constexpr const char* kCurveStroke = "#b8cbe4";
constexpr const char* kPathStroke = "#1f4e9c";
constexpr const char* kStartFill = "#7b2d8b";
constexpr const char* kTransitionStroke = "#5bb8d4";

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s(buf);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') {
    s.pop_back();
  }
  if (s == "-0") {
    s = "0";
  }
  return s;
}

struct Frame {
  double min_x, min_y, max_x, max_y;

  double tx(double x) const { return x - min_x; }
  // SVG y grows downward; flip so the region's y grows upward.
  double ty(double y) const { return max_y - y; }
  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

Frame frame_of(std::span<const CurveSpec> specs) {
  Frame f{specs[0].origin.x, specs[0].origin.y, specs[0].origin.x,
          specs[0].origin.y};
  for (const CurveSpec& s : specs) {
    f.min_x = std::min(f.min_x, s.origin.x);
    f.min_y = std::min(f.min_y, s.origin.y);
    f.max_x = std::max(f.max_x, s.origin.x + s.side);
    f.max_y = std::max(f.max_y, s.origin.y + s.side);
  }
  return f;
}

void append_cells(std::string& out, const CurveSpec& spec,
                  const IndexSet& detected, const IndexSet& blocked,
                  const Frame& f) {
  const double cs = spec.cell_side();
  for (WaypointIndex d = 0; d < spec.waypoint_count(); ++d) {
    const CellCoord c = index_to_cell(spec, d);
    const double x = spec.origin.x + cs * c.x;
    const double y = spec.origin.y + cs * c.y;
    const char* fill = kFreeFill;
    const char* cls = "cell";
    if (detected.contains(d)) {
      fill = kDetectedFill;
      cls = "cell obstacle-detected";
    } else if (blocked.contains(d)) {
      fill = kHiddenFill;
      cls = "cell obstacle-hidden";
    }
    out += "<rect class=\"" + std::string(cls) + "\" x=\"" + num(f.tx(x)) +
           "\" y=\"" + num(f.ty(y + cs)) + "\" width=\"" + num(cs) +
           "\" height=\"" + num(cs) + "\" fill=\"" + fill + "\" stroke=\"" +
           kCellStroke + "\" stroke-width=\"" + num(cs * 0.02) + "\"/>\n";
  }
}

void append_polyline(std::string& out, const char* cls,
                     const std::vector<Point>& points, const char* stroke,
                     double width, const Frame& f) {
  out += "<polyline class=\"" + std::string(cls) + "\" points=\"";
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += num(f.tx(points[i].x)) + "," + num(f.ty(points[i].y));
  }
  out += "\" fill=\"none\" stroke=\"" + std::string(stroke) +
         "\" stroke-width=\"" + num(width) + "\" stroke-linejoin=\"round\"/>\n";
}

void append_star(std::string& out, Point center, double radius,
                 const Frame& f) {
  out += "<polygon class=\"start-marker\" points=\"";
  for (int i = 0; i < 10; ++i) {
    const double r = (i % 2 == 0) ? radius : radius * 0.45;
    const double angle =
        -std::numbers::pi / 2.0 + i * std::numbers::pi / 5.0;
    if (i > 0) {
      out += ' ';
    }
    out += num(f.tx(center.x) + r * std::cos(angle)) + "," +
           num(f.ty(center.y) + r * std::sin(angle));
  }
  out += "\" fill=\"" + std::string(kStartFill) + "\"/>\n";
}

void append_terminal_triangle(std::string& out, Point center, double radius,
                              const Frame& f) {
  const double cx = f.tx(center.x);
  const double cy = f.ty(center.y);
  // Apex pointing down on screen.
  out += "<polygon class=\"terminal-marker\" points=\"" +
         num(cx - radius) + "," + num(cy - radius) + " " + num(cx + radius) +
         "," + num(cy - radius) + " " + num(cx) + "," + num(cy + radius) +
         "\" fill=\"" + kPathStroke + "\"/>\n";
}

std::vector<Point> curve_points(const CurveSpec& spec) {
  std::vector<Point> pts;
  pts.reserve(spec.waypoint_count());
  for (WaypointIndex d = 0; d < spec.waypoint_count(); ++d) {
    pts.push_back(waypoint_position(spec, d));
  }
  return pts;
}

std::vector<Point> executed_path_points(const MissionTrace& trace) {
  std::vector<Point> pts{waypoint_position(trace.spec, trace.start)};
  for (const Event& event : trace.events) {
    if (const auto* move = std::get_if<MoveEvent>(&event)) {
      pts.push_back(waypoint_position(trace.spec, move->to));
    }
  }
  return pts;
}

IndexSet detected_obstacles(const MissionTrace& trace) {
  IndexSet detected(trace.spec.waypoint_count());
  for (const WaypointIndex d : trace.initial_obstacles) {
    detected.insert(d);
  }
  for (const Event& event : trace.events) {
    if (const auto* abort_ev = std::get_if<AbortEvent>(&event)) {
      detected.insert(abort_ev->target);
    }
  }
  return detected;
}

void append_mission_group(std::string& out, const MissionTrace& trace,
                          const WorldOracle& world, const Frame& f,
                          const std::vector<Point>& extra_path) {
  const CurveSpec& spec = trace.spec;
  append_cells(out, spec, detected_obstacles(trace), world.blocked, f);
  append_polyline(out, "curve", curve_points(spec), kCurveStroke,
                  spec.cell_side() * 0.08, f);
  std::vector<Point> path = executed_path_points(trace);
  path.insert(path.end(), extra_path.begin(), extra_path.end());
  append_polyline(out, "path", path, kPathStroke, spec.cell_side() * 0.12, f);
  const double marker = spec.cell_side() * 0.3;
  append_star(out, waypoint_position(spec, trace.start), marker, f);
  append_terminal_triangle(out, path.back(), marker, f);
}

std::string svg_open(const Frame& f) {
  const double margin = std::max(f.width(), f.height()) * 0.02;
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" +
         num(-margin) + " " + num(-margin) + " " +
         num(f.width() + 2 * margin) + " " + num(f.height() + 2 * margin) +
         "\">\n";
}

}  // namespace

std::string render_mission_svg(const MissionTrace& trace,
                               const WorldOracle& world) {
  const CurveSpec spec_array[] = {trace.spec};
  const Frame f = frame_of(spec_array);
  std::string out = svg_open(f);
  append_mission_group(out, trace, world, f, {});
  out += "</svg>\n";
  return out;
}

std::string render_composite_svg(const CompositeRegion& region,
                                 const CompositeMissionResult& result,
                                 std::span<const WorldOracle> worlds) {
  std::vector<CurveSpec> specs;
  for (const Subregion& sub : region.subregions) {
    specs.push_back(sub.spec);
  }
  const Frame f = frame_of(specs);
  std::string out = svg_open(f);
  out +=
      "<defs><marker id=\"arrowhead\" markerWidth=\"6\" markerHeight=\"6\" "
      "refX=\"5\" refY=\"3\" orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" "
      "fill=\"" +
      std::string(kTransitionStroke) + "\"/></marker></defs>\n";

  for (std::size_t i = 0; i < region.subregions.size(); ++i) {
    const Subregion& sub = region.subregions[i];
    const bool entered = result.traces[i].has_value();
    out += "<g class=\"subregion" + std::string(entered ? "" : " skipped") +
           "\" id=\"subregion-" + std::to_string(sub.id) + "\">\n";
    if (entered) {
      // Extend the path with the walk to the exit waypoint, when any.
      std::vector<Point> extra;
      for (const TransitionRecord& tr : result.transitions) {
        if (tr.from_id == sub.id && !tr.skipped) {
          for (std::size_t p = 1; p < tr.route_to_exit.size(); ++p) {
            extra.push_back(waypoint_position(sub.spec, tr.route_to_exit[p]));
          }
          break;
        }
      }
      append_mission_group(out, *result.traces[i], worlds[i], f, extra);
    } else {
      append_cells(out, sub.spec, IndexSet(sub.spec.waypoint_count()),
                   worlds[i].blocked, f);
      append_polyline(out, "curve", curve_points(sub.spec), kCurveStroke,
                      sub.spec.cell_side() * 0.08, f);
    }
    out += "</g>\n";
  }

  const auto spec_by_id = [&](int id) -> const CurveSpec& {
    for (const Subregion& sub : region.subregions) {
      if (sub.id == id) {
        return sub.spec;
      }
    }
    throw std::invalid_argument("transition references unknown subregion id");
  };
  for (const TransitionRecord& tr : result.transitions) {
    if (tr.skipped) {
      continue;
    }
    const CurveSpec& from_spec = spec_by_id(tr.from_id);
    const CurveSpec& to_spec = spec_by_id(tr.to_id);
    const Point b = waypoint_position(from_spec, tr.exit_b);
    const Point c = waypoint_position(to_spec, *tr.entry_c);
    out += "<line class=\"transition\" x1=\"" + num(f.tx(b.x)) + "\" y1=\"" +
           num(f.ty(b.y)) + "\" x2=\"" + num(f.tx(c.x)) + "\" y2=\"" +
           num(f.ty(c.y)) + "\" stroke=\"" + kTransitionStroke +
           "\" stroke-width=\"" +
           num(std::min(from_spec.cell_side(), to_spec.cell_side()) * 0.15) +
           "\" marker-end=\"url(#arrowhead)\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace sfcplan
