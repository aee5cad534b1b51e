#include "pft/bench/svg.hpp"

#include <cstdio>

namespace pft::bench {
namespace {

constexpr double kScale = 400.0;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

const char* region_color(RegionKind kind) {
  switch (kind) {
    case RegionKind::kGoal: return "#7bc47f";
    case RegionKind::kTrap: return "#e07a7a";
    case RegionKind::kLight: return "#fff3b0";
    case RegionKind::kStart: return "#a5c8e4";
  }
  return "#cccccc";
}

}  // namespace

std::string render_trajectory(const EpisodeRecord& record, const EnvMap& map) {
  const double w = map.bounds.width() * kScale;
  const double h = map.bounds.height() * kScale;
  // SVG y grows downward; world y grows upward.
  auto px = [&](double x) { return (x - map.bounds.x0) * kScale; };
  auto py = [&](double y) { return h - (y - map.bounds.y0) * kScale; };

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) +
         "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) + " " +
         num(h) + "\">\n";
  out += "<rect width=\"" + num(w) + "\" height=\"" + num(h) +
         "\" fill=\"#fafafa\" stroke=\"#333\"/>\n";

  for (const Region& r : map.regions) {
    out += "<rect class=\"region " + to_string(r.kind) + "\" x=\"" +
           num(px(r.rect.x0)) + "\" y=\"" + num(py(r.rect.y1)) + "\" width=\"" +
           num(r.rect.width() * kScale) + "\" height=\"" +
           num(r.rect.height() * kScale) + "\" fill=\"" +
           region_color(r.kind) + "\" fill-opacity=\"0.5\"/>\n";
  }
  for (const Segment& s : map.walls) {
    out += "<line class=\"wall\" x1=\"" + num(px(s.x0)) + "\" y1=\"" +
           num(py(s.y0)) + "\" x2=\"" + num(px(s.x1)) + "\" y2=\"" +
           num(py(s.y1)) + "\" stroke=\"#222\" stroke-width=\"3\"/>\n";
  }

  // Particle clouds first so trajectories draw on top.
  for (const BeliefSnapshot& snap : record.snapshots) {
    const std::string cls = "particles step" + std::to_string(snap.step_index);
    for (const StateVec& p : snap.particles) {
      out += "<circle class=\"" + cls + "\" cx=\"" + num(px(p.x)) +
             "\" cy=\"" + num(py(p.y)) +
             "\" r=\"2\" fill=\"#5555aa\" fill-opacity=\"0.35\"/>\n";
    }
  }

  // One segment per executed step.
  for (const StepRecord& s : record.trace) {
    out += "<line class=\"traj\" x1=\"" + num(px(s.state.x)) + "\" y1=\"" +
           num(py(s.state.y)) + "\" x2=\"" + num(px(s.next.x)) + "\" y2=\"" +
           num(py(s.next.y)) + "\" stroke=\"#0a0a0a\" stroke-width=\"2\"/>\n";
  }
  if (!record.trace.empty()) {
    const StepRecord& last = record.trace.back();
    out += "<circle class=\"traj-end\" cx=\"" + num(px(last.next.x)) +
           "\" cy=\"" + num(py(last.next.y)) +
           "\" r=\"4\" fill=\"#0a0a0a\"/>\n";
  }
  for (std::size_t i = 0; i + 1 < record.trace.size(); ++i) {
    const StateVec a = record.trace[i].belief_mean;
    const StateVec b = record.trace[i + 1].belief_mean;
    out += "<line class=\"belief\" x1=\"" + num(px(a.x)) + "\" y1=\"" +
           num(py(a.y)) + "\" x2=\"" + num(px(b.x)) + "\" y2=\"" +
           num(py(b.y)) +
           "\" stroke=\"#b03030\" stroke-width=\"1.5\" "
           "stroke-dasharray=\"4 3\"/>\n";
  }

  out += "</svg>\n";
  return out;
}

}  // namespace pft::bench
