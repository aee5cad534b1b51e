#include "pft/core/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace pft {
namespace {

double cross(StateVec o, StateVec a, StateVec b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool on_segment(StateVec p, StateVec a, StateVec b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

StateVec Rect::clamp(StateVec p) const {
  return {std::clamp(p.x, x0, x1), std::clamp(p.y, y0, y1)};
}

bool segments_intersect(StateVec a0, StateVec a1, StateVec b0, StateVec b1) {
  const int d1 = sign(cross(a0, a1, b0));
  const int d2 = sign(cross(a0, a1, b1));
  const int d3 = sign(cross(b0, b1, a0));
  const int d4 = sign(cross(b0, b1, a1));
  if (d1 != d2 && d3 != d4) return true;
  // Collinear / endpoint touches.
  if (d1 == 0 && on_segment(b0, a0, a1)) return true;
  if (d2 == 0 && on_segment(b1, a0, a1)) return true;
  if (d3 == 0 && on_segment(a0, b0, b1)) return true;
  if (d4 == 0 && on_segment(a1, b0, b1)) return true;
  return false;
}

bool path_blocked(const std::vector<Segment>& walls, StateVec a, StateVec b) {
  for (const Segment& w : walls) {
    if (segments_intersect(a, b, {w.x0, w.y0}, {w.x1, w.y1})) return true;
  }
  return false;
}

double ray_distance(const std::vector<Segment>& walls, StateVec origin,
                    StateVec dir, double max_range) {
  double best = max_range;
  for (const Segment& w : walls) {
    const StateVec p{w.x0, w.y0};
    const StateVec r{w.x1 - w.x0, w.y1 - w.y0};
    const double denom = dir.x * r.y - dir.y * r.x;
    if (denom == 0.0) continue;  // parallel
    const StateVec d = p - origin;
    const double t = (d.x * r.y - d.y * r.x) / denom;   // along the ray
    const double u = (d.x * dir.y - d.y * dir.x) / denom;  // along the wall
    if (t >= 0.0 && u >= 0.0 && u <= 1.0) best = std::min(best, t);
  }
  return best;
}

}  // namespace pft
