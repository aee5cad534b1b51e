#pragma once

#include <vector>

#include "pft/core/types.hpp"

namespace pft {

struct Rect {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

  bool contains(StateVec p) const {
    return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
  }
  double width() const { return x1 - x0; }
  double height() const { return y1 - y0; }
  double area() const { return width() * height(); }
  StateVec center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }

  /// Closest point of the rectangle to p (p itself when inside).
  StateVec clamp(StateVec p) const;

  bool intersects(const Rect& o) const {
    return x0 < o.x1 && o.x0 < x1 && y0 < o.y1 && o.y0 < y1;
  }
};

/// Wall segment. Maps use axis-aligned walls; the intersection tests are
/// general.
struct Segment {
  double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;
};

/// True if segments [a0,a1] and [b0,b1] share any point (touch counts).
bool segments_intersect(StateVec a0, StateVec a1, StateVec b0, StateVec b1);

/// True if the motion a -> b crosses or touches any wall.
bool path_blocked(const std::vector<Segment>& walls, StateVec a, StateVec b);

/// Distance from `origin` along unit direction `dir` to the first wall hit,
/// or `max_range` if none. Walls parallel to the ray are ignored.
double ray_distance(const std::vector<Segment>& walls, StateVec origin,
                    StateVec dir, double max_range);

}  // namespace pft
