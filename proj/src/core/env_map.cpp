#include "pft/core/env_map.hpp"

#include <limits>
#include <stdexcept>

namespace pft {

std::string to_string(RegionKind kind) {
  switch (kind) {
    case RegionKind::kGoal: return "goal";
    case RegionKind::kTrap: return "trap";
    case RegionKind::kLight: return "light";
    case RegionKind::kStart: return "start";
  }
  return "goal";
}

RegionKind region_kind_from_string(const std::string& s) {
  if (s == "goal") return RegionKind::kGoal;
  if (s == "trap") return RegionKind::kTrap;
  if (s == "light") return RegionKind::kLight;
  if (s == "start") return RegionKind::kStart;
  throw std::invalid_argument("unknown region kind: " + s);
}

bool EnvMap::in_kind(StateVec p, RegionKind kind) const {
  for (const Region& r : regions) {
    if (r.kind == kind && r.rect.contains(p)) return true;
  }
  return false;
}

std::vector<const Region*> EnvMap::regions_of(RegionKind kind) const {
  std::vector<const Region*> out;
  for (const Region& r : regions) {
    if (r.kind == kind) out.push_back(&r);
  }
  return out;
}

StateVec EnvMap::nearest_goal_point(StateVec p) const {
  double best = std::numeric_limits<double>::infinity();
  StateVec best_point = p;
  bool found = false;
  for (const Region& r : regions) {
    if (r.kind != RegionKind::kGoal) continue;
    const StateVec q = r.rect.clamp(p);
    const double d = distance(p, q);
    if (d < best) {
      best = d;
      best_point = q;
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("map has no goal region");
  return best_point;
}

bool EnvMap::on_wall(StateVec p) const {
  for (const Segment& w : walls) {
    if (segments_intersect(p, p, {w.x0, w.y0}, {w.x1, w.y1})) return true;
  }
  return false;
}

void EnvMap::validate() const {
  bool has_goal = false;
  bool has_start = false;
  for (const Region& r : regions) {
    if (r.rect.area() < 0.0) throw std::invalid_argument("region with negative extent: " + r.name);
    if (r.kind == RegionKind::kGoal) has_goal = r.rect.area() > 0.0 || has_goal;
    if (r.kind == RegionKind::kStart) has_start = r.rect.area() > 0.0 || has_start;
  }
  if (!has_goal) throw std::invalid_argument("map needs a non-empty goal region");
  if (!has_start) throw std::invalid_argument("map needs a non-empty start region");
  for (const Region& a : regions) {
    if (a.kind != RegionKind::kTrap) continue;
    for (const Region& b : regions) {
      if (b.kind == RegionKind::kGoal && a.rect.intersects(b.rect)) {
        throw std::invalid_argument("trap overlaps goal: " + a.name);
      }
    }
  }
}

}  // namespace pft
