#pragma once

#include <string>
#include <vector>

#include "pft/core/geometry.hpp"
#include "pft/core/types.hpp"

namespace pft {

enum class RegionKind { kGoal, kTrap, kLight, kStart };

std::string to_string(RegionKind kind);
RegionKind region_kind_from_string(const std::string& s);

struct Region {
  std::string name;
  RegionKind kind = RegionKind::kGoal;
  Rect rect;
};

/// Axis-aligned wall segments and named rectangular regions defining one
/// environment instance. Immutable after construction.
struct EnvMap {
  Rect bounds;
  std::vector<Segment> walls;
  std::vector<Region> regions;

  bool in_kind(StateVec p, RegionKind kind) const;
  bool in_goal(StateVec p) const { return in_kind(p, RegionKind::kGoal); }
  bool in_trap(StateVec p) const { return in_kind(p, RegionKind::kTrap); }
  bool in_light(StateVec p) const { return in_kind(p, RegionKind::kLight); }

  std::vector<const Region*> regions_of(RegionKind kind) const;

  /// Distance from p to the closest point of any goal region, and that point.
  /// Requires at least one goal region.
  StateVec nearest_goal_point(StateVec p) const;

  StateVec clamp_to_bounds(StateVec p) const { return bounds.clamp(p); }

  /// True if p lies exactly on a wall segment (degenerate sensor origin).
  bool on_wall(StateVec p) const;

  /// Basic structural checks (non-empty goal/start, traps disjoint from
  /// goals). Throws std::invalid_argument on violation.
  void validate() const;
};

}  // namespace pft
