#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace pft {

/// Planar world state. Both shipped navigation environments are 2D;
/// the discrete Tiger fixture encodes its state in x.
struct StateVec {
  double x = 0.0;
  double y = 0.0;

  friend StateVec operator+(StateVec a, StateVec b) { return {a.x + b.x, a.y + b.y}; }
  friend StateVec operator-(StateVec a, StateVec b) { return {a.x - b.x, a.y - b.y}; }
  friend StateVec operator*(double k, StateVec v) { return {k * v.x, k * v.y}; }
  friend bool operator==(StateVec a, StateVec b) { return a.x == b.x && a.y == b.y; }

  double norm() const { return std::hypot(x, y); }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double distance(StateVec a, StateVec b) { return (a - b).norm(); }

/// Observation vector; length is environment-defined (4 radar ranges,
/// 2 noisy coordinates, 1 discrete symbol).
using ObsVec = std::vector<double>;

/// Index into the environment's discrete action table.
using ActionId = int;

/// One table entry: unit direction scaled by per-action speed.
struct ActionSpec {
  std::string name;
  double ux = 0.0;  // unit direction
  double uy = 0.0;
  double speed = 0.0;

  StateVec displacement() const { return {speed * ux, speed * uy}; }
};

struct PomdpSpec {
  std::vector<ActionSpec> action_table;
  double discount = 0.99;
  int max_steps = 200;
  double goal_reward = 100.0;
  double trap_penalty = -100.0;
  // Optional additive-Gaussian process noise on transitions; off by default.
  double process_noise_std = 0.0;

  int action_count() const { return static_cast<int>(action_table.size()); }
};

enum class Terminal { kNone, kGoal };

}  // namespace pft
