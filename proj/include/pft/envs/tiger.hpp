#pragma once

#include <vector>

#include "pft/core/model_suite.hpp"
#include "pft/envs/environment.hpp"
#include "pft/filter/particle_belief.hpp"

namespace pft::envs {

/// Classic two-state tiger problem as a discrete oracle for the planner.
/// State x encodes the tiger door (0 = left, 1 = right); observations are
/// noisy door readings with the listen accuracy; opening a door resets the
/// state uniformly. Used for planner verification, not navigation.
struct TigerConfig {
  double listen_accuracy = 0.85;
  double listen_reward = -1.0;
  double correct_open_reward = 10.0;
  double tiger_penalty = -100.0;
  double discount = 0.99;
};

inline constexpr ActionId kTigerListen = 0;
inline constexpr ActionId kTigerOpenLeft = 1;
inline constexpr ActionId kTigerOpenRight = 2;

/// Exact finite-horizon value iteration on a 1D belief grid over
/// P(tiger = right). Test-side oracle.
class TigerSolver {
 public:
  explicit TigerSolver(const TigerConfig& cfg, int grid_points = 1001);

  /// Optimal depth-`horizon` discounted value at belief p = P(right).
  double value(double p_right, int horizon) const;
  /// Optimal first action at that belief.
  ActionId best_action(double p_right, int horizon) const;

  /// Posterior P(right) after hearing `heard_right` while listening.
  double listen_posterior(double p_right, bool heard_right) const;

 private:
  void ensure(int horizon) const;
  double interp(const std::vector<double>& v, double p) const;

  TigerConfig cfg_;
  int grid_;
  mutable std::vector<std::vector<double>> values_;  // values_[h][i]
};

struct TigerFixture {
  TigerConfig cfg;
  PomdpSpec spec;
  ModelSuite models;

  /// Belief of `count` particles split per p = P(right), exact counts.
  filter::ParticleBelief belief(double p_right, int count) const;
};

TigerFixture tiger_fixture(const TigerConfig& cfg = {});

/// Harness-facing wrapper. The map is a unit square whose start region
/// spans both doors (x < 0.5 reads as tiger-left); there is no goal, so
/// episodes always run to the step limit.
Environment tiger_environment(const TigerConfig& cfg = {});

}  // namespace pft::envs
