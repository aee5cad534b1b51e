#pragma once

#include <vector>

#include "pft/envs/environment.hpp"

namespace pft::envs {

/// 2D Light-Dark navigation. Observations are the agent position plus
/// region-dependent Gaussian noise: tight in the light strip, loose in the
/// dark. The goal sits in the dark lower-left, flanked by fixed traps, so
/// a poorly localized agent pays for approaching directly.
struct LightDarkConfig {
  double speed = 0.2;
  double sigma_light = 0.01;
  double sigma_dark = 0.3;
  // Observation-model mismatch ablation: the environment generates
  // dark-region observations with sigma_test while filter and planner keep
  // sigma_dark.
  double sigma_test = 0.6;
  double proposer_std_light = 0.01;
  double proposer_std_dark = 0.1;
  double goal_reward = 100.0;
  double trap_penalty = -100.0;
  double discount = 0.99;
  int max_steps = 200;

  // Geometry on [0,2] x [0,2].
  Rect light = {1.5, 0.0, 2.0, 2.0};
  Rect start = {0.2, 0.2, 0.4, 1.8};
  Rect goal = {0.25, 0.25, 0.55, 0.55};
  std::vector<Rect> fixed_traps = {{0.0, 0.55, 0.2, 1.05},
                                   {0.6, 0.15, 1.1, 0.65}};
  // Test-time trap ablation: squares of trap_size placed uniformly with
  // centers in this band.
  double trap_size = 0.5;
  Rect trap_strip = {0.25, 0.8, 1.75, 1.3};
};

EnvMap make_lightdark_map(const LightDarkConfig& cfg = {});

enum class LightDarkAblation { kNone, kMismatch };

Environment make_lightdark_env(const LightDarkConfig& cfg = {},
                               LightDarkAblation ablation =
                                   LightDarkAblation::kNone);
Environment make_lightdark_env(const EnvMap& map, const LightDarkConfig& cfg,
                               LightDarkAblation ablation =
                                   LightDarkAblation::kNone);

/// Region-dependent observation noise std at s.
double lightdark_sigma(const EnvMap& map, const LightDarkConfig& cfg,
                       StateVec s);

/// o = s + N(0, sigma(region(s))^2 I).
ObsVec lightdark_observe(const LightDarkConfig& cfg, const EnvMap& map,
                         StateVec s, Rng& rng);

/// N(o; s, sigma(region(s))^2 I).
double lightdark_density(const LightDarkConfig& cfg, const EnvMap& map,
                         const ObsVec& o, StateVec s);

/// s = o + N(0, sigma_prop(region(o))^2 I), projected into bounds.
StateVec lightdark_propose(const LightDarkConfig& cfg, const EnvMap& map,
                           const ObsVec& o, Rng& rng);

/// Two trap_size x trap_size squares with centers uniform over the
/// configured strip, re-drawn if they would overlap the goal.
std::vector<Region> spawn_test_traps(const LightDarkConfig& cfg,
                                     const EnvMap& map, Rng& rng);

}  // namespace pft::envs
