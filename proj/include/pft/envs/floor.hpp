#pragma once

#include <memory>
#include <vector>

#include "pft/envs/environment.hpp"

namespace pft::envs {

/// Two-floor hallway localization task. The agent starts near the center of
/// one of two stacked floors; the four-ray radar cannot tell the floors
/// apart inside the corridor band but can near the divider walls, whose
/// x-offsets differ per floor. The goal is the left corridor end on the top
/// floor and the right end on the bottom floor, with the trap at the
/// opposite end.
struct FloorConfig {
  double speed = 0.05;
  double obs_noise_std = 0.01;  // radar range noise
  double goal_reward = 100.0;
  double trap_penalty = -100.0;
  double discount = 0.99;
  int max_steps = 200;

  // Geometry (unit square, two floors split at y = 0.5). Divider offsets
  // make every room width distinct across both floors, so wall states pin
  // down the floor while corridor states stay ambiguous.
  double corridor_lo = 0.20;  // corridor band within each floor
  double corridor_hi = 0.30;
  std::vector<double> bottom_dividers = {0.22, 0.50, 0.84};
  std::vector<double> top_dividers = {0.38, 0.62, 0.80};
  double start_half_width = 0.05;  // start strip around x = 0.5
  double end_region_width = 0.05;  // goal / trap depth at corridor ends

  // Proposer importance grid resolution (cells per axis).
  int proposer_grid = 64;
  double proposer_jitter = 0.01;
};

EnvMap make_floor_map(const FloorConfig& cfg = {});
Environment make_floor_env(const FloorConfig& cfg = {});
Environment make_floor_env(const EnvMap& map, const FloorConfig& cfg);

/// Four noise-free ray distances (up, down, left, right) to the nearest
/// wall or boundary. Throws std::invalid_argument if s lies on a wall.
ObsVec radar_ranges(const EnvMap& map, StateVec s);

/// radar_ranges perturbed by N(0, sigma^2) per ray, clamped >= 0.
ObsVec radar_observe(const EnvMap& map, StateVec s, double sigma, Rng& rng);

/// Product of four Gaussian densities N(o_i; ray_i(s), sigma^2).
double radar_density(const EnvMap& map, const ObsVec& o, StateVec s,
                     double sigma);

/// Importance proposer backed by a precomputed grid of noise-free ray
/// vectors: cells are weighted by the observation density at their center,
/// one is drawn proportionally, and the sample is jittered inside the cell.
class RadarProposer {
 public:
  RadarProposer(const EnvMap& map, double sigma, int grid, double jitter);
  StateVec propose(const ObsVec& o, Rng& rng) const;

 private:
  Rect bounds_;
  double sigma_;
  int grid_;
  double jitter_;
  std::vector<StateVec> centers_;
  std::vector<ObsVec> rays_;
};

}  // namespace pft::envs
