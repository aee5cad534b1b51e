#include "pft/envs/floor.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "pft/core/dynamics.hpp"

namespace pft::envs {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

double log_normal_pdf(double x, double mean, double sigma) {
  const double z = (x - mean) / sigma;
  return -0.5 * z * z - std::log(sigma) - 0.5 * std::log(kTwoPi);
}

}  // namespace

EnvMap make_floor_map(const FloorConfig& cfg) {
  EnvMap map;
  map.bounds = {0.0, 0.0, 1.0, 1.0};

  // Inter-floor wall.
  map.walls.push_back({0.0, 0.5, 1.0, 0.5});
  // Divider walls abut the corridor band from both sides.
  for (double x : cfg.bottom_dividers) {
    map.walls.push_back({x, 0.0, x, cfg.corridor_lo});
    map.walls.push_back({x, cfg.corridor_hi, x, 0.5});
  }
  for (double x : cfg.top_dividers) {
    map.walls.push_back({x, 0.5, x, 0.5 + cfg.corridor_lo});
    map.walls.push_back({x, 0.5 + cfg.corridor_hi, x, 1.0});
  }

  const double b_lo = cfg.corridor_lo;
  const double b_hi = cfg.corridor_hi;
  const double t_lo = 0.5 + cfg.corridor_lo;
  const double t_hi = 0.5 + cfg.corridor_hi;
  const double w = cfg.end_region_width;
  const double sh = cfg.start_half_width;

  map.regions = {
      {"goal_top", RegionKind::kGoal, {0.0, t_lo, w, t_hi}},
      {"goal_bottom", RegionKind::kGoal, {1.0 - w, b_lo, 1.0, b_hi}},
      {"trap_top", RegionKind::kTrap, {1.0 - w, t_lo, 1.0, t_hi}},
      {"trap_bottom", RegionKind::kTrap, {0.0, b_lo, w, b_hi}},
      {"start_top", RegionKind::kStart, {0.5 - sh, t_lo, 0.5 + sh, t_hi}},
      {"start_bottom", RegionKind::kStart, {0.5 - sh, b_lo, 0.5 + sh, b_hi}},
  };
  map.validate();
  return map;
}

ObsVec radar_ranges(const EnvMap& map, StateVec s) {
  if (!map.bounds.contains(s)) {
    throw std::invalid_argument("radar origin outside bounds");
  }
  if (map.on_wall(s)) {
    throw std::invalid_argument("radar origin lies on a wall");
  }
  const double up_max = map.bounds.y1 - s.y;
  const double down_max = s.y - map.bounds.y0;
  const double left_max = s.x - map.bounds.x0;
  const double right_max = map.bounds.x1 - s.x;
  return {
      ray_distance(map.walls, s, {0.0, 1.0}, up_max),
      ray_distance(map.walls, s, {0.0, -1.0}, down_max),
      ray_distance(map.walls, s, {-1.0, 0.0}, left_max),
      ray_distance(map.walls, s, {1.0, 0.0}, right_max),
  };
}

ObsVec radar_observe(const EnvMap& map, StateVec s, double sigma, Rng& rng) {
  ObsVec o = radar_ranges(map, s);
  for (double& r : o) {
    r = std::max(0.0, r + rng.normal(0.0, sigma));
  }
  return o;
}

double radar_density(const EnvMap& map, const ObsVec& o, StateVec s,
                     double sigma) {
  if (!map.bounds.contains(s) || map.on_wall(s)) return 0.0;
  const ObsVec rays = radar_ranges(map, s);
  double log_p = 0.0;
  for (std::size_t i = 0; i < rays.size(); ++i) {
    log_p += log_normal_pdf(o[i], rays[i], sigma);
  }
  return std::exp(log_p);
}

RadarProposer::RadarProposer(const EnvMap& map, double sigma, int grid,
                             double jitter)
    : bounds_(map.bounds), sigma_(sigma), grid_(grid), jitter_(jitter) {
  centers_.reserve(static_cast<std::size_t>(grid) * grid);
  rays_.reserve(centers_.capacity());
  const double dx = bounds_.width() / grid;
  const double dy = bounds_.height() / grid;
  for (int iy = 0; iy < grid; ++iy) {
    for (int ix = 0; ix < grid; ++ix) {
      const StateVec c{bounds_.x0 + (ix + 0.5) * dx,
                       bounds_.y0 + (iy + 0.5) * dy};
      centers_.push_back(c);
      rays_.push_back(radar_ranges(map, c));
    }
  }
}

StateVec RadarProposer::propose(const ObsVec& o, Rng& rng) const {
  // Log-weights with max subtraction; cells far from the observation
  // underflow harmlessly.
  std::vector<double> log_w(centers_.size());
  double max_lw = -1e300;
  for (std::size_t i = 0; i < centers_.size(); ++i) {
    double lw = 0.0;
    for (std::size_t k = 0; k < o.size(); ++k) {
      lw += log_normal_pdf(o[k], rays_[i][k], sigma_);
    }
    log_w[i] = lw;
    if (lw > max_lw) max_lw = lw;
  }
  double sum = 0.0;
  for (double& lw : log_w) {
    lw = std::exp(lw - max_lw);
    sum += lw;
  }

  std::size_t chosen = centers_.size() - 1;
  double pick = rng.uniform() * sum;
  for (std::size_t i = 0; i < log_w.size(); ++i) {
    pick -= log_w[i];
    if (pick < 0.0) {
      chosen = i;
      break;
    }
  }

  const double dx = bounds_.width() / grid_;
  const double dy = bounds_.height() / grid_;
  StateVec p = centers_[chosen];
  p.x += rng.uniform(-0.5 * dx, 0.5 * dx) + rng.normal(0.0, jitter_);
  p.y += rng.uniform(-0.5 * dy, 0.5 * dy) + rng.normal(0.0, jitter_);
  return bounds_.clamp(p);
}

Environment make_floor_env(const FloorConfig& cfg) {
  return make_floor_env(make_floor_map(cfg), cfg);
}

Environment make_floor_env(const EnvMap& map, const FloorConfig& cfg) {
  Environment env;
  env.name = "floor";
  env.map = map;
  env.spec.action_table = eight_direction_actions(cfg.speed);
  env.spec.discount = cfg.discount;
  env.spec.max_steps = cfg.max_steps;
  env.spec.goal_reward = cfg.goal_reward;
  env.spec.trap_penalty = cfg.trap_penalty;

  const PomdpSpec spec = env.spec;
  const EnvMap m = env.map;
  const double sigma = cfg.obs_noise_std;
  auto proposer = std::make_shared<const RadarProposer>(
      m, sigma, cfg.proposer_grid, cfg.proposer_jitter);

  ModelSuite suite;
  suite.transition = [spec, m](const StateVec& s, ActionId a, Rng& rng) {
    return apply_action_noisy(spec, m, s, a, rng);
  };
  suite.obs_generator = [m, sigma](const StateVec& s, Rng& rng) {
    return radar_observe(m, s, sigma, rng);
  };
  suite.obs_density = [m, sigma](const ObsVec& o, const StateVec& s) {
    return radar_density(m, o, s, sigma);
  };
  suite.proposer = [proposer](const ObsVec& o, Rng& rng) {
    return proposer->propose(o, rng);
  };
  suite.reward = [spec, m](const StateVec&, ActionId, const StateVec& next) {
    if (m.in_goal(next)) return spec.goal_reward;
    if (m.in_trap(next)) return spec.trap_penalty;
    return 0.0;
  };
  suite.terminal = [m](const StateVec& s) {
    return m.in_goal(s) ? Terminal::kGoal : Terminal::kNone;
  };

  env.model = suite;
  env.truth = suite;

  const auto starts = env.map.regions_of(RegionKind::kStart);
  std::vector<Rect> start_rects;
  for (const Region* r : starts) start_rects.push_back(r->rect);
  if (start_rects.empty()) {
    throw std::invalid_argument("floor map has no start region");
  }
  env.sample_start = [start_rects](Rng& rng) {
    double total = 0.0;
    for (const Rect& r : start_rects) total += r.area();
    double pick = rng.uniform() * total;
    const Rect* chosen = &start_rects.back();
    for (const Rect& r : start_rects) {
      pick -= r.area();
      if (pick < 0.0) {
        chosen = &r;
        break;
      }
    }
    return StateVec{rng.uniform(chosen->x0, chosen->x1),
                    rng.uniform(chosen->y0, chosen->y1)};
  };
  return env;
}

}  // namespace pft::envs
