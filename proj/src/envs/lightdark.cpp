#include "pft/envs/lightdark.hpp"

#include <cmath>
#include <stdexcept>

#include "pft/core/dynamics.hpp"

namespace pft::envs {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

double normal_pdf(double x, double mean, double sigma) {
  const double z = (x - mean) / sigma;
  return std::exp(-0.5 * z * z) / (sigma * std::sqrt(kTwoPi));
}

}  // namespace

EnvMap make_lightdark_map(const LightDarkConfig& cfg) {
  EnvMap map;
  map.bounds = {0.0, 0.0, 2.0, 2.0};
  map.regions.push_back({"light", RegionKind::kLight, cfg.light});
  map.regions.push_back({"start", RegionKind::kStart, cfg.start});
  map.regions.push_back({"goal", RegionKind::kGoal, cfg.goal});
  int i = 0;
  for (const Rect& t : cfg.fixed_traps) {
    map.regions.push_back({"trap_" + std::to_string(i++), RegionKind::kTrap, t});
  }
  map.validate();
  return map;
}

double lightdark_sigma(const EnvMap& map, const LightDarkConfig& cfg,
                       StateVec s) {
  return map.in_light(s) ? cfg.sigma_light : cfg.sigma_dark;
}

ObsVec lightdark_observe(const LightDarkConfig& cfg, const EnvMap& map,
                         StateVec s, Rng& rng) {
  const double sigma = lightdark_sigma(map, cfg, s);
  return {s.x + rng.normal(0.0, sigma), s.y + rng.normal(0.0, sigma)};
}

double lightdark_density(const LightDarkConfig& cfg, const EnvMap& map,
                         const ObsVec& o, StateVec s) {
  const double sigma = lightdark_sigma(map, cfg, s);
  return normal_pdf(o[0], s.x, sigma) * normal_pdf(o[1], s.y, sigma);
}

StateVec lightdark_propose(const LightDarkConfig& cfg, const EnvMap& map,
                           const ObsVec& o, Rng& rng) {
  const StateVec obs_point{o[0], o[1]};
  const double sigma = map.in_light(obs_point) ? cfg.proposer_std_light
                                               : cfg.proposer_std_dark;
  const StateVec p{o[0] + rng.normal(0.0, sigma),
                   o[1] + rng.normal(0.0, sigma)};
  return map.clamp_to_bounds(p);
}

std::vector<Region> spawn_test_traps(const LightDarkConfig& cfg,
                                     const EnvMap& map, Rng& rng) {
  const double half = 0.5 * cfg.trap_size;
  const Rect& strip = cfg.trap_strip;
  std::vector<Region> traps;
  for (int i = 0; i < 2; ++i) {
    Rect r;
    // Rejection keeps traps clear of the goal; the default strip never
    // reaches it, so this loop normally runs once.
    for (int tries = 0; tries < 1000; ++tries) {
      const double cx = rng.uniform(strip.x0, strip.x1);
      const double cy = rng.uniform(strip.y0, strip.y1);
      r = {cx - half, cy - half, cx + half, cy + half};
      r = {std::max(r.x0, map.bounds.x0), std::max(r.y0, map.bounds.y0),
           std::min(r.x1, map.bounds.x1), std::min(r.y1, map.bounds.y1)};
      bool ok = true;
      for (const Region& g : map.regions) {
        if (g.kind == RegionKind::kGoal && g.rect.intersects(r)) ok = false;
      }
      if (ok) break;
    }
    traps.push_back({"test_trap_" + std::to_string(i), RegionKind::kTrap, r});
  }
  return traps;
}

Environment make_lightdark_env(const LightDarkConfig& cfg,
                               LightDarkAblation ablation) {
  return make_lightdark_env(make_lightdark_map(cfg), cfg, ablation);
}

Environment make_lightdark_env(const EnvMap& map, const LightDarkConfig& cfg,
                               LightDarkAblation ablation) {
  Environment env;
  env.name = "lightdark";
  env.map = map;
  env.spec.action_table = eight_direction_actions(cfg.speed);
  env.spec.discount = cfg.discount;
  env.spec.max_steps = cfg.max_steps;
  env.spec.goal_reward = cfg.goal_reward;
  env.spec.trap_penalty = cfg.trap_penalty;

  const PomdpSpec spec = env.spec;
  const EnvMap m = env.map;

  ModelSuite suite;
  suite.transition = [spec, m](const StateVec& s, ActionId a, Rng& rng) {
    return apply_action_noisy(spec, m, s, a, rng);
  };
  suite.obs_generator = [cfg, m](const StateVec& s, Rng& rng) {
    return lightdark_observe(cfg, m, s, rng);
  };
  suite.obs_density = [cfg, m](const ObsVec& o, const StateVec& s) {
    return lightdark_density(cfg, m, o, s);
  };
  suite.proposer = [cfg, m](const ObsVec& o, Rng& rng) {
    return lightdark_propose(cfg, m, o, rng);
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
  if (ablation == LightDarkAblation::kMismatch) {
    LightDarkConfig test_cfg = cfg;
    test_cfg.sigma_dark = cfg.sigma_test;
    env.truth.obs_generator = [test_cfg, m](const StateVec& s, Rng& rng) {
      return lightdark_observe(test_cfg, m, s, rng);
    };
  }

  const auto starts = env.map.regions_of(RegionKind::kStart);
  if (starts.empty()) {
    throw std::invalid_argument("lightdark map has no start region");
  }
  const Rect start = starts.front()->rect;
  env.sample_start = [start](Rng& rng) {
    return StateVec{rng.uniform(start.x0, start.x1),
                    rng.uniform(start.y0, start.y1)};
  };
  return env;
}

}  // namespace pft::envs
