#include "pft/planner/rollout.hpp"

#include <cassert>
#include <cmath>

namespace pft::planner {

double rollout_collapse(const filter::ParticleBelief& b, int depth,
                        const PomdpSpec& spec, const EnvMap& map,
                        double gamma, Rng& rng) {
  if (depth <= 0) return 0.0;
  assert(!b.particles.empty());
  assert(!spec.action_table.empty());
  const double speed = spec.action_table.front().speed;

  // Chosen particle: weight-proportional draw.
  std::size_t j = b.size() - 1;
  double pick = rng.uniform();
  for (std::size_t i = 0; i < b.size(); ++i) {
    pick -= b.weights[i];
    if (pick < 0.0) {
      j = i;
      break;
    }
  }

  const StateVec target = map.nearest_goal_point(b.particles[j]);
  const double d = distance(b.particles[j], target);
  // ceil with a dust tolerance so exact multiples of speed stay exact.
  const int k = d > 0.0 ? static_cast<int>(std::ceil(d / speed - 1e-9)) : 0;
  const double discount = std::pow(gamma, k);
  const StateVec disp = target - b.particles[j];

  double value = b.weights[j] * discount * spec.goal_reward;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i == j) continue;
    const StateVec end = b.particles[i] + disp;
    double v = 0.0;
    if (map.in_goal(end)) {
      v = spec.goal_reward;
    } else if (map.in_trap(end)) {
      v = spec.trap_penalty;
    }
    value += b.weights[i] * discount * v;
  }
  return value;
}

RolloutPolicy make_collapse_rollout(const PomdpSpec& spec, const EnvMap& map,
                                    double gamma) {
  return [spec, map, gamma](const filter::ParticleBelief& b, int depth,
                            Rng& rng) {
    return rollout_collapse(b, depth, spec, map, gamma, rng);
  };
}

RolloutPolicy make_zero_rollout() {
  return [](const filter::ParticleBelief&, int, Rng&) { return 0.0; };
}

}  // namespace pft::planner
