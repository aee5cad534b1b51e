#pragma once

#include <functional>

#include "pft/core/env_map.hpp"
#include "pft/core/types.hpp"
#include "pft/filter/particle_belief.hpp"

namespace pft::planner {

/// Leaf value estimator over (belief, remaining depth). Must return a
/// finite value bounded by goal_reward / (1 - gamma) in magnitude.
using RolloutPolicy =
    std::function<double(const filter::ParticleBelief&, int, Rng&)>;

/// Collapse-style estimate: draw one particle by weight, steer it straight
/// to the nearest goal point in k = ceil(distance / speed) steps, displace
/// every other particle by the same vector, and score the endpoints
/// (goal_reward in goal, trap_penalty in trap, 0 otherwise), all discounted
/// by gamma^k. Walls are ignored. Returns 0 when depth <= 0.
double rollout_collapse(const filter::ParticleBelief& b, int depth,
                        const PomdpSpec& spec, const EnvMap& map,
                        double gamma, Rng& rng);

/// rollout_collapse bound to an environment, as a RolloutPolicy.
RolloutPolicy make_collapse_rollout(const PomdpSpec& spec, const EnvMap& map,
                                    double gamma);

/// Always 0; for fixtures without spatial goals.
RolloutPolicy make_zero_rollout();

}  // namespace pft::planner
