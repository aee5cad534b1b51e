#pragma once

#include "pft/core/env_map.hpp"
#include "pft/core/model_suite.hpp"
#include "pft/core/rng.hpp"
#include "pft/core/types.hpp"

namespace pft {

/// Deterministic move: s + speed * unit(direction), clamped to the bounding
/// box. If the motion segment crosses (or touches) any wall the agent stays
/// put; there is no partial slide. Invalid action ids are a contract
/// violation (asserted).
StateVec apply_action(const PomdpSpec& spec, const EnvMap& map, StateVec s,
                      ActionId a);

/// As apply_action, with optional additive Gaussian process noise
/// (spec.process_noise_std; default off). Noise is applied to the
/// displacement before the wall check.
StateVec apply_action_noisy(const PomdpSpec& spec, const EnvMap& map,
                            StateVec s, ActionId a, Rng& rng);

struct StepResult {
  StateVec next;
  ObsVec obs;
  double reward = 0.0;
  bool done = false;
};

/// One environment step: transition, observe, reward. `steps_taken` counts
/// completed steps before this one; done is goal entry or budget
/// exhaustion. Trap entry adds the penalty but does not terminate.
StepResult step_env(const PomdpSpec& spec, const EnvMap& map,
                    const ModelSuite& models, StateVec s, ActionId a,
                    int steps_taken, Rng& rng);

}  // namespace pft
