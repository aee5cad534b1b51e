#pragma once

#include <functional>
#include <string>

#include "pft/core/env_map.hpp"
#include "pft/core/model_suite.hpp"
#include "pft/core/types.hpp"

namespace pft::envs {

/// A runnable environment instance. `model` is the analytic suite handed to
/// the filter and planner; `truth` drives the real environment step and is
/// identical to `model` except under ablations (e.g. observation-model
/// mismatch). Immutable after construction; all closures are reentrant with
/// caller-supplied rngs.
struct Environment {
  std::string name;
  PomdpSpec spec;
  EnvMap map;
  ModelSuite model;
  ModelSuite truth;
  std::function<StateVec(Rng&)> sample_start;
};

/// Copy of `env` with extra trap regions spliced into the map and into the
/// reward functions of both suites — the planner sees test-time rewards.
Environment with_extra_traps(const Environment& env,
                             const std::vector<Region>& traps);

/// The shared 8-direction full-thrust action table.
std::vector<ActionSpec> eight_direction_actions(double speed);

}  // namespace pft::envs
