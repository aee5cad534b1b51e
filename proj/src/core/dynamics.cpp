#include "pft/core/dynamics.hpp"

#include <cassert>

namespace pft {

StateVec apply_action(const PomdpSpec& spec, const EnvMap& map, StateVec s,
                      ActionId a) {
  assert(a >= 0 && a < spec.action_count());
  const StateVec target =
      map.clamp_to_bounds(s + spec.action_table[a].displacement());
  if (path_blocked(map.walls, s, target)) return s;
  return target;
}

StateVec apply_action_noisy(const PomdpSpec& spec, const EnvMap& map,
                            StateVec s, ActionId a, Rng& rng) {
  assert(a >= 0 && a < spec.action_count());
  StateVec disp = spec.action_table[a].displacement();
  if (spec.process_noise_std > 0.0) {
    disp.x += rng.normal(0.0, spec.process_noise_std);
    disp.y += rng.normal(0.0, spec.process_noise_std);
  }
  const StateVec target = map.clamp_to_bounds(s + disp);
  if (path_blocked(map.walls, s, target)) return s;
  return target;
}

StepResult step_env(const PomdpSpec& spec, const EnvMap& map,
                    const ModelSuite& models, StateVec s, ActionId a,
                    int steps_taken, Rng& rng) {
  StepResult out;
  out.next = models.transition(s, a, rng);
  out.obs = models.obs_generator(out.next, rng);
  out.reward = models.reward(s, a, out.next);
  const bool goal = models.terminal(out.next) == Terminal::kGoal;
  out.done = goal || steps_taken + 1 >= spec.max_steps;
  return out;
}

}  // namespace pft
