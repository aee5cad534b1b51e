#include "pft/envs/environment.hpp"

#include <cmath>

namespace pft::envs {

std::vector<ActionSpec> eight_direction_actions(double speed) {
  const double d = 1.0 / std::sqrt(2.0);
  return {
      {"E", 1.0, 0.0, speed},  {"NE", d, d, speed},  {"N", 0.0, 1.0, speed},
      {"NW", -d, d, speed},    {"W", -1.0, 0.0, speed}, {"SW", -d, -d, speed},
      {"S", 0.0, -1.0, speed}, {"SE", d, -d, speed},
  };
}

Environment with_extra_traps(const Environment& env,
                             const std::vector<Region>& traps) {
  Environment out = env;
  for (const Region& t : traps) out.map.regions.push_back(t);

  const double penalty = env.spec.trap_penalty;
  auto wrap = [traps, penalty](
                  std::function<double(const StateVec&, ActionId,
                                       const StateVec&)> base) {
    return [traps, penalty, base = std::move(base)](
               const StateVec& s, ActionId a, const StateVec& next) {
      double r = base(s, a, next);
      for (const Region& t : traps) {
        if (t.rect.contains(next)) {
          r += penalty;
          break;
        }
      }
      return r;
    };
  };
  out.model.reward = wrap(env.model.reward);
  out.truth.reward = wrap(env.truth.reward);
  return out;
}

}  // namespace pft::envs
