#pragma once

#include <functional>

#include "pft/core/rng.hpp"
#include "pft/core/types.hpp"

namespace pft {

/// The planner- and filter-facing model bundle. All members must be set;
/// environments build these from analytic models. obs_density must be
/// finite and >= 0 everywhere, and obs_generator must sample from the
/// same density family obs_density evaluates.
struct ModelSuite {
  std::function<StateVec(const StateVec&, ActionId, Rng&)> transition;
  std::function<double(const ObsVec&, const StateVec&)> obs_density;
  std::function<ObsVec(const StateVec&, Rng&)> obs_generator;
  std::function<StateVec(const ObsVec&, Rng&)> proposer;
  std::function<double(const StateVec&, ActionId, const StateVec&)> reward;
  std::function<Terminal(const StateVec&)> terminal;
};

}  // namespace pft
