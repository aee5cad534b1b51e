#pragma once

#include "pft/core/env_map.hpp"
#include "pft/core/model_suite.hpp"
#include "pft/filter/particle_belief.hpp"

namespace pft::filter {

struct FilterParams {
  int particle_count = 100;       // K
  double proposal_fraction = 0.3; // p, in [0, 1]
  double proposal_decay = 0.9;    // gamma_d, in (0, 1]
  int resample_period = 3;        // resample every Nth update
};

/// Counters for rare recovery paths, aggregated by the harness.
struct FilterEvents {
  int degeneracy_recoveries = 0;
};

/// K particles uniform over the map's start regions (area-weighted across
/// regions), uniform weights, step_index 0. Throws std::invalid_argument
/// if the map declares no start region.
ParticleBelief init_belief(const EnvMap& map, const FilterParams& params,
                           Rng& rng);

/// Number of particles the proposer replaces at episode step n:
/// floor(K * p * gamma_d^n).
int proposal_count(const FilterParams& params, int step_index);

/// One filter update:
///   1. advance every particle through models.transition
///   2. multiply weights by models.obs_density(o, s')
///   3. replace the proposal_count lowest-weight particles with
///      models.proposer(o) draws, each at the current mean weight
///   4. renormalize
///   5. systematic resampling on every resample_period-th update
///   6. increment step_index
/// If every weight underflows to zero the belief is rebuilt from K
/// proposer draws at uniform weight and the event is counted.
ParticleBelief update(const ParticleBelief& b, ActionId a, const ObsVec& o,
                      const ModelSuite& models, const FilterParams& params,
                      Rng& rng, FilterEvents* events = nullptr);

}  // namespace pft::filter
