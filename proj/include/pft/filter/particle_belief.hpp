#pragma once

#include <cstddef>
#include <vector>

#include "pft/core/rng.hpp"
#include "pft/core/types.hpp"

namespace pft::filter {

/// Weighted particle approximation of the belief. Weights are kept
/// normalized (sum 1) between operations; step_index counts episode steps
/// since initialization.
struct ParticleBelief {
  std::vector<StateVec> particles;
  std::vector<double> weights;
  int step_index = 0;

  std::size_t size() const { return particles.size(); }
  bool valid(double eps = 1e-9) const;
};

/// Weighted mean of the particles.
StateVec belief_mean(const ParticleBelief& b);

/// Euclidean distance between the weighted mean and the true state.
double particle_distance(const ParticleBelief& b, StateVec s_true);

/// Effective sample size 1 / sum(w^2) for normalized weights.
double effective_sample_size(const ParticleBelief& b);

/// Low-variance systematic resampling to `count` equal-weight particles
/// using a single offset. Equal input weights with count == size() return
/// the input multiset unchanged. step_index is preserved.
ParticleBelief systematic_resample(const ParticleBelief& b, std::size_t count,
                                   Rng& rng);
inline ParticleBelief systematic_resample(const ParticleBelief& b, Rng& rng) {
  return systematic_resample(b, b.size(), rng);
}

}  // namespace pft::filter
