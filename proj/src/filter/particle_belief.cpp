#include "pft/filter/particle_belief.hpp"

#include <cassert>
#include <cmath>

namespace pft::filter {

bool ParticleBelief::valid(double eps) const {
  if (particles.size() != weights.size() || particles.empty()) return false;
  if (step_index < 0) return false;
  double sum = 0.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!(weights[i] >= 0.0) || !std::isfinite(weights[i])) return false;
    if (!particles[i].finite()) return false;
    sum += weights[i];
  }
  return std::fabs(sum - 1.0) <= eps;
}

StateVec belief_mean(const ParticleBelief& b) {
  StateVec m{0.0, 0.0};
  for (std::size_t i = 0; i < b.size(); ++i) {
    m = m + b.weights[i] * b.particles[i];
  }
  return m;
}

double particle_distance(const ParticleBelief& b, StateVec s_true) {
  return distance(belief_mean(b), s_true);
}

double effective_sample_size(const ParticleBelief& b) {
  double s2 = 0.0;
  for (double w : b.weights) s2 += w * w;
  return s2 > 0.0 ? 1.0 / s2 : 0.0;
}

ParticleBelief systematic_resample(const ParticleBelief& b, std::size_t count,
                                   Rng& rng) {
  assert(!b.particles.empty() && count > 0);
  ParticleBelief out;
  out.step_index = b.step_index;
  out.particles.reserve(count);
  out.weights.assign(count, 1.0 / static_cast<double>(count));

  double total = 0.0;
  for (double w : b.weights) total += w;
  assert(total > 0.0);

  // Point p selects particle j with C_{j-1} <= p < C_j.
  const double step = total / static_cast<double>(count);
  double pos = rng.uniform() * step;
  std::size_t j = 0;
  double cum = b.weights[0];
  for (std::size_t i = 0; i < count; ++i) {
    while (cum <= pos && j + 1 < b.size()) {
      ++j;
      cum += b.weights[j];
    }
    out.particles.push_back(b.particles[j]);
    pos += step;
  }
  return out;
}

}  // namespace pft::filter
