#include "pft/filter/filter.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace pft::filter {

ParticleBelief init_belief(const EnvMap& map, const FilterParams& params,
                           Rng& rng) {
  const auto starts = map.regions_of(RegionKind::kStart);
  double total_area = 0.0;
  for (const Region* r : starts) total_area += r->rect.area();
  if (starts.empty() || total_area <= 0.0) {
    throw std::invalid_argument("init_belief: map has no start region");
  }

  const int k = params.particle_count;
  ParticleBelief b;
  b.particles.reserve(k);
  b.weights.assign(k, 1.0 / static_cast<double>(k));
  for (int i = 0; i < k; ++i) {
    // Area-weighted region choice, then uniform within it.
    double pick = rng.uniform() * total_area;
    const Region* chosen = starts.back();
    for (const Region* r : starts) {
      pick -= r->rect.area();
      if (pick < 0.0) {
        chosen = r;
        break;
      }
    }
    const Rect& rc = chosen->rect;
    b.particles.push_back(
        {rng.uniform(rc.x0, rc.x1), rng.uniform(rc.y0, rc.y1)});
  }
  return b;
}

int proposal_count(const FilterParams& params, int step_index) {
  const double k = static_cast<double>(params.particle_count);
  return static_cast<int>(std::floor(
      k * params.proposal_fraction * std::pow(params.proposal_decay, step_index)));
}

namespace {

ParticleBelief rebuild_from_proposer(std::size_t k, const ObsVec& o,
                                     const ModelSuite& models, int step_index,
                                     Rng& rng, FilterEvents* events) {
  ParticleBelief out;
  out.step_index = step_index;
  out.particles.reserve(k);
  out.weights.assign(k, 1.0 / static_cast<double>(k));
  for (std::size_t i = 0; i < k; ++i) out.particles.push_back(models.proposer(o, rng));
  if (events) ++events->degeneracy_recoveries;
  return out;
}

}  // namespace

ParticleBelief update(const ParticleBelief& b, ActionId a, const ObsVec& o,
                      const ModelSuite& models, const FilterParams& params,
                      Rng& rng, FilterEvents* events) {
  assert(b.valid());
  const std::size_t k = b.size();

  ParticleBelief next;
  next.step_index = b.step_index;
  next.particles.reserve(k);
  next.weights.reserve(k);

  double sum = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    const StateVec s = models.transition(b.particles[i], a, rng);
    const double w = b.weights[i] * models.obs_density(o, s);
    next.particles.push_back(s);
    next.weights.push_back(w);
    sum += w;
  }

  if (!(sum > 0.0) || !std::isfinite(sum)) {
    next = rebuild_from_proposer(k, o, models, b.step_index, rng, events);
  } else {
    const int m_prop = std::min<int>(proposal_count(params, b.step_index),
                                     static_cast<int>(k));
    if (m_prop > 0) {
      const double mean_w = sum / static_cast<double>(k);
      // Replace the lowest-weight particles; ties broken by index so the
      // result is reproducible.
      std::vector<std::size_t> order(k);
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::partial_sort(order.begin(), order.begin() + m_prop, order.end(),
                        [&](std::size_t l, std::size_t r) {
                          return next.weights[l] != next.weights[r]
                                     ? next.weights[l] < next.weights[r]
                                     : l < r;
                        });
      for (int i = 0; i < m_prop; ++i) {
        const std::size_t idx = order[i];
        next.particles[idx] = models.proposer(o, rng);
        next.weights[idx] = mean_w;
      }
    }

    double total = std::accumulate(next.weights.begin(), next.weights.end(), 0.0);
    if (!(total > 0.0) || !std::isfinite(total)) {
      next = rebuild_from_proposer(k, o, models, b.step_index, rng, events);
    } else {
      for (double& w : next.weights) w /= total;
    }
  }

  if (params.resample_period > 0 &&
      b.step_index % params.resample_period == params.resample_period - 1) {
    next = systematic_resample(next, k, rng);
  }
  next.step_index = b.step_index + 1;
  return next;
}

}  // namespace pft::filter
