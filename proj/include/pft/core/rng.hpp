#pragma once

#include <cstdint>

namespace pft {

/// Seedable deterministic pseudo-random stream (xoshiro256**).
///
/// Streams are splittable: substream(k) derives an independent child
/// generator from the construction seed without consuming any state,
/// so per-episode / per-planner streams never collide.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi);

  /// Uniform integer in [0, n). Requires n > 0.
  int uniform_int(int n);

  /// Gaussian via Box-Muller (stateless, two uniforms per draw).
  double normal(double mean = 0.0, double sd = 1.0);

  /// Independent child stream keyed by `stream`. Deterministic in
  /// (construction seed, stream); does not advance this generator.
  Rng substream(std::uint64_t stream) const;

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::uint64_t s_[4];
};

}  // namespace pft
