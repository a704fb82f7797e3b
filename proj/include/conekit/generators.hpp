#pragma once

#include "conekit/linalg.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>

namespace conekit {

/// Seeded source of doubles; the bit-to-double mapping is fixed so streams
/// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)) % n; }
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 of (seed, index): independent per-instance seeds for replay.
std::uint64_t instance_seed(std::uint64_t campaign_seed, std::uint64_t index);

/// Off-diagonal entries U[0, 1]; diagonal -(off-diagonal row sum) - U[0.5, 1.5],
/// so A 1 < 0.
Mat random_metzler(std::size_t n, Rng& rng);

/// Entries with random sign and magnitude U[0.05, 1].
Mat random_dense(std::size_t n, Rng& rng);

/// random_metzler with one off-diagonal entry replaced by -U[0.05, 1].
Mat random_perturbed_metzler(std::size_t n, Rng& rng);

struct PlantedInstance {
  Mat a;
  Vec e;
  Vec z;
};

/// A = -P^{-1} for P with entries U[0.1, 1] (resampled until well
/// conditioned), e = P z for z with entries U[0.5, 1.5]. Then A e = -z and
/// -A^{-1} = P >= 0 without zero rows, which makes A somewhere positive.
PlantedInstance random_somewhere_positive_planted(std::size_t n, Rng& rng);

/// I + 0.4 R with R entries U[-1, 1], resampled until cond(G) <= 50.
Mat random_generators(std::size_t n, Rng& rng);

Vec random_positive(std::size_t n, Rng& rng, double lo = 0.5, double hi = 2.0);

}  // namespace conekit
