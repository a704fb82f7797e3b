#include "conekit/generators.hpp"

#include <limits>
#include <utility>

namespace conekit {

namespace {

using Index = Eigen::Index;

double condition(const Mat& m) {
  const auto sv = singular_value_range(m);
  return sv.min > 0.0 ? sv.max / sv.min : std::numeric_limits<double>::infinity();
}

}  // namespace

std::uint64_t instance_seed(std::uint64_t campaign_seed, std::uint64_t index) {
  std::uint64_t z = campaign_seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Mat random_metzler(std::size_t n, Rng& rng) {
  const Index d = static_cast<Index>(n);
  Mat a(d, d);
  for (Index i = 0; i < d; ++i) {
    double off = 0.0;
    for (Index j = 0; j < d; ++j) {
      if (i == j) continue;
      a(i, j) = rng.uniform();
      off += a(i, j);
    }
    a(i, i) = -off - rng.uniform(0.5, 1.5);
  }
  return a;
}

Mat random_dense(std::size_t n, Rng& rng) {
  const Index d = static_cast<Index>(n);
  Mat a(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) {
      const double mag = rng.uniform(0.05, 1.0);
      a(i, j) = rng.coin() ? mag : -mag;
    }
  }
  return a;
}

Mat random_perturbed_metzler(std::size_t n, Rng& rng) {
  Mat a = random_metzler(n, rng);
  if (n < 2) return a;
  const Index i = static_cast<Index>(rng.index(n));
  Index j = static_cast<Index>(rng.index(n - 1));
  if (j >= i) ++j;
  a(i, j) = -rng.uniform(0.05, 1.0);
  return a;
}

PlantedInstance random_somewhere_positive_planted(std::size_t n, Rng& rng) {
  const Index d = static_cast<Index>(n);
  Mat p(d, d);
  do {
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) p(i, j) = rng.uniform(0.1, 1.0);
    }
  } while (condition(p) > 1e3);
  PlantedInstance inst;
  inst.z = random_positive(n, rng, 0.5, 1.5);
  inst.e = p * inst.z;
  inst.a = -p.partialPivLu().inverse();
  return inst;
}

Mat random_generators(std::size_t n, Rng& rng) {
  const Index d = static_cast<Index>(n);
  Mat g(d, d);
  do {
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) g(i, j) = (i == j ? 1.0 : 0.0) + 0.4 * rng.uniform(-1.0, 1.0);
    }
  } while (condition(g) > 50.0);
  return g;
}

Vec random_positive(std::size_t n, Rng& rng, double lo, double hi) {
  Vec v(static_cast<Index>(n));
  for (Index i = 0; i < v.size(); ++i) v(i) = rng.uniform(lo, hi);
  return v;
}

}  // namespace conekit
