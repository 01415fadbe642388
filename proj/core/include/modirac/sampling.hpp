#pragma once

#include "modirac/types.hpp"

#include <cmath>
#include <cstdint>
#include <random>

namespace modirac {

/// Engine behind every seeded sweep; fixed so reports reproduce bit-for-bit.
using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double log_uniform(Rng& rng, double lo, double hi)
{
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

/// Uniform on the unit sphere.
inline Vec3 random_unit_vector(Rng& rng)
{
  std::normal_distribution<double> normal(0.0, 1.0);
  for (;;) {
    const Vec3 v(normal(rng), normal(rng), normal(rng));
    const double n = v.norm();
    if (n > 1e-8) {
      return v / n;
    }
  }
}

/// Momentum with log-uniform magnitude and uniform direction.
inline Vec3 random_momentum(Rng& rng, double lo = 0.1, double hi = 10.0)
{
  return log_uniform(rng, lo, hi) * random_unit_vector(rng);
}

inline ComplexMatrix4 random_matrix(Rng& rng, double max_norm)
{
  ComplexMatrix4 m;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      m(i, j) = Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    }
  }
  const double scale = uniform(rng, 0.0, max_norm) / m.operatorNorm();
  return scale * m;
}

}  // namespace modirac
