#pragma once

// Conventions shared by every module.
//
// Natural units: hbar = c = 1. Masses, momenta and energies are dimensionless
// multiples of a reference mass; times are in inverse reference-mass units.
//
// Metric signature (+,-,-,-). Gamma matrices are stored with upper
// (contravariant) indices; covariant ones follow from gamma_mu = g_mu_nu gamma^nu.

#include <array>

namespace modirac {

inline constexpr std::array<double, 4> kMetricDiagonal{+1.0, -1.0, -1.0, -1.0};

inline constexpr double metric(int mu, int nu)
{
  return mu == nu ? kMetricDiagonal[static_cast<std::size_t>(mu)] : 0.0;
}

inline constexpr double kHbar = 1.0;
inline constexpr double kSpeedOfLight = 1.0;

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace modirac
