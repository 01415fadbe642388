#pragma once

#include "modirac/report.hpp"
#include "modirac/types.hpp"

#include <array>
#include <string_view>

namespace modirac {

enum class Representation { dirac, chiral };

/// Which alpha matrices to use.
///
/// `dirac`: Hermitian alpha_i = gamma^0 gamma^i, alpha_i^2 = +I. Used for the
/// dynamics and for every phase exp(2i alpha.p t).
/// `quaternionic`: anti-Hermitian alpha_i = i alpha_dirac_i, alpha_i^2 = -I,
/// the quaternion-like units of the mass operator.
enum class AlphaFamily { dirac, quaternionic };

std::string_view to_string(Representation rep);
Representation representation_from_string(std::string_view name);

/// Gamma matrices gamma^0..gamma^3 (upper indices) and the derived alpha, beta.
struct GammaSet {
  Representation representation = Representation::dirac;
  std::array<ComplexMatrix4, 4> gamma;
  std::array<ComplexMatrix4, 3> alpha_d;
  std::array<ComplexMatrix4, 3> alpha_q;
  ComplexMatrix4 beta;

  /// gamma_mu = g_mu_nu gamma^nu.
  ComplexMatrix4 gamma_lower(int mu) const;
  const std::array<ComplexMatrix4, 3>& alpha(AlphaFamily family) const
  {
    return family == AlphaFamily::dirac ? alpha_d : alpha_q;
  }
};

GammaSet build_gamma_set(Representation representation);

/// Pauli matrices sigma_1..sigma_3.
const std::array<Eigen::Matrix2cd, 3>& pauli();

/// Matrix exponential of a 4x4 complex matrix (scaling and squaring, Pade 13).
/// Rejects non-finite input with std::domain_error.
ComplexMatrix4 mat_exp(const ComplexMatrix4& m);

/// sum_i alpha_i p_i in the requested family.
ComplexMatrix4 alpha_dot_p(const GammaSet& g, const Vec3& p,
                           AlphaFamily family = AlphaFamily::dirac);

/// Anticommutator and Hermiticity certificate for a gamma set. One check per
/// unordered (mu, nu) pair, plus Hermiticity/anti-Hermiticity and square checks
/// for beta and both alpha families.
VerificationReport verify_clifford(const GammaSet& g, double tol);

}  // namespace modirac
