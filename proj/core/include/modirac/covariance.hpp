#pragma once

#include "modirac/clifford.hpp"
#include "modirac/report.hpp"
#include "modirac/types.hpp"

#include <cstdint>

namespace modirac {

/// The extra mass-phase factor exp(2i (alpha_d.p) t) of the modified equation.
struct MassPhaseOperator {
  Vec3 p;
  double t = 0.0;
  ComplexMatrix4 matrix;
};

MassPhaseOperator mass_phase_operator(const GammaSet& g, const Vec3& p, double t);

struct CommutingExponentials {
  /// || [e^A, e^B] ||_maxabs
  double comm_residual = 0.0;
  /// || e^A e^B - e^{A+B} ||_maxabs
  double bch_residual = 0.0;
};

CommutingExponentials commuting_exponentials_check(const ComplexMatrix4& a,
                                                   const ComplexMatrix4& b);

/// || [mass_phase_operator(p, t), S] || for the boost along `boost_direction`.
double phase_boost_commutator(const GammaSet& g, const Vec3& p, double t,
                              const Vec3& boost_direction, double omega);

/// Random boosts along p-hat: the intertwining residual and the commutator of
/// the mass-phase operator with S, two checks per trial. The commutator for a
/// boost perpendicular to p is attached as a diagnostic.
///
/// Trial distribution: |p| log-uniform in [0.1, 10] with uniform direction,
/// omega uniform in [-3, 3], t uniform in [0, 10].
VerificationReport covariance_suite(const GammaSet& g, int trials, std::uint64_t seed,
                                    double tol);

}  // namespace modirac
