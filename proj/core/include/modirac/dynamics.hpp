#pragma once

// Momentum-space evolution of the modified Dirac equation
//
//   i dpsi/dt = H(t) psi,   H(t) = alpha.p + beta m - beta m exp(2i (alpha.p) t),
//
// with the Hermitian alpha family. The last term carries an explicit time
// dependence, so <H> is not conserved; dropping it restores the free Dirac
// Hamiltonian and energy conservation.

#include "modirac/clifford.hpp"
#include "modirac/types.hpp"

#include <stdexcept>
#include <string_view>
#include <vector>

namespace modirac {

enum class Integrator { rk4, magnus2 };

/// `modified` keeps the time-dependent mass term; `free` drops it (control).
enum class MassTerm { modified, free };

std::string_view to_string(Integrator integrator);
Integrator integrator_from_string(std::string_view name);

struct MomentumState {
  Vec3 p;
  double m = 1.0;
  Spinor spinor;

  /// Normalized positive-energy eigenvector of alpha.p + beta m.
  static MomentumState positive_energy(const GammaSet& g, const Vec3& p, double m);
};

ComplexMatrix4 hamiltonian_at(const GammaSet& g, const Vec3& p, double m, double t,
                              MassTerm term = MassTerm::modified);

/// dH/dt = -beta m 2i (alpha.p) exp(2i (alpha.p) t); zero for the free term.
ComplexMatrix4 hamiltonian_time_derivative(const GammaSet& g, const Vec3& p, double m, double t,
                                           MassTerm term = MassTerm::modified);

/// Upper bound |p| + 2m on the spectral norm of H(t).
double hamiltonian_norm_bound(const Vec3& p, double m);

/// min(0.01, 0.05 / (|p| + m)).
double default_time_step(const Vec3& p, double m);

inline constexpr double kStabilityLimit = 0.1;

/// Raised when dt * ||H|| exceeds the stability limit. The suggested step is
/// half the largest one the guard would accept.
class StabilityError : public std::invalid_argument {
 public:
  StabilityError(const std::string& what, double suggested_dt)
      : std::invalid_argument(what), suggested_dt_(suggested_dt)
  {
  }
  double suggested_dt() const { return suggested_dt_; }

 private:
  double suggested_dt_;
};

struct EvolveOptions {
  double t_max = 10.0;
  /// Non-positive selects default_time_step.
  double dt = 0.0;
  Integrator integrator = Integrator::magnus2;
  MassTerm term = MassTerm::modified;
};

struct EvolutionTrace {
  std::vector<double> times;
  std::vector<Spinor> spinors;
  std::vector<double> norms;
  /// <psi|H(t)|psi>
  std::vector<double> energies;
  /// Largest singular value of the mass function Q_s(t).
  std::vector<double> qs_norms;
  double dt = 0.0;
  MassTerm term = MassTerm::modified;

  std::size_t size() const { return times.size(); }
};

/// Fixed-step integration from t = 0 to round(t_max / dt) * dt.
EvolutionTrace evolve(const GammaSet& g, const MomentumState& state0,
                      const EvolveOptions& options);

struct EnergyDriftReport {
  /// max_t |<H>(t) - <H>(0)|
  double energy_violation = 0.0;
  /// max over interior samples of |d<H>/dt (central difference) - <dH/dt>|.
  double ehrenfest_deviation = 0.0;
  std::vector<double> central_difference;
  std::vector<double> analytic;
};

/// Needs at least three samples.
EnergyDriftReport energy_drift_check(const EvolutionTrace& trace, const GammaSet& g,
                                     const Vec3& p, double m);

struct MassFunctionSample {
  ComplexMatrix4 matrix;
  double norm_value = 0.0;
};

/// Q_s(t) = m (a I + b exp(2i (alpha.p) t)), by default a = 1, b = -1.
MassFunctionSample mass_function_sample(const GammaSet& g, const Vec3& p, double m, double t,
                                        double a = 1.0, double b = -1.0);

/// Largest singular value.
double spectral_norm(const ComplexMatrix4& m);

}  // namespace modirac
