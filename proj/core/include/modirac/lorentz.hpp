#pragma once

#include "modirac/clifford.hpp"
#include "modirac/report.hpp"
#include "modirac/types.hpp"

#include <array>
#include <cstdint>

namespace modirac {

/// A pure boost: unit direction of relative motion and rapidity omega,
/// with velocity beta = tanh(omega).
class BoostSpec {
 public:
  /// Rejects |direction| != 1 (to 1e-14), non-finite rapidity and |beta| == 1.
  BoostSpec(const Vec3& direction, double rapidity);

  /// Normalizes `direction` first; a zero vector is allowed only with zero rapidity.
  static BoostSpec along(const Vec3& direction, double rapidity);
  static BoostSpec from_velocity(const Vec3& direction, double beta);
  static BoostSpec identity() { return BoostSpec(Vec3::UnitX(), 0.0); }

  const Vec3& direction() const { return direction_; }
  double rapidity() const { return rapidity_; }
  double beta() const;
  double lorentz_factor() const;

  BoostSpec inverse() const { return BoostSpec(direction_, -rapidity_); }

  bool operator==(const BoostSpec& other) const = default;

 private:
  Vec3 direction_;
  double rapidity_;
};

/// Vector representation a_mu_nu acting on contravariant coordinates
/// x'^mu = a_mu_nu x^nu.
struct LorentzMatrix {
  RealMatrix4 a;
  BoostSpec spec;
};

/// Spinor representation S of a boost.
struct SpinorBoost {
  ComplexMatrix4 s;
  BoostSpec spec;

  /// S^{-1} computed by LU factorization.
  ComplexMatrix4 inverse() const;
};

LorentzMatrix boost_matrix(const BoostSpec& spec);

/// S = exp(omega/2 n.alpha_d).
SpinorBoost spinor_boost(const BoostSpec& spec, const GammaSet& g);

/// Which gamma index placement enters S^{-1} gamma S = a gamma.
/// Only `covariant` holds for `boost_matrix` + `spinor_boost`; the other is kept
/// as the negative control that pins the convention down.
enum class IndexConvention { covariant, contravariant };

/// max_mu || S^{-1} gamma_mu S - sum_nu a_mu_nu gamma_nu ||_maxabs.
/// Rejects a LorentzMatrix built from a different BoostSpec.
double check_intertwining(const SpinorBoost& sb, const LorentzMatrix& a, const GammaSet& g);

/// Same residual for explicit matrices: `s_inv` need not be the inverse of `s`,
/// which is how the negative controls are formed.
double intertwining_residual(const ComplexMatrix4& s, const ComplexMatrix4& s_inv,
                             const RealMatrix4& a, const GammaSet& g,
                             IndexConvention convention = IndexConvention::covariant);

/// Lorentz-group generators in the Dirac spinor representation,
/// C_mu_nu = (1/4)[gamma_mu, gamma_nu] (lower indices).
struct LorentzGenerators {
  std::array<std::array<ComplexMatrix4, 4>, 4> c;
  /// C_k = (1/2) eps_kij C_ij.
  std::array<ComplexMatrix4, 3> rotation;
  /// D_k = C_0k.
  std::array<ComplexMatrix4, 3> boost;

  /// J = i(C + iD)/2 and K = i(C - iD)/2, the two commuting su(2) copies.
  std::array<ComplexMatrix4, 3> j() const;
  std::array<ComplexMatrix4, 3> k() const;
};

LorentzGenerators lorentz_generators(const GammaSet& g);

struct CasimirPair {
  /// C^2 - D^2
  ComplexMatrix4 c1;
  /// -C.D
  ComplexMatrix4 c2;
};

CasimirPair lorentz_casimirs(const GammaSet& g);

/// (1/2) C_mu_nu C^mu_nu, the tensor form of c1.
ComplexMatrix4 casimir_tensor_contraction(const LorentzGenerators& gen);
/// (1/8) eps^{mu nu rho sigma} C_mu_nu C_rho_sigma with eps^{0123} = -1.
ComplexMatrix4 casimir_pseudoscalar_contraction(const LorentzGenerators& gen);

ComplexMatrix4 squared_sum(const std::array<ComplexMatrix4, 3>& v);

/// Seeded sweep of boost, intertwining, determinant and Casimir properties.
VerificationReport lorentz_suite(const GammaSet& g, int trials, std::uint64_t seed, double tol);

}  // namespace modirac
