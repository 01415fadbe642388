#pragma once

// Quaternions and the quaternionic mass operator.
//
// The mass operator is Q = beta E + i_s (alpha_q.p) with the quaternion-like
// unit i_s = (alpha_q.p)/|p|, so that Q Q* = (E^2 - |p|^2) I: the squared
// mass as a product of conjugates. Its norm ||Q|| = sqrt(E^2 - |p|^2) is real
// (time-like), zero (light-like) or imaginary (space-like), and its phase
// theta solves sin(theta) = sqrt(-p^2 / (E^2 - p^2)), tan(theta) = sqrt(-p^2 / E^2).

#include "modirac/clifford.hpp"
#include "modirac/report.hpp"
#include "modirac/types.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace modirac {

class Quaternion {
 public:
  constexpr Quaternion() = default;
  constexpr Quaternion(double a, double b, double c, double d) : a_(a), b_(b), c_(c), d_(d) {}

  static constexpr Quaternion real(double a) { return {a, 0.0, 0.0, 0.0}; }
  static Quaternion pure(const Vec3& v) { return {0.0, v.x(), v.y(), v.z()}; }

  constexpr double a() const { return a_; }
  constexpr double b() const { return b_; }
  constexpr double c() const { return c_; }
  constexpr double d() const { return d_; }

  double scalar() const { return a_; }
  Vec3 vector() const { return {b_, c_, d_}; }

  Quaternion conj() const { return {a_, -b_, -c_, -d_}; }
  double norm_sq() const { return a_ * a_ + b_ * b_ + c_ * c_ + d_ * d_; }
  double norm() const;

  /// exp(q) = e^a (cos|v| + v/|v| sin|v|).
  Quaternion exp() const;

  Quaternion operator+(const Quaternion& o) const
  {
    return {a_ + o.a_, b_ + o.b_, c_ + o.c_, d_ + o.d_};
  }
  Quaternion operator-(const Quaternion& o) const
  {
    return {a_ - o.a_, b_ - o.b_, c_ - o.c_, d_ - o.d_};
  }
  Quaternion operator-() const { return {-a_, -b_, -c_, -d_}; }
  /// Hamilton product, ij = k.
  Quaternion operator*(const Quaternion& o) const;
  Quaternion operator*(double s) const { return {a_ * s, b_ * s, c_ * s, d_ * s}; }

  bool operator==(const Quaternion& o) const = default;

 private:
  double a_ = 0.0;
  double b_ = 0.0;
  double c_ = 0.0;
  double d_ = 0.0;
};

inline Quaternion operator*(double s, const Quaternion& q) { return q * s; }

/// max-abs component distance.
double distance(const Quaternion& x, const Quaternion& y);

/// q = norm * exp(axis * theta), axis a unit pure quaternion, theta in [0, pi].
struct PolarForm {
  double norm = 0.0;
  Quaternion axis;
  double theta = 0.0;

  Quaternion reconstruct() const;
};

/// Rejects q = 0. For real q the axis defaults to i and theta is 0 or pi.
PolarForm q_polar(const Quaternion& q);

enum class Branch { time_like, light_like, space_like };

std::string_view to_string(Branch branch);

/// E^2 - |p|^2.
Complex casimir_mass_squared(double energy, const Vec3& p);

/// Principal square root of E^2 - |p|^2 (non-negative real part).
Complex mass_operator_norm(double energy, const Vec3& p);

/// The phase theta, with the branch convention
///   time-like:  theta = i asinh(|p| / M)           (purely imaginary)
///   space-like: theta = pi/2 + i acosh(|p| / |M|)   (real part pi/2)
/// which satisfies both sin(theta) = sqrt(-p^2/(E^2-p^2)) and
/// tan(theta) = sqrt(-p^2/E^2) with principal square roots.
/// Light-like momenta have no finite phase (std::nullopt); |p| = 0 gives 0.
std::optional<Complex> mass_operator_phase(double energy, const Vec3& p);

struct MassOperator {
  double energy = 0.0;
  Vec3 momentum = Vec3::Zero();
  ComplexMatrix4 q_matrix;
  ComplexMatrix4 q_conj_matrix;
  Complex norm_sq;
  Complex norm;
  std::optional<Complex> phase_theta;
};

/// Requires |p| > 0; the unit i_s = (alpha_q.p)/|p| is undefined at rest.
MassOperator mass_operator_build(const GammaSet& g, double energy, const Vec3& p);

/// Rest-frame construction Q = beta E with theta = 0. Rejects E = 0.
MassOperator mass_operator_at_rest(const GammaSet& g, double energy);

/// Classifies the sign of E^2 - |p|^2 with a relative tolerance.
Branch classify_branch(double energy, const Vec3& p, double rel_tol = 1e-12);

struct BranchClassification {
  Branch branch = Branch::time_like;
  /// The two roots +-sqrt(E^2 - p^2); real, zero or imaginary.
  std::array<Complex, 2> masses;
  Complex q_norm;
  std::optional<Complex> theta;
  /// Space-like only: dE/d|p| = |p|/E along E^2 = p^2 + M^2 (absent at E = 0).
  std::optional<double> shell_slope;
};

BranchClassification branch_classify(double energy, const Vec3& p);

struct TriangleBoundsReport {
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  double min_norm = 0.0;
  double max_norm = 0.0;
  double t_at_min = 0.0;
  double t_at_max = 0.0;
  std::size_t samples = 0;
  std::size_t violations = 0;
  /// Bounds may be exceeded by this much before counting as a violation.
  double slack = 1e-12;

  bool all_within() const { return violations == 0; }
};

/// Sweeps Q_s(t) = q1 I - q2 exp(2i (alpha.p) t) over one period pi/|p|
/// (t_k = k T / samples) and checks ||q1| - |q2|| <= ||Q_s|| <= |q1| + |q2|.
/// Requires samples >= 2 and |p| > 0.
TriangleBoundsReport triangle_bounds(double q1_norm, double q2_norm, std::size_t samples,
                                     const GammaSet& g, const Vec3& p);

/// Seeded sweep of quaternion algebra, matrix/scalar Casimir consistency,
/// boost invariance, branch phases and the mass-function bounds.
VerificationReport hypercomplex_suite(const GammaSet& g, int trials, std::uint64_t seed,
                                      double tol);

}  // namespace modirac
