#pragma once

#include <Eigen/Dense>

#include <complex>

namespace modirac {

using Complex = std::complex<double>;

/// Dense 4x4 complex matrix; home of gamma matrices, boosts, Hamiltonians.
using ComplexMatrix4 = Eigen::Matrix<Complex, 4, 4>;
using Spinor = Eigen::Matrix<Complex, 4, 1>;
using Vec3 = Eigen::Vector3d;
using RealMatrix4 = Eigen::Matrix4d;

/// Default tolerance for matrix equality (max-abs entry distance).
inline constexpr double kMatrixTolerance = 1e-12;

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m)
{
  if (m.size() == 0) {
    return 0.0;
  }
  return m.cwiseAbs().maxCoeff();
}

template <typename A, typename B>
double max_abs_distance(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b)
{
  return max_abs(a - b);
}

inline bool approx_equal(const ComplexMatrix4& a, const ComplexMatrix4& b,
                         double tol = kMatrixTolerance)
{
  return max_abs_distance(a, b) <= tol;
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m)
{
  return m.allFinite();
}

inline ComplexMatrix4 commutator(const ComplexMatrix4& a, const ComplexMatrix4& b)
{
  return a * b - b * a;
}

inline ComplexMatrix4 anticommutator(const ComplexMatrix4& a, const ComplexMatrix4& b)
{
  return a * b + b * a;
}

inline ComplexMatrix4 identity4() { return ComplexMatrix4::Identity(); }

}  // namespace modirac
