#pragma once

// Scaling-and-squaring matrix exponential with diagonal Pade approximants
// of degree 3, 5, 7, 9 and 13 (Higham, SIAM J. Matrix Anal. Appl. 26, 2005).
//
// Works for any square Eigen matrix: the fixed 4x4 spinor matrices and the
// dense discretized coupling operators of the gauge module share this code.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>

namespace modirac {
namespace detail {

template <typename Matrix>
double one_norm(const Matrix& m)
{
  return m.cwiseAbs().colwise().sum().maxCoeff();
}

template <typename Matrix, std::size_t N>
void pade_odd_even(const Matrix& a, const std::array<double, N>& b, Matrix& u, Matrix& v)
{
  // Degrees 3..9: straightforward power accumulation.
  const Matrix ident = Matrix::Identity(a.rows(), a.cols());
  const Matrix a2 = a * a;
  Matrix power = ident;
  Matrix odd = b[1] * ident;
  Matrix even = b[0] * ident;
  for (std::size_t k = 2; k + 1 < N; k += 2) {
    power = power * a2;
    even += b[k] * power;
    odd += b[k + 1] * power;
  }
  u = a * odd;
  v = even;
}

template <typename Matrix>
void pade13(const Matrix& a, Matrix& u, Matrix& v)
{
  static constexpr std::array<double, 14> b{
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  const Matrix ident = Matrix::Identity(a.rows(), a.cols());
  const Matrix a2 = a * a;
  const Matrix a4 = a2 * a2;
  const Matrix a6 = a4 * a2;
  Matrix tmp = b[13] * a6 + b[11] * a4 + b[9] * a2;
  u = a * (a6 * tmp + b[7] * a6 + b[5] * a4 + b[3] * a2 + b[1] * ident);
  tmp = b[12] * a6 + b[10] * a4 + b[8] * a2;
  v = a6 * tmp + b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * ident;
}

}  // namespace detail

/// exp(M) by scaling and squaring. Throws std::domain_error on non-finite input.
template <typename Derived>
typename Derived::PlainObject expm(const Eigen::MatrixBase<Derived>& m)
{
  using Matrix = typename Derived::PlainObject;
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("expm: matrix must be square");
  }
  if (!m.allFinite()) {
    throw std::domain_error("expm: non-finite matrix entry");
  }
  const Matrix a = m;
  if (a.isZero(0.0)) {
    return Matrix::Identity(a.rows(), a.cols());
  }

  static constexpr std::array<double, 4> b3{120.0, 60.0, 12.0, 1.0};
  static constexpr std::array<double, 6> b5{30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
  static constexpr std::array<double, 8> b7{17297280.0, 8648640.0, 1995840.0, 277200.0,
                                            25200.0,    1512.0,    56.0,      1.0};
  static constexpr std::array<double, 10> b9{17643225600.0, 8821612800.0, 2075673600.0,
                                             302702400.0,   30270240.0,   2162160.0,
                                             110880.0,      3960.0,       90.0,
                                             1.0};
  static constexpr double theta3 = 1.495585217958292e-2;
  static constexpr double theta5 = 2.539398330063230e-1;
  static constexpr double theta7 = 9.504178996162932e-1;
  static constexpr double theta9 = 2.097847961257068e0;
  static constexpr double theta13 = 5.371920351148152e0;

  const double norm = detail::one_norm(a);
  Matrix u;
  Matrix v;
  int squarings = 0;
  if (norm <= theta3) {
    detail::pade_odd_even(a, b3, u, v);
  } else if (norm <= theta5) {
    detail::pade_odd_even(a, b5, u, v);
  } else if (norm <= theta7) {
    detail::pade_odd_even(a, b7, u, v);
  } else if (norm <= theta9) {
    detail::pade_odd_even(a, b9, u, v);
  } else {
    squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
    const Matrix scaled = a * std::ldexp(1.0, -squarings);
    detail::pade13(scaled, u, v);
  }

  Matrix result = (v - u).partialPivLu().solve(v + u);
  for (int k = 0; k < squarings; ++k) {
    result = result * result;
  }
  return result;
}

}  // namespace modirac
