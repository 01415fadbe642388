#pragma once

// Minimal coupling on a periodic one-dimensional grid.
//
// The spatial part of the coupled operator is B = alpha_x (p - e A(x)) with
// p = -i d/dx. Under A -> A + dG/dx, psi -> exp(i e G) psi the operator powers
// and their exponential pick up exactly the pointwise phase exp(i e G); the
// checks below measure how well the discretization reproduces that.

#include "modirac/clifford.hpp"
#include "modirac/report.hpp"
#include "modirac/sampling.hpp"
#include "modirac/types.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace modirac {

enum class DerivativeScheme { spectral, central_difference };

std::string_view to_string(DerivativeScheme scheme);

class Grid {
 public:
  /// n_points must be a power of two >= 8; length > 0.
  Grid(std::size_t n_points, double length);

  std::size_t size() const { return n_points_; }
  double length() const { return length_; }
  double spacing() const { return length_ / static_cast<double>(n_points_); }
  double x(std::size_t j) const { return spacing() * static_cast<double>(j); }
  Eigen::VectorXd points() const;

  /// Angular wavenumber of FFT bin j; the Nyquist bin maps to zero.
  double wavenumber(std::size_t j) const;

  bool operator==(const Grid& other) const = default;

 private:
  std::size_t n_points_;
  double length_;
};

using ComplexField = Eigen::VectorXcd;
using RealField = Eigen::VectorXd;

/// First derivative of a periodic sampled function.
ComplexField differentiate(const Grid& grid, const ComplexField& f, DerivativeScheme scheme);
RealField differentiate(const Grid& grid, const RealField& f, DerivativeScheme scheme);

/// Four-component spinor field: row j holds psi(x_j).
struct GridState {
  Eigen::Matrix<Complex, Eigen::Dynamic, 4> psi;

  std::size_t size() const { return static_cast<std::size_t>(psi.rows()); }
};

/// sum_j h <a_j, b_j>, conjugate-linear in `a`.
Complex inner_product(const Grid& grid, const GridState& a, const GridState& b);
double norm(const Grid& grid, const GridState& state);

struct GaugeConfig {
  RealField a_x;
  RealField g_fn;
  double e = 1.0;
};

/// A' = A + dG/dx, psi' = exp(i e G) psi.
std::pair<GaugeConfig, GridState> gauge_transform(
    const Grid& grid, const GaugeConfig& cfg, const GridState& state,
    DerivativeScheme scheme = DerivativeScheme::spectral);

/// exp(i e G(x)) psi(x), pointwise.
GridState apply_phase(const GaugeConfig& cfg, const GridState& state);

/// B = alpha_x (p - e A(x)) on a grid. Matrix-free application, plus a dense
/// form for exponentiation; dense index of (point j, component c) is 4j + c.
class CouplingOperator {
 public:
  CouplingOperator(Grid grid, GaugeConfig cfg, const GammaSet& g,
                   DerivativeScheme scheme = DerivativeScheme::spectral);

  GridState apply(const GridState& state) const;
  GridState apply_power(const GridState& state, int power) const;
  Eigen::MatrixXcd dense() const;

  const Grid& grid() const { return grid_; }
  const GaugeConfig& config() const { return cfg_; }
  DerivativeScheme scheme() const { return scheme_; }

 private:
  Grid grid_;
  GaugeConfig cfg_;
  ComplexMatrix4 alpha_x_;
  DerivativeScheme scheme_;
};

CouplingOperator coupling_operator(const GaugeConfig& cfg, const GammaSet& g, const Grid& grid,
                                   DerivativeScheme scheme = DerivativeScheme::spectral);

/// Relative residual || B'^n psi' - exp(ieG) Q^n psi || / || Q^n psi ||, with B'
/// built from the transformed configuration and Q from the original one.
/// Falls back to the absolute residual when Q^n psi vanishes. 1 <= n <= 6.
double check_gauge_identity(const Grid& grid, const GaugeConfig& cfg, const GridState& state,
                            const GammaSet& g, int n,
                            DerivativeScheme scheme = DerivativeScheme::spectral);

/// Largest grid the dense exponential accepts (matrix side 4 * n_points).
inline constexpr std::size_t kMaxDensePoints = 256;

/// Relative residual of exp(2i lambda_t B') psi' = exp(ieG) exp(2i lambda_t Q) psi
/// using dense exponentials of the discretized operators.
double check_exp_identity(const Grid& grid, const GaugeConfig& cfg, const GridState& state,
                          const GammaSet& g, double lambda_t,
                          DerivativeScheme scheme = DerivativeScheme::spectral);

/// Real trigonometric polynomial c0 + sum_k (a_k cos(k kappa x) + b_k sin(k kappa x)),
/// kappa = 2 pi / L. Evaluates on any grid, so one smooth input can be sampled
/// at several resolutions.
struct RealFourierSeries {
  double c0 = 0.0;
  std::vector<double> cos_coeffs;
  std::vector<double> sin_coeffs;

  int max_mode() const { return static_cast<int>(cos_coeffs.size()); }
  RealField sample(const Grid& grid) const;
  RealField sample_derivative(const Grid& grid) const;
};

/// Spinor field whose components are complex trigonometric polynomials with
/// modes -K..K; coefficient (c, k + K) belongs to component c, mode k.
struct SpinorFourierSeries {
  int max_mode = 0;
  Eigen::Matrix<Complex, 4, Eigen::Dynamic> coeffs;

  GridState sample(const Grid& grid) const;
};

/// Random smooth fields. Rejects max_mode > n_points / 8 when sampled on a
/// grid through `make_gauge_problem`.
RealFourierSeries random_real_series(Rng& rng, int max_mode, double amplitude);
SpinorFourierSeries random_spinor_series(Rng& rng, int max_mode);

struct GaugeProblem {
  Grid grid;
  GaugeConfig cfg;
  GridState state;
};

/// Samples A, G and psi on a grid (psi normalized to unit grid norm).
GaugeProblem make_gauge_problem(const Grid& grid, const RealFourierSeries& a,
                                const RealFourierSeries& g_fn, const SpinorFourierSeries& psi,
                                double e = 1.0);

struct GaugeSuiteOptions {
  std::size_t n_points = 64;
  double length = 6.283185307179586;
  int max_mode = 2;
  double field_amplitude = 0.5;
  double coupling = 1.0;
  double lambda_t = 0.5;
  std::uint64_t seed = 42;
  double tol = 1e-9;
  /// Allowed deviation of the measured finite-difference order from 2.
  double order_tol = 0.2;
};

/// Gauge-identity checks for operator powers 1..6, the exponential identity,
/// norm preservation, operator Hermiticity and the finite-difference
/// convergence order over three grid doublings.
VerificationReport gauge_suite(const GammaSet& g, const GaugeSuiteOptions& options);

/// Measured orders log2(r_N / r_2N) of the central-difference gauge-identity
/// residual over the grids n_points, 2 n_points, ..., 2^doublings n_points.
std::vector<double> finite_difference_orders(const GammaSet& g, const RealFourierSeries& a,
                                             const RealFourierSeries& g_fn,
                                             const SpinorFourierSeries& psi, double length,
                                             std::size_t n_points, int doublings);

}  // namespace modirac
