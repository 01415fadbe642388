#include "modirac/gauge.hpp"

#include "modirac/constants.hpp"
#include "modirac/matrix_exp.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace modirac {

namespace {

const Complex kI{0.0, 1.0};

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require_same_grid(const Grid& grid, const GaugeConfig& cfg, const GridState& state)
{
  const auto n = static_cast<Eigen::Index>(grid.size());
  if (cfg.a_x.size() != n || cfg.g_fn.size() != n || state.psi.rows() != n) {
    throw std::invalid_argument("gauge: configuration, state and grid sizes differ");
  }
}

ComplexField spectral_derivative(const Grid& grid, const ComplexField& f)
{
  const std::size_t n = grid.size();
  std::vector<Complex> in(f.data(), f.data() + f.size());
  std::vector<Complex> spectrum;
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, in);
  for (std::size_t j = 0; j < n; ++j) {
    spectrum[j] *= kI * grid.wavenumber(j);
  }
  std::vector<Complex> out;
  fft.inv(out, spectrum);
  return Eigen::Map<ComplexField>(out.data(), static_cast<Eigen::Index>(n));
}

ComplexField central_difference(const Grid& grid, const ComplexField& f)
{
  const auto n = f.size();
  ComplexField out(n);
  const double inv = 1.0 / (2.0 * grid.spacing());
  for (Eigen::Index j = 0; j < n; ++j) {
    out[j] = (f[(j + 1) % n] - f[(j + n - 1) % n]) * inv;
  }
  return out;
}

double relative_residual(const Grid& grid, const GridState& lhs, const GridState& rhs)
{
  GridState diff{lhs.psi - rhs.psi};
  const double scale = norm(grid, rhs);
  const double abs_residual = norm(grid, diff);
  return scale > 0.0 ? abs_residual / scale : abs_residual;
}

std::string padded(int value)
{
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%d", value);
  return buf;
}

}  // namespace

std::string_view to_string(DerivativeScheme scheme)
{
  return scheme == DerivativeScheme::spectral ? "spectral" : "central_difference";
}

Grid::Grid(std::size_t n_points, double length) : n_points_(n_points), length_(length)
{
  if (n_points < 8 || !is_power_of_two(n_points)) {
    throw std::invalid_argument("Grid: n_points must be a power of two >= 8, got " +
                                std::to_string(n_points));
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    throw std::invalid_argument("Grid: length must be positive and finite");
  }
}

Eigen::VectorXd Grid::points() const
{
  Eigen::VectorXd x(static_cast<Eigen::Index>(n_points_));
  for (std::size_t j = 0; j < n_points_; ++j) {
    x[static_cast<Eigen::Index>(j)] = this->x(j);
  }
  return x;
}

double Grid::wavenumber(std::size_t j) const
{
  const auto n = static_cast<long>(n_points_);
  const auto jj = static_cast<long>(j);
  if (2 * jj == n) {
    return 0.0;
  }
  const long mode = 2 * jj < n ? jj : jj - n;
  return 2.0 * kPi / length_ * static_cast<double>(mode);
}

ComplexField differentiate(const Grid& grid, const ComplexField& f, DerivativeScheme scheme)
{
  if (f.size() != static_cast<Eigen::Index>(grid.size())) {
    throw std::invalid_argument("differentiate: field size differs from grid size");
  }
  return scheme == DerivativeScheme::spectral ? spectral_derivative(grid, f)
                                              : central_difference(grid, f);
}

RealField differentiate(const Grid& grid, const RealField& f, DerivativeScheme scheme)
{
  return differentiate(grid, ComplexField(f.cast<Complex>()), scheme).real();
}

Complex inner_product(const Grid& grid, const GridState& a, const GridState& b)
{
  if (a.psi.rows() != b.psi.rows()) {
    throw std::invalid_argument("inner_product: states live on different grids");
  }
  return grid.spacing() * (a.psi.conjugate().cwiseProduct(b.psi)).sum();
}

double norm(const Grid& grid, const GridState& state)
{
  return std::sqrt(grid.spacing() * state.psi.squaredNorm());
}

GridState apply_phase(const GaugeConfig& cfg, const GridState& state)
{
  GridState out = state;
  for (Eigen::Index j = 0; j < state.psi.rows(); ++j) {
    out.psi.row(j) *= std::exp(kI * cfg.e * cfg.g_fn[j]);
  }
  return out;
}

std::pair<GaugeConfig, GridState> gauge_transform(const Grid& grid, const GaugeConfig& cfg,
                                                  const GridState& state,
                                                  DerivativeScheme scheme)
{
  require_same_grid(grid, cfg, state);
  GaugeConfig shifted = cfg;
  shifted.a_x = cfg.a_x + differentiate(grid, cfg.g_fn, scheme);
  return {std::move(shifted), apply_phase(cfg, state)};
}

CouplingOperator::CouplingOperator(Grid grid, GaugeConfig cfg, const GammaSet& g,
                                   DerivativeScheme scheme)
    : grid_(grid), cfg_(std::move(cfg)), alpha_x_(g.alpha_d[0]), scheme_(scheme)
{
  if (cfg_.a_x.size() != static_cast<Eigen::Index>(grid_.size())) {
    throw std::invalid_argument("CouplingOperator: potential size differs from grid size");
  }
}

GridState CouplingOperator::apply(const GridState& state) const
{
  if (state.psi.rows() != static_cast<Eigen::Index>(grid_.size())) {
    throw std::invalid_argument("CouplingOperator: state size differs from grid size");
  }
  // Component-wise (p - eA) psi, then the 4x4 alpha_x on each spinor.
  Eigen::Matrix<Complex, Eigen::Dynamic, 4> kinetic(state.psi.rows(), 4);
  for (int c = 0; c < 4; ++c) {
    const ComplexField col = state.psi.col(c);
    kinetic.col(c) = -kI * differentiate(grid_, col, scheme_) -
                     cfg_.e * cfg_.a_x.cast<Complex>().cwiseProduct(col);
  }
  return GridState{kinetic * alpha_x_.transpose()};
}

GridState CouplingOperator::apply_power(const GridState& state, int power) const
{
  GridState out = state;
  for (int k = 0; k < power; ++k) {
    out = apply(out);
  }
  return out;
}

Eigen::MatrixXcd CouplingOperator::dense() const
{
  const auto n = static_cast<Eigen::Index>(grid_.size());
  Eigen::MatrixXcd scalar(n, n);
  for (Eigen::Index l = 0; l < n; ++l) {
    ComplexField unit = ComplexField::Zero(n);
    unit[l] = 1.0;
    scalar.col(l) = -kI * differentiate(grid_, unit, scheme_);
    scalar(l, l) -= cfg_.e * cfg_.a_x[l];
  }
  Eigen::MatrixXcd out(4 * n, 4 * n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index l = 0; l < n; ++l) {
      out.block<4, 4>(4 * j, 4 * l) = scalar(j, l) * alpha_x_;
    }
  }
  return out;
}

CouplingOperator coupling_operator(const GaugeConfig& cfg, const GammaSet& g, const Grid& grid,
                                   DerivativeScheme scheme)
{
  return CouplingOperator(grid, cfg, g, scheme);
}

double check_gauge_identity(const Grid& grid, const GaugeConfig& cfg, const GridState& state,
                            const GammaSet& g, int n, DerivativeScheme scheme)
{
  if (n < 1 || n > 6) {
    throw std::invalid_argument("check_gauge_identity: operator power must lie in [1, 6]");
  }
  const auto [cfg_t, state_t] = gauge_transform(grid, cfg, state, scheme);
  const CouplingOperator transformed(grid, cfg_t, g, scheme);
  const CouplingOperator original(grid, cfg, g, scheme);
  const GridState lhs = transformed.apply_power(state_t, n);
  const GridState rhs = apply_phase(cfg, original.apply_power(state, n));
  return relative_residual(grid, lhs, rhs);
}

double check_exp_identity(const Grid& grid, const GaugeConfig& cfg, const GridState& state,
                          const GammaSet& g, double lambda_t, DerivativeScheme scheme)
{
  if (grid.size() > kMaxDensePoints) {
    throw std::invalid_argument(
        "check_exp_identity: dense exponential needs a " + std::to_string(4 * grid.size()) +
        "x" + std::to_string(4 * grid.size()) + " matrix; use n_points <= " +
        std::to_string(kMaxDensePoints));
  }
  if (!std::isfinite(lambda_t)) {
    throw std::invalid_argument("check_exp_identity: lambda_t must be finite");
  }
  const auto [cfg_t, state_t] = gauge_transform(grid, cfg, state, scheme);
  const Eigen::MatrixXcd b_t = CouplingOperator(grid, cfg_t, g, scheme).dense();
  const Eigen::MatrixXcd q = CouplingOperator(grid, cfg, g, scheme).dense();
  const Complex factor = 2.0 * kI * lambda_t;

  const auto flatten = [](const GridState& s) {
    Eigen::Matrix<Complex, 4, Eigen::Dynamic> t = s.psi.transpose();
    return Eigen::VectorXcd(Eigen::Map<Eigen::VectorXcd>(t.data(), t.size()));
  };
  const auto unflatten = [](const Eigen::VectorXcd& v) {
    Eigen::Map<const Eigen::Matrix<Complex, 4, Eigen::Dynamic>> t(v.data(), 4, v.size() / 4);
    return GridState{t.transpose()};
  };

  const GridState lhs = unflatten(expm(factor * b_t) * flatten(state_t));
  const GridState rhs = apply_phase(cfg, unflatten(expm(factor * q) * flatten(state)));
  return relative_residual(grid, lhs, rhs);
}

RealField RealFourierSeries::sample(const Grid& grid) const
{
  const double kappa = 2.0 * kPi / grid.length();
  RealField f = RealField::Constant(static_cast<Eigen::Index>(grid.size()), c0);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
      const double arg = kappa * static_cast<double>(k + 1) * x;
      f[static_cast<Eigen::Index>(j)] += cos_coeffs[k] * std::cos(arg) + sin_coeffs[k] * std::sin(arg);
    }
  }
  return f;
}

RealField RealFourierSeries::sample_derivative(const Grid& grid) const
{
  const double kappa = 2.0 * kPi / grid.length();
  RealField f = RealField::Zero(static_cast<Eigen::Index>(grid.size()));
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double x = grid.x(j);
    for (std::size_t k = 0; k < cos_coeffs.size(); ++k) {
      const double wk = kappa * static_cast<double>(k + 1);
      f[static_cast<Eigen::Index>(j)] +=
          wk * (-cos_coeffs[k] * std::sin(wk * x) + sin_coeffs[k] * std::cos(wk * x));
    }
  }
  return f;
}

GridState SpinorFourierSeries::sample(const Grid& grid) const
{
  const double kappa = 2.0 * kPi / grid.length();
  const auto n = static_cast<Eigen::Index>(grid.size());
  GridState s{Eigen::Matrix<Complex, Eigen::Dynamic, 4>::Zero(n, 4)};
  for (Eigen::Index j = 0; j < n; ++j) {
    const double x = grid.x(static_cast<std::size_t>(j));
    for (int k = -max_mode; k <= max_mode; ++k) {
      const Complex wave = std::exp(kI * kappa * static_cast<double>(k) * x);
      s.psi.row(j) += wave * coeffs.col(k + max_mode).transpose();
    }
  }
  return s;
}

RealFourierSeries random_real_series(Rng& rng, int max_mode, double amplitude)
{
  if (max_mode < 0) {
    throw std::invalid_argument("random_real_series: max_mode must be >= 0");
  }
  RealFourierSeries s;
  s.c0 = amplitude * uniform(rng, -1.0, 1.0);
  for (int k = 1; k <= max_mode; ++k) {
    s.cos_coeffs.push_back(amplitude * uniform(rng, -1.0, 1.0) / k);
    s.sin_coeffs.push_back(amplitude * uniform(rng, -1.0, 1.0) / k);
  }
  return s;
}

SpinorFourierSeries random_spinor_series(Rng& rng, int max_mode)
{
  if (max_mode < 0) {
    throw std::invalid_argument("random_spinor_series: max_mode must be >= 0");
  }
  SpinorFourierSeries s;
  s.max_mode = max_mode;
  s.coeffs.resize(4, 2 * max_mode + 1);
  for (int c = 0; c < 4; ++c) {
    for (int k = 0; k < 2 * max_mode + 1; ++k) {
      s.coeffs(c, k) = Complex(uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0));
    }
  }
  return s;
}

GaugeProblem make_gauge_problem(const Grid& grid, const RealFourierSeries& a,
                                const RealFourierSeries& g_fn, const SpinorFourierSeries& psi,
                                double e)
{
  const int limit = static_cast<int>(grid.size() / 8);
  if (a.max_mode() > limit || g_fn.max_mode() > limit || psi.max_mode > limit) {
    throw std::invalid_argument("make_gauge_problem: Fourier modes must not exceed n_points/8 = " +
                                std::to_string(limit));
  }
  GaugeProblem problem{grid, GaugeConfig{a.sample(grid), g_fn.sample(grid), e}, psi.sample(grid)};
  const double nrm = norm(grid, problem.state);
  if (!(nrm > 0.0)) {
    throw std::invalid_argument("make_gauge_problem: state has zero norm");
  }
  problem.state.psi /= nrm;
  return problem;
}

std::vector<double> finite_difference_orders(const GammaSet& g, const RealFourierSeries& a,
                                             const RealFourierSeries& g_fn,
                                             const SpinorFourierSeries& psi, double length,
                                             std::size_t n_points, int doublings)
{
  std::vector<double> residuals;
  for (int level = 0; level <= doublings; ++level) {
    const Grid grid(n_points << level, length);
    const GaugeProblem p = make_gauge_problem(grid, a, g_fn, psi);
    residuals.push_back(
        check_gauge_identity(grid, p.cfg, p.state, g, 1, DerivativeScheme::central_difference));
  }
  std::vector<double> orders;
  for (std::size_t k = 0; k + 1 < residuals.size(); ++k) {
    orders.push_back(std::log2(residuals[k] / residuals[k + 1]));
  }
  return orders;
}

VerificationReport gauge_suite(const GammaSet& g, const GaugeSuiteOptions& options)
{
  VerificationReport report;
  report.seed = options.seed;
  Rng rng(options.seed);
  const Grid grid(options.n_points, options.length);
  const RealFourierSeries a = random_real_series(rng, options.max_mode, options.field_amplitude);
  const RealFourierSeries gf = random_real_series(rng, options.max_mode, options.field_amplitude);
  const SpinorFourierSeries psi = random_spinor_series(rng, options.max_mode);
  const GaugeProblem p = make_gauge_problem(grid, a, gf, psi, options.coupling);
  const Context ctx{{"n_points", std::to_string(options.n_points)},
                    {"max_mode", std::to_string(options.max_mode)},
                    {"scheme", "spectral"}};

  for (int n = 1; n <= 6; ++n) {
    report.add_check("identity/power_" + padded(n),
                     check_gauge_identity(grid, p.cfg, p.state, g, n), options.tol, ctx);
  }
  Context exp_ctx = ctx;
  exp_ctx["lambda_t"] = format_double(options.lambda_t);
  report.add_check("exp_identity", check_exp_identity(grid, p.cfg, p.state, g, options.lambda_t),
                   options.tol, exp_ctx);

  const auto [cfg_t, state_t] = gauge_transform(grid, p.cfg, p.state);
  report.add_check("phase_preserves_norm",
                   std::abs(norm(grid, state_t) - norm(grid, p.state)), options.tol, ctx);
  report.add_check("potential_shift_matches_analytic_gradient",
                   max_abs_distance(cfg_t.a_x - p.cfg.a_x, gf.sample_derivative(grid)),
                   options.tol, ctx);

  // Hermiticity of B against a second random state.
  const GridState other =
      make_gauge_problem(grid, a, gf, random_spinor_series(rng, options.max_mode)).state;
  const CouplingOperator b(grid, p.cfg, g);
  const double herm = std::abs(inner_product(grid, other, b.apply(p.state)) -
                               inner_product(grid, b.apply(other), p.state));
  report.add_check("coupling_hermitian", herm, options.tol, ctx);

  const auto orders = finite_difference_orders(g, a, gf, psi, options.length, options.n_points, 3);
  for (std::size_t k = 0; k < orders.size(); ++k) {
    report.add_check("central_difference_order/doubling_" + padded(static_cast<int>(k + 1)),
                     std::abs(orders[k] - 2.0), options.order_tol,
                     {{"measured_order", format_double(orders[k])},
                      {"n_points", std::to_string(options.n_points << k)}});
  }
  return report;
}

}  // namespace modirac
