#include "oracles.hpp"

#include <modirac/constants.hpp>
#include <modirac/gauge.hpp>
#include <modirac/matrix_exp.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace modirac;

namespace {

constexpr double kTwoPi = 2.0 * kPi;

GaugeProblem default_problem(const GammaSet& /*g*/, std::size_t n = 64, std::uint64_t seed = 42)
{
  Rng rng(seed);
  const auto a = random_real_series(rng, 2, 0.5);
  const auto gf = random_real_series(rng, 2, 0.5);
  const auto psi = random_spinor_series(rng, 2);
  return make_gauge_problem(Grid(n, kTwoPi), a, gf, psi);
}

Eigen::VectorXcd flatten(const GridState& s)
{
  Eigen::Matrix<Complex, 4, Eigen::Dynamic> t = s.psi.transpose();
  return Eigen::Map<Eigen::VectorXcd>(t.data(), t.size());
}

double max_abs_diff(const GridState& a, const GridState& b)
{
  return (a.psi - b.psi).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(Grid, Validation)
{
  EXPECT_THROW(Grid(4, 1.0), std::invalid_argument);
  EXPECT_THROW(Grid(48, 1.0), std::invalid_argument);
  EXPECT_THROW(Grid(64, 0.0), std::invalid_argument);
  EXPECT_NO_THROW(Grid(8, 1.0));
}

TEST(Grid, WavenumbersAndNyquist)
{
  const Grid grid(8, kTwoPi);
  EXPECT_DOUBLE_EQ(grid.wavenumber(0), 0.0);
  EXPECT_DOUBLE_EQ(grid.wavenumber(1), 1.0);
  EXPECT_DOUBLE_EQ(grid.wavenumber(3), 3.0);
  EXPECT_DOUBLE_EQ(grid.wavenumber(4), 0.0);
  EXPECT_DOUBLE_EQ(grid.wavenumber(5), -3.0);
  EXPECT_DOUBLE_EQ(grid.wavenumber(7), -1.0);
}

TEST(Differentiate, SpectralIsExactForResolvedModes)
{
  const Grid grid(64, 3.0);
  const double kappa = kTwoPi / 3.0;
  RealField f(64);
  RealField df(64);
  for (std::size_t j = 0; j < 64; ++j) {
    const double x = grid.x(j);
    f[j] = std::sin(5 * kappa * x) + 0.3 * std::cos(2 * kappa * x);
    df[j] = 5 * kappa * std::cos(5 * kappa * x) - 0.6 * kappa * std::sin(2 * kappa * x);
  }
  EXPECT_LT((differentiate(grid, f, DerivativeScheme::spectral) - df).cwiseAbs().maxCoeff(),
            1e-12);
}

TEST(Differentiate, CentralDifferenceIsSecondOrder)
{
  double previous = 0.0;
  for (std::size_t n : {32u, 64u, 128u, 256u}) {
    const Grid grid(n, kTwoPi);
    RealField f(static_cast<Eigen::Index>(n));
    RealField df(static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
      f[j] = std::sin(3 * grid.x(j));
      df[j] = 3 * std::cos(3 * grid.x(j));
    }
    const double err =
        (differentiate(grid, f, DerivativeScheme::central_difference) - df).cwiseAbs().maxCoeff();
    if (previous > 0.0) {
      EXPECT_NEAR(std::log2(previous / err), 2.0, 0.1);
    }
    previous = err;
  }
}

TEST(Differentiate, RejectsSizeMismatch)
{
  EXPECT_THROW(differentiate(Grid(16, 1.0), RealField(RealField::Zero(8)),
                             DerivativeScheme::spectral),
               std::invalid_argument);
}

TEST(GaugeTransform, ConstantGaugeFunction)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  GaugeProblem p = default_problem(g);
  const double c0 = 0.7;
  p.cfg.g_fn = RealField::Constant(64, c0);
  p.cfg.e = 1.3;
  const auto [cfg_t, state_t] = gauge_transform(p.grid, p.cfg, p.state);
  EXPECT_LT((cfg_t.a_x - p.cfg.a_x).cwiseAbs().maxCoeff(), 1e-14);
  GridState expected = p.state;
  expected.psi *= std::exp(Complex(0.0, 1.3 * c0));
  EXPECT_LT(max_abs_diff(state_t, expected), 1e-15);
}

TEST(GaugeTransform, SineGaugeShiftsPotentialByCosine)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  GaugeProblem p = default_problem(g);
  const double length = p.grid.length();
  RealField expected_shift(64);
  for (std::size_t j = 0; j < 64; ++j) {
    const double x = p.grid.x(j);
    p.cfg.g_fn[j] = std::sin(kTwoPi * x / length);
    expected_shift[j] = kTwoPi / length * std::cos(kTwoPi * x / length);
  }
  const auto [cfg_t, state_t] = gauge_transform(p.grid, p.cfg, p.state);
  EXPECT_LT((cfg_t.a_x - p.cfg.a_x - expected_shift).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(norm(p.grid, state_t), norm(p.grid, p.state), 1e-15);
}

TEST(GaugeTransform, RejectsGridMismatch)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const GaugeProblem p = default_problem(g);
  EXPECT_THROW(gauge_transform(Grid(32, kTwoPi), p.cfg, p.state), std::invalid_argument);
}

TEST(CouplingOperator, PlaneWaveWithoutPotential)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const Grid grid(32, kTwoPi);
  const Spinor u(Complex(1.0, 0.5), Complex(-0.2, 0.0), Complex(0.0, 1.0), Complex(0.3, -0.3));
  const double k = 5.0;
  GaugeConfig cfg{RealField::Zero(32), RealField::Zero(32), 1.0};
  const CouplingOperator b(grid, cfg, g);
  const GridState expected = oracle::plane_wave(grid, k, k * (g.alpha_d[0] * u));
  EXPECT_LT(max_abs_diff(b.apply(oracle::plane_wave(grid, k, u)), expected), 1e-12);
}

TEST(CouplingOperator, PlaneWaveWithConstantPotential)
{
  const GammaSet g = build_gamma_set(Representation::chiral);
  const Grid grid(32, kTwoPi);
  const Spinor u(Complex(0.1, 0.0), Complex(1.0, 0.0), Complex(0.0, -0.4), Complex(0.2, 0.2));
  const double k = -3.0;
  const double a0 = 0.8;
  const double e = 1.5;
  GaugeConfig cfg{RealField::Constant(32, a0), RealField::Zero(32), e};
  const CouplingOperator b(grid, cfg, g);
  const GridState expected = oracle::plane_wave(grid, k, (k - e * a0) * (g.alpha_d[0] * u));
  EXPECT_LT(max_abs_diff(b.apply(oracle::plane_wave(grid, k, u)), expected), 1e-12);
}

TEST(CouplingOperator, HermitianOnRandomStates)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const GaugeProblem p = default_problem(g);
  const GaugeProblem q = default_problem(g, 64, 7);
  const CouplingOperator b(p.grid, p.cfg, g);
  EXPECT_LT(std::abs(inner_product(p.grid, q.state, b.apply(p.state)) -
                     inner_product(p.grid, b.apply(q.state), p.state)),
            1e-12);
  const Eigen::MatrixXcd d = b.dense();
  EXPECT_LT((d - d.adjoint()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(CouplingOperator, DenseMatchesMatrixFree)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const GaugeProblem p = default_problem(g, 32);
  const CouplingOperator b(p.grid, p.cfg, g);
  for (auto scheme : {DerivativeScheme::spectral, DerivativeScheme::central_difference}) {
    const CouplingOperator bs(p.grid, p.cfg, g, scheme);
    EXPECT_LT((bs.dense() * flatten(p.state) - flatten(bs.apply(p.state))).cwiseAbs().maxCoeff(),
              1e-12);
  }
  EXPECT_LT(max_abs_diff(b.apply_power(p.state, 3), b.apply(b.apply(b.apply(p.state)))), 1e-12);
}

TEST(GaugeIdentity, TrivialFieldsGiveZero)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  GaugeProblem p = default_problem(g);
  p.cfg.a_x.setZero();
  p.cfg.g_fn.setZero();
  for (int n = 1; n <= 6; ++n) {
    EXPECT_EQ(check_gauge_identity(p.grid, p.cfg, p.state, g, n), 0.0);
  }
}

TEST(GaugeIdentity, SmoothFieldsPowers)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const GaugeProblem p = default_problem(g);
  EXPECT_LT(check_gauge_identity(p.grid, p.cfg, p.state, g, 1), 1e-10);
  EXPECT_LT(check_gauge_identity(p.grid, p.cfg, p.state, g, 3), 1e-9);
  for (int n = 1; n <= 6; ++n) {
    EXPECT_LT(check_gauge_identity(p.grid, p.cfg, p.state, g, n), 1e-9) << n;
  }
}

TEST(GaugeIdentity, RejectsPowerOutOfRange)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const GaugeProblem p = default_problem(g);
  EXPECT_THROW(check_gauge_identity(p.grid, p.cfg, p.state, g, 0), std::invalid_argument);
  EXPECT_THROW(check_gauge_identity(p.grid, p.cfg, p.state, g, 7), std::invalid_argument);
}

TEST(GaugeIdentity, SpectralResidualsDoNotGrowUnderRefinement)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  Rng rng(42);
  const auto a = random_real_series(rng, 2, 0.5);
  const auto gf = random_real_series(rng, 2, 0.5);
  const auto psi = random_spinor_series(rng, 2);
  double previous = 0.0;
  for (std::size_t n : {32u, 64u, 128u, 256u}) {
    const GaugeProblem p = make_gauge_problem(Grid(n, kTwoPi), a, gf, psi);
    const double r = check_gauge_identity(p.grid, p.cfg, p.state, g, 2);
    if (previous > 0.0) {
      // plateau at rounding level; allow a modest rounding-noise factor
      EXPECT_LT(r, std::max(10.0 * previous, 1e-12)) << n;
    }
    previous = r;
  }
}

TEST(ExpIdentity, ZeroLambdaIsPurePhase)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const GaugeProblem p = default_problem(g);
  EXPECT_LT(check_exp_identity(p.grid, p.cfg, p.state, g, 0.0), 1e-14);
}

TEST(ExpIdentity, DefaultGrid)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const GaugeProblem p = default_problem(g);
  EXPECT_LT(check_exp_identity(p.grid, p.cfg, p.state, g, 0.5), 1e-9);
}

TEST(ExpIdentity, RejectsOversizedGrid)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const GaugeProblem p = default_problem(g, 512);
  try {
    check_exp_identity(p.grid, p.cfg, p.state, g, 0.5);
    FAIL() << "expected a size rejection";
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("256"), std::string::npos);
  }
}

// exp(z B) psi from a truncated power series built by repeated application of B.
TEST(ExpIdentity, DenseExponentialMatchesSeriesOracle)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const GaugeProblem p = default_problem(g, 32);
  const CouplingOperator b(p.grid, p.cfg, g);
  const Complex z(0.0, 0.2);
  const Eigen::VectorXcd dense = expm(z * b.dense()) * flatten(p.state);

  const auto full = oracle::exp_series(b, p.state, z, 80);
  EXPECT_LT((dense - flatten(full.value)).cwiseAbs().maxCoeff(), 1e-12);

  // Eight terms: the difference is bounded by the norm of the discarded tail.
  const auto eight = oracle::exp_series(b, p.state, z, 8);
  double tail = 0.0;
  for (std::size_t k = 8; k < full.term_norms.size(); ++k) {
    tail += full.term_norms[k];
  }
  GridState diff = eight.value;
  diff.psi -= full.value.psi;
  const double truncation = norm(p.grid, diff);
  EXPECT_GT(truncation, 0.0);
  EXPECT_LE(truncation, tail * (1.0 + 1e-9) + 1e-14);
  const GridState dense_state{Eigen::Map<const Eigen::Matrix<Complex, 4, Eigen::Dynamic>>(
                                  dense.data(), 4, dense.size() / 4)
                                  .transpose()};
  GridState diff_dense = eight.value;
  diff_dense.psi -= dense_state.psi;
  EXPECT_LE(norm(p.grid, diff_dense), tail * (1.0 + 1e-6) + 1e-12);
}

TEST(GaugeProblem, RejectsUnderResolvedModes)
{
  Rng rng(1);
  const auto a = random_real_series(rng, 3, 0.5);
  const auto gf = random_real_series(rng, 1, 0.5);
  const auto psi = random_spinor_series(rng, 1);
  EXPECT_THROW(make_gauge_problem(Grid(16, kTwoPi), a, gf, psi), std::invalid_argument);
  EXPECT_NO_THROW(make_gauge_problem(Grid(32, kTwoPi), a, gf, psi));
}

TEST(FiniteDifference, OrderNearTwo)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  Rng rng(42);
  const auto a = random_real_series(rng, 2, 0.5);
  const auto gf = random_real_series(rng, 2, 0.5);
  const auto psi = random_spinor_series(rng, 2);
  const auto orders = finite_difference_orders(g, a, gf, psi, kTwoPi, 64, 3);
  ASSERT_EQ(orders.size(), 3u);
  for (double order : orders) {
    EXPECT_NEAR(order, 2.0, 0.2);
  }
}

TEST(GaugeSuite, DefaultsPassInBothRepresentations)
{
  for (auto rep : {Representation::dirac, Representation::chiral}) {
    const VerificationReport r = gauge_suite(build_gamma_set(rep), GaugeSuiteOptions{});
    for (const auto& c : r.checks) {
      EXPECT_TRUE(c.passed) << c.name << " " << c.residual;
    }
  }
}

TEST(GaugeSuite, SubFloorToleranceFails)
{
  GaugeSuiteOptions options;
  options.tol = 1e-16;
  EXPECT_FALSE(gauge_suite(build_gamma_set(Representation::dirac), options).all_passed());
}
