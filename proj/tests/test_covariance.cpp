#include <modirac/constants.hpp>
#include <modirac/covariance.hpp>
#include <modirac/lorentz.hpp>
#include <modirac/sampling.hpp>

#include <gtest/gtest.h>

#include <cmath>

using namespace modirac;

TEST(MassPhase, TimeZeroIsIdentity)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  EXPECT_EQ(mass_phase_operator(g, Vec3(0.3, -1.0, 2.0), 0.0).matrix, identity4());
}

TEST(MassPhase, HalfTurnIsMinusIdentity)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const Vec3 p(0.0, 1.5, -2.0);
  const double t = kPi / (2.0 * p.norm());
  EXPECT_LT(max_abs_distance(mass_phase_operator(g, p, t).matrix, -identity4()), 1e-13);
}

TEST(MassPhase, UnitaryAndOneParameterGroup)
{
  Rng rng(4);
  for (auto rep : {Representation::dirac, Representation::chiral}) {
    const GammaSet g = build_gamma_set(rep);
    for (int trial = 0; trial < 50; ++trial) {
      const Vec3 p = random_momentum(rng);
      const double t1 = uniform(rng, 0.0, 10.0);
      const double t2 = uniform(rng, 0.0, 10.0);
      const ComplexMatrix4 m1 = mass_phase_operator(g, p, t1).matrix;
      EXPECT_LT(max_abs_distance(m1.adjoint() * m1, identity4()), 1e-12);
      EXPECT_LT(max_abs_distance(m1 * mass_phase_operator(g, p, t2).matrix,
                                 mass_phase_operator(g, p, t1 + t2).matrix),
                1e-12);
    }
  }
}

TEST(MassPhase, RejectsNonFinite)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  EXPECT_THROW(mass_phase_operator(g, Vec3(NAN, 0.0, 0.0), 1.0), std::invalid_argument);
  EXPECT_THROW(mass_phase_operator(g, Vec3::UnitX(), INFINITY), std::invalid_argument);
}

TEST(CommutingExponentials, EqualArguments)
{
  Rng rng(8);
  const ComplexMatrix4 a = random_matrix(rng, 2.0);
  const CommutingExponentials r = commuting_exponentials_check(a, a);
  EXPECT_LT(r.comm_residual, 1e-14);
  EXPECT_LT(r.bch_residual, 1e-14 * std::max(1.0, max_abs(mat_exp(2.0 * a))));
}

TEST(CommutingExponentials, PhaseAndParallelBoost)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const Vec3 p(1.0, 2.0, -0.5);
  const double t = 3.7;
  const double omega = 1.3;
  const ComplexMatrix4 ap = alpha_dot_p(g, p);
  const ComplexMatrix4 a = Complex(0.0, 2.0 * t) * ap;
  const ComplexMatrix4 b = Complex(0.0, omega / (2.0 * p.norm())) * ap;
  const CommutingExponentials r = commuting_exponentials_check(a, b);
  EXPECT_LT(r.comm_residual, 1e-11);
  EXPECT_LT(r.bch_residual, 1e-11);
}

TEST(CommutingExponentials, DifferentDirectionsDoNotCommute)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  const CommutingExponentials r =
      commuting_exponentials_check(Complex(0.0, 1.0) * g.alpha_d[0], Complex(0.0, 1.0) * g.alpha_d[1]);
  EXPECT_GT(r.comm_residual, 0.1);
}

TEST(PhaseBoostCommutator, ParallelVanishesPerpendicularDoesNot)
{
  const GammaSet g = build_gamma_set(Representation::dirac);
  EXPECT_LT(phase_boost_commutator(g, Vec3(0.0, 0.0, 2.0), 1.5, Vec3::UnitZ(), 2.0), 1e-11);
  EXPECT_GT(phase_boost_commutator(g, Vec3::UnitX(), 1.0, Vec3::UnitY(), 1.0), 1e-3);
}

TEST(PhaseBoostCommutator, ZeroRapidityIsExactlyZero)
{
  const GammaSet g = build_gamma_set(Representation::chiral);
  EXPECT_EQ(phase_boost_commutator(g, Vec3(1.0, -2.0, 0.5), 2.2, Vec3::UnitY(), 0.0), 0.0);
}

TEST(CovarianceSuite, HundredTrialsGiveTwoHundredPassingChecks)
{
  const VerificationReport r =
      covariance_suite(build_gamma_set(Representation::dirac), 100, 42, 1e-11);
  EXPECT_EQ(r.checks.size(), 200u);
  EXPECT_TRUE(r.all_passed());
  bool found = false;
  for (const auto& d : r.diagnostics) {
    if (d.name == "perpendicular_boost_commutator/p_x_boost_y_omega1_t1") {
      found = true;
      EXPECT_GT(d.value, 1e-3);
    }
  }
  EXPECT_TRUE(found);
}

TEST(CovarianceSuite, DeterministicForSeed)
{
  const GammaSet g = build_gamma_set(Representation::chiral);
  EXPECT_EQ(serialize(covariance_suite(g, 20, 5, 1e-11)),
            serialize(covariance_suite(g, 20, 5, 1e-11)));
  EXPECT_NE(serialize(covariance_suite(g, 20, 5, 1e-11)),
            serialize(covariance_suite(g, 20, 6, 1e-11)));
}
