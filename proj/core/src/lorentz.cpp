#include "modirac/lorentz.hpp"

#include "modirac/constants.hpp"
#include "modirac/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace modirac {

namespace {

const Complex kI{0.0, 1.0};

std::string trial_name(const char* what, int trial)
{
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03d", trial);
  return std::string(what) + "/trial_" + buf;
}

// Levi-Civita symbol on three indices.
double epsilon3(int i, int j, int k)
{
  return static_cast<double>((i - j) * (j - k) * (k - i)) / 2.0;
}

// Levi-Civita symbol on four indices with eps_{0123} = +1.
double epsilon4(int a, int b, int c, int d)
{
  const int idx[4] = {a, b, c, d};
  double sign = 1.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) {
        return 0.0;
      }
      if (idx[i] > idx[j]) {
        sign = -sign;
      }
    }
  }
  return sign;
}

}  // namespace

BoostSpec::BoostSpec(const Vec3& direction, double rapidity)
    : direction_(direction), rapidity_(rapidity)
{
  if (!direction.allFinite() || std::abs(direction.norm() - 1.0) > 1e-14) {
    throw std::invalid_argument("BoostSpec: direction must be a unit vector");
  }
  if (!std::isfinite(rapidity)) {
    throw std::invalid_argument("BoostSpec: rapidity must be finite");
  }
  if (std::abs(std::tanh(rapidity)) >= 1.0) {
    throw std::invalid_argument("BoostSpec: rapidity too large, |beta| rounds to 1");
  }
}

BoostSpec BoostSpec::along(const Vec3& direction, double rapidity)
{
  const double n = direction.norm();
  if (n == 0.0) {
    if (rapidity != 0.0) {
      throw std::invalid_argument("BoostSpec::along: zero direction with nonzero rapidity");
    }
    return identity();
  }
  return BoostSpec(direction / n, rapidity);
}

BoostSpec BoostSpec::from_velocity(const Vec3& direction, double beta)
{
  if (!(std::abs(beta) < 1.0)) {
    throw std::invalid_argument("BoostSpec::from_velocity: |beta| must be < 1");
  }
  return along(direction, std::atanh(beta));
}

double BoostSpec::beta() const { return std::tanh(rapidity_); }

double BoostSpec::lorentz_factor() const { return std::cosh(rapidity_); }

ComplexMatrix4 SpinorBoost::inverse() const { return s.partialPivLu().inverse(); }

LorentzMatrix boost_matrix(const BoostSpec& spec)
{
  const Vec3& n = spec.direction();
  const double ch = std::cosh(spec.rapidity());
  const double sh = std::sinh(spec.rapidity());

  RealMatrix4 a = RealMatrix4::Identity();
  a(0, 0) = ch;
  for (int i = 0; i < 3; ++i) {
    a(0, i + 1) = -sh * n[i];
    a(i + 1, 0) = -sh * n[i];
    for (int j = 0; j < 3; ++j) {
      a(i + 1, j + 1) += (ch - 1.0) * n[i] * n[j];
    }
  }
  return LorentzMatrix{a, spec};
}

SpinorBoost spinor_boost(const BoostSpec& spec, const GammaSet& g)
{
  const ComplexMatrix4 generator =
      0.5 * spec.rapidity() * alpha_dot_p(g, spec.direction(), AlphaFamily::dirac);
  return SpinorBoost{mat_exp(generator), spec};
}

double intertwining_residual(const ComplexMatrix4& s, const ComplexMatrix4& s_inv,
                             const RealMatrix4& a, const GammaSet& g,
                             IndexConvention convention)
{
  const auto gamma = [&](int mu) {
    return convention == IndexConvention::covariant ? g.gamma_lower(mu)
                                                    : g.gamma[static_cast<std::size_t>(mu)];
  };
  double worst = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    ComplexMatrix4 rhs = ComplexMatrix4::Zero();
    for (int nu = 0; nu < 4; ++nu) {
      rhs += a(mu, nu) * gamma(nu);
    }
    worst = std::max(worst, max_abs_distance(s_inv * gamma(mu) * s, rhs));
  }
  return worst;
}

double check_intertwining(const SpinorBoost& sb, const LorentzMatrix& a, const GammaSet& g)
{
  if (!(sb.spec == a.spec)) {
    throw std::invalid_argument(
        "check_intertwining: spinor boost and Lorentz matrix come from different boosts");
  }
  return intertwining_residual(sb.s, sb.inverse(), a.a, g);
}

std::array<ComplexMatrix4, 3> LorentzGenerators::j() const
{
  std::array<ComplexMatrix4, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    out[k] = 0.5 * kI * (rotation[k] + kI * boost[k]);
  }
  return out;
}

std::array<ComplexMatrix4, 3> LorentzGenerators::k() const
{
  std::array<ComplexMatrix4, 3> out;
  for (std::size_t k = 0; k < 3; ++k) {
    out[k] = 0.5 * kI * (rotation[k] - kI * boost[k]);
  }
  return out;
}

LorentzGenerators lorentz_generators(const GammaSet& g)
{
  LorentzGenerators gen;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      gen.c[mu][nu] = 0.25 * commutator(g.gamma_lower(mu), g.gamma_lower(nu));
    }
  }
  for (int k = 0; k < 3; ++k) {
    ComplexMatrix4 r = ComplexMatrix4::Zero();
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        const double e = epsilon3(k, i, j);
        if (e != 0.0) {
          r += 0.5 * e * gen.c[i + 1][j + 1];
        }
      }
    }
    gen.rotation[k] = r;
    gen.boost[k] = gen.c[0][k + 1];
  }
  return gen;
}

ComplexMatrix4 squared_sum(const std::array<ComplexMatrix4, 3>& v)
{
  return v[0] * v[0] + v[1] * v[1] + v[2] * v[2];
}

CasimirPair lorentz_casimirs(const GammaSet& g)
{
  const LorentzGenerators gen = lorentz_generators(g);
  CasimirPair pair;
  pair.c1 = squared_sum(gen.rotation) - squared_sum(gen.boost);
  pair.c2 = ComplexMatrix4::Zero();
  for (std::size_t k = 0; k < 3; ++k) {
    pair.c2 -= gen.rotation[k] * gen.boost[k];
  }
  return pair;
}

ComplexMatrix4 casimir_tensor_contraction(const LorentzGenerators& gen)
{
  ComplexMatrix4 sum = ComplexMatrix4::Zero();
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      // C^{mu nu} = g^{mu mu} g^{nu nu} C_{mu nu} for a diagonal metric.
      sum += metric(mu, mu) * metric(nu, nu) * gen.c[mu][nu] * gen.c[mu][nu];
    }
  }
  return 0.5 * sum;
}

ComplexMatrix4 casimir_pseudoscalar_contraction(const LorentzGenerators& gen)
{
  ComplexMatrix4 sum = ComplexMatrix4::Zero();
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      for (int c = 0; c < 4; ++c) {
        for (int d = 0; d < 4; ++d) {
          // eps^{abcd} = -eps_{abcd} in signature (+,-,-,-).
          const double e = -epsilon4(a, b, c, d);
          if (e != 0.0) {
            sum += e * gen.c[a][b] * gen.c[c][d];
          }
        }
      }
    }
  }
  return sum / 8.0;
}

VerificationReport lorentz_suite(const GammaSet& g, int trials, std::uint64_t seed, double tol)
{
  if (trials < 1) {
    throw std::invalid_argument("lorentz_suite: trials must be >= 1");
  }
  VerificationReport report;
  report.seed = seed;
  Rng rng(seed);
  const RealMatrix4 metric_matrix = RealMatrix4(Eigen::Vector4d(1.0, -1.0, -1.0, -1.0).asDiagonal());
  const ComplexMatrix4 ident = identity4();

  double worst_wrong_inverse = std::numeric_limits<double>::infinity();
  double worst_upper_index = std::numeric_limits<double>::infinity();

  for (int trial = 0; trial < trials; ++trial) {
    const Vec3 n = random_unit_vector(rng);
    const double omega = uniform(rng, -3.0, 3.0);
    const double omega2 = uniform(rng, -3.0, 3.0);
    const BoostSpec spec(n, omega);
    const LorentzMatrix a = boost_matrix(spec);
    const SpinorBoost s = spinor_boost(spec, g);
    const Context ctx{{"n", format_double(n.x()) + "," + format_double(n.y()) + "," +
                                format_double(n.z())},
                      {"omega", format_double(omega)}};

    report.add_check(trial_name("intertwining", trial), check_intertwining(s, a, g), tol, ctx);
    report.add_check(trial_name("metric_preserved", trial),
                     max_abs_distance(a.a.transpose() * metric_matrix * a.a, metric_matrix), tol,
                     ctx);
    report.add_check(trial_name("det_vector", trial), std::abs(a.a.determinant() - 1.0), tol,
                     ctx);
    report.add_check(trial_name("det_spinor", trial), std::abs(s.s.determinant() - 1.0), tol,
                     ctx);
    report.add_check(trial_name("vector_inverse", trial),
                     max_abs_distance(a.a * boost_matrix(spec.inverse()).a,
                                      RealMatrix4::Identity()),
                     tol, ctx);
    const SpinorBoost s2 = spinor_boost(BoostSpec(n, omega2), g);
    const SpinorBoost s12 = spinor_boost(BoostSpec(n, omega + omega2), g);
    report.add_check(trial_name("spinor_composition", trial),
                     max_abs_distance(s.s * s2.s, s12.s) / std::max(1.0, max_abs(s12.s)), tol,
                     ctx);

    // Negative controls: S^dagger in place of S^{-1}, and upper-index gammas.
    worst_wrong_inverse = std::min(
        worst_wrong_inverse, omega == 0.0 ? worst_wrong_inverse
                                          : intertwining_residual(s.s, s.s.adjoint(), a.a, g) /
                                                std::abs(std::sinh(omega)));
    worst_upper_index = std::min(
        worst_upper_index,
        omega == 0.0 ? worst_upper_index
                     : intertwining_residual(s.s, s.inverse(), a.a, g,
                                             IndexConvention::contravariant) /
                           std::abs(std::sinh(omega)));
  }
  report.add_diagnostic("negative_control/adjoint_as_inverse_min_residual_per_sinh",
                        worst_wrong_inverse);
  report.add_diagnostic("negative_control/contravariant_gammas_min_residual_per_sinh",
                        worst_upper_index);

  const LorentzGenerators gen = lorentz_generators(g);
  const CasimirPair cas = lorentz_casimirs(g);
  double commute = 0.0;
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu + 1; nu < 4; ++nu) {
      commute = std::max({commute, max_abs(commutator(cas.c1, gen.c[mu][nu])),
                          max_abs(commutator(cas.c2, gen.c[mu][nu]))});
    }
  }
  report.add_check("casimir/commute_with_generators", commute, tol);
  report.add_check("casimir/c1_tensor_form",
                   max_abs_distance(cas.c1, casimir_tensor_contraction(gen)), tol);
  report.add_check("casimir/c2_pseudoscalar_form",
                   max_abs_distance(cas.c2, casimir_pseudoscalar_contraction(gen)), tol);

  const ComplexMatrix4 j2 = squared_sum(gen.j());
  const ComplexMatrix4 k2 = squared_sum(gen.k());
  // J^2 + K^2 = j(j+1) + j'(j'+1) = 3/4 on the (1/2,0) + (0,1/2) spinor.
  report.add_check("casimir/j2_plus_k2", max_abs_distance(j2 + k2, 0.75 * ident), tol);
  report.add_check("casimir/j2_projector", max_abs(j2 * (j2 - 0.75 * ident)), tol);
  report.add_check("casimir/k2_projector", max_abs(k2 * (k2 - 0.75 * ident)), tol);
  report.add_check("casimir/c1_equals_minus_two_j2_plus_k2",
                   max_abs_distance(cas.c1, -2.0 * (j2 + k2)), tol);
  report.add_check("casimir/c2_equals_minus_i_j2_minus_k2",
                   max_abs_distance(cas.c2, -kI * (j2 - k2)), tol);
  if (g.representation == Representation::chiral) {
    ComplexMatrix4 expected = ComplexMatrix4::Zero();
    expected.topLeftCorner<2, 2>() = 0.75 * kI * Eigen::Matrix2cd::Identity();
    expected.bottomRightCorner<2, 2>() = -0.75 * kI * Eigen::Matrix2cd::Identity();
    report.add_check("casimir/chiral_c2_blocks", max_abs_distance(cas.c2, expected), tol);
    report.add_check("casimir/chiral_j2_block",
                     max_abs_distance(j2.bottomRightCorner<2, 2>(),
                                      Eigen::Matrix2cd(0.75 * Eigen::Matrix2cd::Identity())),
                     tol);
  }
  report.add_diagnostic("casimir/c1_trace_over_4", (cas.c1.trace() / 4.0).real());
  for (auto& c : report.checks) {
    c.context.emplace("representation", std::string(to_string(g.representation)));
  }
  return report;
}

}  // namespace modirac
