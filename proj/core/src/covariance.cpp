#include "modirac/covariance.hpp"

#include "modirac/lorentz.hpp"
#include "modirac/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace modirac {

namespace {

const Complex kI{0.0, 1.0};

std::string indexed(const char* what, int trial)
{
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03d", trial);
  return std::string(what) + "/trial_" + buf;
}

Vec3 perpendicular_to(const Vec3& v)
{
  const Vec3 helper = std::abs(v.x()) < 0.9 * v.norm() ? Vec3::UnitX() : Vec3::UnitY();
  return v.cross(helper).normalized();
}

}  // namespace

MassPhaseOperator mass_phase_operator(const GammaSet& g, const Vec3& p, double t)
{
  if (!p.allFinite() || !std::isfinite(t)) {
    throw std::invalid_argument("mass_phase_operator: non-finite momentum or time");
  }
  return MassPhaseOperator{p, t, mat_exp(2.0 * kI * t * alpha_dot_p(g, p, AlphaFamily::dirac))};
}

CommutingExponentials commuting_exponentials_check(const ComplexMatrix4& a,
                                                   const ComplexMatrix4& b)
{
  const ComplexMatrix4 ea = mat_exp(a);
  const ComplexMatrix4 eb = mat_exp(b);
  const ComplexMatrix4 product = ea * eb;
  return CommutingExponentials{max_abs(product - eb * ea),
                               max_abs_distance(product, mat_exp(a + b))};
}

double phase_boost_commutator(const GammaSet& g, const Vec3& p, double t,
                              const Vec3& boost_direction, double omega)
{
  const ComplexMatrix4 phase = mass_phase_operator(g, p, t).matrix;
  const ComplexMatrix4 s = spinor_boost(BoostSpec::along(boost_direction, omega), g).s;
  return max_abs(commutator(phase, s));
}

VerificationReport covariance_suite(const GammaSet& g, int trials, std::uint64_t seed,
                                    double tol)
{
  if (trials < 1) {
    throw std::invalid_argument("covariance_suite: trials must be >= 1");
  }
  VerificationReport report;
  report.seed = seed;
  Rng rng(seed);

  double perpendicular_min = std::numeric_limits<double>::infinity();
  double perpendicular_max = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    const Vec3 p = random_momentum(rng);
    const double omega = uniform(rng, -3.0, 3.0);
    const double t = uniform(rng, 0.0, 10.0);
    const Context ctx{{"p", format_double(p.x()) + "," + format_double(p.y()) + "," +
                                format_double(p.z())},
                      {"omega", format_double(omega)},
                      {"t", format_double(t)}};

    const BoostSpec spec = BoostSpec::along(p, omega);
    const SpinorBoost s = spinor_boost(spec, g);
    report.add_check(indexed("intertwining", trial),
                     check_intertwining(s, boost_matrix(spec), g), tol, ctx);

    const ComplexMatrix4 phase = mass_phase_operator(g, p, t).matrix;
    report.add_check(indexed("phase_commutes_with_boost", trial),
                     max_abs(commutator(phase, s.s)), tol, ctx);

    const double perp = phase_boost_commutator(g, p, t, perpendicular_to(p), omega);
    perpendicular_min = std::min(perpendicular_min, perp);
    perpendicular_max = std::max(perpendicular_max, perp);
  }
  report.add_diagnostic("perpendicular_boost_commutator/min_over_trials", perpendicular_min);
  report.add_diagnostic("perpendicular_boost_commutator/max_over_trials", perpendicular_max);
  report.add_diagnostic("perpendicular_boost_commutator/p_x_boost_y_omega1_t1",
                        phase_boost_commutator(g, Vec3::UnitX(), 1.0, Vec3::UnitY(), 1.0),
                        {{"p", "1,0,0"}, {"n", "0,1,0"}, {"omega", "1"}, {"t", "1"}});
  return report;
}

}  // namespace modirac
