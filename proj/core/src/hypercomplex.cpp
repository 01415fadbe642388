#include "modirac/hypercomplex.hpp"

#include "modirac/constants.hpp"
#include "modirac/dynamics.hpp"
#include "modirac/lorentz.hpp"
#include "modirac/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

namespace modirac {

namespace {

std::string indexed(const char* what, int trial)
{
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%03d", trial);
  return std::string(what) + "/trial_" + buf;
}

Quaternion random_quaternion(Rng& rng)
{
  return {uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0),
          uniform(rng, -2.0, 2.0)};
}

}  // namespace

double Quaternion::norm() const { return std::sqrt(norm_sq()); }

Quaternion Quaternion::operator*(const Quaternion& o) const
{
  return {a_ * o.a_ - b_ * o.b_ - c_ * o.c_ - d_ * o.d_,
          a_ * o.b_ + b_ * o.a_ + c_ * o.d_ - d_ * o.c_,
          a_ * o.c_ - b_ * o.d_ + c_ * o.a_ + d_ * o.b_,
          a_ * o.d_ + b_ * o.c_ - c_ * o.b_ + d_ * o.a_};
}

Quaternion Quaternion::exp() const
{
  const Vec3 v = vector();
  const double angle = v.norm();
  const double scale = std::exp(a_);
  if (angle == 0.0) {
    return real(scale);
  }
  const Vec3 axis = v / angle;
  return scale * (real(std::cos(angle)) + pure(axis) * std::sin(angle));
}

double distance(const Quaternion& x, const Quaternion& y)
{
  return std::max({std::abs(x.a() - y.a()), std::abs(x.b() - y.b()), std::abs(x.c() - y.c()),
                   std::abs(x.d() - y.d())});
}

Quaternion PolarForm::reconstruct() const
{
  return norm * (Quaternion::real(std::cos(theta)) + axis * std::sin(theta));
}

PolarForm q_polar(const Quaternion& q)
{
  const double n = q.norm();
  if (!(n > 0.0)) {
    throw std::invalid_argument("q_polar: the zero quaternion has no polar form");
  }
  const double r = q.vector().norm();
  PolarForm polar;
  polar.norm = n;
  polar.theta = std::atan2(r, q.scalar());
  polar.axis = r > 0.0 ? Quaternion::pure(q.vector() / r) : Quaternion(0.0, 1.0, 0.0, 0.0);
  return polar;
}

std::string_view to_string(Branch branch)
{
  switch (branch) {
    case Branch::time_like:
      return "time_like";
    case Branch::light_like:
      return "light_like";
    case Branch::space_like:
      return "space_like";
  }
  return "unknown";
}

Complex casimir_mass_squared(double energy, const Vec3& p)
{
  return Complex(energy * energy - p.squaredNorm(), 0.0);
}

Complex mass_operator_norm(double energy, const Vec3& p)
{
  return std::sqrt(casimir_mass_squared(energy, p));
}

Branch classify_branch(double energy, const Vec3& p, double rel_tol)
{
  const double e2 = energy * energy;
  const double p2 = p.squaredNorm();
  const double diff = e2 - p2;
  if (std::abs(diff) <= rel_tol * std::max(e2, p2)) {
    return Branch::light_like;
  }
  return diff > 0.0 ? Branch::time_like : Branch::space_like;
}

std::optional<Complex> mass_operator_phase(double energy, const Vec3& p)
{
  const double pn = p.norm();
  if (pn == 0.0) {
    return Complex(0.0, 0.0);
  }
  switch (classify_branch(energy, p)) {
    case Branch::light_like:
      return std::nullopt;
    case Branch::time_like: {
      const double mass = std::sqrt(energy * energy - pn * pn);
      return Complex(0.0, std::asinh(pn / mass));
    }
    case Branch::space_like: {
      const double mass = std::sqrt(pn * pn - energy * energy);
      return Complex(kPi / 2.0, std::acosh(pn / mass));
    }
  }
  return std::nullopt;
}

MassOperator mass_operator_build(const GammaSet& g, double energy, const Vec3& p)
{
  if (!p.allFinite() || !std::isfinite(energy)) {
    throw std::invalid_argument("mass_operator_build: non-finite input");
  }
  const double pn = p.norm();
  if (pn == 0.0) {
    if (energy == 0.0) {
      throw std::invalid_argument("mass_operator_build: E = 0 and p = 0 give Q = 0");
    }
    throw std::invalid_argument(
        "mass_operator_build: i_s = (alpha.p)/|p| is undefined at p = 0; use "
        "mass_operator_at_rest");
  }
  const ComplexMatrix4 ap = alpha_dot_p(g, p, AlphaFamily::quaternionic);
  const ComplexMatrix4 unit = ap / pn;
  MassOperator q;
  q.energy = energy;
  q.momentum = p;
  q.q_matrix = energy * g.beta + unit * ap;
  q.q_conj_matrix = energy * g.beta - unit * ap;
  q.norm_sq = casimir_mass_squared(energy, p);
  q.norm = mass_operator_norm(energy, p);
  q.phase_theta = mass_operator_phase(energy, p);
  return q;
}

MassOperator mass_operator_at_rest(const GammaSet& g, double energy)
{
  if (energy == 0.0 || !std::isfinite(energy)) {
    throw std::invalid_argument("mass_operator_at_rest: need finite E != 0");
  }
  MassOperator q;
  q.energy = energy;
  q.q_matrix = energy * g.beta;
  q.q_conj_matrix = energy * g.beta;
  q.norm_sq = casimir_mass_squared(energy, Vec3::Zero());
  q.norm = mass_operator_norm(energy, Vec3::Zero());
  q.phase_theta = Complex(0.0, 0.0);
  return q;
}

BranchClassification branch_classify(double energy, const Vec3& p)
{
  BranchClassification out;
  out.branch = classify_branch(energy, p);
  out.q_norm = mass_operator_norm(energy, p);
  out.theta = mass_operator_phase(energy, p);
  switch (out.branch) {
    case Branch::light_like:
      out.masses = {Complex(0.0, 0.0), Complex(0.0, 0.0)};
      break;
    case Branch::time_like:
    case Branch::space_like:
      out.masses = {out.q_norm, -out.q_norm};
      break;
  }
  if (out.branch == Branch::space_like && energy != 0.0) {
    out.shell_slope = p.norm() / energy;
  }
  return out;
}

TriangleBoundsReport triangle_bounds(double q1_norm, double q2_norm, std::size_t samples,
                                     const GammaSet& g, const Vec3& p)
{
  if (samples < 2) {
    throw std::invalid_argument("triangle_bounds: need at least two samples");
  }
  const double pn = p.norm();
  if (!(pn > 0.0)) {
    throw std::invalid_argument("triangle_bounds: the phase sweep needs |p| > 0");
  }
  TriangleBoundsReport report;
  report.samples = samples;
  report.lower_bound = std::abs(std::abs(q1_norm) - std::abs(q2_norm));
  report.upper_bound = std::abs(q1_norm) + std::abs(q2_norm);
  report.min_norm = std::numeric_limits<double>::infinity();
  report.max_norm = -std::numeric_limits<double>::infinity();

  const double period = kPi / pn;
  for (std::size_t k = 0; k < samples; ++k) {
    const double t = period * static_cast<double>(k) / static_cast<double>(samples);
    const double value = mass_function_sample(g, p, 1.0, t, q1_norm, -q2_norm).norm_value;
    if (value < report.min_norm) {
      report.min_norm = value;
      report.t_at_min = t;
    }
    if (value > report.max_norm) {
      report.max_norm = value;
      report.t_at_max = t;
    }
    if (value < report.lower_bound - report.slack || value > report.upper_bound + report.slack) {
      ++report.violations;
    }
  }
  return report;
}

VerificationReport hypercomplex_suite(const GammaSet& g, int trials, std::uint64_t seed,
                                      double tol)
{
  if (trials < 1) {
    throw std::invalid_argument("hypercomplex_suite: trials must be >= 1");
  }
  VerificationReport report;
  report.seed = seed;
  Rng rng(seed);
  const ComplexMatrix4 ident = identity4();

  for (int trial = 0; trial < trials; ++trial) {
    const Quaternion q = random_quaternion(rng);
    const Quaternion r = random_quaternion(rng);
    report.add_check(indexed("quaternion_norm_multiplicative", trial),
                     std::abs((q * r).norm() - q.norm() * r.norm()) /
                         std::max(1.0, q.norm() * r.norm()),
                     tol);
    report.add_check(indexed("polar_roundtrip", trial),
                     distance(q_polar(q).reconstruct(), q) / std::max(1.0, q.norm()), tol);

    const double energy = uniform(rng, -5.0, 5.0);
    const Vec3 p = uniform(rng, 0.1, 5.0) * random_unit_vector(rng);
    const MassOperator mo = mass_operator_build(g, energy, p);
    const double scale = std::max(1.0, energy * energy + p.squaredNorm());
    const Context ctx{{"E", format_double(energy)}, {"p_norm", format_double(p.norm())}};
    report.add_check(indexed("q_qconj_equals_mass_squared", trial),
                     max_abs_distance(mo.q_matrix * mo.q_conj_matrix, mo.norm_sq * ident) / scale,
                     tol, ctx);

    const double omega = uniform(rng, -2.0, 2.0);
    const LorentzMatrix a = boost_matrix(BoostSpec(random_unit_vector(rng), omega));
    const Eigen::Vector4d boosted = a.a * Eigen::Vector4d(energy, p.x(), p.y(), p.z());
    const double invariant = boosted[0] * boosted[0] - boosted.tail<3>().squaredNorm();
    report.add_check(indexed("mass_squared_boost_invariant", trial),
                     std::abs(invariant - mo.norm_sq.real()) /
                         std::max(1.0, boosted.squaredNorm()),
                     tol, ctx);

    if (const auto theta = mo.phase_theta) {
      const Complex sin_expected =
          std::sqrt(Complex(-p.squaredNorm() / (energy * energy - p.squaredNorm()), 0.0));
      const Complex tan_expected = std::sqrt(Complex(-p.squaredNorm() / (energy * energy), 0.0));
      report.add_check(indexed("phase_sine_relation", trial),
                       std::abs(std::sin(*theta) - sin_expected) /
                           std::max(1.0, std::abs(sin_expected)),
                       tol, ctx);
      if (energy != 0.0) {
        report.add_check(indexed("phase_tangent_relation", trial),
                       std::abs(std::tan(*theta) - tan_expected) /
                           std::max(1.0, std::abs(tan_expected)),
                         tol, ctx);
      }
    }
  }

  const auto time_like = branch_classify(5.0, Vec3(3.0, 0.0, 0.0));
  report.add_check("branch/time_like_theta",
                   std::abs(time_like.theta.value_or(Complex(NAN, NAN)) -
                            Complex(0.0, std::log(2.0))),
                   tol);
  const auto space_like = branch_classify(3.0, Vec3(0.0, 5.0, 0.0));
  report.add_check("branch/space_like_theta",
                   std::abs(space_like.theta.value_or(Complex(NAN, NAN)) -
                            Complex(kPi / 2.0, std::log(2.0))),
                   tol);
  report.add_check("branch/space_like_norm", std::abs(space_like.q_norm - Complex(0.0, 4.0)),
                   tol);
  report.add_check("branch/light_like_norm",
                   std::abs(branch_classify(1.0, Vec3(0.0, 0.0, 1.0)).q_norm), tol);

  const Vec3 p_unit(1.0, 0.0, 0.0);
  const TriangleBoundsReport bounds = triangle_bounds(1.0, 1.0, 256, g, p_unit);
  report.add_check("mass_function/samples_within_bounds",
                   static_cast<double>(bounds.violations), 0.0,
                   {{"samples", std::to_string(bounds.samples)}});
  report.add_check("mass_function/lower_extremal", std::abs(bounds.min_norm - bounds.lower_bound),
                   tol);
  report.add_check("mass_function/upper_extremal", std::abs(bounds.max_norm - bounds.upper_bound),
                   tol);
  return report;
}

}  // namespace modirac
