#include "modirac/dynamics.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace modirac {

namespace {

const Complex kI{0.0, 1.0};

Spinor rk4_step(const GammaSet& g, const Vec3& p, double m, MassTerm term, double t, double dt,
                const Spinor& psi)
{
  const auto rhs = [&](double time, const Spinor& y) -> Spinor {
    return -kI * (hamiltonian_at(g, p, m, time, term) * y);
  };
  const Spinor k1 = rhs(t, psi);
  const Spinor k2 = rhs(t + 0.5 * dt, psi + 0.5 * dt * k1);
  const Spinor k3 = rhs(t + 0.5 * dt, psi + 0.5 * dt * k2);
  const Spinor k4 = rhs(t + dt, psi + dt * k3);
  return psi + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

Spinor magnus2_step(const GammaSet& g, const Vec3& p, double m, MassTerm term, double t,
                    double dt, const Spinor& psi)
{
  return mat_exp(-kI * dt * hamiltonian_at(g, p, m, t + 0.5 * dt, term)) * psi;
}

double expectation(const ComplexMatrix4& op, const Spinor& psi)
{
  return psi.dot(op * psi).real();
}

}  // namespace

std::string_view to_string(Integrator integrator)
{
  return integrator == Integrator::rk4 ? "rk4" : "magnus2";
}

Integrator integrator_from_string(std::string_view name)
{
  if (name == "rk4") {
    return Integrator::rk4;
  }
  if (name == "magnus2") {
    return Integrator::magnus2;
  }
  throw std::invalid_argument("unknown integrator '" + std::string(name) + "'");
}

MomentumState MomentumState::positive_energy(const GammaSet& g, const Vec3& p, double m)
{
  if (!p.allFinite() || !std::isfinite(m)) {
    throw std::invalid_argument("positive_energy: non-finite momentum or mass");
  }
  const ComplexMatrix4 h0 = alpha_dot_p(g, p) + m * g.beta;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix4> solver(h0);
  Spinor v = solver.eigenvectors().col(3);
  // Fix the global phase: largest component real and positive.
  Eigen::Index lead = 0;
  v.cwiseAbs().maxCoeff(&lead);
  v *= std::conj(v[lead]) / std::abs(v[lead]);
  v.normalize();
  return MomentumState{p, m, v};
}

ComplexMatrix4 hamiltonian_at(const GammaSet& g, const Vec3& p, double m, double t,
                              MassTerm term)
{
  if (!p.allFinite() || !std::isfinite(m) || !std::isfinite(t)) {
    throw std::invalid_argument("hamiltonian_at: non-finite input");
  }
  const ComplexMatrix4 ap = alpha_dot_p(g, p);
  ComplexMatrix4 h = ap + m * g.beta;
  if (term == MassTerm::modified) {
    h -= m * g.beta * mat_exp(2.0 * kI * t * ap);
  }
  return h;
}

ComplexMatrix4 hamiltonian_time_derivative(const GammaSet& g, const Vec3& p, double m, double t,
                                           MassTerm term)
{
  if (term == MassTerm::free) {
    return ComplexMatrix4::Zero();
  }
  const ComplexMatrix4 ap = alpha_dot_p(g, p);
  return -m * g.beta * (2.0 * kI * ap) * mat_exp(2.0 * kI * t * ap);
}

double hamiltonian_norm_bound(const Vec3& p, double m) { return p.norm() + 2.0 * std::abs(m); }

double default_time_step(const Vec3& p, double m)
{
  const double scale = p.norm() + std::abs(m);
  return scale > 0.0 ? std::min(0.01, 0.05 / scale) : 0.01;
}

EvolutionTrace evolve(const GammaSet& g, const MomentumState& state0,
                      const EvolveOptions& options)
{
  const double dt = options.dt > 0.0 ? options.dt : default_time_step(state0.p, state0.m);
  if (!std::isfinite(dt) || !std::isfinite(options.t_max) || options.t_max < dt) {
    throw std::invalid_argument("evolve: need dt > 0 and t_max >= dt");
  }
  const double bound = hamiltonian_norm_bound(state0.p, state0.m);
  if (dt * bound > kStabilityLimit) {
    const double suggested = 0.5 * kStabilityLimit / bound;
    throw StabilityError("evolve: dt * ||H|| = " + std::to_string(dt * bound) +
                             " exceeds " + std::to_string(kStabilityLimit) +
                             "; try dt <= " + std::to_string(suggested),
                         suggested);
  }
  if (std::abs(state0.spinor.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("evolve: initial spinor must be normalized");
  }

  const auto steps = static_cast<std::size_t>(std::llround(options.t_max / dt));
  EvolutionTrace trace;
  trace.dt = dt;
  trace.term = options.term;
  trace.times.reserve(steps + 1);
  trace.spinors.reserve(steps + 1);
  trace.norms.reserve(steps + 1);
  trace.energies.reserve(steps + 1);
  trace.qs_norms.reserve(steps + 1);

  Spinor psi = state0.spinor;
  const auto record = [&](double t) {
    trace.times.push_back(t);
    trace.spinors.push_back(psi);
    trace.norms.push_back(psi.norm());
    trace.energies.push_back(
        expectation(hamiltonian_at(g, state0.p, state0.m, t, options.term), psi));
    trace.qs_norms.push_back(mass_function_sample(g, state0.p, state0.m, t).norm_value);
  };

  record(0.0);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = static_cast<double>(k) * dt;
    psi = options.integrator == Integrator::magnus2
              ? magnus2_step(g, state0.p, state0.m, options.term, t, dt, psi)
              : rk4_step(g, state0.p, state0.m, options.term, t, dt, psi);
    record(static_cast<double>(k + 1) * dt);
  }
  return trace;
}

EnergyDriftReport energy_drift_check(const EvolutionTrace& trace, const GammaSet& g,
                                     const Vec3& p, double m)
{
  if (trace.size() < 3) {
    throw std::invalid_argument("energy_drift_check: trace needs at least three samples");
  }
  EnergyDriftReport report;
  const double e0 = trace.energies.front();
  for (double e : trace.energies) {
    report.energy_violation = std::max(report.energy_violation, std::abs(e - e0));
  }
  for (std::size_t k = 1; k + 1 < trace.size(); ++k) {
    const double dt = trace.times[k + 1] - trace.times[k - 1];
    const double fd = (trace.energies[k + 1] - trace.energies[k - 1]) / dt;
    const double exact =
        expectation(hamiltonian_time_derivative(g, p, m, trace.times[k], trace.term),
                    trace.spinors[k]);
    report.central_difference.push_back(fd);
    report.analytic.push_back(exact);
    report.ehrenfest_deviation = std::max(report.ehrenfest_deviation, std::abs(fd - exact));
  }
  return report;
}

double spectral_norm(const ComplexMatrix4& m)
{
  return Eigen::JacobiSVD<ComplexMatrix4>(m).singularValues()(0);
}

MassFunctionSample mass_function_sample(const GammaSet& g, const Vec3& p, double m, double t,
                                        double a, double b)
{
  const ComplexMatrix4 phase = mat_exp(2.0 * kI * t * alpha_dot_p(g, p));
  MassFunctionSample sample;
  sample.matrix = m * (a * identity4() + b * phase);
  sample.norm_value = spectral_norm(sample.matrix);
  return sample;
}

}  // namespace modirac
