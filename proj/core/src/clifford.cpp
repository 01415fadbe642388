#include "modirac/clifford.hpp"

#include "modirac/constants.hpp"
#include "modirac/matrix_exp.hpp"

#include <stdexcept>
#include <string>

namespace modirac {

namespace {

const Complex kI{0.0, 1.0};

ComplexMatrix4 block(const Eigen::Matrix2cd& tl, const Eigen::Matrix2cd& tr,
                     const Eigen::Matrix2cd& bl, const Eigen::Matrix2cd& br)
{
  ComplexMatrix4 m;
  m << tl, tr, bl, br;
  return m;
}

}  // namespace

std::string_view to_string(Representation rep)
{
  return rep == Representation::dirac ? "dirac" : "chiral";
}

Representation representation_from_string(std::string_view name)
{
  if (name == "dirac") {
    return Representation::dirac;
  }
  if (name == "chiral") {
    return Representation::chiral;
  }
  throw std::invalid_argument("unknown gamma representation '" + std::string(name) + "'");
}

const std::array<Eigen::Matrix2cd, 3>& pauli()
{
  static const std::array<Eigen::Matrix2cd, 3> sigma = [] {
    std::array<Eigen::Matrix2cd, 3> s;
    s[0] << 0.0, 1.0, 1.0, 0.0;
    s[1] << 0.0, -kI, kI, 0.0;
    s[2] << 1.0, 0.0, 0.0, -1.0;
    return s;
  }();
  return sigma;
}

ComplexMatrix4 GammaSet::gamma_lower(int mu) const
{
  return metric(mu, mu) * gamma[static_cast<std::size_t>(mu)];
}

GammaSet build_gamma_set(Representation representation)
{
  const Eigen::Matrix2cd one = Eigen::Matrix2cd::Identity();
  const Eigen::Matrix2cd zero = Eigen::Matrix2cd::Zero();
  const auto& sigma = pauli();

  GammaSet g;
  g.representation = representation;
  switch (representation) {
    case Representation::dirac:
      g.gamma[0] = block(one, zero, zero, -one);
      break;
    case Representation::chiral:
      g.gamma[0] = block(zero, one, one, zero);
      break;
  }
  // Spatial gammas coincide in the two representations.
  for (std::size_t k = 0; k < 3; ++k) {
    g.gamma[k + 1] = block(zero, sigma[k], -sigma[k], zero);
  }
  g.beta = g.gamma[0];
  for (std::size_t k = 0; k < 3; ++k) {
    g.alpha_d[k] = g.gamma[0] * g.gamma[k + 1];
    g.alpha_q[k] = kI * g.alpha_d[k];
  }
  return g;
}

ComplexMatrix4 mat_exp(const ComplexMatrix4& m) { return expm(m); }

ComplexMatrix4 alpha_dot_p(const GammaSet& g, const Vec3& p, AlphaFamily family)
{
  const auto& alpha = g.alpha(family);
  return p.x() * alpha[0] + p.y() * alpha[1] + p.z() * alpha[2];
}

VerificationReport verify_clifford(const GammaSet& g, double tol)
{
  if (!(tol > 0.0)) {
    throw std::invalid_argument("verify_clifford: tolerance must be positive");
  }
  VerificationReport report;
  const std::string rep{to_string(g.representation)};
  const ComplexMatrix4 ident = identity4();

  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = mu; nu < 4; ++nu) {
      const ComplexMatrix4 ac = anticommutator(g.gamma[static_cast<std::size_t>(mu)],
                                               g.gamma[static_cast<std::size_t>(nu)]);
      const double residual = max_abs_distance(ac, 2.0 * metric(mu, nu) * ident);
      report.add_check("anticommutator/" + std::to_string(mu) + std::to_string(nu), residual, tol,
                       {{"representation", rep}});
    }
  }

  report.add_check("beta/squared", max_abs_distance(g.beta * g.beta, ident), tol);
  report.add_check("beta/hermitian", max_abs_distance(g.beta, g.beta.adjoint()), tol);

  const char axes[] = {'x', 'y', 'z'};
  for (std::size_t i = 0; i < 3; ++i) {
    const std::string ax(1, axes[i]);
    report.add_check("alpha_d/hermitian/" + ax,
                     max_abs_distance(g.alpha_d[i], g.alpha_d[i].adjoint()), tol);
    report.add_check("alpha_q/antihermitian/" + ax,
                     max_abs_distance(g.alpha_q[i], -g.alpha_q[i].adjoint()), tol);
    report.add_check("alpha_q/squared/" + ax,
                     max_abs_distance(g.alpha_q[i] * g.alpha_q[i], -ident), tol);
    report.add_check("alpha_d/anticommutes_beta/" + ax,
                     max_abs(anticommutator(g.alpha_d[i], g.beta)), tol);
    for (std::size_t j = i; j < 3; ++j) {
      const ComplexMatrix4 expected = (i == j ? 2.0 : 0.0) * ident;
      report.add_check("alpha_d/anticommutator/" + ax + std::string(1, axes[j]),
                       max_abs_distance(anticommutator(g.alpha_d[i], g.alpha_d[j]), expected),
                       tol);
    }
  }
  for (auto& c : report.checks) {
    c.context.emplace("representation", rep);
  }
  return report;
}

}  // namespace modirac
