#include "modirac_cli/commands.hpp"

#include <modirac/constants.hpp>
#include <modirac/covariance.hpp>
#include <modirac/gauge.hpp>
#include <modirac/hypercomplex.hpp>
#include <modirac/lorentz.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <future>
#include <sstream>

namespace modirac::cli {

namespace {

GaugeSuiteOptions gauge_options(const RunConfig& config)
{
  GaugeSuiteOptions options;
  options.n_points = config.grid_size;
  options.seed = config.seed;
  options.tol = config.tolerances.gauge;
  return options;
}

VerificationReport casimir_only(const GammaSet& g, std::uint64_t seed, double tol)
{
  const VerificationReport full = lorentz_suite(g, 1, seed, tol);
  VerificationReport out;
  out.seed = seed;
  for (const auto& c : full.checks) {
    if (c.name.rfind("casimir/", 0) == 0) {
      out.checks.push_back(c);
    }
  }
  for (const auto& d : full.diagnostics) {
    if (d.name.rfind("casimir/", 0) == 0) {
      out.diagnostics.push_back(d);
    }
  }
  return out;
}

std::string row(double t, const Spinor& psi, double norm, double energy, double qs)
{
  std::string line = format_double(t);
  for (int c = 0; c < 4; ++c) {
    line += ',' + format_double(psi[c].real());
    line += ',' + format_double(psi[c].imag());
  }
  line += ',' + format_double(norm);
  line += ',' + format_double(energy);
  line += ',' + format_double(qs);
  return line;
}

}  // namespace

VerificationReport run_verify_all(const RunConfig& config)
{
  config.validate();
  const GammaSet dirac = build_gamma_set(Representation::dirac);
  const GammaSet chiral = build_gamma_set(Representation::chiral);
  const GammaSet& main = config.representation == Representation::dirac ? dirac : chiral;
  const SuiteTolerances& tol = config.tolerances;
  const std::uint64_t seed = config.seed;
  const int trials = config.trials;

  auto clifford = std::async(std::launch::async, [&] {
    VerificationReport r;
    r.merge(verify_clifford(dirac, tol.clifford), "dirac");
    r.merge(verify_clifford(chiral, tol.clifford), "chiral");
    return r;
  });
  auto lorentz = std::async(std::launch::async, [&] {
    VerificationReport r;
    r.merge(lorentz_suite(dirac, trials, seed, tol.lorentz), "dirac");
    r.merge(lorentz_suite(chiral, trials, seed, tol.lorentz), "chiral");
    return r;
  });
  auto covariance = std::async(std::launch::async,
                               [&] { return covariance_suite(main, trials, seed, tol.covariance); });
  auto gauge = std::async(std::launch::async,
                          [&] { return gauge_suite(main, gauge_options(config)); });
  auto hypercomplex = std::async(
      std::launch::async, [&] { return hypercomplex_suite(main, trials, seed, tol.hypercomplex); });

  VerificationReport report;
  report.seed = seed;
  report.merge(clifford.get(), "clifford");
  report.merge(lorentz.get(), "lorentz");
  report.merge(covariance.get(), "covariance");
  report.merge(gauge.get(), "gauge");
  report.merge(hypercomplex.get(), "hypercomplex");
  report.sort();
  return report;
}

VerificationReport run_gauge_check(const RunConfig& config)
{
  config.validate();
  VerificationReport report;
  report.seed = config.seed;
  report.merge(gauge_suite(build_gamma_set(config.representation), gauge_options(config)),
               "gauge");
  report.sort();
  return report;
}

VerificationReport run_casimir(const RunConfig& config)
{
  config.validate();
  VerificationReport report;
  report.seed = config.seed;
  for (Representation rep : {Representation::dirac, Representation::chiral}) {
    const GammaSet g = build_gamma_set(rep);
    const std::string prefix = std::string(to_string(rep));
    report.merge(casimir_only(g, config.seed, config.tolerances.lorentz), prefix);

    const CasimirPair cas = lorentz_casimirs(g);
    const ComplexMatrix4 j2 = squared_sum(lorentz_generators(g).j());
    for (int k = 0; k < 4; ++k) {
      const std::string idx = std::to_string(k);
      report.add_diagnostic(prefix + "/c1_diag_re_" + idx, cas.c1(k, k).real());
      report.add_diagnostic(prefix + "/c2_diag_im_" + idx, cas.c2(k, k).imag());
      report.add_diagnostic(prefix + "/j2_diag_re_" + idx, j2(k, k).real());
    }
  }
  report.sort();
  return report;
}

VerificationReport run_mass_op(const RunConfig& config)
{
  config.validate();
  const GammaSet g = build_gamma_set(config.representation);
  const double energy = config.energy;
  const Vec3& p = config.momentum;
  const double tol = config.tolerances.hypercomplex;
  const Context ctx{{"E", format_double(energy)},
                    {"p", format_double(p.x()) + " " + format_double(p.y()) + " " +
                              format_double(p.z())}};

  VerificationReport report;
  report.seed = config.seed;

  const MassOperator q = p.norm() > 0.0 ? mass_operator_build(g, energy, p)
                                        : mass_operator_at_rest(g, energy);
  const double scale = std::max(1.0, energy * energy + p.squaredNorm());
  report.add_check("mass_op/q_qconj_equals_mass_squared",
                   max_abs_distance(q.q_matrix * q.q_conj_matrix, q.norm_sq * identity4()) / scale,
                   tol, ctx);

  const BranchClassification branch = branch_classify(energy, p);
  Context bctx = ctx;
  bctx["branch"] = std::string(to_string(branch.branch));
  report.add_diagnostic("mass_op/norm_re", branch.q_norm.real(), bctx);
  report.add_diagnostic("mass_op/norm_im", branch.q_norm.imag(), bctx);
  if (branch.theta) {
    report.add_diagnostic("mass_op/theta_re", branch.theta->real(), bctx);
    report.add_diagnostic("mass_op/theta_im", branch.theta->imag(), bctx);
  }
  if (branch.shell_slope) {
    report.add_diagnostic("mass_op/shell_slope", *branch.shell_slope, bctx);
  }

  if (p.norm() > 0.0) {
    const double m = config.mass;
    const TriangleBoundsReport bounds = triangle_bounds(m, m, config.samples, g, p);
    const Context sctx{{"samples", std::to_string(bounds.samples)}, {"m", format_double(m)}};
    report.add_check("mass_function/samples_within_bounds",
                     static_cast<double>(bounds.violations), 0.0, sctx);
    report.add_check("mass_function/at_t0",
                     spectral_norm(mass_function_sample(g, p, m, 0.0).matrix), 0.0, sctx);
    report.add_check("mass_function/attains_upper_bound",
                     std::abs(mass_function_sample(g, p, m, kPi / (2.0 * p.norm())).norm_value -
                              2.0 * m),
                     tol, sctx);
    report.add_diagnostic("mass_function/min_norm", bounds.min_norm, sctx);
    report.add_diagnostic("mass_function/max_norm", bounds.max_norm, sctx);
  }
  report.sort();
  return report;
}

void write_mass_sweep_csv(std::ostream& out, const RunConfig& config)
{
  const GammaSet g = build_gamma_set(config.representation);
  const double pn = config.momentum.norm();
  out << "t,qs_norm\n";
  if (!(pn > 0.0)) {
    return;
  }
  const double period = kPi / pn;
  for (std::size_t k = 0; k <= config.samples; ++k) {
    const double t = period * static_cast<double>(k) / static_cast<double>(config.samples);
    out << format_double(t) << ','
        << format_double(mass_function_sample(g, config.momentum, config.mass, t).norm_value)
        << '\n';
  }
}

EvolveResult run_evolve(const RunConfig& config)
{
  config.validate();
  const GammaSet g = build_gamma_set(config.representation);
  const MomentumState state = MomentumState::positive_energy(g, config.momentum, config.mass);
  EvolveOptions options;
  options.t_max = config.t_max;
  options.dt = config.dt;
  options.integrator = config.integrator;
  options.term = config.free_evolution ? MassTerm::free : MassTerm::modified;

  EvolveResult result;
  result.trace = evolve(g, state, options);
  const EvolutionTrace& tr = result.trace;
  if (tr.size() >= 3) {
    result.drift = energy_drift_check(tr, g, config.momentum, config.mass);
  } else {
    double violation = 0.0;
    for (double e : tr.energies) {
      violation = std::max(violation, std::abs(e - tr.energies.front()));
    }
    result.drift.energy_violation = violation;
  }
  for (double n : tr.norms) {
    result.norm_drift = std::max(result.norm_drift, std::abs(n - 1.0));
  }
  const auto [qs_min, qs_max] = std::minmax_element(tr.qs_norms.begin(), tr.qs_norms.end());
  result.summary = {{"energy_drift", result.drift.energy_violation},
                    {"ehrenfest_deviation", result.drift.ehrenfest_deviation},
                    {"norm_drift", result.norm_drift},
                    {"norm_tolerance", config.norm_tolerance},
                    {"qs_norm_min", *qs_min},
                    {"qs_norm_max", *qs_max},
                    {"dt", tr.dt},
                    {"steps", tr.size() - 1},
                    {"integrator", std::string(to_string(config.integrator))},
                    {"mass_term", config.free_evolution ? "free" : "modified"},
                    {"momentum", {config.momentum.x(), config.momentum.y(), config.momentum.z()}},
                    {"mass", config.mass}};
  return result;
}

void write_trace_csv(std::ostream& out, const EvolutionTrace& trace)
{
  out << kTraceHeader << '\n';
  for (std::size_t k = 0; k < trace.size(); ++k) {
    out << row(trace.times[k], trace.spinors[k], trace.norms[k], trace.energies[k],
               trace.qs_norms[k])
        << '\n';
  }
}

std::string utc_timestamp()
{
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_text_file(const std::filesystem::path& path, const std::string& text)
{
  std::error_code ec;
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw ConfigError("cannot write " + path.string());
  }
  out << text;
  out.flush();
  if (!out) {
    throw ConfigError("write failed for " + path.string());
  }
}

int write_report(VerificationReport report, const std::filesystem::path& path)
{
  report.generated_at = utc_timestamp();
  write_text_file(path, serialize(report) + "\n");
  return report.all_passed() ? kExitPass : kExitCheckFailed;
}

}  // namespace modirac::cli
