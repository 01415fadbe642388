#include "modirac_cli/commands.hpp"
#include "modirac_cli/config.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace modirac;
using namespace modirac::cli;

namespace {

struct CommonFlags {
  std::optional<std::uint64_t> seed;
  std::optional<double> tol;
  std::optional<std::string> out;
  std::optional<std::string> config;
  std::optional<int> trials;
  std::optional<std::size_t> grid_size;
  std::optional<std::string> representation;
  std::vector<std::string> suite_tol;
  // evolve / mass-op
  std::vector<double> momentum;
  std::optional<double> mass;
  std::optional<double> dt;
  std::optional<double> t_max;
  std::optional<std::string> integrator;
  bool free_evolution = false;
  std::optional<double> energy;
  std::optional<std::size_t> samples;
};

void add_common(CLI::App* sub, CommonFlags& f, const std::string& out_help)
{
  sub->add_option("--seed", f.seed, "RNG seed (default 42)");
  sub->add_option("--tol", f.tol, "Tolerance override");
  sub->add_option("--out", f.out, out_help);
  sub->add_option("--config", f.config, "JSON config file; command-line flags take precedence")
      ->check(CLI::ExistingFile);
  sub->add_option("--representation", f.representation, "dirac or chiral (default dirac)");
}

void add_momentum(CLI::App* sub, CommonFlags& f, const std::string& p_default)
{
  sub->add_option("--p", f.momentum, "Momentum px py pz (default " + p_default + ")")
      ->expected(3);
  sub->add_option("--m", f.mass, "Mass (default 1)");
}

RunConfig build_config(const CommonFlags& f)
{
  RunConfig c;
  if (f.config) {
    c = load_config(*f.config);
  }
  if (f.seed) c.seed = *f.seed;
  if (f.trials) c.trials = *f.trials;
  if (f.grid_size) c.grid_size = *f.grid_size;
  if (f.mass) c.mass = *f.mass;
  if (f.dt) c.dt = *f.dt;
  if (f.t_max) c.t_max = *f.t_max;
  if (f.energy) c.energy = *f.energy;
  if (f.samples) c.samples = *f.samples;
  if (f.free_evolution) c.free_evolution = true;
  if (f.momentum.size() == 3) {
    c.momentum = Vec3(f.momentum[0], f.momentum[1], f.momentum[2]);
  }
  try {
    if (f.representation) c.representation = representation_from_string(*f.representation);
    if (f.integrator) c.integrator = integrator_from_string(*f.integrator);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  c.validate();
  return c;
}

void apply_suite_tol(const std::vector<std::string>& items, RunConfig& c)
{
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--suite-tol expects suite=value, got '" + item + "'");
    }
    double value = 0.0;
    try {
      value = std::stod(item.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("--suite-tol: bad number in '" + item + "'");
    }
    c.tolerances.set(item.substr(0, eq), value);
  }
}

void print_summary(const VerificationReport& report, const std::filesystem::path& path)
{
  std::cout << report.checks.size() - report.failure_count() << "/" << report.checks.size()
            << " checks passed; report: " << path.string() << "\n";
  for (const auto& c : report.checks) {
    if (!c.passed) {
      std::cout << "FAIL " << c.name << " residual=" << format_double(c.residual)
                << " tolerance=" << format_double(c.tolerance) << "\n";
    }
  }
}

int finish(const VerificationReport& report, const std::filesystem::path& path)
{
  const int code = write_report(report, path);
  print_summary(report, path);
  return code;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Numerical checks for the modified Dirac equation"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  CommonFlags f;

  auto* verify = app.add_subcommand("verify", "Run every verification suite");
  add_common(verify, f, "Report path (default modirac_report.json)");
  verify->add_option("--trials", f.trials, "Random trials per suite (default 100)");
  verify->add_option("--grid-size", f.grid_size, "Gauge grid points (default 64)");
  verify->add_option("--suite-tol", f.suite_tol,
                     "Per-suite tolerance, e.g. gauge=1e-10 (clifford 1e-13, lorentz 1e-11, "
                     "covariance 1e-11, gauge 1e-9, hypercomplex 1e-12)");

  auto* evolve_cmd = app.add_subcommand("evolve", "Integrate one momentum mode and export a trace");
  add_common(evolve_cmd, f, "Trace CSV path (default modirac_trace.csv)");
  add_momentum(evolve_cmd, f, "1 0 0");
  evolve_cmd->add_option("--dt", f.dt, "Time step; 0 = min(0.01, 0.05/(|p|+m)) (default 0)");
  evolve_cmd->add_option("--t-max", f.t_max, "End time (default 10)");
  evolve_cmd->add_option("--integrator", f.integrator, "magnus2 or rk4 (default magnus2)");
  evolve_cmd->add_flag("--free", f.free_evolution, "Drop the time-dependent mass term");

  auto* gauge_cmd = app.add_subcommand("gauge-check", "Gauge-invariance suite on a periodic grid");
  add_common(gauge_cmd, f, "Report path (default modirac_report.json)");
  gauge_cmd->add_option("--grid-size", f.grid_size, "Grid points, power of two (default 64)");

  auto* mass_cmd = app.add_subcommand("mass-op", "Quaternionic mass operator and mass-function sweep");
  add_common(mass_cmd, f, "Report path; the sweep goes to <out>.sweep.csv");
  add_momentum(mass_cmd, f, "1 0 0");
  mass_cmd->add_option("--energy", f.energy, "Energy E (default 5)");
  mass_cmd->add_option("--samples", f.samples, "Samples over one period (default 256)");

  auto* casimir_cmd = app.add_subcommand("casimir", "Lorentz Casimir values in both representations");
  add_common(casimir_cmd, f, "Report path (default modirac_report.json)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitError;
  }

  try {
    RunConfig config = build_config(f);

    if (verify->parsed()) {
      if (f.tol) config.tolerances.set_all(*f.tol);
      apply_suite_tol(f.suite_tol, config);
      if (f.out) config.report_path = *f.out;
      return finish(run_verify_all(config), resolve_output(config.report_path));
    }

    if (gauge_cmd->parsed()) {
      if (f.tol) config.tolerances.gauge = *f.tol;
      if (f.out) config.report_path = *f.out;
      config.validate();
      return finish(run_gauge_check(config), resolve_output(config.report_path));
    }

    if (casimir_cmd->parsed()) {
      if (f.tol) config.tolerances.lorentz = *f.tol;
      if (f.out) config.report_path = *f.out;
      config.validate();
      return finish(run_casimir(config), resolve_output(config.report_path));
    }

    if (mass_cmd->parsed()) {
      if (f.tol) config.tolerances.hypercomplex = *f.tol;
      if (f.out) config.report_path = *f.out;
      config.validate();
      const std::filesystem::path path = resolve_output(config.report_path);
      std::ostringstream sweep;
      write_mass_sweep_csv(sweep, config);
      write_text_file(path.string() + ".sweep.csv", sweep.str());
      return finish(run_mass_op(config), path);
    }

    if (evolve_cmd->parsed()) {
      if (f.tol) config.norm_tolerance = *f.tol;
      if (f.out) config.trace_path = *f.out;
      config.validate();
      const std::filesystem::path path = resolve_output(config.trace_path);
      const EvolveResult result = run_evolve(config);
      std::ostringstream csv;
      write_trace_csv(csv, result.trace);
      write_text_file(path, csv.str());
      nlohmann::json summary = result.summary;
      summary["generated_at"] = utc_timestamp();
      write_text_file(path.string() + ".summary.json", summary.dump(2) + "\n");
      const bool ok = result.norm_drift <= config.norm_tolerance;
      std::cout << "steps=" << result.trace.size() - 1 << " dt=" << format_double(result.trace.dt)
                << " norm_drift=" << format_double(result.norm_drift)
                << " energy_drift=" << format_double(result.drift.energy_violation)
                << "; trace: " << path.string() << "\n";
      if (!ok) {
        std::cout << "FAIL norm drift exceeds " << format_double(config.norm_tolerance) << "\n";
      }
      return ok ? kExitPass : kExitCheckFailed;
    }
  } catch (const StabilityError& e) {
    std::cerr << "error: " << e.what() << " (suggested dt = " << format_double(e.suggested_dt())
              << ")\n";
    return kExitError;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
