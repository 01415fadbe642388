#include "modirac_cli/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace modirac::cli {

namespace {

template <typename T>
T get_as(const nlohmann::json& j, const char* key)
{
  try {
    return j.get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config: bad value for '") + key + "': " + e.what());
  }
}

void require_positive(double value, const char* name)
{
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ConfigError(std::string("config: '") + name + "' must be positive");
  }
}

}  // namespace

void SuiteTolerances::set(const std::string& suite, double value)
{
  require_positive(value, suite.c_str());
  if (suite == "clifford") {
    clifford = value;
  } else if (suite == "lorentz") {
    lorentz = value;
  } else if (suite == "covariance") {
    covariance = value;
  } else if (suite == "gauge") {
    gauge = value;
  } else if (suite == "hypercomplex") {
    hypercomplex = value;
  } else {
    throw ConfigError("config: unknown suite '" + suite + "'");
  }
}

void SuiteTolerances::set_all(double value)
{
  for (const char* s : {"clifford", "lorentz", "covariance", "gauge", "hypercomplex"}) {
    set(s, value);
  }
}

void RunConfig::validate() const
{
  if (trials < 1) {
    throw ConfigError("config: 'trials' must be >= 1");
  }
  if (grid_size < 8 || (grid_size & (grid_size - 1)) != 0) {
    throw ConfigError("config: 'grid_size' must be a power of two >= 8");
  }
  if (dt < 0.0 || !std::isfinite(dt)) {
    throw ConfigError("config: 'dt' must be >= 0 (0 selects the default step)");
  }
  require_positive(t_max, "t_max");
  require_positive(norm_tolerance, "norm_tolerance");
  if (!momentum.allFinite() || !std::isfinite(mass) || mass < 0.0) {
    throw ConfigError("config: 'momentum' must be finite and 'mass' non-negative");
  }
  if (!std::isfinite(energy)) {
    throw ConfigError("config: 'energy' must be finite");
  }
  if (samples < 2) {
    throw ConfigError("config: 'samples' must be >= 2");
  }
  for (double tol : {tolerances.clifford, tolerances.lorentz, tolerances.covariance,
                     tolerances.gauge, tolerances.hypercomplex}) {
    require_positive(tol, "tolerances");
  }
}

RunConfig config_from_json(const nlohmann::json& j, RunConfig base)
{
  if (!j.is_object()) {
    throw ConfigError("config: top level must be an object");
  }
  static const std::set<std::string> known{
      "seed",      "trials",       "tolerances",     "grid_size",   "representation",
      "integrator", "dt",          "t_max",          "momentum",    "mass",
      "free_evolution", "norm_tolerance", "energy",  "samples",     "report_path",
      "trace_path"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  RunConfig c = std::move(base);
  if (j.contains("seed")) c.seed = get_as<std::uint64_t>(j["seed"], "seed");
  if (j.contains("trials")) c.trials = get_as<int>(j["trials"], "trials");
  if (j.contains("grid_size")) c.grid_size = get_as<std::size_t>(j["grid_size"], "grid_size");
  if (j.contains("dt")) c.dt = get_as<double>(j["dt"], "dt");
  if (j.contains("t_max")) c.t_max = get_as<double>(j["t_max"], "t_max");
  if (j.contains("mass")) c.mass = get_as<double>(j["mass"], "mass");
  if (j.contains("energy")) c.energy = get_as<double>(j["energy"], "energy");
  if (j.contains("samples")) c.samples = get_as<std::size_t>(j["samples"], "samples");
  if (j.contains("free_evolution")) {
    c.free_evolution = get_as<bool>(j["free_evolution"], "free_evolution");
  }
  if (j.contains("norm_tolerance")) {
    c.norm_tolerance = get_as<double>(j["norm_tolerance"], "norm_tolerance");
  }
  if (j.contains("report_path")) {
    c.report_path = get_as<std::string>(j["report_path"], "report_path");
  }
  if (j.contains("trace_path")) {
    c.trace_path = get_as<std::string>(j["trace_path"], "trace_path");
  }
  try {
    if (j.contains("representation")) {
      c.representation =
          representation_from_string(get_as<std::string>(j["representation"], "representation"));
    }
    if (j.contains("integrator")) {
      c.integrator = integrator_from_string(get_as<std::string>(j["integrator"], "integrator"));
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (j.contains("momentum")) {
    const auto p = get_as<std::vector<double>>(j["momentum"], "momentum");
    if (p.size() != 3) {
      throw ConfigError("config: 'momentum' needs three components");
    }
    c.momentum = Vec3(p[0], p[1], p[2]);
  }
  if (j.contains("tolerances")) {
    const auto& tols = j["tolerances"];
    if (!tols.is_object()) {
      throw ConfigError("config: 'tolerances' must be an object");
    }
    for (const auto& [suite, value] : tols.items()) {
      c.tolerances.set(suite, get_as<double>(value, "tolerances"));
    }
  }
  c.validate();
  return c;
}

RunConfig load_config(const std::filesystem::path& path, RunConfig base)
{
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("config: cannot open " + path.string());
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config: " + path.string() + ": " + e.what());
  }
  return config_from_json(j, std::move(base));
}

nlohmann::json to_json(const RunConfig& c)
{
  return {{"seed", c.seed},
          {"trials", c.trials},
          {"tolerances",
           {{"clifford", c.tolerances.clifford},
            {"lorentz", c.tolerances.lorentz},
            {"covariance", c.tolerances.covariance},
            {"gauge", c.tolerances.gauge},
            {"hypercomplex", c.tolerances.hypercomplex}}},
          {"grid_size", c.grid_size},
          {"representation", std::string(to_string(c.representation))},
          {"integrator", std::string(to_string(c.integrator))},
          {"dt", c.dt},
          {"t_max", c.t_max},
          {"momentum", {c.momentum.x(), c.momentum.y(), c.momentum.z()}},
          {"mass", c.mass},
          {"free_evolution", c.free_evolution},
          {"norm_tolerance", c.norm_tolerance},
          {"energy", c.energy},
          {"samples", c.samples},
          {"report_path", c.report_path.string()},
          {"trace_path", c.trace_path.string()}};
}

std::filesystem::path resolve_output(const std::filesystem::path& path)
{
  if (path.is_absolute()) {
    return path;
  }
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / path;
  }
  return path;
}

}  // namespace modirac::cli
