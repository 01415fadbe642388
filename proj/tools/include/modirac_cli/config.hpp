#pragma once

#include <modirac/clifford.hpp>
#include <modirac/dynamics.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>

namespace modirac::cli {

/// Invalid configuration or unusable path; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kOutputDirEnv = "MODIRAC_OUTPUT_DIR";

struct SuiteTolerances {
  double clifford = 1e-13;
  double lorentz = 1e-11;
  double covariance = 1e-11;
  double gauge = 1e-9;
  double hypercomplex = 1e-12;

  /// Sets one suite by name; throws ConfigError for unknown suites.
  void set(const std::string& suite, double value);
  void set_all(double value);
};

struct RunConfig {
  std::uint64_t seed = 42;
  int trials = 100;
  SuiteTolerances tolerances;
  std::size_t grid_size = 64;
  Representation representation = Representation::dirac;

  // evolve
  Integrator integrator = Integrator::magnus2;
  /// 0 selects the default step min(0.01, 0.05 / (|p| + m)).
  double dt = 0.0;
  double t_max = 10.0;
  Vec3 momentum = Vec3(1.0, 0.0, 0.0);
  double mass = 1.0;
  bool free_evolution = false;
  double norm_tolerance = 1e-9;

  // mass-op
  double energy = 5.0;
  std::size_t samples = 256;

  std::filesystem::path report_path = "modirac_report.json";
  std::filesystem::path trace_path = "modirac_trace.csv";

  /// Throws ConfigError when a numeric field is out of range.
  void validate() const;
};

/// Parses a JSON config object; unknown keys are rejected.
RunConfig config_from_json(const nlohmann::json& j, RunConfig base = {});
RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});
nlohmann::json to_json(const RunConfig& config);

/// Relative output paths are placed under $MODIRAC_OUTPUT_DIR when it is set.
std::filesystem::path resolve_output(const std::filesystem::path& path);

}  // namespace modirac::cli
