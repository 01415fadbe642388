#pragma once

#include "modirac_cli/config.hpp"

#include <modirac/dynamics.hpp>
#include <modirac/report.hpp>

#include <nlohmann/json.hpp>

#include <filesystem>
#include <ostream>

namespace modirac::cli {

enum ExitCode : int { kExitPass = 0, kExitCheckFailed = 1, kExitError = 2 };

/// Clifford and Lorentz suites in both representations, the rest in
/// config.representation. Suites run concurrently; the result is sorted.
VerificationReport run_verify_all(const RunConfig& config);

/// Gauge suite alone, on a config.grid_size grid.
VerificationReport run_gauge_check(const RunConfig& config);

/// Casimir values and identities in both representations.
VerificationReport run_casimir(const RunConfig& config);

/// Mass operator for (config.energy, config.momentum): QQ*, branch, phase and
/// the mass-function sweep over one period.
VerificationReport run_mass_op(const RunConfig& config);

/// Mass-function sweep rows t,qs_norm over one period, `samples` rows.
void write_mass_sweep_csv(std::ostream& out, const RunConfig& config);

struct EvolveResult {
  EvolutionTrace trace;
  EnergyDriftReport drift;
  double norm_drift = 0.0;
  nlohmann::json summary;
};

/// Throws StabilityError when config.dt is too large.
EvolveResult run_evolve(const RunConfig& config);

inline constexpr const char* kTraceHeader =
    "t,psi0_re,psi0_im,psi1_re,psi1_im,psi2_re,psi2_im,psi3_re,psi3_im,norm,energy_expectation,"
    "qs_norm";

void write_trace_csv(std::ostream& out, const EvolutionTrace& trace);

/// UTC time as YYYY-MM-DDTHH:MM:SSZ.
std::string utc_timestamp();

/// Writes text to `path`, creating parent directories. Throws ConfigError on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

/// Stamps, serializes and writes the report; returns the exit code it implies.
int write_report(VerificationReport report, const std::filesystem::path& path);

}  // namespace modirac::cli
