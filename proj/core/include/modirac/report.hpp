#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modirac {

using Context = std::map<std::string, std::string>;

/// One pass/fail record. `passed` is always `residual <= tolerance`.
struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool passed = false;
  Context context;
};

/// A recorded measurement that never affects the exit status, e.g. a negative
/// control or the perpendicular-boost commutator.
struct Diagnostic {
  std::string name;
  double value = 0.0;
  Context context;
};

inline constexpr const char* kSuiteVersion = "modirac-verify/1";

struct VerificationReport {
  std::vector<Check> checks;
  std::vector<Diagnostic> diagnostics;
  std::uint64_t seed = 0;
  std::string suite_version = kSuiteVersion;
  /// Wall-clock stamp set by the CLI; the only field allowed to differ
  /// between runs with the same seed.
  std::optional<std::string> generated_at;

  const Check& add_check(std::string name, double residual, double tolerance, Context context = {});
  void add_diagnostic(std::string name, double value, Context context = {});

  bool all_passed() const;
  std::size_t failure_count() const;

  /// Appends the records of `other`, prefixing names with `prefix` + "/".
  void merge(const VerificationReport& other, const std::string& prefix = {});
  /// Sorts checks and diagnostics by name.
  void sort();

  const Check* find(const std::string& name) const;
};

nlohmann::json to_json(const VerificationReport& report);
VerificationReport report_from_json(const nlohmann::json& j);

std::string serialize(const VerificationReport& report);
VerificationReport parse_report(const std::string& text);

/// Shortest round-trip decimal representation.
std::string format_double(double value);

}  // namespace modirac
