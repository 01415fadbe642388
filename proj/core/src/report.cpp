#include "modirac/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace modirac {

namespace {

// JSON has no encoding for inf/nan; those travel as strings.
nlohmann::json encode_number(double value)
{
  if (std::isfinite(value)) {
    return value;
  }
  if (std::isnan(value)) {
    return "nan";
  }
  return value > 0 ? "inf" : "-inf";
}

double decode_number(const nlohmann::json& j)
{
  if (j.is_number()) {
    return j.get<double>();
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "nan") {
      return std::numeric_limits<double>::quiet_NaN();
    }
    if (s == "inf") {
      return std::numeric_limits<double>::infinity();
    }
    if (s == "-inf") {
      return -std::numeric_limits<double>::infinity();
    }
  }
  throw std::invalid_argument("report: expected a number, got " + j.dump());
}

}  // namespace

const Check& VerificationReport::add_check(std::string name, double residual, double tolerance,
                                           Context context)
{
  Check check;
  check.name = std::move(name);
  check.residual = residual;
  check.tolerance = tolerance;
  check.passed = residual <= tolerance;
  check.context = std::move(context);
  checks.push_back(std::move(check));
  return checks.back();
}

void VerificationReport::add_diagnostic(std::string name, double value, Context context)
{
  diagnostics.push_back(Diagnostic{std::move(name), value, std::move(context)});
}

bool VerificationReport::all_passed() const { return failure_count() == 0; }

std::size_t VerificationReport::failure_count() const
{
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.passed; }));
}

void VerificationReport::merge(const VerificationReport& other, const std::string& prefix)
{
  const std::string lead = prefix.empty() ? std::string{} : prefix + "/";
  for (const auto& c : other.checks) {
    Check copy = c;
    copy.name = lead + c.name;
    checks.push_back(std::move(copy));
  }
  for (const auto& d : other.diagnostics) {
    Diagnostic copy = d;
    copy.name = lead + d.name;
    diagnostics.push_back(std::move(copy));
  }
}

void VerificationReport::sort()
{
  std::stable_sort(checks.begin(), checks.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
  std::stable_sort(diagnostics.begin(), diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.name < b.name; });
}

const Check* VerificationReport::find(const std::string& name) const
{
  const auto it = std::find_if(checks.begin(), checks.end(),
                               [&](const Check& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

nlohmann::json to_json(const VerificationReport& report)
{
  nlohmann::json j;
  j["suite_version"] = report.suite_version;
  j["seed"] = report.seed;
  if (report.generated_at) {
    j["generated_at"] = *report.generated_at;
  }
  j["summary"] = {{"checks", report.checks.size()},
                  {"failed", report.failure_count()},
                  {"all_passed", report.all_passed()}};
  auto& checks = j["checks"] = nlohmann::json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"residual", encode_number(c.residual)},
                      {"tolerance", encode_number(c.tolerance)},
                      {"passed", c.passed},
                      {"context", c.context}});
  }
  auto& diags = j["diagnostics"] = nlohmann::json::array();
  for (const auto& d : report.diagnostics) {
    diags.push_back({{"name", d.name}, {"value", encode_number(d.value)}, {"context", d.context}});
  }
  return j;
}

VerificationReport report_from_json(const nlohmann::json& j)
{
  VerificationReport report;
  report.suite_version = j.at("suite_version").get<std::string>();
  report.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("generated_at")) {
    report.generated_at = j.at("generated_at").get<std::string>();
  }
  for (const auto& c : j.at("checks")) {
    Check check;
    check.name = c.at("name").get<std::string>();
    check.residual = decode_number(c.at("residual"));
    check.tolerance = decode_number(c.at("tolerance"));
    check.passed = c.at("passed").get<bool>();
    check.context = c.at("context").get<Context>();
    if (check.passed != (check.residual <= check.tolerance)) {
      throw std::invalid_argument("report: check '" + check.name +
                                  "' has a passed flag inconsistent with its residual");
    }
    report.checks.push_back(std::move(check));
  }
  if (j.contains("diagnostics")) {
    for (const auto& d : j.at("diagnostics")) {
      report.diagnostics.push_back(Diagnostic{d.at("name").get<std::string>(),
                                              decode_number(d.at("value")),
                                              d.at("context").get<Context>()});
    }
  }
  return report;
}

std::string serialize(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

VerificationReport parse_report(const std::string& text)
{
  return report_from_json(nlohmann::json::parse(text));
}

std::string format_double(double value)
{
  char buf[64];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

}  // namespace modirac
