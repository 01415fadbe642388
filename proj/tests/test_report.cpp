#include <modirac/report.hpp>

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace modirac;

TEST(Report, PassedFlagFollowsResidual)
{
  VerificationReport r;
  EXPECT_TRUE(r.add_check("a", 1e-12, 1e-12).passed);
  EXPECT_FALSE(r.add_check("b", 2e-12, 1e-12).passed);
  EXPECT_FALSE(r.add_check("c", std::nan(""), 1.0).passed);
  EXPECT_EQ(r.failure_count(), 2u);
  EXPECT_FALSE(r.all_passed());
}

TEST(Report, MergeAndSort)
{
  VerificationReport a;
  a.add_check("z", 0.0, 1.0);
  a.add_check("b", 0.0, 1.0);
  a.add_diagnostic("d", 3.0);
  VerificationReport r;
  r.merge(a, "suite");
  r.sort();
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_EQ(r.checks[0].name, "suite/b");
  EXPECT_EQ(r.checks[1].name, "suite/z");
  EXPECT_EQ(r.diagnostics[0].name, "suite/d");
  EXPECT_NE(r.find("suite/z"), nullptr);
  EXPECT_EQ(r.find("z"), nullptr);
}

TEST(Report, RoundTripIsLossless)
{
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-30.0, 0.0);
  VerificationReport r;
  r.seed = 18446744073709551615ull;
  r.generated_at = "2020-01-01T00:00:00Z";
  for (int k = 0; k < 100; ++k) {
    r.add_check("check/" + std::to_string(k), std::pow(10.0, u(rng)), std::pow(10.0, u(rng)),
                {{"k", std::to_string(k)}, {"note", "x,y \"quoted\""}});
  }
  r.add_check("inf", std::numeric_limits<double>::infinity(), 1.0);
  r.add_diagnostic("diag", 0.1 + 0.2, {{"unit", "none"}});
  r.add_diagnostic("nan", std::nan(""));

  const std::string text = serialize(r);
  const VerificationReport back = parse_report(text);
  EXPECT_EQ(serialize(back), text);
  ASSERT_EQ(back.checks.size(), r.checks.size());
  for (std::size_t k = 0; k + 1 < r.checks.size(); ++k) {
    EXPECT_EQ(back.checks[k].residual, r.checks[k].residual);
    EXPECT_EQ(back.checks[k].tolerance, r.checks[k].tolerance);
    EXPECT_EQ(back.checks[k].passed, r.checks[k].passed);
    EXPECT_EQ(back.checks[k].context, r.checks[k].context);
  }
  EXPECT_TRUE(std::isinf(back.checks.back().residual));
  EXPECT_TRUE(std::isnan(back.diagnostics.back().value));
  EXPECT_EQ(back.diagnostics.front().value, 0.1 + 0.2);
  EXPECT_EQ(back.seed, r.seed);
  EXPECT_EQ(back.suite_version, kSuiteVersion);
  EXPECT_EQ(back.generated_at, r.generated_at);
}

TEST(Report, RejectsInconsistentPassedFlag)
{
  VerificationReport r;
  r.add_check("a", 2.0, 1.0);
  nlohmann::json j = to_json(r);
  j["checks"][0]["passed"] = true;
  EXPECT_THROW(report_from_json(j), std::invalid_argument);
}

TEST(Report, FormatDoubleIsShortestRoundTrip)
{
  EXPECT_EQ(format_double(0.5), "0.5");
  EXPECT_EQ(format_double(1e-12), "1e-12");
  EXPECT_EQ(std::stod(format_double(0.1 + 0.2)), 0.1 + 0.2);
}
