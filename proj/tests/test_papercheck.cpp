#include "symcd/papercheck.hpp"

#include <gtest/gtest.h>

namespace symcd {
namespace {

TEST(Oracle, AlternatingSumsTelescope) {
  for (int g = 5; g <= 60; ++g) {
    EXPECT_EQ(oracle::pencil_alternating_sum(g, 0), g) << g;
    EXPECT_EQ(oracle::pencil_alternating_sum(g, 1), g - 2) << g;
  }
}

TEST(Oracle, DivisorGammaPairingOnC4) {
  EXPECT_EQ(oracle::divisor_gamma_pairing(6, 4, 5, 1, 0), 6);
  EXPECT_EQ(oracle::divisor_gamma_pairing(6, 4, 4, 1, 0), 0);
  EXPECT_EQ(oracle::divisor_gamma_pairing(6, 4, 4, 1, 1), 1);
  EXPECT_EQ(oracle::divisor_gamma_pairing(6, 4, 5, 1, 1) - oracle::divisor_gamma_pairing(6, 4, 4, 1, 1), 3);
}

TEST(CheckDmPushpull, Examples) {
  const CheckResult a = check_dm_pushpull(6, 1);
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.lhs, "4*theta - 6*x");
  EXPECT_EQ(a.rhs, "4*theta - 6*x");
  const CheckResult b = check_dm_pushpull(6, 2);
  EXPECT_TRUE(b.passed);
  EXPECT_EQ(b.lhs, "5*theta - 15*x");
  EXPECT_TRUE(check_dm_pushpull(40, 19).passed);
  EXPECT_THROW(check_dm_pushpull(6, 3), std::invalid_argument);
}

TEST(CheckPencilPairings, Examples) {
  const CheckResult g6 = check_pencil_pairings(6);
  EXPECT_TRUE(g6.passed);
  EXPECT_EQ(g6.lhs, "6; 4; 0");
  EXPECT_EQ(check_pencil_pairings(5).lhs, "5; 3; 0");
  EXPECT_EQ(check_pencil_pairings(25).rhs, "25; 23; 0");
  EXPECT_TRUE(check_pencil_pairings(25).passed);
  EXPECT_THROW(check_pencil_pairings(4), std::invalid_argument);
}

TEST(CheckKernelDecomposition, Examples) {
  const CheckResult g6 = check_kernel_decomposition(6);
  EXPECT_TRUE(g6.passed);
  EXPECT_EQ(g6.lhs, "4*theta - 5*x");
  EXPECT_EQ(check_kernel_decomposition(5).lhs, "3*theta - 4*x");
  EXPECT_TRUE(check_kernel_decomposition(12).passed);
  EXPECT_THROW(check_kernel_decomposition(4), std::invalid_argument);
}

TEST(CheckPlaneQuintic, AllParts) {
  const CheckResult q = check_plane_quintic();
  EXPECT_TRUE(q.passed) << q.lhs << " vs " << q.rhs;
  EXPECT_EQ(q.lhs, "4*theta - 6*x; 6; 3; 0; 0; 1");
  const std::vector<std::pair<std::string, long long>> params{{"d", 4}, {"g", 6}, {"h1", 3}};
  EXPECT_EQ(q.params, params);
}

TEST(CheckMultAndChern, Examples) {
  const CheckResult a = check_mult_and_chern(6, 4, 2, 15);
  EXPECT_TRUE(a.passed);
  EXPECT_EQ(a.lhs, "2*theta - 3*x; -1*theta - 6*x; 8; 2*theta - 3*x");
  const CheckResult b = check_mult_and_chern(10, 7, 3, 40);
  EXPECT_TRUE(b.passed);
  EXPECT_NE(b.lhs.find("; 21; "), std::string::npos);
}

TEST(CheckMultAndChern, ErrorsBecomeFailures) {
  const CheckResult bad = check_mult_and_chern(6, 4, 1, 15);
  EXPECT_FALSE(bad.passed);
  EXPECT_EQ(bad.lhs.rfind("error: ", 0), 0u);
}

TEST(RunAll, Counts) {
  const Report small = run_all(5, 5);
  // pencil + kernel + dm(m=1) + mult(d=2,3,4) + quintic
  EXPECT_EQ(small.total, 7);
  EXPECT_EQ(small.failed, 0);

  const Report full = run_all(5, 40);
  int expected = 1;
  for (int g = 5; g <= 40; ++g) expected += 2 + (g - 2) / 2 + (g - 2);
  EXPECT_EQ(full.total, expected);
  EXPECT_EQ(full.passed, full.total);
  EXPECT_EQ(full.failed, 0);
  EXPECT_THROW(run_all(4, 5), std::invalid_argument);
  EXPECT_THROW(run_all(7, 6), std::invalid_argument);
}

TEST(RunAll, SortedAndDeterministic) {
  const Report a = run_all(5, 9);
  for (std::size_t i = 1; i < a.checks.size(); ++i) EXPECT_FALSE(check_less(a.checks[i], a.checks[i - 1]));
  const Report b = run_all(5, 9);
  EXPECT_EQ(report_to_json(a).dump(2), report_to_json(b).dump(2));
  EXPECT_EQ(report_to_csv(a), report_to_csv(b));
}

TEST(Report, JsonShape) {
  const auto j = report_to_json(run_all(5, 6));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"version", "range", "checks", "summary"}));
  EXPECT_EQ(j["range"]["gMin"], 5);
  EXPECT_EQ(j["summary"]["total"], j["checks"].size());
  const auto& c = j["checks"][0];
  keys.clear();
  for (const auto& [k, v] : c.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"id", "params", "lhs", "rhs", "passed", "micros"}));
}

TEST(Report, CsvRows) {
  const Report rep = run_all(5, 5);
  const std::string csv = report_to_csv(rep);
  EXPECT_EQ(csv.rfind("id,params,lhs,rhs,passed,micros\n", 0), 0u);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), rep.total + 1);
  EXPECT_NE(csv.find("plane-quintic,d=4 g=6 h1=3,"), std::string::npos);
}

}  // namespace
}  // namespace symcd
