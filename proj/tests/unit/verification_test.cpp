#include "enclose/verification.hpp"

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "enclose/errors.hpp"
#include "enclose/scenario_io.hpp"
#include "test_support.hpp"

namespace enclose {
namespace {

TEST(Oracles, RegionSigns) {
  const OracleReport r = oracle_region_signs(2000, 1);
  EXPECT_EQ(r.name, "region_signs");
  EXPECT_GE(r.cases_run, 2000u);
  EXPECT_TRUE(r.pass) << report_to_json(r);
}

TEST(Oracles, Algorithm1) {
  const OracleReport r = oracle_algorithm1(300, 20, 2);
  EXPECT_GE(r.cases_run, 300u);
  EXPECT_TRUE(r.pass) << report_to_json(r);
}

TEST(Oracles, PotentialGradients) {
  const OracleReport r = oracle_potential_gradients(2000, 3);
  EXPECT_TRUE(r.pass) << report_to_json(r);
}

TEST(Oracles, ReportJsonShape) {
  OracleReport r;
  r.name = "x";
  r.cases_run = 3;
  r.violations.push_back({R"({"a":1})", "1", "2"});
  r.pass = false;
  const auto doc = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(doc["name"], "x");
  EXPECT_EQ(doc["cases_run"], 3);
  EXPECT_EQ(doc["pass"], false);
  ASSERT_EQ(doc["violations"].size(), 1u);
  EXPECT_EQ(doc["violations"][0]["expected"], "1");
}

TEST(Oracles, NamesAreRunnable) {
  const auto& names = oracle_names();
  EXPECT_EQ(names.size(), 4u);
  EXPECT_THROW(run_named_oracle("nope", 1), ValidationError);
}

// A lone agent has no neighbours, so the whole run is one reaching phase
// followed by mode I convergence onto the orbit.
TEST(AssessRun, SingleAgentSatisfiesAllClauses) {
  Theorem2Options opts;
  opts.t_end = 40;
  opts.settle_time = 30;
  Scenario s = test::reference_scenario(40);
  s.agents.push_back(test::agent(0, test::place(300, 0, kPi / 4)));
  const RunAssessment a = assess_run(s, opts);
  EXPECT_TRUE(a.safe);
  EXPECT_TRUE(a.converged);
  EXPECT_TRUE(a.reaching);
  EXPECT_TRUE(a.steady);
  ASSERT_EQ(a.phases.size(), 1u);
  EXPECT_NEAR(a.phases[0].bound, 15.17157, 1e-4);
  EXPECT_LE(a.phases[0].reached_after, a.phases[0].bound);
  EXPECT_EQ(a.repulsion_on_events, 0u);
}

TEST(AssessRun, TheoremScenarioGeneratorIsDeterministic) {
  Theorem2Options opts;
  const Scenario a = make_theorem2_scenario(6, 11, opts);
  const Scenario b = make_theorem2_scenario(6, 11, opts);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.agents.size(), 6u);
  EXPECT_EQ(a.t_end, 70.0);
  EXPECT_NO_THROW(validate(a));
}

TEST(AssessRun, OneAgentTheoremOracle) {
  Theorem2Options opts;
  opts.agent_counts = {1};
  opts.threads = 2;
  const OracleReport r = oracle_theorem2(4, 5, opts);
  EXPECT_EQ(r.cases_run, 4u);
  EXPECT_TRUE(r.pass) << report_to_json(r);
}

}  // namespace
}  // namespace enclose
