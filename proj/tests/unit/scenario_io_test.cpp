#include "enclose/scenario_io.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "enclose/errors.hpp"
#include "test_support.hpp"

namespace enclose {
namespace {

std::string field_of(std::string_view text) {
  try {
    parse_scenario_text(text);
  } catch (const ValidationError& e) {
    return e.field();
  }
  return "";
}

TEST(ParseScenario, MinimalUsesDefaults) {
  const Scenario s = parse_scenario_text(R"({"agents": [{"x": 300, "y": 0, "chi": 2}]})");
  ASSERT_EQ(s.agents.size(), 1u);
  EXPECT_EQ(s.agents[0].id, 0u);
  EXPECT_EQ(s.speed.v, 40.0);
  EXPECT_EQ(s.sensor.sensing_radius, 50.0);
  EXPECT_EQ(s.dt, 1e-3);
  EXPECT_EQ(s.t_end, 60.0);
  EXPECT_EQ(s.agents[0].guidance, GuidanceParams{});
  EXPECT_EQ(s.target, TargetState{});
}

TEST(ParseScenario, PerAgentGuidanceOverride) {
  const Scenario s = parse_scenario_text(
      R"({"defaults": {"K": 12}, "agents": [{"x": 300, "y": 0, "chi": 2},
          {"id": 9, "x": -300, "y": 0, "chi": 2, "K": 20, "lambda": 0.5}]})");
  EXPECT_EQ(s.agents[0].guidance.reaching_gain, 12);
  EXPECT_EQ(s.agents[1].id, 9u);
  EXPECT_EQ(s.agents[1].guidance.reaching_gain, 20);
  EXPECT_EQ(s.agents[1].guidance.potential.attraction, 0.5);
}

TEST(ParseScenario, ValidationFieldPaths) {
  EXPECT_EQ(field_of(R"({"agents": [{"id": 1, "x": 300, "y": 0, "chi": 2},
                                     {"id": 1, "x": -300, "y": 0, "chi": 2}]})"),
            "agents[1].id");
  EXPECT_EQ(field_of(R"({"defaults": {"v": -1}, "agents": [{"x": 300, "y": 0, "chi": 2}]})"),
            "defaults.v");
  EXPECT_EQ(field_of(R"({"agents": [{"x": 300, "y": 0, "chi": 2, "speed": 3}]})"),
            "agents[0].speed");
  EXPECT_EQ(field_of(R"({"agents": [{"x": 300, "chi": 2}]})"), "agents[0].y");
  EXPECT_EQ(field_of(R"({"bogus": 1, "agents": [{"x": 300, "y": 0, "chi": 2}]})"), "bogus");
  EXPECT_EQ(field_of(R"({"agents": [{"x": 300, "y": 0, "chi": 2}], "generator": {"n": 2}})"),
            "generator");
  EXPECT_EQ(field_of(R"({"agents": []})"), "agents");
  EXPECT_EQ(field_of(R"({"agents": [{"x": 300, "y": 0, "chi": "north"}]})"), "agents[0].chi");
  EXPECT_EQ(field_of(R"({"agents": [{"x": 300, "y": 0, "chi": 2, "v": 30}]})"), "agents[0].v");
}

TEST(ParseScenario, MalformedJsonReportsLineAndColumn) {
  try {
    parse_scenario_text("{\n  \"agents\": [\n    {\"x\": 1,, \"y\": 0}\n  ]\n}\n", "doc.json");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    const std::string what = e.what();
    EXPECT_EQ(what.rfind("doc.json:3:", 0), 0u) << what;
    EXPECT_NE(what.find("malformed JSON"), std::string::npos);
  }
}

TEST(ParseScenario, MissingFileIsIoError) {
  EXPECT_THROW(parse_scenario("/nonexistent/scenario.json"), IoError);
}

TEST(ParseScenario, ShippedScenariosAreValid) {
  for (const char* name : {"single_agent.json", "reference_six.json", "mode2_offset.json",
                           "minimal.json"}) {
    const Scenario s = parse_scenario(std::string(ENCLOSE_SCENARIO_DIR) + "/" + name);
    EXPECT_NO_THROW(validate(s)) << name;
  }
}

TEST(Generator, DeterministicAndSeparated) {
  const char* doc = R"({"generator": {"n": 10, "radius_range": [150, 400], "seed": 3}})";
  const Scenario a = parse_scenario_text(doc);
  const Scenario b = parse_scenario_text(doc);
  EXPECT_EQ(a, b);
  ASSERT_EQ(a.agents.size(), 10u);
  for (std::size_t i = 0; i < a.agents.size(); ++i) {
    EXPECT_EQ(a.agents[i].id, i);
    const RelativeState rel = relative_state(a.agents[i].initial, a.target);
    EXPECT_GE(rel.range, 150.0 - 1e-9);
    EXPECT_LE(rel.range, 400.0 + 1e-9);
    EXPECT_GT(rel.bearing, 0.0);
    EXPECT_LT(rel.bearing, kPi);
    for (std::size_t j = 0; j < i; ++j) {
      EXPECT_GT(std::hypot(a.agents[i].initial.x - a.agents[j].initial.x,
                           a.agents[i].initial.y - a.agents[j].initial.y),
                50.0);
    }
  }
  const Scenario c =
      parse_scenario_text(R"({"generator": {"n": 10, "radius_range": [150, 400], "seed": 4}})");
  EXPECT_NE(a.agents, c.agents);
}

TEST(Serialize, RoundTrip) {
  for (const char* name : {"single_agent.json", "reference_six.json", "mode2_offset.json",
                           "minimal.json"}) {
    const Scenario s = parse_scenario(std::string(ENCLOSE_SCENARIO_DIR) + "/" + name);
    const std::string text = serialize_scenario(s);
    EXPECT_EQ(parse_scenario_text(text), s) << name;
    EXPECT_EQ(serialize_scenario(parse_scenario_text(text)), text) << name;
  }
}

TEST(Serialize, RoundTripMixedGuidance) {
  Scenario s = test::reference_scenario(12.5);
  s.seed = 42;
  s.target = {10, -20};
  GuidanceParams g;
  g.reaching_gain = 0.1 + 0.2;  // not exactly representable in short decimal
  g.boundary_layer = 0.05;
  s.agents.push_back(test::agent(4, test::place(250, 1.0, 1.0, s.target)));
  s.agents.push_back(test::agent(2, test::place(350, -2.0, 2.0, s.target), g));
  EXPECT_EQ(parse_scenario_text(serialize_scenario(s)), s);
}

TEST(ApplyParameter, SetsFields) {
  Scenario s = parse_scenario(std::string(ENCLOSE_SCENARIO_DIR) + "/reference_six.json");
  apply_parameter(s, "eta", 50000);
  apply_parameter(s, "dt", 0.002);
  apply_parameter(s, "r_s", 60);
  for (const AgentConfig& a : s.agents) EXPECT_EQ(a.guidance.potential.repulsion, 50000);
  EXPECT_EQ(s.dt, 0.002);
  EXPECT_EQ(s.sensor.sensing_radius, 60);
  EXPECT_THROW(apply_parameter(s, "warp", 1), ValidationError);
  EXPECT_EQ(sweepable_parameters().size(), 12u);
  for (const std::string& name : sweepable_parameters()) {
    Scenario copy = s;
    EXPECT_NO_THROW(apply_parameter(copy, name, 1.5)) << name;
  }
}

}  // namespace
}  // namespace enclose
