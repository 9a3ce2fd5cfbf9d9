// Scenario parsing, validation diagnostics, canonical serialization, and
// the checked-in example files.
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

#include "embsec/scenario_io.hpp"

namespace {

bool has_violation(const embsec::ParseResult& result, const std::string& code) {
  for (const auto& violation : result.violations)
    if (violation.code == code) return true;
  return false;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open ", path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Smallest accepted scenario: one device, everything else defaulted.
const char* kMinimal = R"({
  "devices": [
    {"id": "a", "kind": "x", "vulnerability": 0.5, "embodiment_criticality": 2}
  ]
})";

}  // namespace

TEST_CASE("built-in scenarios exist and validate") {
  const auto ids = embsec::builtin_ids();
  REQUIRE(ids == std::vector<std::string>{"scenario-a", "scenario-b"});
  for (const auto& id : ids) {
    const auto scenario = embsec::builtin_scenario(id);
    REQUIRE(scenario.has_value());
    CHECK(embsec::validate_model(scenario->model).ok());
    CHECK(scenario->horizon >= 1);
  }
  CHECK_FALSE(embsec::builtin_scenario("nope").has_value());
}

TEST_CASE("serialize/parse round-trips preserve the scenario exactly") {
  std::vector<embsec::Scenario> scenarios;
  for (const auto& id : embsec::builtin_ids())
    scenarios.push_back(*embsec::builtin_scenario(id));
  scenarios.push_back(embsec::wheel_compensation_demo(true));
  scenarios.push_back(embsec::wheel_compensation_demo(false));

  for (const auto& scenario : scenarios) {
    const std::string text = embsec::serialize_scenario(scenario);
    const auto parsed = embsec::parse_scenario(text);
    REQUIRE(parsed.ok());
    CHECK(*parsed.scenario == scenario);
    // Serialization is canonical: a second pass is byte-identical.
    CHECK(embsec::serialize_scenario(*parsed.scenario) == text);
  }
}

TEST_CASE("a minimal scenario gets documented defaults") {
  const auto parsed = embsec::parse_scenario(kMinimal);
  REQUIRE(parsed.ok());
  const auto& scenario = *parsed.scenario;
  CHECK(scenario.horizon == 1);
  CHECK(scenario.seed == 0);
  CHECK(scenario.weights.alpha == doctest::Approx(1.0));
  CHECK(scenario.weights.beta == doctest::Approx(1.0));
  CHECK(scenario.thresholds.entry_point_risk == doctest::Approx(1.5));
  CHECK(scenario.attacks.empty());
  CHECK(scenario.model.tasks.empty());
}

TEST_CASE("the horizon defaults to cover the latest attack") {
  const std::string text = R"({
    "devices": [
      {"id": "a", "kind": "x", "vulnerability": 0.5, "embodiment_criticality": 2}
    ],
    "attacks": [
      {"time": 4, "target": "a", "kind": "disrupt"},
      {"time": 0, "target": "a", "kind": "restore"}
    ]
  })";
  const auto parsed = embsec::parse_scenario(text);
  REQUIRE(parsed.ok());
  CHECK(parsed.scenario->horizon == 5);
  // Attacks come back sorted by time.
  REQUIRE(parsed.scenario->attacks.size() == 2);
  CHECK(parsed.scenario->attacks[0].time == 0);
  CHECK(parsed.scenario->attacks[1].time == 4);
}

TEST_CASE("malformed JSON is a syntax violation, not an exception") {
  const auto parsed = embsec::parse_scenario("{ not json");
  CHECK_FALSE(parsed.ok());
  CHECK(has_violation(parsed, "SYNTAX"));
}

TEST_CASE("missing and unknown fields are reported by name") {
  auto parsed = embsec::parse_scenario("{}");
  CHECK(has_violation(parsed, "SCHEMA_MISSING_FIELD"));

  parsed = embsec::parse_scenario(R"({"devices": [], "bogus": 1})");
  CHECK(has_violation(parsed, "SCHEMA_UNKNOWN_FIELD"));
  bool named = false;
  for (const auto& violation : parsed.violations)
    named |= violation.where.find("bogus") != std::string::npos;
  CHECK(named);

  // Unknown keys are rejected in nested objects too.
  parsed = embsec::parse_scenario(R"({
    "devices": [
      {"id": "a", "kind": "x", "vulnerability": 0.5,
       "embodiment_criticality": 2, "color": "red"}
    ]
  })");
  CHECK(has_violation(parsed, "SCHEMA_UNKNOWN_FIELD"));
}

TEST_CASE("wrongly typed fields are schema violations") {
  auto parsed = embsec::parse_scenario(R"({"devices": 5})");
  CHECK(has_violation(parsed, "SCHEMA_TYPE"));

  parsed = embsec::parse_scenario(R"({
    "devices": [
      {"id": "a", "kind": "x", "vulnerability": "high", "embodiment_criticality": 2}
    ]
  })");
  CHECK(has_violation(parsed, "SCHEMA_TYPE"));
}

TEST_CASE("model rule violations surface through parsing") {
  const auto parsed = embsec::parse_scenario(R"({
    "devices": [
      {"id": "a", "kind": "x", "vulnerability": 2.5, "embodiment_criticality": 2}
    ]
  })");
  CHECK_FALSE(parsed.ok());
  CHECK(has_violation(parsed, "V_RANGE"));
}

TEST_CASE("attack entries are validated against the model and horizon") {
  const std::string base = R"({
    "devices": [
      {"id": "a", "kind": "x", "vulnerability": 0.5, "embodiment_criticality": 2}
    ],
    "horizon": 2,
    "attacks": [%ATTACK%]
  })";
  auto with_attack = [&base](const std::string& attack) {
    std::string text = base;
    text.replace(text.find("%ATTACK%"), 8, attack);
    return embsec::parse_scenario(text);
  };

  CHECK(has_violation(with_attack(R"({"time": 0, "target": "nope", "kind": "disrupt"})"),
                      "UNKNOWN_DEVICE"));
  CHECK(has_violation(with_attack(R"({"time": 2, "target": "a", "kind": "disrupt"})"),
                      "SCENARIO_TIME_RANGE"));
  CHECK(has_violation(with_attack(R"({"time": -1, "target": "a", "kind": "disrupt"})"),
                      "SCENARIO_TIME_RANGE"));
  CHECK(has_violation(with_attack(R"({"time": 0, "target": "a", "kind": "degrade"})"),
                      "RATE_FACTOR_REQUIRED"));
  CHECK(has_violation(
      with_attack(R"({"time": 0, "target": "a", "kind": "degrade", "rate_factor": 1.0})"),
      "RATE_FACTOR_RANGE"));
  CHECK(has_violation(
      with_attack(R"({"time": 0, "target": "a", "kind": "disrupt", "rate_factor": 0.5})"),
      "RATE_FACTOR_FORBIDDEN"));
  CHECK(has_violation(with_attack(R"({"time": 0, "target": "a", "kind": "meddle"})"),
                      "SCHEMA_TYPE"));
}

TEST_CASE("scenario-level knobs are range checked") {
  auto with_field = [](const std::string& field) {
    return embsec::parse_scenario(
        R"({"devices": [{"id": "a", "kind": "x", "vulnerability": 0.5,
            "embodiment_criticality": 2}], )" +
        field + "}");
  };
  CHECK(has_violation(with_field(R"("horizon": 0)"), "HORIZON_RANGE"));
  CHECK(has_violation(with_field(R"("alpha": -0.5)"), "WEIGHT_RANGE"));
  CHECK(has_violation(with_field(R"("beta": -0.5)"), "WEIGHT_RANGE"));
  CHECK(has_violation(with_field(R"("thresholds": {"entry_point_risk": -1.0})"),
                      "THRESHOLD_RANGE"));
}

TEST_CASE("checked-in scenario files match the in-library definitions") {
  const std::string dir = EMBSEC_SCENARIO_DIR;
  CHECK(read_file(dir + "/scenario-a.json") ==
        embsec::serialize_scenario(*embsec::builtin_scenario("scenario-a")));
  CHECK(read_file(dir + "/scenario-b.json") ==
        embsec::serialize_scenario(*embsec::builtin_scenario("scenario-b")));
  CHECK(read_file(dir + "/wheel-compensation.json") ==
        embsec::serialize_scenario(embsec::wheel_compensation_demo(true)));
  CHECK(read_file(dir + "/wheel-compensation-no-rule.json") ==
        embsec::serialize_scenario(embsec::wheel_compensation_demo(false)));
}
