// scenario_io.hpp - scenario file parsing/serialization and the built-in
// demonstration scenarios. A scenario file is a UTF-8 JSON document whose
// top-level keys are: devices (required), edges, tasks, principles,
// task_map, principle_map, redundancy_groups, thresholds,
// compensation_rules, attacks, alpha, beta, horizon, seed. Unknown keys
// are rejected at every level.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "embsec/model.hpp"
#include "embsec/simulation.hpp"

namespace embsec {

struct ParseResult {
  std::optional<Scenario> scenario;  // set iff violations is empty
  std::vector<Violation> violations;

  bool ok() const { return scenario.has_value(); }
};

// Parses and fully validates a scenario document. Violations carry
// machine-readable codes - SYNTAX, SCHEMA_MISSING_FIELD,
// SCHEMA_UNKNOWN_FIELD, SCHEMA_TYPE, every model validation code, and the
// scenario range codes (HORIZON_RANGE, WEIGHT_RANGE, THRESHOLD_RANGE,
// SCENARIO_TIME_RANGE, RATE_FACTOR_*) - plus the offending field's path.
// When `horizon` is absent it defaults to one step past the last attack
// (or 1 with no attacks); `seed` defaults to 0. Attacks are sorted by
// (time, target) on ingestion.
ParseResult parse_scenario(const std::string& text);

// Canonical rendering: sorted object keys, two-space indent, nine-decimal
// floats, trailing newline. serialize -> parse -> serialize is
// byte-identical.
std::string serialize_scenario(const Scenario& scenario);

// Built-in demonstration scenarios, usable via the CLI's --builtin flag.
// "scenario-a": a four-wheeled platform with a camera and a robotic arm;
// the timeline disrupts the arm. "scenario-b": a two-legged patrol robot
// with a gyroscope and two redundant LiDARs; the timeline disrupts one
// LiDAR, then slows the gyroscope below its configured floor.
std::vector<std::string> builtin_ids();
std::optional<Scenario> builtin_scenario(const std::string& id);

// Variant of scenario-a for demonstrating reconfiguration planning: all
// four wheels become jointly critical for Move, non-camera principle
// entries are dropped, and the timeline manipulates Wheel 2 into
// overspeed. With the rule, the opposite wheel compensates and Move
// survives; without it, the planner must stop Move and halt the healthy
// wheels. Not a --builtin id; shipped as an example file.
Scenario wheel_compensation_demo(bool with_rule);

}  // namespace embsec
