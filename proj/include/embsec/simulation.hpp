// simulation.hpp - discrete-step attack timeline applied to device states.
// Time is an abstract integer step; only ordering matters. The transition
// function is RNG-free, so runs are deterministic; the seed is carried for
// scenario generation tooling only.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "embsec/criticality.hpp"
#include "embsec/model.hpp"

namespace embsec {

struct Health {
  HealthKind kind = HealthKind::Operational;
  // Delivered service rate / nominal rate; meaningful only while Degraded,
  // always < 1 there (capacity 1 is Operational).
  double capacity = 1.0;

  static Health operational() { return {HealthKind::Operational, 1.0}; }
  static Health disrupted() { return {HealthKind::Disrupted, 0.0}; }
  static Health degraded(double capacity) { return {HealthKind::Degraded, capacity}; }
  static Health manipulated() { return {HealthKind::Manipulated, 0.0}; }
  static Health isolated() { return {HealthKind::Isolated, 0.0}; }

  bool operator==(const Health&) const = default;
};

enum class AttackKind { Disrupt, Degrade, Manipulate, Restore };

struct AttackAction {
  int time = 0;  // step index, >= 0
  DeviceId target;
  AttackKind kind = AttackKind::Disrupt;
  std::optional<double> rate_factor;  // in [0,1); present iff kind == Degrade

  bool operator==(const AttackAction&) const = default;
};

// Per-step knobs the planner reads from scenario data.
struct Thresholds {
  double entry_point_risk = 1.5;  // lateral-path risk that triggers isolation

  bool operator==(const Thresholds&) const = default;
};

struct Scenario {
  EmbodimentModel model;
  std::vector<AttackAction> attacks;  // kept sorted by (time, target)
  int horizon = 1;                    // number of steps, >= 1
  std::uint64_t seed = 0;
  Weights weights;
  Thresholds thresholds;

  bool operator==(const Scenario&) const = default;
};

struct Snapshot {
  int time = 0;
  std::map<DeviceId, Health> states;  // covers every device in the model

  // Throws std::invalid_argument for a device not covered.
  const Health& health(const DeviceId& id) const;

  bool operator==(const Snapshot&) const = default;
};

// All devices Operational at step 0.
Snapshot initial_snapshot(const EmbodimentModel& model);

// Single-action transition; pure. Disrupt/Degrade/Manipulate overwrite any
// prior health. Restore returns the device to Operational unless it is
// Isolated (containment is not undone by an attacker-visible restore).
// Throws std::invalid_argument for an unknown target.
Snapshot apply_action(const Snapshot& snapshot, const AttackAction& action);

// One snapshot per step in [0, horizon); pending actions apply in list
// order at their step, and states persist across steps otherwise.
std::vector<Snapshot> run(const Scenario& scenario);

// Sorts attacks by (time, target id), keeping the given order for equal keys.
void sort_attacks(std::vector<AttackAction>& attacks);

}  // namespace embsec
