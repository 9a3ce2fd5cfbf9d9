// planner.hpp - selects and orders mitigations for an intolerable verdict
// and proves their effect by re-evaluating a hypothetical post-mitigation
// snapshot. Escalation: compensation rules first (reconfiguration keeps
// the task alive), then stopping unrecoverable tasks and halting devices
// that only serve them, then isolating compromised devices, and finally
// isolating high-risk lateral entry points that threaten an endangered
// principle.
#pragma once

#include <span>
#include <string>
#include <vector>

#include "embsec/criticality.hpp"
#include "embsec/model.hpp"
#include "embsec/simulation.hpp"
#include "embsec/tolerance.hpp"

namespace embsec {

enum class MitigationKind { Reconfigure, StopTask, HaltDevices, Isolate };

// Control-framework function the mitigation maps onto.
enum class NistTag { Identify, Protect, Detect, Respond };
// Adversary-tactic category the mitigation counters.
enum class MitreTag { Impact, LateralMovement };

struct Mitigation {
  MitigationKind kind = MitigationKind::Isolate;
  std::string rule_id;            // Reconfigure: compensation rule applied
  TaskId task;                    // StopTask: task being stopped
  std::vector<DeviceId> devices;  // HaltDevices: sorted device set
  DeviceId device;                // Isolate: device being cut off
  // Semicolon-joined machine-readable codes, e.g.
  // "COMPROMISED:manipulated;SANITISATION_REQUIRED" or
  // "RULE_RESTORES:Move" or "LATERAL_ENTRY_POINT:Robotic Arm->Camera".
  // Verdict items worsened purely by containment append
  // "CONTAINMENT_COST:task:<id>" / "CONTAINMENT_COST:principle:<id>".
  std::string rationale;
  NistTag nist_tag = NistTag::Respond;
  MitreTag mitre_tag = MitreTag::Impact;

  bool operator==(const Mitigation&) const = default;
};

struct MitigationPlan {
  std::vector<Mitigation> mitigations;  // escalation order
  SystemVerdict pre_verdict;
  SystemVerdict post_verdict;  // re-evaluated on the hypothetical snapshot

  bool operator==(const MitigationPlan&) const = default;
};

// Deterministic hypothetical verdict after carrying out the mitigations:
// Isolate and HaltDevices targets become Isolated, the snapshot is
// re-evaluated, and each Reconfigure then marks its rule's restored tasks
// Operational and principles Upheld (causes cleared, hazard off).
// StopTask leaves device state untouched. Pure; throws
// std::invalid_argument for ids that do not resolve.
SystemVerdict what_if(const EmbodimentModel& model, const Snapshot& snapshot,
                      std::span<const Mitigation> mitigations);

// Builds the escalation plan for the verdict computed from `snapshot`.
// A tolerable verdict yields an empty plan. Throws std::invalid_argument
// when the verdict does not match the snapshot's time or the model's
// task/principle lists. entry_point_risk is the lateral-path risk at or
// above which entry devices of threatened paths are isolated.
MitigationPlan plan(const EmbodimentModel& model, const Snapshot& snapshot,
                    const SystemVerdict& verdict, Weights w,
                    double entry_point_risk = 1.5);

}  // namespace embsec
