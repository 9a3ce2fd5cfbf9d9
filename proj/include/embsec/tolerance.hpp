// tolerance.hpp - decides, from a snapshot and the criticality maps, which
// tasks remain feasible and which preservation principles still hold.
// Group rule: a redundancy group is satisfied iff at least min_operational
// of its members are available; an unsatisfied group escalates to
// Blocked/Violated when it carries Critical involvement and to
// Degraded/AtRisk when it carries Important involvement. Any individually
// unavailable involved device degrades the verdict even when its group
// still holds.
#pragma once

#include <compare>
#include <string>
#include <vector>

#include "embsec/model.hpp"
#include "embsec/simulation.hpp"

namespace embsec {

enum class TaskStatus { Operational, Degraded, Blocked };
enum class PrincipleStatus { Upheld, AtRisk, Violated };

// Machine-readable reason a device drags a verdict down.
enum class CauseReason { Disrupted, BelowCapacity, GroupUnsatisfied, Isolated, Manipulated };

struct Cause {
  DeviceId device;
  CauseReason reason = CauseReason::Disrupted;

  auto operator<=>(const Cause&) const = default;
};

struct TaskVerdict {
  TaskId task;
  TaskStatus status = TaskStatus::Operational;
  std::vector<Cause> causes;  // deduplicated, sorted by (device, reason)

  bool operator==(const TaskVerdict&) const = default;
};

struct PrincipleVerdict {
  PrincipleId principle;
  PrincipleStatus status = PrincipleStatus::Upheld;
  std::vector<Cause> causes;  // deduplicated, sorted by (device, reason)
  // True iff a Manipulated device contributed: wrong data is a live safety
  // hazard, not merely an outage. Drives planner urgency, not the status.
  bool active_hazard = false;

  bool operator==(const PrincipleVerdict&) const = default;
};

struct SystemVerdict {
  int time = 0;
  std::vector<TaskVerdict> task_verdicts;            // model task order
  std::vector<PrincipleVerdict> principle_verdicts;  // model principle order
  bool tolerable = true;  // no task Blocked and no principle Violated

  bool operator==(const SystemVerdict&) const = default;
};

// True iff the device can still serve a role demanding required_capacity:
// Operational always can, Degraded(c) can when c >= required_capacity,
// and Disrupted/Manipulated/Isolated never can.
bool effective_availability(const Health& health, double required_capacity);

// Evaluate one task / one principle against the snapshot. Throw
// std::invalid_argument for an unknown task or principle id.
TaskVerdict evaluate_task(const EmbodimentModel& model, const Snapshot& snapshot,
                          const TaskId& task);
PrincipleVerdict evaluate_principle(const EmbodimentModel& model,
                                    const Snapshot& snapshot,
                                    const PrincipleId& principle);

// Aggregates every task and principle verdict for the snapshot's step.
SystemVerdict evaluate_system(const EmbodimentModel& model, const Snapshot& snapshot);

}  // namespace embsec
