#include "embsec/tolerance.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace embsec {

bool effective_availability(const Health& health, double required_capacity) {
  switch (health.kind) {
    case HealthKind::Operational:
      return true;
    case HealthKind::Degraded:
      return health.capacity >= required_capacity;
    case HealthKind::Disrupted:
    case HealthKind::Manipulated:
    case HealthKind::Isolated:
      return false;
  }
  return false;
}

namespace {

// Reason an unavailable device is unavailable, from its health alone.
// Only called for devices that failed their availability check, so a
// Degraded health here is always below the asked-for capacity.
CauseReason reason_for(const Health& health) {
  switch (health.kind) {
    case HealthKind::Disrupted:
      return CauseReason::Disrupted;
    case HealthKind::Degraded:
      return CauseReason::BelowCapacity;
    case HealthKind::Manipulated:
      return CauseReason::Manipulated;
    case HealthKind::Isolated:
      return CauseReason::Isolated;
    case HealthKind::Operational:
      break;
  }
  return CauseReason::Disrupted;  // unreachable for available states
}

struct TargetOutcome {
  // 0 = fully served, 1 = degraded/at-risk, 2 = blocked/violated.
  int severity = 0;
  std::vector<Cause> causes;
  bool hazard = false;
};

// Shared two-tier evaluation for tasks and principles. `map` is the
// task_map or principle_map; `target` a task or principle id.
TargetOutcome evaluate_target(const EmbodimentModel& model, const Snapshot& snapshot,
                              const CriticalityMap& map, const std::string& target) {
  // Involved devices and the capacity each one owes this target.
  std::map<DeviceId, InvolvementLevel> level;
  std::map<DeviceId, double> needed;
  for (const auto& entry : map.entries) {
    if (entry.target != target || entry.level == InvolvementLevel::NotInvolved) continue;
    level[entry.device] = entry.level;
    needed[entry.device] = required_capacity(entry);
  }

  TargetOutcome out;
  std::set<Cause> causes;
  bool any_individual_down = false;
  bool important_group_down = false;
  bool critical_group_down = false;

  // Individual availability of every involved device, regardless of groups.
  for (const auto& [device, lv] : level) {
    (void)lv;
    const Health& h = snapshot.health(device);
    if (effective_availability(h, needed.at(device))) continue;
    any_individual_down = true;
    causes.insert({device, reason_for(h)});
    if (h.kind == HealthKind::Manipulated) out.hazard = true;
  }

  // Declared redundancy groups touched by the involved set. Each group is
  // counted once; its tier is the highest involvement among its involved
  // members, and uninvolved members stand in at the group's strictest
  // capacity threshold. Involved devices outside any group act as
  // singleton groups, whose failure the individual check above already
  // captures at the right tier.
  std::set<std::string> seen_groups;
  for (const auto& [device, lv] : level) {
    const RedundancyGroup* group = model.group_of(device);
    if (group == nullptr) {
      if (!effective_availability(snapshot.health(device), needed.at(device))) {
        (lv == InvolvementLevel::Critical ? critical_group_down : important_group_down) = true;
      }
      continue;
    }
    if (!seen_groups.insert(group->id).second) continue;

    InvolvementLevel group_level = InvolvementLevel::NotInvolved;
    double standin_capacity = 0.0;
    for (const auto& member : group->members) {
      auto it = level.find(member);
      if (it == level.end()) continue;
      group_level = std::max(group_level, it->second);
      standin_capacity = std::max(standin_capacity, needed.at(member));
    }

    int available = 0;
    std::vector<DeviceId> down_members;
    for (const auto& member : group->members) {
      auto it = needed.find(member);
      double req = it != needed.end() ? it->second : standin_capacity;
      if (effective_availability(snapshot.health(member), req)) {
        ++available;
      } else {
        down_members.push_back(member);
      }
    }
    if (available >= group->min_operational) continue;

    (group_level == InvolvementLevel::Critical ? critical_group_down
                                               : important_group_down) = true;
    for (const auto& member : down_members) {
      causes.insert({member, CauseReason::GroupUnsatisfied});
      if (snapshot.health(member).kind == HealthKind::Manipulated) out.hazard = true;
    }
  }

  if (critical_group_down) {
    out.severity = 2;
  } else if (important_group_down || any_individual_down) {
    out.severity = 1;
  }
  out.causes.assign(causes.begin(), causes.end());
  return out;
}

}  // namespace

TaskVerdict evaluate_task(const EmbodimentModel& model, const Snapshot& snapshot,
                          const TaskId& task) {
  if (model.find_task(task) == nullptr)
    throw std::invalid_argument("unknown task id: " + task);
  TargetOutcome out = evaluate_target(model, snapshot, model.task_map, task);
  TaskVerdict verdict;
  verdict.task = task;
  verdict.status = out.severity == 2   ? TaskStatus::Blocked
                   : out.severity == 1 ? TaskStatus::Degraded
                                       : TaskStatus::Operational;
  verdict.causes = std::move(out.causes);
  return verdict;
}

PrincipleVerdict evaluate_principle(const EmbodimentModel& model,
                                    const Snapshot& snapshot,
                                    const PrincipleId& principle) {
  if (model.find_principle(principle) == nullptr)
    throw std::invalid_argument("unknown principle id: " + principle);
  TargetOutcome out = evaluate_target(model, snapshot, model.principle_map, principle);
  PrincipleVerdict verdict;
  verdict.principle = principle;
  verdict.status = out.severity == 2   ? PrincipleStatus::Violated
                   : out.severity == 1 ? PrincipleStatus::AtRisk
                                       : PrincipleStatus::Upheld;
  verdict.causes = std::move(out.causes);
  verdict.active_hazard = out.hazard;
  return verdict;
}

SystemVerdict evaluate_system(const EmbodimentModel& model, const Snapshot& snapshot) {
  SystemVerdict verdict;
  verdict.time = snapshot.time;
  verdict.tolerable = true;
  for (const auto& task : model.tasks) {
    verdict.task_verdicts.push_back(evaluate_task(model, snapshot, task.id));
    if (verdict.task_verdicts.back().status == TaskStatus::Blocked)
      verdict.tolerable = false;
  }
  for (const auto& principle : model.principles) {
    verdict.principle_verdicts.push_back(evaluate_principle(model, snapshot, principle.id));
    if (verdict.principle_verdicts.back().status == PrincipleStatus::Violated)
      verdict.tolerable = false;
  }
  return verdict;
}

}  // namespace embsec
