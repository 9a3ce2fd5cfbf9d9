#include "embsec/planner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "embsec/names.hpp"

namespace embsec {
namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

const CompensationRule* find_rule(const EmbodimentModel& model, const std::string& id) {
  for (const auto& rule : model.compensation_rules)
    if (rule.id == id) return &rule;
  return nullptr;
}

// Strictest capacity any map entry demands of the device, across both
// maps; nullopt when the device serves no task or principle.
std::optional<double> max_required(const EmbodimentModel& model, const DeviceId& device) {
  std::optional<double> strictest;
  for (const CriticalityMap* map : {&model.task_map, &model.principle_map}) {
    for (const auto& entry : map->entries) {
      if (entry.device != device || entry.level == InvolvementLevel::NotInvolved) continue;
      double req = required_capacity(entry);
      if (!strictest || req > *strictest) strictest = req;
    }
  }
  return strictest;
}

// A device needing containment: wrong or absent output, or degraded below
// the strictest capacity any of its roles demands.
bool is_compromised(const EmbodimentModel& model, const DeviceId& device,
                    const Health& health) {
  switch (health.kind) {
    case HealthKind::Disrupted:
    case HealthKind::Manipulated:
      return true;
    case HealthKind::Degraded: {
      std::optional<double> req = max_required(model, device);
      return req.has_value() && health.capacity < *req;
    }
    case HealthKind::Operational:
    case HealthKind::Isolated:
      return false;
  }
  return false;
}

// Whether containment of `device` can influence the target's verdict:
// either the device serves the target directly, or it shares a redundancy
// group with a device that does.
bool touches(const EmbodimentModel& model, const CriticalityMap& map,
             const DeviceId& device, const std::string& target) {
  if (involvement(map, device, target) != InvolvementLevel::NotInvolved) return true;
  const RedundancyGroup* group = model.group_of(device);
  if (group == nullptr) return false;
  for (const auto& member : group->members)
    if (involvement(map, member, target) != InvolvementLevel::NotInvolved) return true;
  return false;
}

// Appends CONTAINMENT_COST notes to the Isolate/HaltDevices mitigations
// that can explain each task/principle whose post status is strictly
// worse than its pre status.
void annotate_containment_costs(const EmbodimentModel& model, MitigationPlan& plan) {
  auto annotate = [&](const CriticalityMap& map, const std::string& kind,
                      const std::string& target) {
    for (auto& m : plan.mitigations) {
      bool contains = false;
      if (m.kind == MitigationKind::Isolate) {
        contains = touches(model, map, m.device, target);
      } else if (m.kind == MitigationKind::HaltDevices) {
        for (const auto& d : m.devices)
          if (touches(model, map, d, target)) { contains = true; break; }
      }
      if (contains) m.rationale += ";CONTAINMENT_COST:" + kind + ":" + target;
    }
  };
  for (std::size_t i = 0; i < plan.pre_verdict.task_verdicts.size(); ++i) {
    if (plan.post_verdict.task_verdicts[i].status > plan.pre_verdict.task_verdicts[i].status)
      annotate(model.task_map, "task", plan.pre_verdict.task_verdicts[i].task);
  }
  for (std::size_t i = 0; i < plan.pre_verdict.principle_verdicts.size(); ++i) {
    if (plan.post_verdict.principle_verdicts[i].status >
        plan.pre_verdict.principle_verdicts[i].status)
      annotate(model.principle_map, "principle",
               plan.pre_verdict.principle_verdicts[i].principle);
  }
}

}  // namespace

SystemVerdict what_if(const EmbodimentModel& model, const Snapshot& snapshot,
                      std::span<const Mitigation> mitigations) {
  Snapshot hypothetical = snapshot;
  auto isolate = [&](const DeviceId& id) {
    auto it = hypothetical.states.find(id);
    if (it == hypothetical.states.end())
      throw std::invalid_argument("unknown device id: " + id);
    it->second = Health::isolated();
  };
  for (const auto& m : mitigations) {
    switch (m.kind) {
      case MitigationKind::Isolate:
        isolate(m.device);
        break;
      case MitigationKind::HaltDevices:
        for (const auto& d : m.devices) isolate(d);
        break;
      case MitigationKind::StopTask:
        if (model.find_task(m.task) == nullptr)
          throw std::invalid_argument("unknown task id: " + m.task);
        break;  // stopping does not change device state
      case MitigationKind::Reconfigure:
        if (find_rule(model, m.rule_id) == nullptr)
          throw std::invalid_argument("unknown compensation rule: " + m.rule_id);
        break;  // applied as a verdict substitution below
    }
  }

  SystemVerdict verdict = evaluate_system(model, hypothetical);

  // A reconfiguration substitutes healthy devices into the restored roles,
  // so those roles are served again even though the trigger device's own
  // state is unchanged.
  for (const auto& m : mitigations) {
    if (m.kind != MitigationKind::Reconfigure) continue;
    const CompensationRule* rule = find_rule(model, m.rule_id);
    for (const auto& target : rule->restores) {
      bool found = false;
      for (auto& tv : verdict.task_verdicts) {
        if (tv.task != target) continue;
        tv.status = TaskStatus::Operational;
        tv.causes.clear();
        found = true;
      }
      for (auto& pv : verdict.principle_verdicts) {
        if (pv.principle != target) continue;
        pv.status = PrincipleStatus::Upheld;
        pv.causes.clear();
        pv.active_hazard = false;
        found = true;
      }
      if (!found)
        throw std::invalid_argument("unknown restore target: " + target);
    }
  }

  verdict.tolerable = true;
  for (const auto& tv : verdict.task_verdicts)
    if (tv.status == TaskStatus::Blocked) verdict.tolerable = false;
  for (const auto& pv : verdict.principle_verdicts)
    if (pv.status == PrincipleStatus::Violated) verdict.tolerable = false;
  return verdict;
}

MitigationPlan plan(const EmbodimentModel& model, const Snapshot& snapshot,
                    const SystemVerdict& verdict, Weights w, double entry_point_risk) {
  if (verdict.time != snapshot.time)
    throw std::invalid_argument("verdict was not computed from this snapshot");
  if (verdict.task_verdicts.size() != model.tasks.size() ||
      verdict.principle_verdicts.size() != model.principles.size())
    throw std::invalid_argument("verdict does not cover this model");
  for (std::size_t i = 0; i < model.tasks.size(); ++i)
    if (verdict.task_verdicts[i].task != model.tasks[i].id)
      throw std::invalid_argument("verdict does not cover this model");
  for (std::size_t i = 0; i < model.principles.size(); ++i)
    if (verdict.principle_verdicts[i].principle != model.principles[i].id)
      throw std::invalid_argument("verdict does not cover this model");

  MitigationPlan out;
  out.pre_verdict = verdict;
  if (verdict.tolerable) {
    out.post_verdict = verdict;
    return out;
  }

  std::set<TaskId> blocked;
  for (const auto& tv : verdict.task_verdicts)
    if (tv.status == TaskStatus::Blocked) blocked.insert(tv.task);
  std::set<PrincipleId> violated;
  for (const auto& pv : verdict.principle_verdicts)
    if (pv.status == PrincipleStatus::Violated) violated.insert(pv.principle);

  // (1) Reconfigure via every applicable compensation rule that re-enables
  // something currently lost. Applicable: trigger health matches and all
  // compensating devices are fully Operational.
  std::set<std::string> restored;
  for (const auto& rule : model.compensation_rules) {
    if (snapshot.health(rule.trigger_device).kind != rule.trigger_health) continue;
    bool compensators_ready = true;
    for (const auto& d : rule.compensating_devices) {
      if (snapshot.health(d).kind != HealthKind::Operational) {
        compensators_ready = false;
        break;
      }
    }
    if (!compensators_ready) continue;
    bool re_enables = false;
    for (const auto& target : rule.restores) {
      if (blocked.contains(target) || violated.contains(target)) {
        re_enables = true;
        break;
      }
    }
    if (!re_enables) continue;

    Mitigation m;
    m.kind = MitigationKind::Reconfigure;
    m.rule_id = rule.id;
    m.rationale = "RULE_RESTORES:" + join(rule.restores, ",");
    m.nist_tag = NistTag::Respond;
    m.mitre_tag = MitreTag::Impact;
    out.mitigations.push_back(std::move(m));
    restored.insert(rule.restores.begin(), rule.restores.end());
  }

  // Devices needing containment, in model order.
  std::vector<DeviceId> compromised;
  for (const auto& d : model.devices)
    if (is_compromised(model, d.id, snapshot.health(d.id))) compromised.push_back(d.id);
  std::set<DeviceId> compromised_set(compromised.begin(), compromised.end());

  // (2) Stop the tasks no reconfiguration can recover, then halt devices
  // whose every task involvement lies in a stopped task. Devices serving
  // a still-running task stay up, as do devices that are themselves
  // containment targets (isolation supersedes a mere halt). Principle
  // involvement deliberately does not keep a device running: a halted
  // actuator endangers no principle by standing still, and any cost of
  // the shutdown is surfaced as a containment note below.
  std::set<TaskId> stopped;
  for (const auto& task : model.tasks) {
    if (!blocked.contains(task.id) || restored.contains(task.id)) continue;
    stopped.insert(task.id);
    Mitigation m;
    m.kind = MitigationKind::StopTask;
    m.task = task.id;
    m.rationale = "TASK_BLOCKED_UNRECOVERABLE";
    m.nist_tag = NistTag::Respond;
    m.mitre_tag = MitreTag::Impact;
    out.mitigations.push_back(std::move(m));
  }
  if (!stopped.empty()) {
    std::vector<DeviceId> halt;
    for (const auto& d : model.devices) {
      if (compromised_set.contains(d.id)) continue;
      if (snapshot.health(d.id).kind == HealthKind::Isolated) continue;
      bool in_stopped = false;
      bool in_running = false;
      for (const auto& entry : model.task_map.entries) {
        if (entry.device != d.id || entry.level == InvolvementLevel::NotInvolved) continue;
        (stopped.contains(entry.target) ? in_stopped : in_running) = true;
      }
      if (in_stopped && !in_running) halt.push_back(d.id);
    }
    if (!halt.empty()) {
      std::sort(halt.begin(), halt.end());
      Mitigation m;
      m.kind = MitigationKind::HaltDevices;
      m.devices = std::move(halt);
      m.rationale = "ONLY_INVOLVED_IN_STOPPED_TASKS";
      m.nist_tag = NistTag::Respond;
      m.mitre_tag = MitreTag::Impact;
      out.mitigations.push_back(std::move(m));
    }
  }

  // (3) Isolate every compromised device. A manipulated device also needs
  // sanitisation before any restore; isolation is the containment step.
  std::set<DeviceId> isolate_targets;
  for (const auto& id : compromised) {
    Mitigation m;
    m.kind = MitigationKind::Isolate;
    m.device = id;
    m.rationale = "COMPROMISED:" + to_string(snapshot.health(id).kind);
    if (snapshot.health(id).kind == HealthKind::Manipulated)
      m.rationale += ";SANITISATION_REQUIRED";
    m.nist_tag = NistTag::Respond;
    m.mitre_tag = MitreTag::LateralMovement;
    out.mitigations.push_back(std::move(m));
    isolate_targets.insert(id);
  }

  // (4) Close lateral approaches: isolate the entry device of every
  // high-risk path whose target serves a principle already at risk or
  // violated. Highest-risk path wins when one entry starts several.
  for (const auto& ep : entry_points(model, w, entry_point_risk)) {
    const DeviceId& target = ep.path_risk.path.back();
    bool threatens = false;
    for (const auto& pv : verdict.principle_verdicts) {
      if (pv.status == PrincipleStatus::Upheld) continue;
      if (involvement(model.principle_map, target, pv.principle) !=
          InvolvementLevel::NotInvolved) {
        threatens = true;
        break;
      }
    }
    if (!threatens) continue;
    if (snapshot.health(ep.entry).kind == HealthKind::Isolated) continue;
    if (!isolate_targets.insert(ep.entry).second) continue;

    Mitigation m;
    m.kind = MitigationKind::Isolate;
    m.device = ep.entry;
    m.rationale = "LATERAL_ENTRY_POINT:" + join(ep.path_risk.path, "->");
    m.nist_tag = NistTag::Respond;
    m.mitre_tag = MitreTag::LateralMovement;
    out.mitigations.push_back(std::move(m));
  }

  out.post_verdict = what_if(model, snapshot, out.mitigations);
  annotate_containment_costs(model, out);
  return out;
}

}  // namespace embsec
