#include "embsec/model.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace embsec {

const MapEntry* CriticalityMap::find(const DeviceId& device,
                                     const std::string& target) const {
  for (const auto& e : entries) {
    if (e.device == device && e.target == target) return &e;
  }
  return nullptr;
}

const Device* EmbodimentModel::find_device(const DeviceId& id) const {
  for (const auto& d : devices) {
    if (d.id == id) return &d;
  }
  return nullptr;
}

const Task* EmbodimentModel::find_task(const TaskId& id) const {
  for (const auto& t : tasks) {
    if (t.id == id) return &t;
  }
  return nullptr;
}

const PreservationPrinciple* EmbodimentModel::find_principle(
    const PrincipleId& id) const {
  for (const auto& p : principles) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

const RedundancyGroup* EmbodimentModel::group_of(const DeviceId& id) const {
  for (const auto& g : redundancy_groups) {
    if (std::find(g.members.begin(), g.members.end(), id) != g.members.end())
      return &g;
  }
  return nullptr;
}

namespace {

void add(ValidationReport& report, std::string code, std::string where,
         std::string message) {
  report.violations.push_back(
      {std::move(code), std::move(where), std::move(message)});
}

// Unordered pair used for duplicate-edge detection.
std::pair<DeviceId, DeviceId> normalized(const CouplingEdge& e) {
  return e.a <= e.b ? std::make_pair(e.a, e.b) : std::make_pair(e.b, e.a);
}

void check_map(const EmbodimentModel& model, const CriticalityMap& map,
               const std::string& map_name, bool targets_are_tasks,
               ValidationReport& report) {
  std::set<std::pair<DeviceId, std::string>> seen;
  for (const auto& e : map.entries) {
    const std::string where = map_name + "[" + e.device + "," + e.target + "]";
    if (!model.find_device(e.device))
      add(report, "UNKNOWN_DEVICE", where, "device not in model: " + e.device);
    const bool target_known = targets_are_tasks
                                  ? model.find_task(e.target) != nullptr
                                  : model.find_principle(e.target) != nullptr;
    if (!target_known)
      add(report, targets_are_tasks ? "UNKNOWN_TASK" : "UNKNOWN_PRINCIPLE",
          where, "target not in model: " + e.target);
    if (!seen.insert({e.device, e.target}).second)
      add(report, "DUPLICATE_MAP_ENTRY", where, "entry listed twice");
    if (e.min_capacity &&
        (*e.min_capacity <= 0.0 || *e.min_capacity > 1.0))
      add(report, "MIN_CAPACITY_RANGE", where + ".min_capacity",
          "min_capacity must be in (0,1]");
  }
}

}  // namespace

ValidationReport validate_model(const EmbodimentModel& model) {
  ValidationReport report;

  std::set<DeviceId> device_ids;
  for (const auto& d : model.devices) {
    const std::string where = "devices[" + d.id + "]";
    if (d.id.empty()) add(report, "EMPTY_ID", "devices[]", "empty device id");
    if (!device_ids.insert(d.id).second)
      add(report, "DUPLICATE_DEVICE", where, "device id listed twice");
    if (d.vulnerability < 0.0 || d.vulnerability > 1.0)
      add(report, "V_RANGE", where + ".vulnerability",
          "vulnerability must be in [0,1]");
    if (d.embodiment_criticality < 1 || d.embodiment_criticality > 3)
      add(report, "E_RANGE", where + ".embodiment_criticality",
          "embodiment criticality must be 1, 2 or 3");
  }

  std::set<std::pair<std::pair<DeviceId, DeviceId>, EdgeKind>> edge_keys;
  for (const auto& e : model.edges) {
    const std::string where = "edges[" + e.a + "," + e.b + "]";
    if (e.a == e.b) add(report, "SELF_LOOP", where, "edge joins a device to itself");
    if (!model.find_device(e.a))
      add(report, "UNKNOWN_DEVICE", where, "device not in model: " + e.a);
    if (!model.find_device(e.b))
      add(report, "UNKNOWN_DEVICE", where, "device not in model: " + e.b);
    if (!edge_keys.insert({normalized(e), e.kind}).second)
      add(report, "DUPLICATE_EDGE", where, "edge listed twice");
  }

  std::set<TaskId> task_ids;
  for (const auto& t : model.tasks) {
    if (t.id.empty()) add(report, "EMPTY_ID", "tasks[]", "empty task id");
    if (!task_ids.insert(t.id).second)
      add(report, "DUPLICATE_TASK", "tasks[" + t.id + "]",
          "task id listed twice");
  }

  std::set<PrincipleId> principle_ids;
  for (const auto& p : model.principles) {
    if (p.id.empty()) add(report, "EMPTY_ID", "principles[]", "empty principle id");
    if (!principle_ids.insert(p.id).second)
      add(report, "DUPLICATE_PRINCIPLE", "principles[" + p.id + "]",
          "principle id listed twice");
  }

  check_map(model, model.task_map, "task_map", true, report);
  check_map(model, model.principle_map, "principle_map", false, report);

  std::set<std::string> group_ids;
  std::map<DeviceId, std::string> member_of;
  for (const auto& g : model.redundancy_groups) {
    const std::string where = "redundancy_groups[" + g.id + "]";
    if (g.id.empty()) add(report, "EMPTY_ID", "redundancy_groups[]", "empty group id");
    if (!group_ids.insert(g.id).second)
      add(report, "DUPLICATE_GROUP", where, "group id listed twice");
    if (g.members.empty())
      add(report, "GROUP_EMPTY", where, "group has no members");
    std::set<DeviceId> members_seen;
    for (const auto& m : g.members) {
      if (!model.find_device(m))
        add(report, "UNKNOWN_DEVICE", where, "member not in model: " + m);
      if (!members_seen.insert(m).second)
        add(report, "DUPLICATE_MEMBER", where, "member listed twice: " + m);
      auto [it, fresh] = member_of.try_emplace(m, g.id);
      if (!fresh && it->second != g.id)
        add(report, "GROUP_OVERLAP", where,
            "device in more than one group: " + m);
    }
    if (g.min_operational < 1 ||
        g.min_operational > static_cast<int>(members_seen.size()))
      add(report, "GROUP_MIN_RANGE", where + ".min_operational",
          "min_operational must be in [1, member count]");
  }

  std::set<std::string> rule_ids;
  for (const auto& r : model.compensation_rules) {
    const std::string where = "compensation_rules[" + r.id + "]";
    if (r.id.empty()) add(report, "EMPTY_ID", "compensation_rules[]", "empty rule id");
    if (!rule_ids.insert(r.id).second)
      add(report, "DUPLICATE_RULE", where, "rule id listed twice");
    if (!model.find_device(r.trigger_device))
      add(report, "UNKNOWN_DEVICE", where + ".trigger",
          "device not in model: " + r.trigger_device);
    for (const auto& c : r.compensating_devices) {
      if (!model.find_device(c))
        add(report, "UNKNOWN_DEVICE", where + ".compensating_devices",
            "device not in model: " + c);
    }
    for (const auto& t : r.restores) {
      if (!model.find_task(t) && !model.find_principle(t))
        add(report, "UNKNOWN_RESTORE_TARGET", where + ".restores",
            "not a task or principle: " + t);
    }
  }

  return report;
}

std::set<DeviceId> neighbors(const EmbodimentModel& model, const DeviceId& id,
                             unsigned kinds) {
  if (!model.find_device(id))
    throw std::invalid_argument("unknown device id: " + id);
  std::set<DeviceId> result;
  for (const auto& e : model.edges) {
    const unsigned bit = e.kind == EdgeKind::Communication
                             ? kEdgeCommunication
                             : kEdgePhysicalInterference;
    if (!(kinds & bit)) continue;
    if (e.a == id) result.insert(e.b);
    if (e.b == id) result.insert(e.a);
  }
  return result;
}

InvolvementLevel involvement(const CriticalityMap& map, const DeviceId& device,
                             const std::string& target) {
  const MapEntry* e = map.find(device, target);
  return e ? e->level : InvolvementLevel::NotInvolved;
}

InvolvementLevel task_involvement(const EmbodimentModel& model,
                                  const DeviceId& device, const TaskId& task) {
  if (!model.find_device(device))
    throw std::invalid_argument("unknown device id: " + device);
  if (!model.find_task(task))
    throw std::invalid_argument("unknown task id: " + task);
  return involvement(model.task_map, device, task);
}

InvolvementLevel principle_involvement(const EmbodimentModel& model,
                                       const DeviceId& device,
                                       const PrincipleId& principle) {
  if (!model.find_device(device))
    throw std::invalid_argument("unknown device id: " + device);
  if (!model.find_principle(principle))
    throw std::invalid_argument("unknown principle id: " + principle);
  return involvement(model.principle_map, device, principle);
}

double required_capacity(const MapEntry& entry) {
  if (entry.min_capacity) return *entry.min_capacity;
  return entry.level == InvolvementLevel::Critical ? kDefaultCriticalMinCapacity
                                                   : kDefaultImportantMinCapacity;
}

}  // namespace embsec
