// model.hpp - static description of a modular embodied robot: devices,
// coupling edges, tasks, preservation principles, criticality maps and
// redundancy groups. A validated model is immutable and safe to share
// across concurrent evaluations.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace embsec {

using DeviceId = std::string;
using TaskId = std::string;
using PrincipleId = std::string;

// Runtime health of a device. Isolated is only ever entered through a
// mitigation (containment); attack actions never produce it.
enum class HealthKind { Operational, Disrupted, Degraded, Manipulated, Isolated };

enum class EdgeKind { Communication, PhysicalInterference };

// Bitmask for filtering coupling edges in neighbor queries.
enum EdgeKindMask : unsigned {
  kEdgeCommunication = 1u << 0,
  kEdgePhysicalInterference = 1u << 1,
  kEdgeAll = kEdgeCommunication | kEdgePhysicalInterference,
};

struct Device {
  DeviceId id;
  std::string kind;         // free-form label ("wheel-motor", "camera", ...)
  double vulnerability = 0.0;        // likelihood of compromise, in [0,1]
  int embodiment_criticality = 1;    // 1=Low, 2=Medium, 3=High

  bool operator==(const Device&) const = default;
};

// Undirected coupling between two devices. PhysicalInterference models
// physical interactions (e.g. an arm able to block a camera's view) as
// hidden channels; it is treated like Communication for scoring and
// lateral-movement analysis.
struct CouplingEdge {
  DeviceId a;
  DeviceId b;
  EdgeKind kind = EdgeKind::Communication;

  bool operator==(const CouplingEdge&) const = default;
};

struct Task {
  TaskId id;
  std::string description;

  bool operator==(const Task&) const = default;
};

struct PreservationPrinciple {
  PrincipleId id;
  std::string description;

  bool operator==(const PreservationPrinciple&) const = default;
};

// How much a device matters for a task or principle. Totally ordered:
// NotInvolved < Important < Critical.
enum class InvolvementLevel { NotInvolved = 0, Important = 1, Critical = 2 };

// Capacity a degraded device must still deliver to count as available,
// when an entry does not set its own threshold.
inline constexpr double kDefaultCriticalMinCapacity = 0.8;
inline constexpr double kDefaultImportantMinCapacity = 0.5;

// One cell of a device/task or device/principle involvement table.
// Absent cells read as NotInvolved.
struct MapEntry {
  DeviceId device;
  std::string target;  // task id or principle id, depending on the map
  InvolvementLevel level = InvolvementLevel::NotInvolved;
  std::optional<double> min_capacity;  // in (0,1]; defaulted by level if unset

  bool operator==(const MapEntry&) const = default;
};

struct CriticalityMap {
  std::vector<MapEntry> entries;

  const MapEntry* find(const DeviceId& device, const std::string& target) const;

  bool operator==(const CriticalityMap&) const = default;
};

// Interchangeable devices plus the minimum count that must stay available.
// Devices outside any group behave as singleton groups with
// min_operational = 1.
struct RedundancyGroup {
  std::string id;
  std::vector<DeviceId> members;
  int min_operational = 1;

  bool operator==(const RedundancyGroup&) const = default;
};

// Scenario-supplied reconfiguration: when the trigger device enters the
// given health kind, the listed compensating devices can take over and
// re-enable the tasks/principles in `restores`. Applicable only while
// every compensating device is Operational.
struct CompensationRule {
  std::string id;
  DeviceId trigger_device;
  HealthKind trigger_health = HealthKind::Disrupted;
  std::string directive;  // free-text actuator directive
  std::vector<DeviceId> compensating_devices;
  std::vector<std::string> restores;  // task and/or principle ids

  bool operator==(const CompensationRule&) const = default;
};

struct EmbodimentModel {
  std::vector<Device> devices;
  std::vector<CouplingEdge> edges;
  std::vector<Task> tasks;
  std::vector<PreservationPrinciple> principles;
  CriticalityMap task_map;
  CriticalityMap principle_map;
  std::vector<RedundancyGroup> redundancy_groups;
  std::vector<CompensationRule> compensation_rules;

  const Device* find_device(const DeviceId& id) const;
  const Task* find_task(const TaskId& id) const;
  const PreservationPrinciple* find_principle(const PrincipleId& id) const;
  // Group containing the device, or nullptr for singleton semantics.
  const RedundancyGroup* group_of(const DeviceId& id) const;

  bool operator==(const EmbodimentModel&) const = default;
};

struct Violation {
  std::string code;     // machine-readable, e.g. "SELF_LOOP"
  std::string where;    // field reference, e.g. "devices[Camera].vulnerability"
  std::string message;

  bool operator==(const Violation&) const = default;
};

struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
};

// Checks every model invariant; returns an empty report iff they all hold.
// Violations are data, not failures.
ValidationReport validate_model(const EmbodimentModel& model);

// Devices sharing an edge of a requested kind with `id`. Throws
// std::invalid_argument for an unknown device. The set's size is the
// degree of connectivity used by the criticality score.
std::set<DeviceId> neighbors(const EmbodimentModel& model, const DeviceId& id,
                             unsigned kinds = kEdgeAll);

// Stored level, or NotInvolved when the cell is absent. No id checking.
InvolvementLevel involvement(const CriticalityMap& map, const DeviceId& device,
                             const std::string& target);

// Id-checked lookups against a validated model; throw std::invalid_argument
// on unknown ids.
InvolvementLevel task_involvement(const EmbodimentModel& model,
                                  const DeviceId& device, const TaskId& task);
InvolvementLevel principle_involvement(const EmbodimentModel& model,
                                       const DeviceId& device,
                                       const PrincipleId& principle);

// Entry threshold: explicit min_capacity, else the default for its level.
double required_capacity(const MapEntry& entry);

}  // namespace embsec
