#include "embsec/names.hpp"

namespace embsec {

std::string to_string(HealthKind kind) {
  switch (kind) {
    case HealthKind::Operational: return "operational";
    case HealthKind::Disrupted: return "disrupted";
    case HealthKind::Degraded: return "degraded";
    case HealthKind::Manipulated: return "manipulated";
    case HealthKind::Isolated: return "isolated";
  }
  return "operational";
}

std::string to_string(EdgeKind kind) {
  return kind == EdgeKind::Communication ? "communication" : "physical_interference";
}

std::string to_string(InvolvementLevel level) {
  switch (level) {
    case InvolvementLevel::NotInvolved: return "not_involved";
    case InvolvementLevel::Important: return "important";
    case InvolvementLevel::Critical: return "critical";
  }
  return "not_involved";
}

std::string to_string(AttackKind kind) {
  switch (kind) {
    case AttackKind::Disrupt: return "disrupt";
    case AttackKind::Degrade: return "degrade";
    case AttackKind::Manipulate: return "manipulate";
    case AttackKind::Restore: return "restore";
  }
  return "disrupt";
}

std::string to_string(Band band) {
  switch (band) {
    case Band::Low: return "low";
    case Band::Medium: return "medium";
    case Band::High: return "high";
  }
  return "low";
}

std::string to_string(TaskStatus status) {
  switch (status) {
    case TaskStatus::Operational: return "operational";
    case TaskStatus::Degraded: return "degraded";
    case TaskStatus::Blocked: return "blocked";
  }
  return "operational";
}

std::string to_string(PrincipleStatus status) {
  switch (status) {
    case PrincipleStatus::Upheld: return "upheld";
    case PrincipleStatus::AtRisk: return "at_risk";
    case PrincipleStatus::Violated: return "violated";
  }
  return "upheld";
}

std::string to_string(CauseReason reason) {
  switch (reason) {
    case CauseReason::Disrupted: return "disrupted";
    case CauseReason::BelowCapacity: return "below_capacity";
    case CauseReason::GroupUnsatisfied: return "group_unsatisfied";
    case CauseReason::Isolated: return "isolated";
    case CauseReason::Manipulated: return "manipulated";
  }
  return "disrupted";
}

std::string to_string(MitigationKind kind) {
  switch (kind) {
    case MitigationKind::Reconfigure: return "reconfigure";
    case MitigationKind::StopTask: return "stop_task";
    case MitigationKind::HaltDevices: return "halt_devices";
    case MitigationKind::Isolate: return "isolate";
  }
  return "isolate";
}

std::string to_string(NistTag tag) {
  switch (tag) {
    case NistTag::Identify: return "Identify";
    case NistTag::Protect: return "Protect";
    case NistTag::Detect: return "Detect";
    case NistTag::Respond: return "Respond";
  }
  return "Respond";
}

std::string to_string(MitreTag tag) {
  return tag == MitreTag::Impact ? "Impact" : "LateralMovement";
}

std::optional<HealthKind> health_kind_from(std::string_view text) {
  if (text == "operational") return HealthKind::Operational;
  if (text == "disrupted") return HealthKind::Disrupted;
  if (text == "degraded") return HealthKind::Degraded;
  if (text == "manipulated") return HealthKind::Manipulated;
  if (text == "isolated") return HealthKind::Isolated;
  return std::nullopt;
}

std::optional<EdgeKind> edge_kind_from(std::string_view text) {
  if (text == "communication") return EdgeKind::Communication;
  if (text == "physical_interference") return EdgeKind::PhysicalInterference;
  return std::nullopt;
}

std::optional<InvolvementLevel> involvement_from(std::string_view text) {
  if (text == "not_involved") return InvolvementLevel::NotInvolved;
  if (text == "important") return InvolvementLevel::Important;
  if (text == "critical") return InvolvementLevel::Critical;
  return std::nullopt;
}

std::optional<AttackKind> attack_kind_from(std::string_view text) {
  if (text == "disrupt") return AttackKind::Disrupt;
  if (text == "degrade") return AttackKind::Degrade;
  if (text == "manipulate") return AttackKind::Manipulate;
  if (text == "restore") return AttackKind::Restore;
  return std::nullopt;
}

std::optional<Band> band_from(std::string_view text) {
  if (text == "low") return Band::Low;
  if (text == "medium") return Band::Medium;
  if (text == "high") return Band::High;
  return std::nullopt;
}

std::optional<TaskStatus> task_status_from(std::string_view text) {
  if (text == "operational") return TaskStatus::Operational;
  if (text == "degraded") return TaskStatus::Degraded;
  if (text == "blocked") return TaskStatus::Blocked;
  return std::nullopt;
}

std::optional<PrincipleStatus> principle_status_from(std::string_view text) {
  if (text == "upheld") return PrincipleStatus::Upheld;
  if (text == "at_risk") return PrincipleStatus::AtRisk;
  if (text == "violated") return PrincipleStatus::Violated;
  return std::nullopt;
}

std::optional<CauseReason> cause_reason_from(std::string_view text) {
  if (text == "disrupted") return CauseReason::Disrupted;
  if (text == "below_capacity") return CauseReason::BelowCapacity;
  if (text == "group_unsatisfied") return CauseReason::GroupUnsatisfied;
  if (text == "isolated") return CauseReason::Isolated;
  if (text == "manipulated") return CauseReason::Manipulated;
  return std::nullopt;
}

std::optional<MitigationKind> mitigation_kind_from(std::string_view text) {
  if (text == "reconfigure") return MitigationKind::Reconfigure;
  if (text == "stop_task") return MitigationKind::StopTask;
  if (text == "halt_devices") return MitigationKind::HaltDevices;
  if (text == "isolate") return MitigationKind::Isolate;
  return std::nullopt;
}

std::optional<NistTag> nist_tag_from(std::string_view text) {
  if (text == "Identify") return NistTag::Identify;
  if (text == "Protect") return NistTag::Protect;
  if (text == "Detect") return NistTag::Detect;
  if (text == "Respond") return NistTag::Respond;
  return std::nullopt;
}

std::optional<MitreTag> mitre_tag_from(std::string_view text) {
  if (text == "Impact") return MitreTag::Impact;
  if (text == "LateralMovement") return MitreTag::LateralMovement;
  return std::nullopt;
}

std::string band_title(Band band) {
  switch (band) {
    case Band::Low: return "Low";
    case Band::Medium: return "Medium";
    case Band::High: return "High";
  }
  return "Low";
}

}  // namespace embsec
