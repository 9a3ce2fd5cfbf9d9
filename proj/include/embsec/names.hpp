// names.hpp - canonical string forms of every enumeration, shared by
// planner rationale codes, scenario files, and report rendering. Parsers
// return nullopt for unrecognized strings so callers can surface schema
// violations instead of exceptions.
#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "embsec/criticality.hpp"
#include "embsec/model.hpp"
#include "embsec/planner.hpp"
#include "embsec/simulation.hpp"
#include "embsec/tolerance.hpp"

namespace embsec {

std::string to_string(HealthKind kind);
std::string to_string(EdgeKind kind);
std::string to_string(InvolvementLevel level);
std::string to_string(AttackKind kind);
std::string to_string(Band band);
std::string to_string(TaskStatus status);
std::string to_string(PrincipleStatus status);
std::string to_string(CauseReason reason);
std::string to_string(MitigationKind kind);
std::string to_string(NistTag tag);
std::string to_string(MitreTag tag);

std::optional<HealthKind> health_kind_from(std::string_view text);
std::optional<EdgeKind> edge_kind_from(std::string_view text);
std::optional<InvolvementLevel> involvement_from(std::string_view text);
std::optional<AttackKind> attack_kind_from(std::string_view text);
std::optional<Band> band_from(std::string_view text);
std::optional<TaskStatus> task_status_from(std::string_view text);
std::optional<PrincipleStatus> principle_status_from(std::string_view text);
std::optional<CauseReason> cause_reason_from(std::string_view text);
std::optional<MitigationKind> mitigation_kind_from(std::string_view text);
std::optional<NistTag> nist_tag_from(std::string_view text);
std::optional<MitreTag> mitre_tag_from(std::string_view text);

// Capitalized band label for human-readable tables ("Low"/"Medium"/"High").
std::string band_title(Band band);

}  // namespace embsec
