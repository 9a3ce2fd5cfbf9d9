// report.hpp - assembles assessment results into a single report value,
// renders it as a plain-text summary or canonical JSON, and parses the
// JSON form back. The JSON rendering round-trips exactly: every float in
// a built report is pre-rounded to the nine decimal places the renderer
// prints, so parse(render(report)) == report.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "embsec/criticality.hpp"
#include "embsec/planner.hpp"
#include "embsec/scenario_io.hpp"
#include "embsec/simulation.hpp"
#include "embsec/tolerance.hpp"

namespace embsec {

// One row of the device criticality table.
struct CriticalityRow {
  DeviceId device;
  std::vector<DeviceId> connected_to;  // sorted neighbor ids
  double vulnerability = 0.0;
  int embodiment_criticality = 1;
  double raw = 0.0;
  Band band = Band::Low;

  bool operator==(const CriticalityRow&) const = default;
};

// A task still blocked or a principle still violated after mitigation.
// Stopping a task contains the damage but does not recover the task, so
// stopped-but-blocked tasks are residuals too; the plan's mitigation list
// shows which residuals were deliberately stopped.
struct Residual {
  std::string kind;  // "task" or "principle"
  std::string id;
  std::string disposition;  // always "UNMITIGABLE"
  std::vector<Cause> causes;

  bool operator==(const Residual&) const = default;
};

struct PlanReport {
  int time = 0;
  std::vector<Mitigation> mitigations;
  SystemVerdict post_verdict;
  std::vector<Residual> residuals;

  bool operator==(const PlanReport&) const = default;
};

// Control-framework tags for one finding. Finding ids are stable strings:
// "criticality:<device>", "entry-point:<entry>:<path>", "verdict:t<step>",
// "mitigation:t<step>:<index>".
struct FindingTag {
  std::string finding;
  NistTag nist = NistTag::Identify;
  MitreTag mitre = MitreTag::Impact;

  bool operator==(const FindingTag&) const = default;
};

struct AssessmentReport {
  // assessment context
  double alpha = 1.0;
  double beta = 1.0;
  double entry_point_risk = 1.5;
  int device_count = 0;
  int edge_count = 0;
  std::vector<TaskId> tasks;
  std::vector<PrincipleId> principles;
  // findings
  std::vector<CriticalityRow> criticality;  // highest score first
  std::vector<EntryPoint> entry_points;     // highest risk first
  std::vector<SystemVerdict> timeline;      // empty for a static assessment
  std::vector<PlanReport> plans;            // one per intolerable step
  std::vector<FindingTag> tags;             // sorted by finding id

  bool operator==(const AssessmentReport&) const = default;
};

enum class ReportFormat { Text, Json };

// Static assessment: criticality table and lateral entry points only.
AssessmentReport assess(const Scenario& scenario);

// Full run: the static assessment plus per-step verdicts and a mitigation
// plan for every step whose verdict is intolerable.
AssessmentReport simulate(const Scenario& scenario);

std::string render_report(const AssessmentReport& report, ReportFormat format);

struct ReportParseResult {
  std::optional<AssessmentReport> report;
  std::string error;  // empty on success
};

// Parses the JSON rendering back into a report value.
ReportParseResult parse_report(const std::string& text);

}  // namespace embsec
