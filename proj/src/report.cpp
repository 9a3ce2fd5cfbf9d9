#include "embsec/report.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "embsec/canonical_json.hpp"
#include "embsec/names.hpp"
#include "json.hpp"

namespace embsec {
namespace {

using nlohmann::json;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<FindingTag> build_tags(const AssessmentReport& r) {
  std::vector<FindingTag> tags;
  for (const auto& row : r.criticality)
    tags.push_back({"criticality:" + row.device, NistTag::Identify, MitreTag::Impact});
  for (const auto& ep : r.entry_points)
    tags.push_back({"entry-point:" + ep.entry + ":" + join(ep.path_risk.path, "->"),
                    NistTag::Protect, MitreTag::LateralMovement});
  for (const auto& v : r.timeline)
    tags.push_back({"verdict:t" + std::to_string(v.time), NistTag::Detect, MitreTag::Impact});
  for (const auto& p : r.plans) {
    for (std::size_t i = 0; i < p.mitigations.size(); ++i) {
      tags.push_back({"mitigation:t" + std::to_string(p.time) + ":" + std::to_string(i),
                      p.mitigations[i].nist_tag, p.mitigations[i].mitre_tag});
    }
  }
  std::sort(tags.begin(), tags.end(),
            [](const FindingTag& a, const FindingTag& b) { return a.finding < b.finding; });
  return tags;
}

}  // namespace

AssessmentReport assess(const Scenario& scenario) {
  const EmbodimentModel& model = scenario.model;
  AssessmentReport r;
  r.alpha = quantize9(scenario.weights.alpha);
  r.beta = quantize9(scenario.weights.beta);
  r.entry_point_risk = quantize9(scenario.thresholds.entry_point_risk);
  r.device_count = static_cast<int>(model.devices.size());
  r.edge_count = static_cast<int>(model.edges.size());
  for (const auto& t : model.tasks) r.tasks.push_back(t.id);
  for (const auto& p : model.principles) r.principles.push_back(p.id);

  for (const auto& score : score_all(model, scenario.weights)) {
    const Device* d = model.find_device(score.device);
    const std::set<DeviceId> around = neighbors(model, score.device);
    r.criticality.push_back({score.device,
                             {around.begin(), around.end()},
                             quantize9(d->vulnerability),
                             d->embodiment_criticality,
                             quantize9(score.raw),
                             score.band});
  }
  for (EntryPoint ep :
       entry_points(model, scenario.weights, scenario.thresholds.entry_point_risk)) {
    ep.path_risk.risk = quantize9(ep.path_risk.risk);
    r.entry_points.push_back(std::move(ep));
  }
  r.tags = build_tags(r);
  return r;
}

AssessmentReport simulate(const Scenario& scenario) {
  AssessmentReport r = assess(scenario);
  for (const Snapshot& snap : run(scenario)) {
    SystemVerdict verdict = evaluate_system(scenario.model, snap);
    if (!verdict.tolerable) {
      MitigationPlan p = plan(scenario.model, snap, verdict, scenario.weights,
                              scenario.thresholds.entry_point_risk);
      PlanReport pr;
      pr.time = snap.time;
      pr.mitigations = std::move(p.mitigations);
      for (const auto& tv : p.post_verdict.task_verdicts) {
        if (tv.status == TaskStatus::Blocked)
          pr.residuals.push_back({"task", tv.task, "UNMITIGABLE", tv.causes});
      }
      for (const auto& pv : p.post_verdict.principle_verdicts) {
        if (pv.status == PrincipleStatus::Violated)
          pr.residuals.push_back({"principle", pv.principle, "UNMITIGABLE", pv.causes});
      }
      pr.post_verdict = std::move(p.post_verdict);
      r.plans.push_back(std::move(pr));
    }
    r.timeline.push_back(std::move(verdict));
  }
  r.tags = build_tags(r);
  return r;
}

namespace {

// ---------------------------------------------------------------- JSON --

json causes_to_json(const std::vector<Cause>& causes) {
  json list = json::array();
  for (const auto& c : causes)
    list.push_back({{"device", c.device}, {"reason", to_string(c.reason)}});
  return list;
}

json verdict_to_json(const SystemVerdict& v) {
  json tasks = json::array();
  for (const auto& tv : v.task_verdicts) {
    tasks.push_back({{"task", tv.task},
                     {"status", to_string(tv.status)},
                     {"causes", causes_to_json(tv.causes)}});
  }
  json principles = json::array();
  for (const auto& pv : v.principle_verdicts) {
    principles.push_back({{"principle", pv.principle},
                          {"status", to_string(pv.status)},
                          {"causes", causes_to_json(pv.causes)},
                          {"active_hazard", pv.active_hazard}});
  }
  return {{"time", v.time},
          {"tolerable", v.tolerable},
          {"tasks", std::move(tasks)},
          {"principles", std::move(principles)}};
}

json mitigation_to_json(const Mitigation& m) {
  json j = {{"kind", to_string(m.kind)},
            {"rationale", m.rationale},
            {"nist", to_string(m.nist_tag)},
            {"mitre", to_string(m.mitre_tag)}};
  switch (m.kind) {
    case MitigationKind::Reconfigure:
      j["rule"] = m.rule_id;
      break;
    case MitigationKind::StopTask:
      j["task"] = m.task;
      break;
    case MitigationKind::HaltDevices:
      j["devices"] = m.devices;
      break;
    case MitigationKind::Isolate:
      j["device"] = m.device;
      break;
  }
  return j;
}

std::string render_json(const AssessmentReport& r) {
  json root = json::object();
  root["model"] = {{"alpha", r.alpha},
                   {"beta", r.beta},
                   {"entry_point_risk", r.entry_point_risk},
                   {"device_count", r.device_count},
                   {"edge_count", r.edge_count},
                   {"tasks", r.tasks},
                   {"principles", r.principles}};

  json criticality = json::array();
  for (const auto& row : r.criticality) {
    criticality.push_back({{"device", row.device},
                           {"connected_to", row.connected_to},
                           {"vulnerability", row.vulnerability},
                           {"embodiment_criticality", row.embodiment_criticality},
                           {"raw", row.raw},
                           {"band", to_string(row.band)}});
  }
  root["criticality"] = std::move(criticality);

  json entries = json::array();
  for (const auto& ep : r.entry_points) {
    entries.push_back(
        {{"entry", ep.entry}, {"path", ep.path_risk.path}, {"risk", ep.path_risk.risk}});
  }
  root["entry_points"] = std::move(entries);

  json timeline = json::array();
  for (const auto& v : r.timeline) timeline.push_back(verdict_to_json(v));
  root["timeline"] = std::move(timeline);

  json plans = json::array();
  for (const auto& p : r.plans) {
    json mitigations = json::array();
    for (const auto& m : p.mitigations) mitigations.push_back(mitigation_to_json(m));
    json residuals = json::array();
    for (const auto& res : p.residuals) {
      residuals.push_back({{"kind", res.kind},
                           {"id", res.id},
                           {"disposition", res.disposition},
                           {"causes", causes_to_json(res.causes)}});
    }
    plans.push_back({{"time", p.time},
                     {"mitigations", std::move(mitigations)},
                     {"post_verdict", verdict_to_json(p.post_verdict)},
                     {"residuals", std::move(residuals)}});
  }
  root["plans"] = std::move(plans);

  json tags = json::object();
  for (const auto& tag : r.tags)
    tags[tag.finding] = {{"nist", to_string(tag.nist)}, {"mitre", to_string(tag.mitre)}};
  root["tags"] = std::move(tags);

  return canonical_dump(root) + "\n";
}

// ---------------------------------------------------------------- text --

std::string fixed2(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.2f", value);
  return buffer;
}

void append_table(std::string& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t c = 0; c < row.size(); ++c)
      width[c] = std::max(width[c], row[c].size());
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string line;
    for (std::size_t c = 0; c < rows[i].size(); ++c) {
      if (c > 0) line += " | ";
      line += rows[i][c];
      if (c + 1 < rows[i].size())
        line.append(width[c] - rows[i][c].size(), ' ');
    }
    out += line;
    out += "\n";
    if (i == 0) {
      std::size_t total = 0;
      for (std::size_t c = 0; c < width.size(); ++c)
        total += width[c] + (c > 0 ? 3 : 0);
      out.append(total, '-');
      out += "\n";
    }
  }
}

std::string causes_text(const std::vector<Cause>& causes) {
  std::vector<std::string> parts;
  for (const auto& c : causes) parts.push_back(c.device + ": " + to_string(c.reason));
  return join(parts, "; ");
}

std::string mitigation_text(const Mitigation& m) {
  switch (m.kind) {
    case MitigationKind::Reconfigure:
      return "reconfigure using rule '" + m.rule_id + "'";
    case MitigationKind::StopTask:
      return "stop task '" + m.task + "'";
    case MitigationKind::HaltDevices:
      return "halt devices [" + join(m.devices, ", ") + "]";
    case MitigationKind::Isolate:
      return "isolate '" + m.device + "'";
  }
  return "";
}

std::string render_text(const AssessmentReport& r) {
  std::string out;
  out += "Embodiment Risk Assessment\n";
  out += "==========================\n";
  out += "Devices: " + std::to_string(r.device_count) +
         " | Edges: " + std::to_string(r.edge_count) + " | alpha " + fixed2(r.alpha) +
         " | beta " + fixed2(r.beta) + "\n\n";

  out += "Device Criticality [Identify/Impact]\n";
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"Device", "Connected to", "V", "E", "Overall", "Band"});
  for (const auto& row : r.criticality) {
    rows.push_back({row.device, join(row.connected_to, ", "), fixed2(row.vulnerability),
                    std::to_string(row.embodiment_criticality), fixed2(row.raw),
                    band_title(row.band)});
  }
  append_table(out, rows);
  out += "\n";

  out += "Lateral Entry Points (risk >= " + fixed2(r.entry_point_risk) +
         ") [Protect/LateralMovement]\n";
  if (r.entry_points.empty()) {
    out += "  none\n";
  } else {
    for (const auto& ep : r.entry_points) {
      out += "  " + ep.entry + ": " + join(ep.path_risk.path, " -> ") + " (risk " +
             fixed2(ep.path_risk.risk) + ")\n";
    }
  }

  if (r.timeline.empty()) return out;

  out += "\nTimeline [Detect/Impact]\n";
  for (const auto& v : r.timeline) {
    out += "t" + std::to_string(v.time) + ": " +
           (v.tolerable ? "tolerable" : "INTOLERABLE") + "\n";
    for (const auto& tv : v.task_verdicts) {
      out += "  task '" + tv.task + "': " + to_string(tv.status);
      if (!tv.causes.empty()) out += " (" + causes_text(tv.causes) + ")";
      out += "\n";
    }
    for (const auto& pv : v.principle_verdicts) {
      out += "  principle '" + pv.principle + "': " + to_string(pv.status);
      if (pv.active_hazard) out += " [active hazard]";
      if (!pv.causes.empty()) out += " (" + causes_text(pv.causes) + ")";
      out += "\n";
    }
  }

  out += "\nMitigation Plans\n";
  if (r.plans.empty()) {
    out += "  none needed; every step is tolerable\n";
  }
  for (const auto& p : r.plans) {
    out += "t" + std::to_string(p.time) + ":\n";
    for (std::size_t i = 0; i < p.mitigations.size(); ++i) {
      const Mitigation& m = p.mitigations[i];
      out += "  " + std::to_string(i + 1) + ". " + mitigation_text(m) + " [" +
             to_string(m.nist_tag) + "/" + to_string(m.mitre_tag) + "]\n";
      out += "     rationale: " + m.rationale + "\n";
    }
    out += "  post-mitigation: " +
           std::string(p.post_verdict.tolerable ? "tolerable" : "INTOLERABLE") + "\n";
    for (const auto& res : p.residuals) {
      out += "  residual " + res.kind + " '" + res.id + "': " + res.disposition;
      if (!res.causes.empty()) out += " (" + causes_text(res.causes) + ")";
      out += "\n";
    }
  }
  return out;
}

// --------------------------------------------------------------- parse --

template <typename Enum>
Enum enum_field(const json& j, std::optional<Enum> (*parse)(std::string_view),
                const char* what) {
  const std::string text = j.get<std::string>();
  std::optional<Enum> value = parse(text);
  if (!value)
    throw std::runtime_error(std::string("unrecognized ") + what + ": " + text);
  return *value;
}

std::vector<Cause> causes_from_json(const json& list) {
  std::vector<Cause> causes;
  for (const auto& item : list) {
    causes.push_back({item.at("device").get<std::string>(),
                      enum_field(item.at("reason"), cause_reason_from, "cause reason")});
  }
  return causes;
}

SystemVerdict verdict_from_json(const json& j) {
  SystemVerdict v;
  v.time = j.at("time").get<int>();
  v.tolerable = j.at("tolerable").get<bool>();
  for (const auto& item : j.at("tasks")) {
    v.task_verdicts.push_back({item.at("task").get<std::string>(),
                               enum_field(item.at("status"), task_status_from, "task status"),
                               causes_from_json(item.at("causes"))});
  }
  for (const auto& item : j.at("principles")) {
    v.principle_verdicts.push_back(
        {item.at("principle").get<std::string>(),
         enum_field(item.at("status"), principle_status_from, "principle status"),
         causes_from_json(item.at("causes")), item.at("active_hazard").get<bool>()});
  }
  return v;
}

Mitigation mitigation_from_json(const json& j) {
  Mitigation m;
  m.kind = enum_field(j.at("kind"), mitigation_kind_from, "mitigation kind");
  m.rationale = j.at("rationale").get<std::string>();
  m.nist_tag = enum_field(j.at("nist"), nist_tag_from, "nist tag");
  m.mitre_tag = enum_field(j.at("mitre"), mitre_tag_from, "mitre tag");
  switch (m.kind) {
    case MitigationKind::Reconfigure:
      m.rule_id = j.at("rule").get<std::string>();
      break;
    case MitigationKind::StopTask:
      m.task = j.at("task").get<std::string>();
      break;
    case MitigationKind::HaltDevices:
      m.devices = j.at("devices").get<std::vector<std::string>>();
      break;
    case MitigationKind::Isolate:
      m.device = j.at("device").get<std::string>();
      break;
  }
  return m;
}

}  // namespace

std::string render_report(const AssessmentReport& report, ReportFormat format) {
  return format == ReportFormat::Json ? render_json(report) : render_text(report);
}

ReportParseResult parse_report(const std::string& text) {
  ReportParseResult out;
  const json root = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded()) {
    out.error = "input is not valid JSON";
    return out;
  }
  try {
    AssessmentReport r;
    const json& model = root.at("model");
    r.alpha = model.at("alpha").get<double>();
    r.beta = model.at("beta").get<double>();
    r.entry_point_risk = model.at("entry_point_risk").get<double>();
    r.device_count = model.at("device_count").get<int>();
    r.edge_count = model.at("edge_count").get<int>();
    r.tasks = model.at("tasks").get<std::vector<std::string>>();
    r.principles = model.at("principles").get<std::vector<std::string>>();

    for (const auto& item : root.at("criticality")) {
      r.criticality.push_back({item.at("device").get<std::string>(),
                               item.at("connected_to").get<std::vector<std::string>>(),
                               item.at("vulnerability").get<double>(),
                               item.at("embodiment_criticality").get<int>(),
                               item.at("raw").get<double>(),
                               enum_field(item.at("band"), band_from, "band")});
    }
    for (const auto& item : root.at("entry_points")) {
      r.entry_points.push_back({item.at("entry").get<std::string>(),
                                {item.at("path").get<std::vector<std::string>>(),
                                 item.at("risk").get<double>()}});
    }
    for (const auto& item : root.at("timeline"))
      r.timeline.push_back(verdict_from_json(item));
    for (const auto& item : root.at("plans")) {
      PlanReport p;
      p.time = item.at("time").get<int>();
      for (const auto& m : item.at("mitigations"))
        p.mitigations.push_back(mitigation_from_json(m));
      p.post_verdict = verdict_from_json(item.at("post_verdict"));
      for (const auto& res : item.at("residuals")) {
        p.residuals.push_back({res.at("kind").get<std::string>(),
                               res.at("id").get<std::string>(),
                               res.at("disposition").get<std::string>(),
                               causes_from_json(res.at("causes"))});
      }
      r.plans.push_back(std::move(p));
    }
    for (const auto& item : root.at("tags").items()) {
      r.tags.push_back({item.key(),
                        enum_field(item.value().at("nist"), nist_tag_from, "nist tag"),
                        enum_field(item.value().at("mitre"), mitre_tag_from, "mitre tag")});
    }
    out.report = std::move(r);
  } catch (const std::exception& e) {
    out.error = e.what();
  }
  return out;
}

}  // namespace embsec
