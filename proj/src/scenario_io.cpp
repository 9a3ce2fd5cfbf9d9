#include "embsec/scenario_io.hpp"

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>

#include "embsec/canonical_json.hpp"
#include "embsec/names.hpp"
#include "json.hpp"

namespace embsec {
namespace {

using nlohmann::json;

std::string child(const std::string& parent, const std::string& key) {
  return parent.empty() ? key : parent + "." + key;
}

std::string element(const std::string& parent, std::size_t index) {
  return parent + "[" + std::to_string(index) + "]";
}

// Best-effort schema walker: records every violation it can find instead
// of stopping at the first, so one parse surfaces all field problems.
struct SchemaReader {
  std::vector<Violation>& out;

  void add(const char* code, const std::string& where, const std::string& message) {
    out.push_back({code, where, message});
  }

  bool object(const json& j, const std::string& where) {
    if (j.is_object()) return true;
    add("SCHEMA_TYPE", where, "expected an object");
    return false;
  }

  bool array(const json& j, const std::string& where) {
    if (j.is_array()) return true;
    add("SCHEMA_TYPE", where, "expected an array");
    return false;
  }

  void reject_unknown(const json& obj, const std::string& where,
                      std::initializer_list<const char*> allowed) {
    for (const auto& item : obj.items()) {
      bool known = false;
      for (const char* key : allowed) {
        if (item.key() == key) {
          known = true;
          break;
        }
      }
      if (!known)
        add("SCHEMA_UNKNOWN_FIELD", child(where, item.key()), "unrecognized field");
    }
  }

  // Returns the member, recording SCHEMA_MISSING_FIELD when a required
  // member is absent.
  const json* member(const json& obj, const std::string& where, const char* key,
                     bool required) {
    auto it = obj.find(key);
    if (it != obj.end()) return &*it;
    if (required) add("SCHEMA_MISSING_FIELD", child(where, key), "required field is missing");
    return nullptr;
  }

  bool get(const json& j, const std::string& where, std::string& dst) {
    if (!j.is_string()) {
      add("SCHEMA_TYPE", where, "expected a string");
      return false;
    }
    dst = j.get<std::string>();
    return true;
  }

  bool get(const json& j, const std::string& where, double& dst) {
    if (!j.is_number()) {
      add("SCHEMA_TYPE", where, "expected a number");
      return false;
    }
    dst = j.get<double>();
    return true;
  }

  bool get(const json& j, const std::string& where, int& dst) {
    if (!j.is_number_integer()) {
      add("SCHEMA_TYPE", where, "expected an integer");
      return false;
    }
    dst = j.get<int>();
    return true;
  }

  bool get(const json& j, const std::string& where, std::uint64_t& dst) {
    if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() &&
                                   j.get<std::int64_t>() < 0)) {
      add("SCHEMA_TYPE", where, "expected a non-negative integer");
      return false;
    }
    dst = j.get<std::uint64_t>();
    return true;
  }

  bool strings(const json& j, const std::string& where, std::vector<std::string>& dst) {
    if (!array(j, where)) return false;
    bool ok = true;
    for (std::size_t i = 0; i < j.size(); ++i) {
      std::string s;
      if (get(j[i], element(where, i), s))
        dst.push_back(std::move(s));
      else
        ok = false;
    }
    return ok;
  }

  template <typename Enum>
  bool get_enum(const json& j, const std::string& where,
                std::optional<Enum> (*parse)(std::string_view), const char* universe,
                Enum& dst) {
    std::string text;
    if (!get(j, where, text)) return false;
    std::optional<Enum> value = parse(text);
    if (!value) {
      add("SCHEMA_TYPE", where, std::string("expected one of: ") + universe);
      return false;
    }
    dst = *value;
    return true;
  }
};

void parse_devices(SchemaReader& r, const json& list, EmbodimentModel& model) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = element("devices", i);
    if (!r.object(list[i], where)) continue;
    r.reject_unknown(list[i], where, {"id", "kind", "vulnerability", "embodiment_criticality"});
    Device d;
    if (const json* f = r.member(list[i], where, "id", true)) r.get(*f, child(where, "id"), d.id);
    if (const json* f = r.member(list[i], where, "kind", false)) r.get(*f, child(where, "kind"), d.kind);
    if (const json* f = r.member(list[i], where, "vulnerability", true))
      r.get(*f, child(where, "vulnerability"), d.vulnerability);
    if (const json* f = r.member(list[i], where, "embodiment_criticality", true))
      r.get(*f, child(where, "embodiment_criticality"), d.embodiment_criticality);
    model.devices.push_back(std::move(d));
  }
}

void parse_edges(SchemaReader& r, const json& list, EmbodimentModel& model) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = element("edges", i);
    if (!r.object(list[i], where)) continue;
    r.reject_unknown(list[i], where, {"a", "b", "kind"});
    CouplingEdge e;
    if (const json* f = r.member(list[i], where, "a", true)) r.get(*f, child(where, "a"), e.a);
    if (const json* f = r.member(list[i], where, "b", true)) r.get(*f, child(where, "b"), e.b);
    if (const json* f = r.member(list[i], where, "kind", false))
      r.get_enum(*f, child(where, "kind"), edge_kind_from,
                 "communication, physical_interference", e.kind);
    model.edges.push_back(std::move(e));
  }
}

template <typename Item>
void parse_named_list(SchemaReader& r, const json& list, const char* section,
                      std::vector<Item>& dst) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = element(section, i);
    if (!r.object(list[i], where)) continue;
    r.reject_unknown(list[i], where, {"id", "description"});
    Item item;
    if (const json* f = r.member(list[i], where, "id", true)) r.get(*f, child(where, "id"), item.id);
    if (const json* f = r.member(list[i], where, "description", false))
      r.get(*f, child(where, "description"), item.description);
    dst.push_back(std::move(item));
  }
}

void parse_map(SchemaReader& r, const json& list, const char* section,
               const char* target_key, CriticalityMap& map) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = element(section, i);
    if (!r.object(list[i], where)) continue;
    r.reject_unknown(list[i], where, {"device", target_key, "level", "min_capacity"});
    MapEntry entry;
    if (const json* f = r.member(list[i], where, "device", true))
      r.get(*f, child(where, "device"), entry.device);
    if (const json* f = r.member(list[i], where, target_key, true))
      r.get(*f, child(where, target_key), entry.target);
    if (const json* f = r.member(list[i], where, "level", true))
      r.get_enum(*f, child(where, "level"), involvement_from,
                 "not_involved, important, critical", entry.level);
    if (const json* f = r.member(list[i], where, "min_capacity", false)) {
      double capacity = 0.0;
      if (r.get(*f, child(where, "min_capacity"), capacity)) entry.min_capacity = capacity;
    }
    map.entries.push_back(std::move(entry));
  }
}

void parse_groups(SchemaReader& r, const json& list, EmbodimentModel& model) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = element("redundancy_groups", i);
    if (!r.object(list[i], where)) continue;
    r.reject_unknown(list[i], where, {"id", "members", "min_operational"});
    RedundancyGroup g;
    if (const json* f = r.member(list[i], where, "id", true)) r.get(*f, child(where, "id"), g.id);
    if (const json* f = r.member(list[i], where, "members", true))
      r.strings(*f, child(where, "members"), g.members);
    if (const json* f = r.member(list[i], where, "min_operational", false))
      r.get(*f, child(where, "min_operational"), g.min_operational);
    model.redundancy_groups.push_back(std::move(g));
  }
}

void parse_rules(SchemaReader& r, const json& list, EmbodimentModel& model) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = element("compensation_rules", i);
    if (!r.object(list[i], where)) continue;
    r.reject_unknown(list[i], where,
                     {"id", "trigger", "directive", "compensating_devices", "restores"});
    CompensationRule rule;
    if (const json* f = r.member(list[i], where, "id", true)) r.get(*f, child(where, "id"), rule.id);
    if (const json* f = r.member(list[i], where, "trigger", true)) {
      const std::string twhere = child(where, "trigger");
      if (r.object(*f, twhere)) {
        r.reject_unknown(*f, twhere, {"device", "health"});
        if (const json* g = r.member(*f, twhere, "device", true))
          r.get(*g, child(twhere, "device"), rule.trigger_device);
        if (const json* g = r.member(*f, twhere, "health", true))
          r.get_enum(*g, child(twhere, "health"), health_kind_from,
                     "operational, disrupted, degraded, manipulated, isolated",
                     rule.trigger_health);
      }
    }
    if (const json* f = r.member(list[i], where, "directive", false))
      r.get(*f, child(where, "directive"), rule.directive);
    if (const json* f = r.member(list[i], where, "compensating_devices", false))
      r.strings(*f, child(where, "compensating_devices"), rule.compensating_devices);
    if (const json* f = r.member(list[i], where, "restores", false))
      r.strings(*f, child(where, "restores"), rule.restores);
    model.compensation_rules.push_back(std::move(rule));
  }
}

void parse_attacks(SchemaReader& r, const json& list, std::vector<AttackAction>& attacks) {
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string where = element("attacks", i);
    if (!r.object(list[i], where)) continue;
    r.reject_unknown(list[i], where, {"time", "target", "kind", "rate_factor"});
    AttackAction a;
    if (const json* f = r.member(list[i], where, "time", true))
      r.get(*f, child(where, "time"), a.time);
    if (const json* f = r.member(list[i], where, "target", true))
      r.get(*f, child(where, "target"), a.target);
    if (const json* f = r.member(list[i], where, "kind", true))
      r.get_enum(*f, child(where, "kind"), attack_kind_from,
                 "disrupt, degrade, manipulate, restore", a.kind);
    if (const json* f = r.member(list[i], where, "rate_factor", false)) {
      double factor = 0.0;
      if (r.get(*f, child(where, "rate_factor"), factor)) a.rate_factor = factor;
    }
    attacks.push_back(std::move(a));
  }
}

// Range and cross-reference checks that need the assembled scenario.
void check_scenario(const Scenario& s, std::vector<Violation>& out) {
  ValidationReport model_report = validate_model(s.model);
  out.insert(out.end(), model_report.violations.begin(), model_report.violations.end());

  if (s.horizon < 1)
    out.push_back({"HORIZON_RANGE", "horizon", "horizon must be at least 1"});
  if (s.weights.alpha < 0.0)
    out.push_back({"WEIGHT_RANGE", "alpha", "alpha must be non-negative"});
  if (s.weights.beta < 0.0)
    out.push_back({"WEIGHT_RANGE", "beta", "beta must be non-negative"});
  if (s.thresholds.entry_point_risk < 0.0)
    out.push_back({"THRESHOLD_RANGE", "thresholds.entry_point_risk",
                   "entry_point_risk must be non-negative"});

  for (std::size_t i = 0; i < s.attacks.size(); ++i) {
    const AttackAction& a = s.attacks[i];
    const std::string where = element("attacks", i);
    if (!s.model.find_device(a.target))
      out.push_back({"UNKNOWN_DEVICE", child(where, "target"),
                     "device not in model: " + a.target});
    if (a.time < 0 || a.time >= s.horizon)
      out.push_back({"SCENARIO_TIME_RANGE", child(where, "time"),
                     "attack time must lie in [0, horizon)"});
    if (a.kind == AttackKind::Degrade) {
      if (!a.rate_factor) {
        out.push_back({"RATE_FACTOR_REQUIRED", child(where, "rate_factor"),
                       "degrade needs a rate_factor"});
      } else if (*a.rate_factor < 0.0 || *a.rate_factor >= 1.0) {
        out.push_back({"RATE_FACTOR_RANGE", child(where, "rate_factor"),
                       "rate_factor must be in [0,1)"});
      }
    } else if (a.rate_factor) {
      out.push_back({"RATE_FACTOR_FORBIDDEN", child(where, "rate_factor"),
                     "rate_factor is only valid for degrade"});
    }
  }
}

}  // namespace

ParseResult parse_scenario(const std::string& text) {
  ParseResult result;
  const json root = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded()) {
    result.violations.push_back({"SYNTAX", "", "input is not valid JSON"});
    return result;
  }

  SchemaReader r{result.violations};
  if (!r.object(root, "")) return result;
  r.reject_unknown(root, "",
                   {"devices", "edges", "tasks", "principles", "task_map", "principle_map",
                    "redundancy_groups", "thresholds", "compensation_rules", "attacks",
                    "alpha", "beta", "horizon", "seed"});

  Scenario s;
  if (const json* f = r.member(root, "", "devices", true)) {
    if (r.array(*f, "devices")) parse_devices(r, *f, s.model);
  }
  if (const json* f = r.member(root, "", "edges", false)) {
    if (r.array(*f, "edges")) parse_edges(r, *f, s.model);
  }
  if (const json* f = r.member(root, "", "tasks", false)) {
    if (r.array(*f, "tasks")) parse_named_list(r, *f, "tasks", s.model.tasks);
  }
  if (const json* f = r.member(root, "", "principles", false)) {
    if (r.array(*f, "principles")) parse_named_list(r, *f, "principles", s.model.principles);
  }
  if (const json* f = r.member(root, "", "task_map", false)) {
    if (r.array(*f, "task_map")) parse_map(r, *f, "task_map", "task", s.model.task_map);
  }
  if (const json* f = r.member(root, "", "principle_map", false)) {
    if (r.array(*f, "principle_map"))
      parse_map(r, *f, "principle_map", "principle", s.model.principle_map);
  }
  if (const json* f = r.member(root, "", "redundancy_groups", false)) {
    if (r.array(*f, "redundancy_groups")) parse_groups(r, *f, s.model);
  }
  if (const json* f = r.member(root, "", "compensation_rules", false)) {
    if (r.array(*f, "compensation_rules")) parse_rules(r, *f, s.model);
  }
  if (const json* f = r.member(root, "", "attacks", false)) {
    if (r.array(*f, "attacks")) parse_attacks(r, *f, s.attacks);
  }
  if (const json* f = r.member(root, "", "thresholds", false)) {
    if (r.object(*f, "thresholds")) {
      r.reject_unknown(*f, "thresholds", {"entry_point_risk"});
      if (const json* g = r.member(*f, "thresholds", "entry_point_risk", false))
        r.get(*g, "thresholds.entry_point_risk", s.thresholds.entry_point_risk);
    }
  }
  if (const json* f = r.member(root, "", "alpha", false)) r.get(*f, "alpha", s.weights.alpha);
  if (const json* f = r.member(root, "", "beta", false)) r.get(*f, "beta", s.weights.beta);
  if (const json* f = r.member(root, "", "seed", false)) r.get(*f, "seed", s.seed);
  if (const json* f = r.member(root, "", "horizon", false)) {
    r.get(*f, "horizon", s.horizon);
  } else {
    // Default: just long enough to play out every attack.
    s.horizon = 1;
    for (const auto& a : s.attacks) s.horizon = std::max(s.horizon, a.time + 1);
  }

  if (!result.violations.empty()) return result;

  check_scenario(s, result.violations);
  if (!result.violations.empty()) return result;

  sort_attacks(s.attacks);
  result.scenario = std::move(s);
  return result;
}

std::string serialize_scenario(const Scenario& scenario) {
  json root = json::object();
  root["alpha"] = scenario.weights.alpha;
  root["beta"] = scenario.weights.beta;
  root["horizon"] = scenario.horizon;
  root["seed"] = scenario.seed;
  root["thresholds"] = {{"entry_point_risk", scenario.thresholds.entry_point_risk}};

  json devices = json::array();
  for (const auto& d : scenario.model.devices) {
    devices.push_back({{"id", d.id},
                       {"kind", d.kind},
                       {"vulnerability", d.vulnerability},
                       {"embodiment_criticality", d.embodiment_criticality}});
  }
  root["devices"] = std::move(devices);

  json edges = json::array();
  for (const auto& e : scenario.model.edges)
    edges.push_back({{"a", e.a}, {"b", e.b}, {"kind", to_string(e.kind)}});
  root["edges"] = std::move(edges);

  json tasks = json::array();
  for (const auto& t : scenario.model.tasks)
    tasks.push_back({{"id", t.id}, {"description", t.description}});
  root["tasks"] = std::move(tasks);

  json principles = json::array();
  for (const auto& p : scenario.model.principles)
    principles.push_back({{"id", p.id}, {"description", p.description}});
  root["principles"] = std::move(principles);

  auto map_to_json = [](const CriticalityMap& map, const char* target_key) {
    json list = json::array();
    for (const auto& entry : map.entries) {
      json item = {{"device", entry.device},
                   {target_key, entry.target},
                   {"level", to_string(entry.level)}};
      if (entry.min_capacity) item["min_capacity"] = *entry.min_capacity;
      list.push_back(std::move(item));
    }
    return list;
  };
  root["task_map"] = map_to_json(scenario.model.task_map, "task");
  root["principle_map"] = map_to_json(scenario.model.principle_map, "principle");

  json groups = json::array();
  for (const auto& g : scenario.model.redundancy_groups) {
    groups.push_back(
        {{"id", g.id}, {"members", g.members}, {"min_operational", g.min_operational}});
  }
  root["redundancy_groups"] = std::move(groups);

  json rules = json::array();
  for (const auto& rule : scenario.model.compensation_rules) {
    rules.push_back({{"id", rule.id},
                     {"trigger",
                      {{"device", rule.trigger_device},
                       {"health", to_string(rule.trigger_health)}}},
                     {"directive", rule.directive},
                     {"compensating_devices", rule.compensating_devices},
                     {"restores", rule.restores}});
  }
  root["compensation_rules"] = std::move(rules);

  std::vector<AttackAction> attacks = scenario.attacks;
  sort_attacks(attacks);
  json attack_list = json::array();
  for (const auto& a : attacks) {
    json item = {{"time", a.time}, {"target", a.target}, {"kind", to_string(a.kind)}};
    if (a.rate_factor) item["rate_factor"] = *a.rate_factor;
    attack_list.push_back(std::move(item));
  }
  root["attacks"] = std::move(attack_list);

  return canonical_dump(root) + "\n";
}

namespace {

Scenario make_scenario_a() {
  Scenario s;
  EmbodimentModel& m = s.model;

  const std::vector<DeviceId> wheels = {"Wheel 1", "Wheel 2", "Wheel 3", "Wheel 4"};
  for (const auto& w : wheels) m.devices.push_back({w, "wheel-motor", 0.2, 2});
  m.devices.push_back({"Camera", "camera", 0.5, 3});
  m.devices.push_back({"Robotic Arm", "robotic-arm", 0.9, 1});

  // The wheel controllers coordinate with each other; the camera guides
  // the arm. The arm can also physically block the camera's view, which
  // counts as a hidden coupling channel.
  for (std::size_t i = 0; i < wheels.size(); ++i)
    for (std::size_t j = i + 1; j < wheels.size(); ++j)
      m.edges.push_back({wheels[i], wheels[j], EdgeKind::Communication});
  m.edges.push_back({"Camera", "Robotic Arm", EdgeKind::Communication});
  m.edges.push_back({"Camera", "Robotic Arm", EdgeKind::PhysicalInterference});

  m.tasks = {{"Move", "Drive the platform between waypoints"},
             {"Find Object", "Locate the target object with the camera"},
             {"Pick Object", "Grasp the located object with the arm"},
             {"Drop Object", "Release the object at the destination"}};
  m.principles = {{"Avoid Obstacles", "Never drive into an obstacle"},
                  {"Avoid Stairs", "Never drive off a descending edge"}};

  for (const auto& w : wheels)
    m.task_map.entries.push_back({w, "Move", InvolvementLevel::Important, {}});
  m.task_map.entries.push_back({"Camera", "Move", InvolvementLevel::Critical, {}});
  m.task_map.entries.push_back({"Camera", "Find Object", InvolvementLevel::Critical, {}});
  m.task_map.entries.push_back({"Robotic Arm", "Pick Object", InvolvementLevel::Critical, {}});
  m.task_map.entries.push_back({"Robotic Arm", "Drop Object", InvolvementLevel::Critical, {}});

  for (const auto& w : wheels) {
    m.principle_map.entries.push_back({w, "Avoid Obstacles", InvolvementLevel::Important, {}});
    m.principle_map.entries.push_back({w, "Avoid Stairs", InvolvementLevel::Important, {}});
  }
  m.principle_map.entries.push_back({"Camera", "Avoid Obstacles", InvolvementLevel::Critical, {}});
  m.principle_map.entries.push_back({"Camera", "Avoid Stairs", InvolvementLevel::Critical, {}});

  // The platform can still drive with three of the four wheels answering.
  m.redundancy_groups.push_back({"wheels", wheels, 3});

  // Each wheel's diagonally opposite twin can be re-commanded to match a
  // tampered wheel's speed, keeping the platform on course.
  const std::vector<std::pair<int, int>> opposite = {{1, 4}, {2, 3}, {3, 2}, {4, 1}};
  for (const auto& [wheel, twin] : opposite) {
    const std::string wheel_id = "Wheel " + std::to_string(wheel);
    const std::string twin_id = "Wheel " + std::to_string(twin);
    m.compensation_rules.push_back(
        {"wheel-" + std::to_string(wheel) + "-opposite", wheel_id,
         HealthKind::Manipulated,
         "Drive " + twin_id + " at " + wheel_id + "'s commanded speed",
         {twin_id},
         {"Move", "Avoid Obstacles", "Avoid Stairs"}});
  }

  s.attacks = {{0, "Robotic Arm", AttackKind::Disrupt, {}}};
  s.horizon = 3;
  s.seed = 0;
  return s;
}

Scenario make_scenario_b() {
  Scenario s;
  EmbodimentModel& m = s.model;

  m.devices.push_back({"Gyroscope", "imu", 0.3, 3});
  m.devices.push_back({"Leg 1", "leg-actuator", 0.2, 2});
  m.devices.push_back({"Leg 2", "leg-actuator", 0.2, 2});
  m.devices.push_back({"LiDAR 1", "lidar", 0.4, 3});
  m.devices.push_back({"LiDAR 2", "lidar", 0.4, 3});

  // Balance data and range data both feed the leg controllers.
  for (const auto& leg : {"Leg 1", "Leg 2"}) {
    m.edges.push_back({"Gyroscope", leg, EdgeKind::Communication});
    m.edges.push_back({"LiDAR 1", leg, EdgeKind::Communication});
    m.edges.push_back({"LiDAR 2", leg, EdgeKind::Communication});
  }

  m.tasks = {{"Patrol", "Walk the corridor route on two legs"}};
  m.principles = {{"Maintain Balance", "Stay upright at all times"},
                  {"Avoid Obstacles", "Never walk into an obstacle"},
                  {"Avoid Stairs", "Never step off a descending edge"}};

  for (const auto& d : m.devices)
    m.task_map.entries.push_back({d.id, "Patrol", InvolvementLevel::Critical, {}});

  // The balance loop tolerates a modest slowdown of gyroscope updates;
  // below 80% of the nominal rate the robot can no longer catch itself.
  // The floor is a configured assumption of this scenario.
  m.principle_map.entries.push_back(
      {"Gyroscope", "Maintain Balance", InvolvementLevel::Critical, 0.8});
  for (const auto& leg : {"Leg 1", "Leg 2"}) {
    m.principle_map.entries.push_back(
        {leg, "Maintain Balance", InvolvementLevel::Important, {}});
    m.principle_map.entries.push_back(
        {leg, "Avoid Obstacles", InvolvementLevel::Important, {}});
    m.principle_map.entries.push_back({leg, "Avoid Stairs", InvolvementLevel::Important, {}});
  }
  for (const auto& lidar : {"LiDAR 1", "LiDAR 2"}) {
    m.principle_map.entries.push_back(
        {lidar, "Avoid Obstacles", InvolvementLevel::Critical, {}});
    m.principle_map.entries.push_back(
        {lidar, "Avoid Stairs", InvolvementLevel::Critical, {}});
  }

  // Either LiDAR alone suffices for range sensing.
  m.redundancy_groups.push_back({"lidars", {"LiDAR 1", "LiDAR 2"}, 1});

  s.attacks = {{0, "LiDAR 1", AttackKind::Disrupt, {}},
               {1, "Gyroscope", AttackKind::Degrade, 0.5}};
  s.horizon = 3;
  s.seed = 0;
  return s;
}

}  // namespace

std::vector<std::string> builtin_ids() { return {"scenario-a", "scenario-b"}; }

std::optional<Scenario> builtin_scenario(const std::string& id) {
  if (id == "scenario-a") return make_scenario_a();
  if (id == "scenario-b") return make_scenario_b();
  return std::nullopt;
}

Scenario wheel_compensation_demo(bool with_rule) {
  Scenario s = make_scenario_a();
  EmbodimentModel& m = s.model;

  // Tight formation driving: every wheel must answer for Move to proceed.
  for (auto& entry : m.task_map.entries) {
    if (entry.target == "Move" && entry.device.starts_with("Wheel"))
      entry.level = InvolvementLevel::Critical;
  }
  m.redundancy_groups[0].min_operational = 4;

  // Keep only the camera's principle entries so the demo turns purely on
  // the wheel compensation choice.
  std::erase_if(m.principle_map.entries,
                [](const MapEntry& entry) { return entry.device != "Camera"; });

  m.compensation_rules.clear();
  if (with_rule) {
    m.compensation_rules.push_back({"wheel-2-opposite", "Wheel 2",
                                    HealthKind::Manipulated,
                                    "Drive Wheel 3 at Wheel 2's commanded speed",
                                    {"Wheel 3"},
                                    {"Move"}});
  }

  s.attacks = {{0, "Wheel 2", AttackKind::Manipulate, {}}};
  s.horizon = 2;
  return s;
}

}  // namespace embsec
