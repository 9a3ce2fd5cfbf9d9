// Structural queries and validation diagnostics on the embodiment model.
#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"

#include "embsec/model.hpp"
#include "embsec/scenario_io.hpp"

namespace {

embsec::EmbodimentModel base_model() {
  return embsec::builtin_scenario("scenario-a")->model;
}

bool has_violation(const embsec::ValidationReport& report, const std::string& code) {
  for (const auto& violation : report.violations)
    if (violation.code == code) return true;
  return false;
}

std::string where_of(const embsec::ValidationReport& report, const std::string& code) {
  for (const auto& violation : report.violations)
    if (violation.code == code) return violation.where;
  return {};
}

}  // namespace

TEST_CASE("find lookups resolve ids and reject unknowns with nullptr") {
  const auto model = base_model();
  REQUIRE(model.find_device("Camera") != nullptr);
  CHECK(model.find_device("Camera")->vulnerability == doctest::Approx(0.5));
  CHECK(model.find_device("Camera")->embodiment_criticality == 3);
  CHECK(model.find_device("nope") == nullptr);
  REQUIRE(model.find_task("Move") != nullptr);
  CHECK(model.find_task("nope") == nullptr);
  REQUIRE(model.find_principle("Avoid Stairs") != nullptr);
  CHECK(model.find_principle("nope") == nullptr);
}

TEST_CASE("group_of returns the containing group and nullptr for singletons") {
  const auto model = base_model();
  REQUIRE(model.group_of("Wheel 2") != nullptr);
  CHECK(model.group_of("Wheel 2")->id == "wheels");
  CHECK(model.group_of("Wheel 2")->min_operational == 3);
  CHECK(model.group_of("Camera") == nullptr);
  CHECK(model.group_of("nope") == nullptr);
}

TEST_CASE("neighbors are symmetric, deduplicated, and kind-filterable") {
  const auto model = base_model();
  // The camera and the arm share both a communication edge and a
  // physical-interference edge; the neighbor set lists the arm once.
  CHECK(embsec::neighbors(model, "Camera") == std::set<embsec::DeviceId>{"Robotic Arm"});
  CHECK(embsec::neighbors(model, "Robotic Arm") == std::set<embsec::DeviceId>{"Camera"});
  CHECK(embsec::neighbors(model, "Camera", embsec::kEdgeCommunication) ==
        std::set<embsec::DeviceId>{"Robotic Arm"});
  CHECK(embsec::neighbors(model, "Camera", embsec::kEdgePhysicalInterference) ==
        std::set<embsec::DeviceId>{"Robotic Arm"});
  CHECK(embsec::neighbors(model, "Wheel 1").size() == 3);
  CHECK(embsec::neighbors(model, "Wheel 1", embsec::kEdgePhysicalInterference).empty());
  CHECK_THROWS_AS((void)embsec::neighbors(model, "nope"), std::invalid_argument);
}

TEST_CASE("involvement reads map cells and defaults to not involved") {
  const auto model = base_model();
  CHECK(embsec::task_involvement(model, "Camera", "Move") ==
        embsec::InvolvementLevel::Critical);
  CHECK(embsec::task_involvement(model, "Wheel 1", "Move") ==
        embsec::InvolvementLevel::Important);
  CHECK(embsec::task_involvement(model, "Robotic Arm", "Move") ==
        embsec::InvolvementLevel::NotInvolved);
  CHECK(embsec::principle_involvement(model, "Camera", "Avoid Obstacles") ==
        embsec::InvolvementLevel::Critical);
  CHECK_THROWS_AS((void)embsec::task_involvement(model, "Camera", "nope"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)embsec::task_involvement(model, "nope", "Move"),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)embsec::principle_involvement(model, "Camera", "nope"),
                  std::invalid_argument);
}

TEST_CASE("required_capacity uses the explicit threshold or the level default") {
  embsec::MapEntry entry{"d", "t", embsec::InvolvementLevel::Critical, std::nullopt};
  CHECK(embsec::required_capacity(entry) == doctest::Approx(0.8));
  entry.level = embsec::InvolvementLevel::Important;
  CHECK(embsec::required_capacity(entry) == doctest::Approx(0.5));
  entry.min_capacity = 0.25;
  CHECK(embsec::required_capacity(entry) == doctest::Approx(0.25));
}

TEST_CASE("validate_model accepts the built-in models") {
  CHECK(embsec::validate_model(base_model()).ok());
  CHECK(embsec::validate_model(embsec::builtin_scenario("scenario-b")->model).ok());
  CHECK(embsec::validate_model(embsec::wheel_compensation_demo(true).model).ok());
  CHECK(embsec::validate_model(embsec::wheel_compensation_demo(false).model).ok());
}

TEST_CASE("validate_model flags malformed devices") {
  auto model = base_model();
  model.devices.push_back({"", "x", 0.5, 2});
  model.devices.push_back({"Camera", "x", 1.5, 0});
  const auto report = embsec::validate_model(model);
  CHECK(has_violation(report, "EMPTY_ID"));
  CHECK(has_violation(report, "DUPLICATE_DEVICE"));
  CHECK(has_violation(report, "V_RANGE"));
  CHECK(has_violation(report, "E_RANGE"));
  CHECK(where_of(report, "V_RANGE").find("vulnerability") != std::string::npos);
}

TEST_CASE("validate_model flags malformed edges") {
  auto model = base_model();
  model.edges.push_back({"Camera", "Camera", embsec::EdgeKind::Communication});
  model.edges.push_back({"Camera", "nope", embsec::EdgeKind::Communication});
  model.edges.push_back({"Robotic Arm", "Camera", embsec::EdgeKind::Communication});
  const auto report = embsec::validate_model(model);
  CHECK(has_violation(report, "SELF_LOOP"));
  CHECK(has_violation(report, "UNKNOWN_DEVICE"));
  // Same unordered pair and kind as an existing edge, reversed endpoints.
  CHECK(has_violation(report, "DUPLICATE_EDGE"));
}

TEST_CASE("validate_model flags duplicate tasks and principles") {
  auto model = base_model();
  model.tasks.push_back({"Move", ""});
  model.principles.push_back({"Avoid Stairs", ""});
  const auto report = embsec::validate_model(model);
  CHECK(has_violation(report, "DUPLICATE_TASK"));
  CHECK(has_violation(report, "DUPLICATE_PRINCIPLE"));
}

TEST_CASE("validate_model flags bad involvement map entries") {
  auto model = base_model();
  model.task_map.entries.push_back(
      {"nope", "Move", embsec::InvolvementLevel::Important, std::nullopt});
  model.task_map.entries.push_back(
      {"Camera", "nope", embsec::InvolvementLevel::Important, std::nullopt});
  model.task_map.entries.push_back(
      {"Camera", "Move", embsec::InvolvementLevel::Important, std::nullopt});
  model.principle_map.entries.push_back(
      {"Camera", "nope", embsec::InvolvementLevel::Important, std::nullopt});
  model.principle_map.entries.push_back(
      {"Wheel 1", "Avoid Stairs", embsec::InvolvementLevel::Important, 1.25});
  const auto report = embsec::validate_model(model);
  CHECK(has_violation(report, "UNKNOWN_DEVICE"));
  CHECK(has_violation(report, "UNKNOWN_TASK"));
  CHECK(has_violation(report, "UNKNOWN_PRINCIPLE"));
  CHECK(has_violation(report, "DUPLICATE_MAP_ENTRY"));
  CHECK(has_violation(report, "MIN_CAPACITY_RANGE"));
}

TEST_CASE("validate_model flags redundancy group problems") {
  auto model = base_model();
  model.redundancy_groups.push_back({"empty", {}, 1});
  model.redundancy_groups.push_back({"wheels", {"Camera"}, 1});
  model.redundancy_groups.push_back({"overlap", {"Wheel 1", "Robotic Arm"}, 1});
  model.redundancy_groups.push_back({"dup", {"Camera", "Camera"}, 1});
  model.redundancy_groups.push_back({"range", {"Robotic Arm"}, 5});
  const auto report = embsec::validate_model(model);
  CHECK(has_violation(report, "GROUP_EMPTY"));
  CHECK(has_violation(report, "DUPLICATE_GROUP"));
  CHECK(has_violation(report, "GROUP_OVERLAP"));
  CHECK(has_violation(report, "DUPLICATE_MEMBER"));
  CHECK(has_violation(report, "GROUP_MIN_RANGE"));
}

TEST_CASE("validate_model flags compensation rule problems") {
  auto model = base_model();
  auto rule = model.compensation_rules.front();
  rule.id = "bad-refs";
  rule.trigger_device = "nope";
  rule.compensating_devices = {"also-nope"};
  rule.restores = {"not-a-task-or-principle"};
  model.compensation_rules.push_back(rule);
  model.compensation_rules.push_back(model.compensation_rules.front());
  const auto report = embsec::validate_model(model);
  CHECK(has_violation(report, "UNKNOWN_DEVICE"));
  CHECK(has_violation(report, "UNKNOWN_RESTORE_TARGET"));
  CHECK(has_violation(report, "DUPLICATE_RULE"));
}

TEST_CASE("violations carry machine-readable codes and field locations") {
  auto model = base_model();
  model.devices.push_back({"Extra", "x", -0.1, 2});
  const auto report = embsec::validate_model(model);
  REQUIRE(!report.ok());
  bool found = false;
  for (const auto& violation : report.violations) {
    if (violation.code != "V_RANGE") continue;
    found = true;
    CHECK(violation.where == "devices[Extra].vulnerability");
    CHECK(!violation.message.empty());
  }
  CHECK(found);
}
