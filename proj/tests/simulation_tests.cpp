// Discrete-step attack timeline semantics.
#include <stdexcept>

#include "doctest.h"

#include "embsec/scenario_io.hpp"
#include "embsec/simulation.hpp"

namespace {

embsec::Scenario base_scenario() { return *embsec::builtin_scenario("scenario-a"); }

}  // namespace

TEST_CASE("initial snapshot covers every device as operational at step zero") {
  const auto scenario = base_scenario();
  const auto snapshot = embsec::initial_snapshot(scenario.model);
  CHECK(snapshot.time == 0);
  REQUIRE(snapshot.states.size() == scenario.model.devices.size());
  for (const auto& [id, health] : snapshot.states)
    CHECK(health == embsec::Health::operational());
  CHECK(snapshot.health("Camera") == embsec::Health::operational());
  CHECK_THROWS_AS((void)snapshot.health("nope"), std::invalid_argument);
}

TEST_CASE("apply_action maps each attack kind onto the target state") {
  const auto model = base_scenario().model;
  const auto start = embsec::initial_snapshot(model);

  auto after = embsec::apply_action(start, {0, "Camera", embsec::AttackKind::Disrupt, {}});
  CHECK(after.health("Camera") == embsec::Health::disrupted());
  CHECK(after.health("Wheel 1") == embsec::Health::operational());

  after = embsec::apply_action(start, {0, "Camera", embsec::AttackKind::Degrade, 0.37});
  CHECK(after.health("Camera") == embsec::Health::degraded(0.37));

  after = embsec::apply_action(start, {0, "Camera", embsec::AttackKind::Manipulate, {}});
  CHECK(after.health("Camera") == embsec::Health::manipulated());

  CHECK_THROWS_AS(
      (void)embsec::apply_action(start, {0, "nope", embsec::AttackKind::Disrupt, {}}),
      std::invalid_argument);
}

TEST_CASE("later attacks overwrite earlier health states") {
  const auto model = base_scenario().model;
  auto snapshot = embsec::initial_snapshot(model);
  snapshot = embsec::apply_action(snapshot, {0, "Camera", embsec::AttackKind::Degrade, 0.9});
  snapshot = embsec::apply_action(snapshot, {0, "Camera", embsec::AttackKind::Disrupt, {}});
  CHECK(snapshot.health("Camera") == embsec::Health::disrupted());
}

TEST_CASE("restore returns a device to operational unless it was isolated") {
  const auto model = base_scenario().model;
  auto snapshot = embsec::initial_snapshot(model);
  snapshot = embsec::apply_action(snapshot, {0, "Camera", embsec::AttackKind::Disrupt, {}});
  snapshot = embsec::apply_action(snapshot, {0, "Camera", embsec::AttackKind::Restore, {}});
  CHECK(snapshot.health("Camera") == embsec::Health::operational());

  // Containment is not undone by an attacker-visible restore.
  snapshot.states["Camera"] = embsec::Health::isolated();
  snapshot = embsec::apply_action(snapshot, {0, "Camera", embsec::AttackKind::Restore, {}});
  CHECK(snapshot.health("Camera") == embsec::Health::isolated());
}

TEST_CASE("run yields one snapshot per step and persists states") {
  const auto scenario = base_scenario();  // arm disrupted at step 0, horizon 3
  const auto snapshots = embsec::run(scenario);
  REQUIRE(snapshots.size() == 3);
  for (int t = 0; t < 3; ++t) {
    CHECK(snapshots[static_cast<std::size_t>(t)].time == t);
    CHECK(snapshots[static_cast<std::size_t>(t)].health("Robotic Arm") ==
          embsec::Health::disrupted());
    CHECK(snapshots[static_cast<std::size_t>(t)].health("Camera") ==
          embsec::Health::operational());
  }
}

TEST_CASE("run without attacks keeps every device operational") {
  auto scenario = base_scenario();
  scenario.attacks.clear();
  scenario.horizon = 2;
  const auto snapshots = embsec::run(scenario);
  REQUIRE(snapshots.size() == 2);
  for (const auto& snapshot : snapshots)
    for (const auto& [id, health] : snapshot.states)
      CHECK(health == embsec::Health::operational());
}

TEST_CASE("run applies degrade and restore at their scheduled steps") {
  auto scenario = base_scenario();
  scenario.attacks = {{1, "Camera", embsec::AttackKind::Degrade, 0.5},
                      {2, "Camera", embsec::AttackKind::Restore, {}}};
  embsec::sort_attacks(scenario.attacks);
  scenario.horizon = 4;
  const auto snapshots = embsec::run(scenario);
  REQUIRE(snapshots.size() == 4);
  CHECK(snapshots[0].health("Camera") == embsec::Health::operational());
  CHECK(snapshots[1].health("Camera") == embsec::Health::degraded(0.5));
  CHECK(snapshots[2].health("Camera") == embsec::Health::operational());
  CHECK(snapshots[3].health("Camera") == embsec::Health::operational());
}

TEST_CASE("same-step actions on one target apply in list order") {
  auto scenario = base_scenario();
  scenario.attacks = {{0, "Camera", embsec::AttackKind::Disrupt, {}},
                      {0, "Camera", embsec::AttackKind::Manipulate, {}}};
  scenario.horizon = 1;
  const auto snapshots = embsec::run(scenario);
  REQUIRE(snapshots.size() == 1);
  CHECK(snapshots[0].health("Camera") == embsec::Health::manipulated());
}

TEST_CASE("sort_attacks orders by time then target, keeping equal keys stable") {
  std::vector<embsec::AttackAction> attacks = {
      {2, "b", embsec::AttackKind::Disrupt, {}},
      {0, "z", embsec::AttackKind::Disrupt, {}},
      {2, "a", embsec::AttackKind::Manipulate, {}},
      {2, "a", embsec::AttackKind::Disrupt, {}},
  };
  embsec::sort_attacks(attacks);
  REQUIRE(attacks.size() == 4);
  CHECK(attacks[0].target == "z");
  CHECK(attacks[1].target == "a");
  CHECK(attacks[1].kind == embsec::AttackKind::Manipulate);  // stable
  CHECK(attacks[2].target == "a");
  CHECK(attacks[2].kind == embsec::AttackKind::Disrupt);
  CHECK(attacks[3].target == "b");
}
