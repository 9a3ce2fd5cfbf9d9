#include "embsec/simulation.hpp"

#include <algorithm>
#include <stdexcept>

namespace embsec {

const Health& Snapshot::health(const DeviceId& id) const {
  auto it = states.find(id);
  if (it == states.end())
    throw std::invalid_argument("unknown device id: " + id);
  return it->second;
}

Snapshot initial_snapshot(const EmbodimentModel& model) {
  Snapshot s;
  for (const auto& d : model.devices) s.states.emplace(d.id, Health::operational());
  return s;
}

Snapshot apply_action(const Snapshot& snapshot, const AttackAction& action) {
  Snapshot next = snapshot;
  auto it = next.states.find(action.target);
  if (it == next.states.end())
    throw std::invalid_argument("unknown device id: " + action.target);
  switch (action.kind) {
    case AttackKind::Disrupt:
      it->second = Health::disrupted();
      break;
    case AttackKind::Degrade:
      it->second = Health::degraded(action.rate_factor.value_or(0.0));
      break;
    case AttackKind::Manipulate:
      it->second = Health::manipulated();
      break;
    case AttackKind::Restore:
      if (it->second.kind != HealthKind::Isolated)
        it->second = Health::operational();
      break;
  }
  return next;
}

std::vector<Snapshot> run(const Scenario& scenario) {
  std::vector<Snapshot> out;
  out.reserve(static_cast<std::size_t>(scenario.horizon));
  Snapshot current = initial_snapshot(scenario.model);
  std::size_t next_action = 0;
  for (int t = 0; t < scenario.horizon; ++t) {
    current.time = t;
    while (next_action < scenario.attacks.size() &&
           scenario.attacks[next_action].time == t) {
      current = apply_action(current, scenario.attacks[next_action]);
      current.time = t;
      ++next_action;
    }
    out.push_back(current);
  }
  return out;
}

void sort_attacks(std::vector<AttackAction>& attacks) {
  std::stable_sort(attacks.begin(), attacks.end(),
                   [](const AttackAction& x, const AttackAction& y) {
                     if (x.time != y.time) return x.time < y.time;
                     return x.target < y.target;
                   });
}

}  // namespace embsec
