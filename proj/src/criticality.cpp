#include "embsec/criticality.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace embsec {

Band band_of(double raw) {
  if (raw < 0.5) return Band::Low;
  if (raw < 1.5) return Band::Medium;
  return Band::High;
}

CriticalityScore overall_criticality(const EmbodimentModel& model,
                                     const DeviceId& device, Weights w) {
  const Device* d = model.find_device(device);
  if (!d) throw std::invalid_argument("unknown device id: " + device);

  const std::set<DeviceId> around = neighbors(model, device, kEdgeAll);
  double neighbor_sum = 0.0;
  for (const auto& id : around) {
    const Device* n = model.find_device(id);
    neighbor_sum += n->vulnerability * n->embodiment_criticality;
  }
  // An isolated device has no lateral exposure; its neighbor term is 0.
  const double neighbor_term =
      around.empty() ? 0.0 : neighbor_sum / static_cast<double>(around.size());

  const double raw = w.alpha * d->vulnerability * d->embodiment_criticality +
                     w.beta * neighbor_term;
  return {device, raw, band_of(raw)};
}

std::vector<CriticalityScore> score_all(const EmbodimentModel& model,
                                        Weights w) {
  std::vector<CriticalityScore> scores;
  scores.reserve(model.devices.size());
  for (const auto& d : model.devices)
    scores.push_back(overall_criticality(model, d.id, w));
  std::sort(scores.begin(), scores.end(),
            [](const CriticalityScore& x, const CriticalityScore& y) {
              if (x.raw != y.raw) return x.raw > y.raw;
              return x.device < y.device;
            });
  return scores;
}

namespace {

void extend_paths(const EmbodimentModel& model,
                  const std::map<DeviceId, std::set<DeviceId>>& adjacency,
                  std::vector<DeviceId>& path, std::set<DeviceId>& on_path,
                  double v_product, double risk_threshold,
                  std::vector<EntryPoint>& out) {
  const DeviceId& tail = path.back();
  for (const auto& next : adjacency.at(tail)) {
    if (on_path.count(next)) continue;
    const Device* d = model.find_device(next);
    path.push_back(next);
    on_path.insert(next);
    if (d->embodiment_criticality == 3) {
      const double risk = v_product * d->embodiment_criticality;
      if (risk >= risk_threshold) out.push_back({path.front(), {path, risk}});
    }
    if (static_cast<int>(path.size()) < kMaxLateralPathDevices)
      extend_paths(model, adjacency, path, on_path,
                   v_product * d->vulnerability, risk_threshold, out);
    on_path.erase(next);
    path.pop_back();
  }
}

}  // namespace

std::vector<EntryPoint> entry_points(const EmbodimentModel& model, Weights,
                                     double risk_threshold) {
  std::map<DeviceId, std::set<DeviceId>> adjacency;
  for (const auto& d : model.devices)
    adjacency.emplace(d.id, neighbors(model, d.id, kEdgeAll));

  std::vector<EntryPoint> out;
  for (const auto& d : model.devices) {
    std::vector<DeviceId> path = {d.id};
    std::set<DeviceId> on_path = {d.id};
    extend_paths(model, adjacency, path, on_path, d.vulnerability,
                 risk_threshold, out);
  }
  std::sort(out.begin(), out.end(), [](const EntryPoint& x, const EntryPoint& y) {
    if (x.path_risk.risk != y.path_risk.risk)
      return x.path_risk.risk > y.path_risk.risk;
    if (x.entry != y.entry) return x.entry < y.entry;
    return x.path_risk.path < y.path_risk.path;
  });
  return out;
}

}  // namespace embsec
