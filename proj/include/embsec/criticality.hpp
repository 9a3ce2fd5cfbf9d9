// criticality.hpp - overall device criticality scoring, Low/Medium/High
// banding, and lateral-movement entry-point ranking over the coupling graph.
#pragma once

#include <vector>

#include "embsec/model.hpp"

namespace embsec {

// Tuning weights: alpha scales the device's own risk, beta the averaged
// risk of its direct neighbors.
struct Weights {
  double alpha = 1.0;
  double beta = 1.0;

  bool operator==(const Weights&) const = default;
};

enum class Band { Low, Medium, High };

struct CriticalityScore {
  DeviceId device;
  double raw = 0.0;
  Band band = Band::Low;

  bool operator==(const CriticalityScore&) const = default;
};

// A simple path from an entry device to an embodiment-critical target.
// risk = (product of V over every device on the path except the target)
//        * E of the target; always within [0, 3].
struct PathRisk {
  std::vector<DeviceId> path;  // entry first, target last, >= 2 devices
  double risk = 0.0;

  bool operator==(const PathRisk&) const = default;
};

struct EntryPoint {
  DeviceId entry;
  PathRisk path_risk;

  bool operator==(const EntryPoint&) const = default;
};

// Longest lateral path considered, counted in devices.
inline constexpr int kMaxLateralPathDevices = 6;

// Low for raw < 0.5, Medium for raw < 1.5, High from 1.5 up.
Band band_of(double raw);

// raw = alpha*(V_d*E_d) + beta*(1/n)*sum over neighbors of (V_i*E_i),
// with the neighbor term defined as 0 when the device has no neighbors.
// Neighbors are taken over both edge kinds. Throws std::invalid_argument
// for an unknown device.
CriticalityScore overall_criticality(const EmbodimentModel& model,
                                     const DeviceId& device, Weights w);

// One score per device, sorted by raw descending, ties by device id.
std::vector<CriticalityScore> score_all(const EmbodimentModel& model, Weights w);

// All simple paths of 2..kMaxLateralPathDevices devices ending at a device
// with embodiment_criticality = 3, keeping those with risk >= risk_threshold.
// Sorted by risk descending, then entry id, then path. The weights are part
// of the assessment context but do not enter the path-risk product.
std::vector<EntryPoint> entry_points(const EmbodimentModel& model, Weights w,
                                     double risk_threshold);

}  // namespace embsec
