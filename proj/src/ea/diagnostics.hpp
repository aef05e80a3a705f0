// Copyright 2026 The euler-arnold Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Conserved quantities, drift reports and totally-geodesic monitors.

#include <string>
#include <vector>

#include "ea/models.hpp"
#include "ea/trajectory.hpp"

namespace ea::diagnostics {

inline constexpr double kDriftEpsilon = 1e-14;
inline constexpr double kEnergyTolerance = 1e-8;
inline constexpr double kQuadraticTolerance = 1e-8;
inline constexpr double kLinearTolerance = 1e-8;
inline constexpr double kMomentTolerance = 1e-4;       // int omega^p, p = 3, 4
inline constexpr double kScalarMomentTolerance = 1e-6; // int rho^p, p >= 3
inline constexpr double kMonitorThreshold = 1e-11;

struct Invariant {
  std::string name;
  double value = 0.0;
  /// 0 marks an informational quantity without a verdict.
  double tolerance = 0.0;
};

double energy(const models::ModelSpec& spec, const models::ModelState& s);

/// Model-specific invariants in a stable order (energy excluded).
std::vector<Invariant> invariants(const models::ModelSpec& spec, const models::ModelState& s);

/// |v - v0| / max(|v0|, kDriftEpsilon).
double drift(double value, double initial);

/// int f^p over the torus on a padded grid where the p-fold product is
/// alias-free, so the result is exact for band-limited f.
double moment(const models::Field2D& f, int p);

struct InvariantEntry {
  std::string name;
  double initial = 0.0;
  double current = 0.0;
  double max_drift = 0.0;
  double tolerance = 0.0;
  bool checked() const { return tolerance > 0.0; }
  bool passed() const { return !checked() || max_drift <= tolerance; }
};

struct InvariantReport {
  std::vector<InvariantEntry> entries;  // energy first
  bool all_passed() const;
  const InvariantEntry* find(const std::string& name) const;
};

/// Maximum drift of energy and every invariant over the recorded states.
InvariantReport drift_report(const models::ModelSpec& spec, const Trajectory& traj);

bool has_monitor(models::ModelId id);

struct MonitorReport {
  double max_mean_u = 0.0;    // harmonic velocity components
  double max_integral_f = 0.0; // int f (passive scalar) or int xi (Boussinesq)
  double threshold = kMonitorThreshold;
  bool passed() const { return max_mean_u <= threshold && max_integral_f <= threshold; }
};

/// Requires a monitored model and an initial state inside the subalgebra.
MonitorReport monitor_totally_geodesic(const models::ModelSpec& spec, const Trajectory& traj);

}  // namespace ea::diagnostics
