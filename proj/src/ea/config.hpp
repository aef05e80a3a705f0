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
// Run configuration: a JSON document, parsed strictly. Every semantic error
// is reported with the line of the offending key.
//
//   {
//     "model": "burgers",
//     "grid": {"n": 256},                       // or {"nx": 128, "ny": 128}
//     "params": {"a": 0.0},                     // only the model's parameters
//     "initial": {"preset": "sine", "seed": 0, "amplitude": 1.0,
//                 "modes": [{"k": 1, "amplitude": 1.0, "phase": 0.0}],
//                 "fields": {"f": {"preset": "two-mode"}},
//                 "vector": [0.3, 1.0, 0.5]},   // rigid body only
//     "time": {"t_final": 0.2, "cfl": 0.2, "stride": 10},   // or "dt"
//     "output": {"directory": "out", "fields": ["u"], "snapshots": "final",
//                "grid": false}
//   }
//
// "initial.modes" is shorthand for the primary field's mode list and is
// stored under "fields".
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ea/integrators.hpp"
#include "ea/models.hpp"
#include "ea/presets.hpp"

namespace ea::config {

struct TimeConfig {
  double t_final = 1.0;
  std::optional<double> dt;
  std::optional<double> cfl;
  int stride = 1;
  bool operator==(const TimeConfig&) const = default;
};

enum class SnapshotPolicy { None, Final, All };

struct OutputConfig {
  std::string directory = "output";
  std::vector<std::string> fields;
  SnapshotPolicy snapshots = SnapshotPolicy::Final;
  /// Grid values instead of Fourier coefficients.
  bool grid = false;
  bool operator==(const OutputConfig&) const = default;
};

struct RunConfig {
  std::string model;
  presets::GridSpec grid;
  std::map<std::string, double> params;
  presets::InitialSpec initial;
  TimeConfig time;
  OutputConfig output;
  bool operator==(const RunConfig&) const = default;
};

/// Parameter names a model accepts.
std::vector<std::string> legal_params(models::ModelId id);
/// Names accepted in output.fields.
std::vector<std::string> snapshot_fields(models::ModelId id);

/// Throws ConfigError (with a line number where one applies).
RunConfig parse_config(std::string_view text);
RunConfig load_config(const std::string& path);
/// Canonical JSON; parse_config(dump_config(c)) == c.
std::string dump_config(const RunConfig& c);

models::ModelSpec model_spec(const RunConfig& c);
integrators::StepperConfig stepper_config(const RunConfig& c);

std::string_view snapshot_policy_name(SnapshotPolicy p);

}  // namespace ea::config
