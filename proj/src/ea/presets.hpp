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

// Initial conditions: named presets and explicit mode lists.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ea/models.hpp"

namespace ea::presets {

/// amplitude * cos(k1 x + k2 y + phase); k2 is ignored on the circle.
struct Mode {
  int k1 = 0;
  int k2 = 0;
  double amplitude = 0.0;
  double phase = 0.0;
  bool operator==(const Mode&) const = default;
};

struct FieldInit {
  std::optional<std::string> preset;
  std::vector<Mode> modes;
  bool operator==(const FieldInit&) const = default;
};

struct InitialSpec {
  std::string preset = "two-mode";
  std::uint64_t seed = 0;
  /// Scales every preset-generated field; explicit mode lists are unaffected.
  double amplitude = 1.0;
  /// Per-field overrides, keyed by the names from field_names().
  std::map<std::string, FieldInit> fields;
  /// Rigid body only.
  std::optional<std::vector<double>> vector;
  bool operator==(const InitialSpec&) const = default;
};

struct GridSpec {
  int n = 256;   // circle: collocation points, cutoff N = (n - 1) / 3
  int nx = 128;  // torus
  int ny = 128;
  bool operator==(const GridSpec&) const = default;
};

const std::vector<std::string>& preset_names();
/// Names accepted under initial.fields for a model, primary field first.
std::vector<std::string> field_names(models::ModelId id);
int circle_modes(const GridSpec& g);

models::Spectrum1D circle_field(const std::string& preset, int n_modes, std::uint64_t seed);
models::Spectrum1D circle_modes_field(const std::vector<Mode>& modes, int n_modes);
models::Field2D torus_field(const std::string& preset, int nx, int ny, std::uint64_t seed);
models::Field2D torus_modes_field(const std::vector<Mode>& modes, int nx, int ny);

/// Builds and validates the initial state. Throws ContractError on unknown
/// presets, fields or shape violations.
models::ModelState initial_state(const models::ModelSpec& spec, const InitialSpec& init,
                                 const GridSpec& grid);

}  // namespace ea::presets
