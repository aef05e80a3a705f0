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

// Classical RK4 over ModelState, CFL step selection and trajectory recording.

#include <functional>
#include <optional>
#include <stdexcept>

#include "ea/models.hpp"
#include "ea/trajectory.hpp"

namespace ea::integrators {

using models::ModelState;
using RhsFunction = std::function<ModelState(const ModelState&)>;

struct StepperConfig {
  std::optional<double> dt;
  std::optional<double> cfl;
  double t_final = 1.0;
  int record_stride = 1;
};

/// Throws ContractError unless exactly one of dt / cfl is set and the
/// remaining fields are in range.
void validate(const StepperConfig& cfg);

/// Fraction of gradient energy in the upper third of the band above which a
/// run is declared divergent.
inline constexpr double kBlowupFraction = 0.1;

class IntegrationDiverged : public std::runtime_error {
 public:
  IntegrationDiverged(const std::string& what, double time, Trajectory partial = {})
      : std::runtime_error(what), time_(time), partial_(std::move(partial)) {}
  double time() const { return time_; }
  const Trajectory& partial() const { return partial_; }

 private:
  double time_;
  Trajectory partial_;
};

/// One RK4 step. Throws IntegrationDiverged (carrying `t + dt`) when the
/// result is not finite.
ModelState rk4_step(const RhsFunction& rhs, const ModelState& s, double dt, double t = 0.0);

/// cfl * h / max(speed, eps), further limited by the model's linear
/// dispersive frequency and capped at `cap`.
double cfl_dt(const models::ModelSpec& spec, const ModelState& s, double cfl, double cap);

/// Advances s0 to t_final, recording every record_stride steps and the final
/// state, each with energy and invariants attached.
Trajectory integrate(const models::ModelSpec& spec, const ModelState& s0, const StepperConfig& cfg);

}  // namespace ea::integrators
