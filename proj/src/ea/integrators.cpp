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

#include "ea/integrators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ea/diagnostics.hpp"
#include "ea/errors.hpp"

namespace ea::integrators {
namespace {

constexpr double kSpeedFloor = 1e-12;

std::map<std::string, double> sample(const models::ModelSpec& spec, const ModelState& s) {
  std::map<std::string, double> out{{"energy", diagnostics::energy(spec, s)}};
  for (const auto& inv : diagnostics::invariants(spec, s)) out[inv.name] = inv.value;
  return out;
}

void record(Trajectory& traj, const models::ModelSpec& spec, double t, const ModelState& s) {
  traj.times.push_back(t);
  traj.states.push_back(s);
  traj.diagnostics.push_back(sample(spec, s));
}

}  // namespace

void validate(const StepperConfig& cfg) {
  if (cfg.dt.has_value() == cfg.cfl.has_value())
    throw ContractError("exactly one of dt and cfl must be given");
  if (cfg.dt && !(*cfg.dt > 0.0)) throw ContractError("dt must be positive");
  if (cfg.cfl && !(*cfg.cfl > 0.0 && *cfg.cfl <= 1.0)) throw ContractError("cfl must lie in (0, 1]");
  if (!(cfg.t_final >= 0.0) || !std::isfinite(cfg.t_final))
    throw ContractError("t_final must be finite and non-negative");
  if (cfg.record_stride < 1) throw ContractError("stride must be a positive integer");
}

ModelState rk4_step(const RhsFunction& rhs, const ModelState& s, double dt, double t) {
  if (!(dt > 0.0)) throw ContractError("rk4_step: dt must be positive");
  const ModelState k1 = rhs(s);
  ModelState y = s;
  models::axpy(y, 0.5 * dt, k1);
  const ModelState k2 = rhs(y);
  y = s;
  models::axpy(y, 0.5 * dt, k2);
  const ModelState k3 = rhs(y);
  y = s;
  models::axpy(y, dt, k3);
  const ModelState k4 = rhs(y);
  ModelState out = s;
  models::axpy(out, dt / 6.0, k1);
  models::axpy(out, dt / 3.0, k2);
  models::axpy(out, dt / 3.0, k3);
  models::axpy(out, dt / 6.0, k4);
  if (!models::all_finite(out)) {
    std::ostringstream msg;
    msg << "non-finite state at t = " << t + dt;
    throw IntegrationDiverged(msg.str(), t + dt);
  }
  return out;
}

double cfl_dt(const models::ModelSpec& spec, const ModelState& s, double cfl, double cap) {
  if (!(cfl > 0.0 && cfl <= 1.0)) throw ContractError("cfl_dt: cfl must lie in (0, 1]");
  const double speed = models::max_speed(spec, s);
  double dt = speed > kSpeedFloor ? cfl * models::grid_spacing(s) / speed : cap;
  const double freq = models::dispersive_frequency(spec, s);
  if (freq > 0.0) dt = std::min(dt, cfl / freq);
  return std::min(dt, cap);
}

Trajectory integrate(const models::ModelSpec& spec, const ModelState& s0, const StepperConfig& cfg) {
  validate(cfg);
  models::validate(spec, s0);
  const RhsFunction rhs = [&spec](const ModelState& s) { return models::rhs(spec, s); };

  Trajectory traj;
  ModelState s = s0;
  double t = 0.0;
  record(traj, spec, t, s);
  const double t_final = cfg.t_final;
  long step = 0;
  while (t < t_final) {
    const double remaining = t_final - t;
    double dt = cfg.dt ? *cfg.dt : cfl_dt(spec, s, *cfg.cfl, remaining);
    bool last = false;
    if (dt >= remaining * (1.0 - 1e-12)) {
      dt = remaining;
      last = true;
    }
    try {
      s = rk4_step(rhs, s, dt, t);
    } catch (const IntegrationDiverged& e) {
      throw IntegrationDiverged(e.what(), e.time(), std::move(traj));
    }
    models::enforce(spec, s);
    t = last ? t_final : t + dt;
    ++step;
    const double band = models::upper_band_fraction(s);
    if (band > kBlowupFraction) {
      record(traj, spec, t, s);
      std::ostringstream msg;
      msg << "spectral blow-up at t = " << t << " (upper-band energy fraction " << band << ")";
      throw IntegrationDiverged(msg.str(), t, std::move(traj));
    }
    if (last || step % cfg.record_stride == 0) record(traj, spec, t, s);
  }
  return traj;
}

}  // namespace ea::integrators
