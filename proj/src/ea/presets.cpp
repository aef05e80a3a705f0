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

#include "ea/presets.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "ea/errors.hpp"

namespace ea::presets {
namespace {

using models::Field2D;
using models::ModelId;
using models::Spectrum1D;
using models::VecField2D;
namespace s1 = ea::spectral1d;
namespace s2 = ea::spectral2d;

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Companion fields (f, xi, j, rho) used when a preset initializes the whole state.
const std::vector<Mode> kCircleCompanion = {{1, 0, 0.5, 0.0}};
const std::vector<Mode> kTorusCompanion = {{1, 1, 0.5, 0.0}, {2, 0, 0.25, -0.5 * std::numbers::pi}};

std::vector<Mode> random_modes_1d(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi), scale(0.5, 1.0);
  std::vector<Mode> modes;
  for (int k = 1; k <= 6; ++k) modes.push_back({k, 0, 0.6 * std::exp(-0.5 * (k - 1)) * scale(rng), phase(rng)});
  return modes;
}

std::vector<Mode> random_modes_2d(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi), scale(0.5, 1.0);
  std::vector<Mode> modes;
  for (int k2 = 0; k2 <= 4; ++k2)
    for (int k1 = -4; k1 <= 4; ++k1) {
      if (k2 == 0 && k1 <= 0) continue;
      const double amp = 0.8 * std::exp(-(k1 * k1 + k2 * k2) / 8.0) * scale(rng);
      modes.push_back({k1, k2, amp, phase(rng)});
    }
  return modes;
}

bool is_companion_field(const std::string& name) {
  return name == "f" || name == "xi" || name == "j" || name == "rho";
}

Spectrum1D circle_for(const std::string& name, const InitialSpec& init, int n_modes) {
  const double a = init.amplitude;
  if (auto it = init.fields.find(name); it != init.fields.end()) {
    if (it->second.preset) return a * circle_field(*it->second.preset, n_modes, init.seed);
    return circle_modes_field(it->second.modes, n_modes);
  }
  if (is_companion_field(name)) {
    if (init.preset == "random-band") return a * circle_field("random-band", n_modes, init.seed + 1);
    return a * circle_modes_field(kCircleCompanion, n_modes);
  }
  return a * circle_field(init.preset, n_modes, init.seed);
}

Field2D torus_for(const std::string& name, const InitialSpec& init, int nx, int ny) {
  const double a = init.amplitude;
  if (auto it = init.fields.find(name); it != init.fields.end()) {
    if (it->second.preset) return a * torus_field(*it->second.preset, nx, ny, init.seed);
    return torus_modes_field(it->second.modes, nx, ny);
  }
  if (is_companion_field(name)) {
    if (init.preset == "random-band") return a * torus_field("random-band", nx, ny, init.seed + 1);
    return a * torus_modes_field(kTorusCompanion, nx, ny);
  }
  return a * torus_field(init.preset, nx, ny, init.seed);
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names = {"sine", "two-mode", "taylor-green", "shear",
                                                 "random-band"};
  return names;
}

std::vector<std::string> field_names(ModelId id) {
  switch (id) {
    case ModelId::Burgers:
    case ModelId::Kdv:
    case ModelId::CamassaHolm:
    case ModelId::HunterSaxton: return {"u"};
    case ModelId::PairL2:
    case ModelId::PairL2Sigma:
    case ModelId::PairH1:
    case ModelId::PairH1Sigma:
    case ModelId::PairL2AlphaCentral: return {"u", "f"};
    case ModelId::Euler2D:
    case ModelId::QgBeta:
    case ModelId::LaeAlpha: return {"omega"};
    case ModelId::Boussinesq: return {"omega", "xi"};
    case ModelId::PassiveScalar: return {"omega", "f"};
    case ModelId::Mhd2D: return {"omega", "j"};
    case ModelId::ChargedFluid: return {"omega", "rho"};
    case ModelId::TemplateMatching:
    case ModelId::Epdiff: return {"u1", "u2"};
    case ModelId::RigidBody: return {};
  }
  return {};
}

int circle_modes(const GridSpec& g) { return (g.n - 1) / 3; }

Spectrum1D circle_modes_field(const std::vector<Mode>& modes, int n_modes) {
  Spectrum1D s(n_modes);
  for (const Mode& m : modes) {
    if (m.k1 < 0 || m.k1 > n_modes)
      throw ContractError("mode k = " + std::to_string(m.k1) + " outside 0.." + std::to_string(n_modes));
    // A cos(kx + p) = (A/2) e^{ip} e^{ikx} + c.c.
    if (m.k1 == 0) s[0] += m.amplitude * std::cos(m.phase);
    else s[m.k1] += 0.5 * std::polar(m.amplitude, m.phase);
  }
  return s;
}

Field2D torus_modes_field(const std::vector<Mode>& modes, int nx, int ny) {
  Field2D f(nx, ny);
  for (const Mode& m : modes) {
    if (!f.retained(m.k1, m.k2))
      throw ContractError("mode (" + std::to_string(m.k1) + ", " + std::to_string(m.k2) +
                          ") outside the retained band");
    if (m.k1 == 0 && m.k2 == 0) {
      f.set_mean(f.mean() + m.amplitude * std::cos(m.phase));
      continue;
    }
    f.set_mode(m.k1, m.k2, f.coefficient(m.k1, m.k2) + 0.5 * std::polar(m.amplitude, m.phase));
  }
  return f;
}

Spectrum1D circle_field(const std::string& preset, int n_modes, std::uint64_t seed) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  if (preset == "sine") return circle_modes_field({{1, 0, 1.0, -half_pi}}, n_modes);
  if (preset == "two-mode") return circle_modes_field({{1, 0, 1.0, -half_pi}, {2, 0, 0.5, 0.0}}, n_modes);
  if (preset == "random-band") return circle_modes_field(random_modes_1d(seed), n_modes);
  if (preset == "taylor-green" || preset == "shear")
    throw ContractError("preset '" + preset + "' is only defined on the torus");
  throw ContractError("unknown preset '" + preset + "'");
}

Field2D torus_field(const std::string& preset, int nx, int ny, std::uint64_t seed) {
  constexpr double half_pi = 0.5 * std::numbers::pi;
  if (preset == "sine") return torus_modes_field({{1, 0, 1.0, -half_pi}}, nx, ny);
  if (preset == "two-mode") return torus_modes_field({{1, 0, 1.0, -half_pi}, {0, 2, 0.5, 0.0}}, nx, ny);
  if (preset == "taylor-green") return torus_modes_field({{1, 0, 1.0, 0.0}, {0, 1, 1.0, 0.0}}, nx, ny);
  if (preset == "shear") return torus_modes_field({{0, 1, 1.0, -half_pi}}, nx, ny);
  if (preset == "random-band") return torus_modes_field(random_modes_2d(seed), nx, ny);
  throw ContractError("unknown preset '" + preset + "'");
}

models::ModelState initial_state(const models::ModelSpec& spec, const InitialSpec& init,
                                 const GridSpec& grid) {
  const auto names = field_names(spec.id);
  for (const auto& [name, _] : init.fields)
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw ContractError("field '" + name + "' is not part of model '" +
                          std::string(models::info(spec.id).name) + "'");

  models::ModelState s;
  const auto domain = models::info(spec.id).domain;
  if (domain == models::Domain::Circle) {
    const int n = circle_modes(grid);
    if (n < 1) throw ContractError("circle grid must have at least 4 points");
    Spectrum1D u = circle_for("u", init, n);
    if (spec.id == ModelId::HunterSaxton) {
      s = models::CircleState{s1::deriv(u, 2)};
    } else if (models::is_pair_model(spec.id)) {
      s = models::CirclePairState{std::move(u), circle_for("f", init, n)};
    } else {
      s = models::CircleState{std::move(u)};
    }
  } else if (domain == models::Domain::Torus) {
    const int nx = grid.nx, ny = grid.ny;
    auto vorticity = [&] {
      Field2D w = torus_for("omega", init, nx, ny);
      if (std::abs(w.mean()) > 1e-14) throw ContractError("omega must have zero mean");
      return w;
    };
    switch (spec.id) {
      case ModelId::Euler2D:
      case ModelId::QgBeta: s = models::VorticityState{vorticity(), {0.0, 0.0}}; break;
      case ModelId::Boussinesq:
        s = models::VorticityPairState{vorticity(), torus_for("xi", init, nx, ny), {0.0, 0.0}};
        break;
      case ModelId::PassiveScalar:
        s = models::VorticityPairState{vorticity(), torus_for("f", init, nx, ny), {0.0, 0.0}};
        break;
      case ModelId::LaeAlpha: s = models::VelocityState{s2::velocity_from_vorticity(vorticity())}; break;
      case ModelId::TemplateMatching:
      case ModelId::Epdiff: {
        const bool custom = init.fields.count("u1") || init.fields.count("u2");
        if (custom) {
          auto component = [&](const char* name) {
            return init.fields.count(name) ? torus_for(name, init, nx, ny) : Field2D(nx, ny);
          };
          s = models::VelocityState{VecField2D(component("u1"), component("u2"))};
        } else {
          s = models::VelocityState{
              s2::velocity_from_vorticity(init.amplitude * torus_field(init.preset, nx, ny, init.seed))};
        }
        break;
      }
      case ModelId::Mhd2D: {
        Field2D j = torus_for("j", init, nx, ny);
        j.set_mean(0.0);
        s = models::VelocityPairState{s2::velocity_from_vorticity(vorticity()),
                                      s2::velocity_from_vorticity(j, spec.B0)};
        break;
      }
      case ModelId::ChargedFluid:
        s = models::ChargedState{s2::velocity_from_vorticity(vorticity()), torus_for("rho", init, nx, ny)};
        break;
      default: break;
    }
  } else {
    Eigen::VectorXd u(3);
    if (init.vector) {
      if (init.vector->size() != 3) throw ContractError("rigid-body initial vector must have 3 entries");
      u << (*init.vector)[0], (*init.vector)[1], (*init.vector)[2];
    } else {
      u << 0.3, 1.0, 0.5;
      u *= init.amplitude;
    }
    s = models::AlgebraState{u};
  }
  models::validate(spec, s);
  return s;
}

}  // namespace ea::presets
