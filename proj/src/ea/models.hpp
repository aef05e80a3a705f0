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

// Model catalog, per-model state types and right-hand-side dispatch.

#include <Eigen/Dense>

#include <array>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

#include "ea/spectral1d.hpp"
#include "ea/spectral2d.hpp"

namespace ea::models {

using spectral1d::Spectrum1D;
using spectral2d::Field2D;
using spectral2d::Mean2;
using spectral2d::VecField2D;

enum class ModelId {
  Burgers,
  Kdv,
  CamassaHolm,
  HunterSaxton,
  PairL2,
  PairL2Sigma,
  PairH1,
  PairH1Sigma,
  PairL2AlphaCentral,
  Euler2D,
  QgBeta,
  Boussinesq,
  PassiveScalar,
  Mhd2D,
  ChargedFluid,
  TemplateMatching,
  Epdiff,
  LaeAlpha,
  RigidBody,
};

enum class Domain { Circle, Torus, Algebra };

struct ModelInfo {
  ModelId id;
  std::string_view name;
  Domain domain;
  std::string_view state_shape;
  std::string_view params;
  std::string_view anchor;
};

/// Stable catalog order.
const std::vector<ModelInfo>& catalog();
const ModelInfo& info(ModelId id);
/// Throws ContractError for unknown names.
ModelId parse_model(std::string_view name);
bool is_pair_model(ModelId id);
spectral1d::PairVariant pair_variant(ModelId id);

struct ModelSpec {
  ModelId id = ModelId::Burgers;
  double a = 0.0;       // central charge
  double beta = 0.0;    // Coriolis gradient
  double brunt = 1.0;   // Brunt-Vaisala frequency
  double alpha2 = 0.0;  // filter scale squared
  double b = 0.0;       // charge-form coefficient
  Mean2 B0{0.0, 0.0};   // harmonic part of the magnetic field
  std::array<double, 3> inertia{1.0, 2.0, 3.0};
};

// States. Rates share the state types. fields() exposes every slot for
// generic linear combinations.

struct CircleState {
  Spectrum1D u;  // v = u'' for Hunter-Saxton
  auto fields() { return std::tie(u); }
  auto fields() const { return std::tie(u); }
};

struct CirclePairState {
  Spectrum1D u;
  Spectrum1D f;
  auto fields() { return std::tie(u, f); }
  auto fields() const { return std::tie(u, f); }
};

struct VorticityState {
  Field2D omega;
  Mean2 mean{0.0, 0.0};
  auto fields() { return std::tie(omega, mean); }
  auto fields() const { return std::tie(omega, mean); }
};

/// omega plus a transported scalar (xi for Boussinesq, f for passive scalar).
struct VorticityPairState {
  Field2D omega;
  Field2D tracer;
  Mean2 mean{0.0, 0.0};
  auto fields() { return std::tie(omega, tracer, mean); }
  auto fields() const { return std::tie(omega, tracer, mean); }
};

struct VelocityState {
  VecField2D u;
  auto fields() { return std::tie(u); }
  auto fields() const { return std::tie(u); }
};

struct VelocityPairState {
  VecField2D u;
  VecField2D B;
  auto fields() { return std::tie(u, B); }
  auto fields() const { return std::tie(u, B); }
};

struct ChargedState {
  VecField2D u;
  Field2D rho;
  auto fields() { return std::tie(u, rho); }
  auto fields() const { return std::tie(u, rho); }
};

struct AlgebraState {
  Eigen::VectorXd u;
  auto fields() { return std::tie(u); }
  auto fields() const { return std::tie(u); }
};

using ModelState = std::variant<CircleState, CirclePairState, VorticityState, VorticityPairState,
                                VelocityState, VelocityPairState, ChargedState, AlgebraState>;

/// Index into ModelState expected for a model.
size_t state_index(ModelId id);

/// Throws ContractError when the state has the wrong shape or violates a
/// model precondition (zero-mean vorticity, solenoidal velocity, alpha2 > 0, ...).
void validate(const ModelSpec& spec, const ModelState& s);

ModelState rhs(const ModelSpec& spec, const ModelState& s);

/// Re-imposes Hermitian symmetry, the band, zero means where required and
/// divergence-freeness for incompressible models.
void enforce(const ModelSpec& spec, ModelState& s);

/// y += a x; both must hold the same alternative.
void axpy(ModelState& y, double a, const ModelState& x);
ModelState zero_like(const ModelState& s);

bool all_finite(const ModelState& s);
/// Largest upper-band energy fraction over the spectral fields.
double upper_band_fraction(const ModelState& s);

/// Characteristic advective speed, grid spacing and linear dispersive
/// frequency bound used for CFL step selection.
double max_speed(const ModelSpec& spec, const ModelState& s);
double grid_spacing(const ModelState& s);
double dispersive_frequency(const ModelSpec& spec, const ModelState& s);

}  // namespace ea::models
