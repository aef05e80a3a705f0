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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ea/diagnostics.hpp"
#include "ea/errors.hpp"
#include "ea/integrators.hpp"
#include "ea/presets.hpp"

namespace ea::diagnostics {
namespace {

using models::ModelId;
using models::ModelSpec;
using models::ModelState;
using spectral1d::Spectrum1D;
using spectral2d::Field2D;
constexpr double pi = std::numbers::pi;

ModelSpec spec_of(ModelId id) {
  ModelSpec s;
  s.id = id;
  return s;
}

double value_of(const std::vector<Invariant>& v, const std::string& name) {
  for (const auto& i : v)
    if (i.name == name) return i.value;
  ADD_FAILURE() << "no invariant " << name;
  return 0.0;
}

Trajectory run(const ModelSpec& spec, const ModelState& s0, double t_final, double cfl = 0.1) {
  integrators::StepperConfig c;
  c.cfl = cfl;
  c.t_final = t_final;
  c.record_stride = 5;
  return integrators::integrate(spec, s0, c);
}

ModelState torus_state(const ModelSpec& spec, const std::string& preset, int n = 32, std::uint64_t seed = 1) {
  presets::InitialSpec init;
  init.preset = preset;
  init.seed = seed;
  presets::GridSpec g;
  g.nx = g.ny = n;
  return presets::initial_state(spec, init, g);
}

TEST(Energy, CircleClosedForms) {
  const ModelState sine = models::CircleState{Spectrum1D::sine(85, 1)};
  EXPECT_NEAR(energy(spec_of(ModelId::Burgers), sine), pi / 2.0, 1e-14);
  EXPECT_NEAR(energy(spec_of(ModelId::CamassaHolm), sine), pi, 1e-14);
  EXPECT_EQ(energy(spec_of(ModelId::Burgers), models::CircleState{Spectrum1D(85)}), 0.0);
}

TEST(Energy, RigidBody) {
  Eigen::VectorXd u(3);
  u << 0.3, 1.0, 0.5;
  const auto spec = spec_of(ModelId::RigidBody);
  const ModelState s = models::AlgebraState{u};
  EXPECT_NEAR(energy(spec, s), 0.5 * (0.09 + 2.0 + 0.75), 1e-15);
  EXPECT_NEAR(value_of(invariants(spec, s), "casimir"), 0.09 + 4.0 + 2.25, 1e-14);
}

TEST(Drift, Definition) {
  EXPECT_NEAR(drift(1.1, 1.0), 0.1, 1e-15);
  EXPECT_DOUBLE_EQ(drift(-2.0, -1.0), 1.0);
  EXPECT_DOUBLE_EQ(drift(1e-15, 0.0), 1e-15 / 1e-14);
}

TEST(Moment, ExactForBandLimitedFields) {
  const Field2D s = Field2D::trig(32, 32, 1, 0, 0.0, 1.0);
  EXPECT_NEAR(moment(s, 2), 2.0 * pi * pi, 1e-12);
  EXPECT_NEAR(moment(s, 3), 0.0, 1e-12);
  EXPECT_NEAR(moment(s, 4), 1.5 * pi * pi, 1e-12);
  EXPECT_THROW(moment(s, 0), ContractError);
}

TEST(Invariants, BurgersMeanStaysZero) {
  const auto spec = spec_of(ModelId::Burgers);
  const ModelState s0 = models::CircleState{Spectrum1D::sine(85, 1)};
  const auto traj = run(spec, s0, 0.2, 0.2);
  for (const auto& d : traj.diagnostics) EXPECT_LE(std::abs(d.at("integral_u")), 1e-14);
  const auto report = drift_report(spec, traj);
  EXPECT_TRUE(report.all_passed());
  ASSERT_NE(report.find("energy"), nullptr);
  EXPECT_LE(report.find("energy")->max_drift, 1e-8);
}

TEST(Invariants, EulerEnstrophyClosedFormAndConservation) {
  const auto spec = spec_of(ModelId::Euler2D);
  const Field2D w = Field2D::trig(32, 32, 1, 0, 0.0, 1.0) + Field2D::trig(32, 32, 0, 2, 1.0, 0.0);
  const ModelState s0 = models::VorticityState{w, {0.0, 0.0}};
  EXPECT_NEAR(value_of(invariants(spec, s0), "enstrophy"), 2.0 * pi * pi, 1e-12);
  const auto report = drift_report(spec, run(spec, s0, 1.0));
  EXPECT_LE(report.find("enstrophy")->max_drift, 1e-8);
  EXPECT_LE(report.find("energy")->max_drift, 1e-8);
}

TEST(Invariants, MhdAlignedStateCrossHelicity) {
  const auto spec = spec_of(ModelId::Mhd2D);
  const auto u = spectral2d::velocity_from_vorticity(Field2D::trig(32, 32, 1, 2, 0.5, 0.3));
  const ModelState s0 = models::VelocityPairState{u, u};
  EXPECT_NEAR(value_of(invariants(spec, s0), "cross_helicity"), spectral2d::inner(u, u), 1e-12);
  const auto report = drift_report(spec, run(spec, s0, 1.0));
  EXPECT_LE(report.find("cross_helicity")->max_drift, 1e-12);
}

TEST(Report, ReportsEveryInvariantWithTolerance) {
  const auto spec = spec_of(ModelId::PassiveScalar);
  const auto traj = run(spec, torus_state(spec, "random-band"), 0.2);
  const auto report = drift_report(spec, traj);
  EXPECT_EQ(report.entries.front().name, "energy");
  EXPECT_EQ(report.entries.size(), invariants(spec, traj.states.front()).size() + 1);
  for (const auto& e : report.entries) EXPECT_TRUE(e.passed()) << e.name << " drift " << e.max_drift;
  EXPECT_EQ(report.find("nonsense"), nullptr);
}

TEST(Monitors, ZeroMeanStaysZero) {
  for (ModelId id : {ModelId::QgBeta, ModelId::Euler2D, ModelId::Boussinesq, ModelId::PassiveScalar}) {
    ModelSpec spec = spec_of(id);
    spec.beta = 0.8;
    spec.brunt = 1.1;
    ASSERT_TRUE(has_monitor(id));
    const auto traj = run(spec, torus_state(spec, "random-band", 64, 5), 1.0, 0.4);
    const auto m = monitor_totally_geodesic(spec, traj);
    EXPECT_LE(m.max_mean_u, 1e-12) << models::info(id).name;
    EXPECT_LE(m.max_integral_f, 1e-12) << models::info(id).name;
    EXPECT_TRUE(m.passed());
  }
  EXPECT_FALSE(has_monitor(ModelId::Burgers));
}

TEST(Monitors, RejectsStateOutsideSubalgebra) {
  const auto spec = spec_of(ModelId::Euler2D);
  const Field2D w = Field2D::trig(32, 32, 1, 1, 1.0, 0.0);
  const auto traj = run(spec, models::VorticityState{w, {0.5, 0.0}}, 0.1);
  EXPECT_THROW(monitor_totally_geodesic(spec, traj), ContractError);
  EXPECT_THROW(monitor_totally_geodesic(spec_of(ModelId::Burgers), traj), ContractError);
}

}  // namespace
}  // namespace ea::diagnostics
