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

#include "ea/verification.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <thread>

#include "ea/algebra.hpp"
#include "ea/diagnostics.hpp"
#include "ea/errors.hpp"
#include "ea/integrators.hpp"
#include "ea/models.hpp"
#include "ea/oracle.hpp"
#include "ea/presets.hpp"
#include "ea/spectral1d.hpp"
#include "ea/spectral2d.hpp"

namespace ea::verification {

namespace s1 = spectral1d;
namespace s2 = spectral2d;
using algebra::CoefVector;
using algebra::ExtensionData;
using algebra::FiniteLieAlgebra;
using algebra::Matrix;
using models::ModelId;
using models::ModelSpec;
using models::ModelState;

namespace {

// Pinned tolerances.
constexpr double kAdjointTolerance = 1e-12;
constexpr double kNegativeControlFloor = 1e-3;
constexpr double kWrongFormulaFloor = 1e-2;
constexpr double kExtensionTolerance = 1e-12;
constexpr double kRigidDriftTolerance = 1e-10;
constexpr double kStationaryTolerance = 1e-12;
constexpr double kCharacteristicTolerance = 1e-6;
constexpr double kBlowupLo = 0.3;
constexpr double kBlowupHi = 0.4;
constexpr double kReductionTolerance = 1e-12;
constexpr double kOrderLo = 3.7;
constexpr double kOrderHi = 4.3;
constexpr double kSpectralRatioFloor = 1e3;
constexpr double kFdTolerance = 1e-4;

Measurement le(std::string name, double v, double bound) { return {std::move(name), v, "<=", 0.0, bound}; }
Measurement ge(std::string name, double v, double bound) { return {std::move(name), v, ">=", bound, 0.0}; }
Measurement within(std::string name, double v, double lo, double hi) {
  return {std::move(name), v, "in", lo, hi};
}
Measurement info(std::string name, double v) { return {std::move(name), v, "info", 0.0, 0.0}; }

double max_abs(const CoefVector& v) { return v.size() ? v.cwiseAbs().maxCoeff() : 0.0; }

CoefVector random_vector(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CoefVector v(n);
  for (int i = 0; i < n; ++i) v[i] = normal(rng);
  return v;
}

Matrix random_matrix(int r, int c, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = normal(rng);
  return m;
}

ModelState make_state(const ModelSpec& spec, const std::string& preset, double amplitude,
                      std::uint64_t seed = 1, int torus_n = 128, int circle_n = 256) {
  presets::InitialSpec init;
  init.preset = preset;
  init.amplitude = amplitude;
  init.seed = seed;
  presets::GridSpec grid;
  grid.n = circle_n;
  grid.nx = grid.ny = torus_n;
  return presets::initial_state(spec, init, grid);
}

Trajectory run(const ModelSpec& spec, const ModelState& s0, double t_final, std::optional<double> cfl,
               std::optional<double> dt = std::nullopt, int stride = 10) {
  integrators::StepperConfig cfg;
  cfg.cfl = cfl;
  cfg.dt = dt;
  cfg.t_final = t_final;
  cfg.record_stride = stride;
  return integrators::integrate(spec, s0, cfg);
}

ModelSpec spec_for(ModelId id) {
  ModelSpec spec;
  spec.id = id;
  spec.beta = 0.7;
  spec.brunt = 1.3;
  spec.alpha2 = 0.1;
  spec.b = 0.8;
  spec.B0 = {0.3, -0.2};
  return spec;
}

// ---------------------------------------------------------------------------
// 1. Adjoint identities.

s1::Spectrum1D h1_formula(const s1::Spectrum1D& x, const s1::Spectrum1D& y, const std::array<double, 4>& c) {
  const s1::Spectrum1D dx = s1::deriv(x, 1);
  s1::Spectrum1D w = c[0] * s1::multiply(y, dx);
  w.axpy(c[1], s1::multiply(s1::deriv(y, 1), x));
  w.axpy(-c[2], s1::multiply(s1::deriv(y, 2), dx));
  w.axpy(-c[3], s1::multiply(s1::deriv(y, 3), x));
  return s1::inertia_invert(w, s1::Metric1D::H1);
}

void criterion_adjoint(CriterionResult& r) {
  constexpr int kTriples = 100;
  constexpr int kModes = 85;
  std::mt19937_64 rng(20261018);
  struct Control {
    std::string name;
    s1::Metric1D metric;
    oracle::AdTransposeFunction f;
    double floor;
    std::vector<double> residuals;
  };
  std::vector<Control> controls;
  controls.push_back({"wrong_l2_2X'Y-XY'", s1::Metric1D::L2,
                      [](const auto& x, const auto& y) {
                        return 2.0 * s1::multiply(s1::deriv(x, 1), y) - s1::multiply(x, s1::deriv(y, 1));
                      },
                      kWrongFormulaFloor, {}});
  for (int i = 0; i < 2; ++i) {
    const double a = i == 0 ? 2.2 : 2.0, b = i == 0 ? 1.0 : 1.1;
    controls.push_back({"l2_term" + std::to_string(i + 1) + "_+10%", s1::Metric1D::L2,
                        [a, b](const auto& x, const auto& y) {
                          return a * s1::multiply(s1::deriv(x, 1), y) + b * s1::multiply(x, s1::deriv(y, 1));
                        },
                        kNegativeControlFloor, {}});
  }
  for (int i = 0; i < 4; ++i) {
    std::array<double, 4> c{2.0, 1.0, 2.0, 1.0};
    c[i] *= 1.1;
    controls.push_back({"h1_term" + std::to_string(i + 1) + "_+10%", s1::Metric1D::H1,
                        [c](const auto& x, const auto& y) { return h1_formula(x, y, c); },
                        kNegativeControlFloor, {}});
  }
  double l2 = 0.0, h1 = 0.0;
  for (int t = 0; t < kTriples; ++t) {
    const oracle::BandLimitedTriple tri = oracle::random_triple(kModes, rng);
    l2 = std::max(l2, oracle::adjoint_residual(s1::ad_transpose_l2, s1::Metric1D::L2, tri));
    h1 = std::max(h1, oracle::adjoint_residual(s1::ad_transpose_h1, s1::Metric1D::H1, tri));
    for (Control& c : controls) c.residuals.push_back(oracle::adjoint_residual(c.f, c.metric, tri));
  }
  oracle::BandLimitedTriple zero = oracle::random_triple(kModes, rng);
  zero.x = s1::Spectrum1D(kModes);
  r.measurements.push_back(le("l2_max_residual", l2, kAdjointTolerance));
  r.measurements.push_back(le("h1_max_residual", h1, kAdjointTolerance));
  r.measurements.push_back(
      le("x_zero_residual", oracle::adjoint_residual(s1::ad_transpose_h1, s1::Metric1D::H1, zero), kAdjointTolerance));
  // A perturbed term is a fixed linear functional of the triple, so a single
  // draw can land near its zero set; the median measures generic power.
  for (Control& c : controls) {
    auto mid = c.residuals.begin() + c.residuals.size() / 2;
    std::nth_element(c.residuals.begin(), mid, c.residuals.end());
    r.measurements.push_back(ge(c.name + "_median_residual", *mid, c.floor));
  }
}

// ---------------------------------------------------------------------------
// 2. Extension reductions against full-bracket brute force.

constexpr int kStatesPerAlgebra = 10;

double relative(const CoefVector& got, const CoefVector& want) {
  return max_abs(got - want) / std::max(1.0, max_abs(want));
}

double check_central(const FiniteLieAlgebra& g, const Matrix& omega, std::mt19937_64& rng) {
  const auto k = algebra::CentralMap::from_cocycle(g, omega);
  const auto brute = oracle::extension_bruteforce(oracle::build_central_algebra(g, omega));
  const int n = g.dim();
  double worst = 0.0;
  for (int i = 0; i < kStatesPerAlgebra; ++i) {
    const CoefVector full = random_vector(n + 1, rng);
    const CoefVector want = brute(full);
    const auto got = algebra::euler_rhs_central(g, k, full.head(n), full[n]);
    CoefVector cat(n + 1);
    cat << got.du, got.da;
    worst = std::max(worst, relative(cat, want));
  }
  return worst;
}

using PairRhs = algebra::PairRate (*)(const FiniteLieAlgebra&, const ExtensionData&, const CoefVector&,
                                      const CoefVector&);

double check_pair(const FiniteLieAlgebra& g, const ExtensionData& ext, PairRhs rhs, std::mt19937_64& rng) {
  const auto brute = oracle::extension_bruteforce(oracle::build_extension_algebra(g, ext));
  const int n = g.dim(), m = ext.dim_v();
  double worst = 0.0;
  for (int i = 0; i < kStatesPerAlgebra; ++i) {
    const CoefVector full = random_vector(n + m, rng);
    const CoefVector want = brute(full);
    const auto got = rhs(g, ext, full.head(n), full.tail(m));
    CoefVector cat(n + m);
    cat << got.du, got.df;
    worst = std::max(worst, relative(cat, want));
  }
  return worst;
}

double check_sd_central(const FiniteLieAlgebra& g, const ExtensionData& ext, const Matrix& alpha,
                        std::mt19937_64& rng) {
  const FiniteLieAlgebra semi = oracle::build_extension_algebra(g, ext);
  const auto brute =
      oracle::extension_bruteforce(oracle::build_central_algebra(semi, oracle::sd_central_cocycle(g, ext, alpha)));
  const algebra::OneCocycle oc(g, ext, alpha);
  const int n = g.dim(), m = ext.dim_v();
  double worst = 0.0;
  for (int i = 0; i < kStatesPerAlgebra; ++i) {
    const CoefVector full = random_vector(n + m + 1, rng);
    const CoefVector want = brute(full);
    const auto got = algebra::euler_rhs_sd_central(g, ext, oc, full.head(n), full.segment(n, m), full[n + m]);
    CoefVector cat(n + m + 1);
    cat << got.du, got.df, got.da;
    worst = std::max(worst, relative(cat, want));
  }
  return worst;
}

// alpha(X) = b*(X) v0 = -b(X)^T v0, a coboundary for the dual action.
Matrix coboundary_alpha(const ExtensionData& ext, const CoefVector& v0) {
  Matrix alpha(ext.dim_v(), ext.dim_g());
  for (int i = 0; i < ext.dim_g(); ++i)
    alpha.col(i) = -ext.action_transpose(CoefVector::Unit(ext.dim_g(), i)) * v0;
  return alpha;
}

Matrix bracket_functional(const FiniteLieAlgebra& g, const CoefVector& phi) {
  const int n = g.dim();
  Matrix w(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      w(i, j) = phi.dot(g.bracket(CoefVector::Unit(n, i), CoefVector::Unit(n, j)));
  return w;
}

void criterion_extensions(CriterionResult& r) {
  std::mt19937_64 rng(5);
  Matrix g3 = Matrix::Zero(3, 3);
  g3.diagonal() << 1.0, 2.0, 3.0;
  const Matrix id3 = Matrix::Identity(3, 3);
  const FiniteLieAlgebra so3 = algebra::so3(g3);
  const FiniteLieAlgebra sl2 = oracle::sl2_polynomial();
  const FiniteLieAlgebra rnd = oracle::random_algebra(rng);

  // Central: any skew form on so(3) is a cocycle; coboundaries elsewhere.
  {
    const Matrix a = random_matrix(3, 3, rng);
    double w = check_central(so3, a - a.transpose(), rng);
    w = std::max(w, check_central(sl2, bracket_functional(sl2, random_vector(3, rng)), rng));
    w = std::max(w, check_central(rnd, bracket_functional(rnd, random_vector(5, rng)), rng));
    r.measurements.push_back(le("central[so3,sl2,so3+aff1]", w, kExtensionTolerance));
  }
  {
    double w = check_pair(so3, oracle::adjoint_module(so3, id3, true), algebra::euler_rhs_semidirect, rng);
    w = std::max(w, check_pair(so3, oracle::adjoint_module(so3, oracle::random_spd(3, rng), false),
                               algebra::euler_rhs_semidirect, rng));
    w = std::max(w, check_pair(sl2, oracle::adjoint_module(sl2, sl2.gram(), false), algebra::euler_rhs_semidirect, rng));
    w = std::max(w, check_pair(rnd, oracle::adjoint_module(rnd, oracle::random_spd(5, rng), false),
                               algebra::euler_rhs_semidirect, rng));
    r.measurements.push_back(le("semidirect[so3 inv,so3,sl2,so3+aff1]", w, kExtensionTolerance));
  }
  {
    double w = check_pair(so3, oracle::adjoint_coboundary(so3, random_matrix(3, 3, rng), id3),
                          algebra::euler_rhs_abelian, rng);
    w = std::max(w, check_pair(sl2, oracle::adjoint_coboundary(sl2, random_matrix(3, 3, rng), oracle::random_spd(3, rng)),
                               algebra::euler_rhs_abelian, rng));
    w = std::max(w, check_pair(rnd, oracle::trivial_module(rnd, random_matrix(2, 5, rng), oracle::random_spd(2, rng)),
                               algebra::euler_rhs_abelian, rng));
    r.measurements.push_back(le("abelian[so3,sl2,so3+aff1]", w, kExtensionTolerance));
  }
  {
    const FiniteLieAlgebra h_unit = algebra::so3(id3);
    const FiniteLieAlgebra h_rand = algebra::so3(oracle::random_spd(3, rng));
    double w = check_pair(so3, oracle::twisted_general(so3, h_unit, random_matrix(3, 3, rng)),
                          algebra::euler_rhs_general, rng);
    // phi = id gives omega = 0: the semidirect product so(3) x so(3).
    w = std::max(w, check_pair(so3, oracle::twisted_general(so3, h_rand, id3), algebra::euler_rhs_general, rng));
    w = std::max(w, check_pair(rnd, oracle::twisted_general(rnd, h_rand, random_matrix(3, 5, rng)),
                               algebra::euler_rhs_general, rng));
    r.measurements.push_back(le("general[so3 twisted,so3 x so3,so3+aff1]", w, kExtensionTolerance));
  }
  {
    double w = 0.0;
    const auto sd = [&](const FiniteLieAlgebra& g, const ExtensionData& ext) {
      w = std::max(w, check_sd_central(g, ext, coboundary_alpha(ext, random_vector(ext.dim_v(), rng)), rng));
    };
    sd(so3, oracle::adjoint_module(so3, id3, true));
    sd(so3, oracle::adjoint_module(so3, oracle::random_spd(3, rng), false));
    sd(sl2, oracle::adjoint_module(sl2, sl2.gram(), false));
    sd(rnd, oracle::adjoint_module(rnd, oracle::random_spd(5, rng), false));
    r.measurements.push_back(le("sd_central[so3 inv,so3,sl2,so3+aff1]", w, kExtensionTolerance));
  }
}

// ---------------------------------------------------------------------------
// 3. Rigid body.

void criterion_rigid_body(CriterionResult& r) {
  ModelSpec spec;
  spec.id = ModelId::RigidBody;
  spec.inertia = {1.0, 2.0, 3.0};
  presets::InitialSpec init;
  init.vector = std::vector<double>{0.3, 1.0, 0.5};
  const ModelState s0 = presets::initial_state(spec, init, {});
  const Trajectory traj = run(spec, s0, 100.0, std::nullopt, 1e-3, 1000);
  const auto rep = diagnostics::drift_report(spec, traj);
  r.measurements.push_back(le("energy_drift", rep.entries.at(0).max_drift, kRigidDriftTolerance));
  r.measurements.push_back(le("casimir_drift", rep.find("casimir")->max_drift, kRigidDriftTolerance));
  double worst = 0.0;
  for (int axis = 0; axis < 3; ++axis) {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(3);
    u[axis] = 1.0 + axis;
    const ModelState p0 = models::AlgebraState{u};
    const Trajectory t = run(spec, p0, 1.0, std::nullopt, 1e-3, 1000);
    const auto& uf = std::get<models::AlgebraState>(t.states.back()).u;
    worst = std::max(worst, (uf - u).cwiseAbs().maxCoeff());
  }
  r.measurements.push_back(le("principal_axis_motion", worst, kStationaryTolerance));
}

// ---------------------------------------------------------------------------
// 4. Burgers against characteristics.

double characteristic_burgers(double x, double t) {
  // u = sin(x - 3ut), Newton from u = sin x; 1 + 3t cos(.) >= 0.4 for t <= 0.2.
  double u = std::sin(x);
  for (int it = 0; it < 60; ++it) {
    const double th = x - 3.0 * t * u;
    const double g = u - std::sin(th);
    const double dg = 1.0 + 3.0 * t * std::cos(th);
    const double step = g / dg;
    u -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return u;
}

void criterion_burgers(CriterionResult& r) {
  ModelSpec spec;
  spec.id = ModelId::Burgers;
  const ModelState s0 = make_state(spec, "sine", 1.0);
  const double t = 0.2;
  const Trajectory traj = run(spec, s0, t, 0.2, std::nullopt, 1000);
  const auto& u = std::get<models::CircleState>(traj.states.back()).u;
  constexpr int kPoints = 512;
  const std::vector<double> grid = s1::to_grid(u, kPoints);
  double err = 0.0;
  for (int j = 0; j < kPoints; ++j) {
    const double x = 2.0 * std::numbers::pi * j / kPoints;
    err = std::max(err, std::abs(grid[j] - characteristic_burgers(x, t)));
  }
  r.measurements.push_back(le("max_error_t0.2", err, kCharacteristicTolerance));
  double fired = std::numeric_limits<double>::quiet_NaN();
  try {
    run(spec, s0, 1.0, 0.2, std::nullopt, 1000);
  } catch (const integrators::IntegrationDiverged& e) {
    fired = e.time();
  }
  r.measurements.push_back(within("blowup_time", fired, kBlowupLo, kBlowupHi));
}

// ---------------------------------------------------------------------------
// 5. Energy across the catalog.

struct EnergyCase {
  ModelId id;
  std::string preset;
  double amplitude;
  double cfl;
  double t_final;
  double a;  // central charge where the model has one
  double alpha2 = 0.1;
};

const std::vector<EnergyCase>& energy_cases() {
  // Circle pair systems steepen into shocks before t = 1 at unit amplitude,
  // so they start from a quarter-amplitude sine. EPDiff uses alpha = 1: at
  // alpha^2 = 0.1 random-band data collapses into pulsons before t = 1.
  static const std::vector<EnergyCase> cases = {
      {ModelId::Burgers, "sine", 1.0, 0.2, 0.2, 0.0},
      {ModelId::Kdv, "sine", 1.0, 0.5, 1.0, 0.01},
      {ModelId::CamassaHolm, "sine", 1.0, 0.2, 1.0, 0.5},
      {ModelId::HunterSaxton, "sine", 1.0, 0.2, 1.0, 0.0},
      {ModelId::PairL2, "sine", 0.25, 0.2, 1.0, 0.0},
      {ModelId::PairL2Sigma, "sine", 0.25, 0.2, 1.0, 0.0},
      {ModelId::PairH1, "sine", 0.25, 0.2, 1.0, 0.0},
      {ModelId::PairH1Sigma, "sine", 0.25, 0.2, 1.0, 0.0},
      {ModelId::PairL2AlphaCentral, "sine", 0.25, 0.2, 1.0, 0.5},
      {ModelId::Euler2D, "random-band", 1.0, 0.4, 1.0, 0.0},
      {ModelId::QgBeta, "random-band", 1.0, 0.4, 1.0, 0.0},
      {ModelId::Boussinesq, "random-band", 1.0, 0.4, 1.0, 0.0},
      {ModelId::PassiveScalar, "random-band", 1.0, 0.4, 1.0, 0.0},
      {ModelId::Mhd2D, "random-band", 1.0, 0.4, 1.0, 0.0},
      {ModelId::ChargedFluid, "random-band", 1.0, 0.4, 1.0, 0.0},
      {ModelId::TemplateMatching, "random-band", 1.0, 0.4, 0.2, 0.0},
      {ModelId::Epdiff, "random-band", 1.0, 0.4, 1.0, 0.0, 1.0},
      {ModelId::LaeAlpha, "random-band", 1.0, 0.4, 1.0, 0.0},
      {ModelId::RigidBody, "two-mode", 1.0, 0.05, 1.0, 0.0},
  };
  return cases;
}

void criterion_energy(CriterionResult& r) {
  for (const EnergyCase& c : energy_cases()) {
    ModelSpec spec = spec_for(c.id);
    spec.a = c.a;
    spec.alpha2 = c.alpha2;
    const std::string name(models::info(c.id).name);
    double d = std::numeric_limits<double>::quiet_NaN();
    try {
      const Trajectory traj = run(spec, make_state(spec, c.preset, c.amplitude, 7), c.t_final, c.cfl);
      d = diagnostics::drift_report(spec, traj).entries.at(0).max_drift;
    } catch (const integrators::IntegrationDiverged&) {
    }
    r.measurements.push_back(le(name + "_energy_drift", d, diagnostics::kEnergyTolerance));
  }
}

// ---------------------------------------------------------------------------
// 6. Casimirs.

void criterion_casimirs(CriterionResult& r) {
  auto report = [&](ModelId id, const std::vector<std::string>& checked, const std::vector<std::string>& shown) {
    const ModelSpec spec = spec_for(id);
    const Trajectory traj = run(spec, make_state(spec, "random-band", 1.0, 11), 1.0, 0.4);
    const auto rep = diagnostics::drift_report(spec, traj);
    const std::string prefix(models::info(id).name);
    for (const auto& name : checked) {
      const auto* e = rep.find(name);
      if (!e) throw ContractError("missing invariant " + name);
      r.measurements.push_back(le(prefix + "_" + name + "_drift", e->max_drift, e->tolerance));
    }
    for (const auto& name : shown) r.measurements.push_back(info(prefix + "_" + name + "_drift", rep.find(name)->max_drift));
  };
  report(ModelId::Euler2D, {"enstrophy", "omega3", "omega4"}, {});
  // beta != 0 breaks the cubic and quartic moments: d/dt int omega^p =
  // -p beta int omega^{p-1} psi_x, which vanishes only for p <= 2.
  report(ModelId::QgBeta, {"enstrophy"}, {"omega3", "omega4"});
  report(ModelId::Mhd2D, {"cross_helicity"}, {});
  report(ModelId::PassiveScalar, {"f2", "f3", "f4"}, {});
  report(ModelId::ChargedFluid, {"rho2", "rho3", "rho4"}, {});
}

// ---------------------------------------------------------------------------
// 7. Totally geodesic monitors.

void criterion_monitors(CriterionResult& r) {
  for (ModelId id : {ModelId::Euler2D, ModelId::QgBeta, ModelId::Boussinesq, ModelId::PassiveScalar}) {
    const ModelSpec spec = spec_for(id);
    const Trajectory traj = run(spec, make_state(spec, "random-band", 1.0, 13), 1.0, 0.4);
    const auto m = diagnostics::monitor_totally_geodesic(spec, traj);
    const std::string name(models::info(id).name);
    r.measurements.push_back(le(name + "_max_harmonic_u", m.max_mean_u, m.threshold));
    if (id == ModelId::Boussinesq || id == ModelId::PassiveScalar)
      r.measurements.push_back(le(name + "_max_integral_f", m.max_integral_f, m.threshold));
  }
}

// ---------------------------------------------------------------------------
// 8. Reductions.

double max_diff(const s1::Spectrum1D& a, const s1::Spectrum1D& b) {
  double d = 0.0;
  for (int k = 0; k <= std::max(a.n_modes(), b.n_modes()); ++k) d = std::max(d, std::abs(a.coefficient(k) - b.coefficient(k)));
  return d;
}

// Rate of the x-only torus field against a circle spectrum, plus the largest
// stray coefficient off the k2 = 0 axis or in the second component.
double compare_axis(const s2::VecField2D& rate, const s1::Spectrum1D& ref) {
  double d = std::abs(rate.mean[0] - ref[0].real()) + std::abs(rate.mean[1]);
  const s2::Field2D& r1 = rate.c[0];
  for (int i = 0; i < r1.nx(); ++i)
    for (int j = 0; j < r1.nky(); ++j) {
      const int k1 = r1.kx(i);
      const s2::Complex want = (j == 0 && k1 != 0) ? ref.coefficient(k1) : s2::Complex(0.0);
      d = std::max(d, std::abs(r1.at(i, j) - want));
      d = std::max(d, std::abs(rate.c[1].at(i, j)));
    }
  return d;
}

void criterion_reductions(CriterionResult& r) {
  constexpr int kGrid = 64;
  const int modes = (kGrid - 1) / 3;
  s1::Spectrum1D u = s1::Spectrum1D::sine(modes, 1) + s1::Spectrum1D::cosine(modes, 2, 0.5) +
                     s1::Spectrum1D::sine(modes, 3, 0.3) + s1::Spectrum1D::constant(modes, 0.2);
  s2::Field2D u1(kGrid, kGrid);
  for (int k = 0; k <= modes; ++k)
    if (u[k] != s1::Complex(0.0)) u1.set_mode(k, 0, u[k]);
  const s2::VecField2D uv(u1, s2::Field2D(kGrid, kGrid));

  const s1::Spectrum1D burgers = s1::rhs_burgers(u);
  r.measurements.push_back(
      le("template_vs_burgers", compare_axis(s2::rhs_template_matching(uv), burgers), kReductionTolerance));
  r.measurements.push_back(
      le("epdiff_vs_camassa_holm", compare_axis(s2::rhs_epdiff(uv, 1.0), s1::rhs_camassa_holm(u, 0.0)),
         kReductionTolerance));
  r.measurements.push_back(le("kdv_a0_vs_burgers", max_diff(s1::rhs_kdv(u, 0.0), burgers), kReductionTolerance));
  r.measurements.push_back(
      le("burgers_vs_-adT_l2(u)u", max_diff(burgers, -1.0 * s1::ad_transpose_l2(u, u)), kReductionTolerance));
  r.measurements.push_back(le("extended_ch_a0_vs_-adT_h1(u)u",
                              max_diff(s1::rhs_camassa_holm(u, 0.0), -1.0 * s1::ad_transpose_h1(u, u)),
                              kReductionTolerance));
}

// ---------------------------------------------------------------------------
// 9. Convergence orders.

double coefficient_distance(const s1::Spectrum1D& a, const s1::Spectrum1D& b) { return max_diff(a, b); }

// Sum of squared coefficient differences over all modes of either field.
double field_distance(const s2::Field2D& coarse, const s2::Field2D& ref) {
  double s = 0.0;
  for (int i = 0; i < ref.nx(); ++i)
    for (int j = 0; j < ref.nky(); ++j) {
      const int k1 = ref.kx(i);
      s += (j == 0 ? 1.0 : 2.0) * std::norm(ref.at(i, j) - coarse.coefficient(k1, j));
    }
  return std::sqrt(s);
}

s2::Field2D analytic_vorticity(int n) {
  s2::Field2D w(n, n);
  const int band = w.band_x();
  for (int k1 = -band; k1 <= band; ++k1)
    for (int k2 = 0; k2 <= band; ++k2) {
      if (k2 == 0 && k1 <= 0) continue;
      const double kk = std::sqrt(double(k1) * k1 + double(k2) * k2);
      w.set_mode(k1, k2, std::exp(-2.0 * kk) * s2::Complex(std::cos(k1 + 2.0 * k2), std::sin(3.0 * k1 - k2)));
    }
  return w;
}

void criterion_convergence(CriterionResult& r) {
  {
    ModelSpec spec;
    spec.id = ModelId::CamassaHolm;
    const ModelState s0 = make_state(spec, "sine", 1.0, 1, 128, 64);
    const double t = 0.5;
    auto final_u = [&](double dt) {
      return std::get<models::CircleState>(run(spec, s0, t, std::nullopt, dt, 100000).states.back()).u;
    };
    const s1::Spectrum1D ref = final_u(t / 400.0);
    std::vector<double> err;
    for (int steps : {10, 20, 40}) err.push_back(coefficient_distance(final_u(t / steps), ref));
    r.measurements.push_back(within("rk4_order_dt/10->dt/20", std::log2(err[0] / err[1]), kOrderLo, kOrderHi));
    r.measurements.push_back(within("rk4_order_dt/20->dt/40", std::log2(err[1] / err[2]), kOrderLo, kOrderHi));
  }
  {
    ModelSpec spec;
    spec.id = ModelId::Euler2D;
    const double t = 0.5, dt = 0.005;
    auto final_w = [&](int n) {
      const ModelState s0 = models::VorticityState{analytic_vorticity(n), {0.0, 0.0}};
      return std::get<models::VorticityState>(run(spec, s0, t, std::nullopt, dt, 100000).states.back()).omega;
    };
    const s2::Field2D ref = final_w(128);
    const double e16 = field_distance(final_w(16), ref), e32 = field_distance(final_w(32), ref);
    r.measurements.push_back(info("spectral_error_n16", e16));
    r.measurements.push_back(info("spectral_error_n32", e32));
    r.measurements.push_back(ge("spectral_error_ratio_16/32", e16 / e32, kSpectralRatioFloor));
  }
}

// ---------------------------------------------------------------------------
// 10. Finite-difference cross-check.

void criterion_finite_difference(CriterionResult& r) {
  const ModelId ids[] = {ModelId::Euler2D, ModelId::QgBeta,       ModelId::Boussinesq,
                         ModelId::PassiveScalar, ModelId::Mhd2D, ModelId::ChargedFluid,
                         ModelId::TemplateMatching, ModelId::Epdiff, ModelId::LaeAlpha};
  for (ModelId id : ids) {
    const ModelSpec spec = spec_for(id);
    const ModelState s = make_state(spec, "random-band", 1.0, 3, 64);
    const auto cmp = oracle::finite_difference_check(spec, s, 512);
    r.measurements.push_back(le(std::string(models::info(id).name) + "_fd_error", cmp.max_error, kFdTolerance));
  }
}

struct CriterionDef {
  const char* title;
  double budget;
  void (*run)(CriterionResult&);
};

const CriterionDef kCriteria[kCriterionCount] = {
    {"adjoint identities (L2, H1) with negative controls", 5.0, criterion_adjoint},
    {"extension reductions vs full-bracket brute force", 5.0, criterion_extensions},
    {"rigid body energy, Casimir and principal axes", 5.0, criterion_rigid_body},
    {"Burgers characteristics and blow-up detection", 10.0, criterion_burgers},
    {"energy conservation across the catalog", 180.0, criterion_energy},
    {"Casimir conservation", 60.0, criterion_casimirs},
    {"totally geodesic monitors", 60.0, criterion_monitors},
    {"reduction consistency", 0.0, criterion_reductions},
    {"convergence orders (RK4, spectral)", 0.0, criterion_convergence},
    {"finite-difference cross-check of 2D RHS", 0.0, criterion_finite_difference},
};

}  // namespace

bool Measurement::passed() const {
  if (relation == "info") return true;
  if (!std::isfinite(value)) return false;
  if (relation == "<=") return value <= hi;
  if (relation == ">=") return value >= lo;
  return value > lo && value < hi;
}

bool CriterionResult::passed() const {
  if (!error.empty()) return false;
  if (budget_seconds > 0.0 && seconds >= budget_seconds) return false;
  return std::all_of(measurements.begin(), measurements.end(), [](const Measurement& m) { return m.passed(); });
}

Suite parse_suite(std::string_view name) {
  if (name == "oracle") return Suite::Oracle;
  if (name == "conservation") return Suite::Conservation;
  if (name == "convergence") return Suite::Convergence;
  if (name == "monitors") return Suite::Monitors;
  if (name == "all") return Suite::All;
  throw ContractError("unknown suite '" + std::string(name) +
                      "' (expected oracle, conservation, convergence, monitors or all)");
}

std::string_view suite_name(Suite s) {
  switch (s) {
    case Suite::Oracle: return "oracle";
    case Suite::Conservation: return "conservation";
    case Suite::Convergence: return "convergence";
    case Suite::Monitors: return "monitors";
    case Suite::All: return "all";
  }
  return "all";
}

const std::vector<int>& suite_criteria(Suite s) {
  static const std::vector<int> oracle{1, 2, 8, 10}, conservation{3, 5, 6}, convergence{4, 9}, monitors{7},
      all{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  switch (s) {
    case Suite::Oracle: return oracle;
    case Suite::Conservation: return conservation;
    case Suite::Convergence: return convergence;
    case Suite::Monitors: return monitors;
    case Suite::All: return all;
  }
  return all;
}

std::string_view criterion_title(int id) {
  if (id < 1 || id > kCriterionCount) throw ContractError("criterion id out of range");
  return kCriteria[id - 1].title;
}

CriterionResult run_criterion(int id) {
  if (id < 1 || id > kCriterionCount) throw ContractError("criterion id out of range");
  const CriterionDef& def = kCriteria[id - 1];
  CriterionResult r;
  r.id = id;
  r.title = def.title;
  r.budget_seconds = def.budget;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    def.run(r);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

int thread_count_from_env() {
  const char* v = std::getenv("EA_NUM_THREADS");
  if (!v) return 1;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || n < 1) return 1;
  return static_cast<int>(std::min<long>(n, 64));
}

std::vector<CriterionResult> run_suite(Suite s, int threads, const Reporter& report) {
  const std::vector<int>& ids = suite_criteria(s);
  if (threads <= 0) threads = thread_count_from_env();
  threads = std::min<int>(threads, static_cast<int>(ids.size()));
  std::vector<CriterionResult> out(ids.size());
  if (threads <= 1) {
    for (size_t i = 0; i < ids.size(); ++i) {
      out[i] = run_criterion(ids[i]);
      if (report) report(out[i]);
    }
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (size_t i = next++; i < ids.size(); i = next++) out[i] = run_criterion(ids[i]);
    });
  for (auto& t : pool) t.join();
  if (report)
    for (const auto& r : out) report(r);
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s  %2d  %s  (%.2f s)", r.passed() ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds);
  return buf;
}

std::vector<std::string> detail_lines(const CriterionResult& r) {
  std::vector<std::string> out;
  char buf[512];
  for (const Measurement& m : r.measurements) {
    if (m.relation == "<=")
      std::snprintf(buf, sizeof buf, "      %-4s %-48s %.3e <= %.1e", m.passed() ? "ok" : "FAIL", m.name.c_str(),
                    m.value, m.hi);
    else if (m.relation == ">=")
      std::snprintf(buf, sizeof buf, "      %-4s %-48s %.3e >= %.1e", m.passed() ? "ok" : "FAIL", m.name.c_str(),
                    m.value, m.lo);
    else if (m.relation == "in")
      std::snprintf(buf, sizeof buf, "      %-4s %-48s %.4f in (%g, %g)", m.passed() ? "ok" : "FAIL",
                    m.name.c_str(), m.value, m.lo, m.hi);
    else
      std::snprintf(buf, sizeof buf, "      %-4s %-48s %.3e", "info", m.name.c_str(), m.value);
    out.emplace_back(buf);
  }
  if (r.budget_seconds > 0.0) {
    std::snprintf(buf, sizeof buf, "      %-4s %-48s %.2f < %.0f", r.seconds < r.budget_seconds ? "ok" : "FAIL",
                  "runtime_s", r.seconds, r.budget_seconds);
    out.emplace_back(buf);
  }
  if (!r.error.empty()) out.push_back("      error: " + r.error);
  return out;
}

}  // namespace ea::verification
