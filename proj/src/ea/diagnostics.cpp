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

#include "ea/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ea/errors.hpp"

namespace ea::diagnostics {
namespace {

using models::ModelId;
namespace s1 = ea::spectral1d;
namespace s2 = ea::spectral2d;

constexpr double kArea = 4.0 * std::numbers::pi * std::numbers::pi;

double kinetic(const models::VecField2D& u) { return s2::inner(u, u); }

// int |u|^2 + alpha2 |grad u|^2
double kinetic_h1(const models::VecField2D& u, double alpha2) {
  double e = kArea * (u.mean[0] * u.mean[0] + u.mean[1] * u.mean[1]);
  for (const auto& c : u.c) e += s2::inner(c, s2::helmholtz(c, alpha2));
  return e;
}

double vorticity_kinetic(const models::Field2D& omega, const models::Mean2& mean) {
  return kinetic(s2::velocity_from_vorticity(omega, mean));
}

int padded_size(int band, int p, int n) {
  int m = std::max(n, 4);
  while (m <= p * band) m *= 2;
  return m;
}

void vorticity_moments(std::vector<Invariant>& out, const models::Field2D& omega, bool verdict) {
  out.push_back({"enstrophy", 0.5 * s2::inner(omega, omega), kQuadraticTolerance});
  out.push_back({"omega3", moment(omega, 3), verdict ? kMomentTolerance : 0.0});
  out.push_back({"omega4", moment(omega, 4), verdict ? kMomentTolerance : 0.0});
}

void scalar_moments(std::vector<Invariant>& out, const std::string& name, const models::Field2D& f) {
  out.push_back({"integral_" + name, s2::integral(f), kLinearTolerance});
  out.push_back({name + "2", s2::inner(f, f), kQuadraticTolerance});
  out.push_back({name + "3", moment(f, 3), kScalarMomentTolerance});
  out.push_back({name + "4", moment(f, 4), kScalarMomentTolerance});
}

void means(std::vector<Invariant>& out, const std::string& prefix, const models::Mean2& m) {
  out.push_back({prefix + "1", m[0], kLinearTolerance});
  out.push_back({prefix + "2", m[1], kLinearTolerance});
}

}  // namespace

double drift(double value, double initial) {
  return std::abs(value - initial) / std::max(std::abs(initial), kDriftEpsilon);
}

double moment(const models::Field2D& f, int p) {
  if (p < 1) throw ContractError("moment: order must be positive");
  const int mx = padded_size(f.band_x(), p, f.nx());
  const int my = padded_size(f.band_y(), p, f.ny());
  models::Field2D g(mx, my);
  for (int k1 = -f.band_x(); k1 <= f.band_x(); ++k1)
    for (int k2 = 0; k2 <= f.band_y(); ++k2) g.at(g.row(k1), k2) = f.at(f.row(k1), k2);
  const auto grid = s2::to_grid(g);
  double acc = 0.0;
  for (double v : grid) acc += std::pow(v, p);
  return kArea * acc / static_cast<double>(grid.size());
}

double energy(const models::ModelSpec& spec, const models::ModelState& s) {
  const double central = 0.5 * spec.a * spec.a;
  switch (spec.id) {
    case ModelId::Burgers: return 0.5 * s1::inner(std::get<models::CircleState>(s).u, std::get<models::CircleState>(s).u);
    case ModelId::Kdv: {
      const auto& u = std::get<models::CircleState>(s).u;
      return 0.5 * s1::inner(u, u) + central;
    }
    case ModelId::CamassaHolm: {
      const auto& u = std::get<models::CircleState>(s).u;
      return 0.5 * s1::inner(u, u, s1::Metric1D::H1) + central;
    }
    case ModelId::HunterSaxton: {
      const auto du = s1::antideriv(std::get<models::CircleState>(s).u, 1);
      return 0.5 * s1::inner(du, du);
    }
    case ModelId::PairL2:
    case ModelId::PairL2Sigma:
    case ModelId::PairH1:
    case ModelId::PairH1Sigma:
    case ModelId::PairL2AlphaCentral: {
      const auto& p = std::get<models::CirclePairState>(s);
      const auto metric = s1::pair_metric(models::pair_variant(spec.id));
      const double e = 0.5 * (s1::inner(p.u, p.u, metric) + s1::inner(p.f, p.f, metric));
      return spec.id == ModelId::PairL2AlphaCentral ? e + central : e;
    }
    case ModelId::Euler2D:
    case ModelId::QgBeta: {
      const auto& v = std::get<models::VorticityState>(s);
      return 0.5 * vorticity_kinetic(v.omega, v.mean);
    }
    case ModelId::Boussinesq: {
      const auto& v = std::get<models::VorticityPairState>(s);
      return 0.5 * vorticity_kinetic(v.omega, v.mean) +
             0.5 * s2::inner(v.tracer, v.tracer) / (spec.brunt * spec.brunt);
    }
    case ModelId::PassiveScalar: {
      const auto& v = std::get<models::VorticityPairState>(s);
      return 0.5 * (vorticity_kinetic(v.omega, v.mean) + s2::inner(v.tracer, v.tracer));
    }
    case ModelId::Mhd2D: {
      const auto& v = std::get<models::VelocityPairState>(s);
      return 0.5 * (kinetic(v.u) + kinetic(v.B));
    }
    case ModelId::ChargedFluid: {
      const auto& v = std::get<models::ChargedState>(s);
      return 0.5 * (kinetic(v.u) + s2::inner(v.rho, v.rho));
    }
    case ModelId::TemplateMatching: return 0.5 * kinetic(std::get<models::VelocityState>(s).u);
    case ModelId::Epdiff:
    case ModelId::LaeAlpha: return 0.5 * kinetic_h1(std::get<models::VelocityState>(s).u, spec.alpha2);
    case ModelId::RigidBody: {
      const auto& u = std::get<models::AlgebraState>(s).u;
      double e = 0.0;
      for (int i = 0; i < 3; ++i) e += spec.inertia[i] * u[i] * u[i];
      return 0.5 * e;
    }
  }
  throw ContractError("energy: unknown model");
}

std::vector<Invariant> invariants(const models::ModelSpec& spec, const models::ModelState& s) {
  std::vector<Invariant> out;
  switch (spec.id) {
    case ModelId::Burgers:
    case ModelId::Kdv:
      out.push_back({"integral_u", s1::integral(std::get<models::CircleState>(s).u), kLinearTolerance});
      break;
    case ModelId::CamassaHolm: {
      const auto& u = std::get<models::CircleState>(s).u;
      out.push_back({"integral_u", s1::integral(u), kLinearTolerance});
      out.push_back({"integral_m", s1::integral(s1::inertia_apply(u, s1::Metric1D::H1)), kLinearTolerance});
      break;
    }
    case ModelId::HunterSaxton:
      out.push_back({"integral_v", s1::integral(std::get<models::CircleState>(s).u), kLinearTolerance});
      break;
    case ModelId::PairL2:
    case ModelId::PairL2Sigma:
    case ModelId::PairH1:
    case ModelId::PairH1Sigma:
    case ModelId::PairL2AlphaCentral: {
      const auto& p = std::get<models::CirclePairState>(s);
      // The sigma cocycle feeds u' f into the u-rate, so int u is not conserved there.
      const bool sigma = spec.id == ModelId::PairL2Sigma || spec.id == ModelId::PairH1Sigma;
      out.push_back({"integral_u", s1::integral(p.u), sigma ? 0.0 : kLinearTolerance});
      out.push_back({"integral_f", s1::integral(p.f), kLinearTolerance});
      break;
    }
    case ModelId::Euler2D:
    case ModelId::QgBeta: {
      const auto& v = std::get<models::VorticityState>(s);
      // With beta != 0 only the quadratic Casimir survives.
      vorticity_moments(out, v.omega, spec.id == ModelId::Euler2D || spec.beta == 0.0);
      means(out, "mean_u", v.mean);
      break;
    }
    case ModelId::Boussinesq: {
      const auto& v = std::get<models::VorticityPairState>(s);
      out.push_back({"integral_xi", s2::integral(v.tracer), kLinearTolerance});
      means(out, "mean_u", v.mean);
      break;
    }
    case ModelId::PassiveScalar: {
      const auto& v = std::get<models::VorticityPairState>(s);
      vorticity_moments(out, v.omega, true);
      scalar_moments(out, "f", v.tracer);
      means(out, "mean_u", v.mean);
      break;
    }
    case ModelId::Mhd2D: {
      const auto& v = std::get<models::VelocityPairState>(s);
      out.push_back({"cross_helicity", s2::inner(v.u, v.B), kQuadraticTolerance});
      const models::Field2D a = s2::inverse_laplacian(s2::vorticity(v.B));
      // A is single-valued only without a harmonic field; then int A^2 is a Casimir.
      const bool potential = v.B.mean[0] == 0.0 && v.B.mean[1] == 0.0;
      out.push_back({"potential_a2", s2::inner(a, a), potential ? kQuadraticTolerance : 0.0});
      out.push_back({"magnetic_b2", s2::inner(v.B.c[0], v.B.c[0]) + s2::inner(v.B.c[1], v.B.c[1]) +
                                        kArea * (v.B.mean[0] * v.B.mean[0] + v.B.mean[1] * v.B.mean[1]),
                     0.0});
      means(out, "mean_u", v.u.mean);
      means(out, "mean_B", v.B.mean);
      break;
    }
    case ModelId::ChargedFluid: {
      const auto& v = std::get<models::ChargedState>(s);
      scalar_moments(out, "rho", v.rho);
      break;
    }
    case ModelId::TemplateMatching:
    case ModelId::Epdiff:
    case ModelId::LaeAlpha: {
      const auto& u = std::get<models::VelocityState>(s).u;
      out.push_back({"integral_m1", kArea * u.mean[0], kLinearTolerance});
      out.push_back({"integral_m2", kArea * u.mean[1], kLinearTolerance});
      break;
    }
    case ModelId::RigidBody: {
      const auto& u = std::get<models::AlgebraState>(s).u;
      double c = 0.0;
      for (int i = 0; i < 3; ++i) c += std::pow(spec.inertia[i] * u[i], 2);
      out.push_back({"casimir", c, kQuadraticTolerance});
      break;
    }
  }
  return out;
}

bool InvariantReport::all_passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const InvariantEntry& e) { return e.passed(); });
}

const InvariantEntry* InvariantReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

InvariantReport drift_report(const models::ModelSpec& spec, const Trajectory& traj) {
  InvariantReport rep;
  if (traj.empty()) return rep;
  auto collect = [&](const models::ModelState& s) {
    std::vector<Invariant> v{{"energy", energy(spec, s), kEnergyTolerance}};
    for (auto& i : invariants(spec, s)) v.push_back(std::move(i));
    return v;
  };
  const auto first = collect(traj.states.front());
  for (const auto& i : first) rep.entries.push_back({i.name, i.value, i.value, 0.0, i.tolerance});
  for (size_t t = 1; t < traj.size(); ++t) {
    const auto now = collect(traj.states[t]);
    for (size_t k = 0; k < now.size(); ++k) {
      auto& e = rep.entries[k];
      e.current = now[k].value;
      e.max_drift = std::max(e.max_drift, drift(now[k].value, e.initial));
    }
  }
  return rep;
}

bool has_monitor(ModelId id) {
  return id == ModelId::Euler2D || id == ModelId::QgBeta || id == ModelId::Boussinesq ||
         id == ModelId::PassiveScalar;
}

MonitorReport monitor_totally_geodesic(const models::ModelSpec& spec, const Trajectory& traj) {
  if (!has_monitor(spec.id))
    throw ContractError("monitor_totally_geodesic: model '" + std::string(models::info(spec.id).name) +
                        "' has no totally-geodesic monitor");
  if (traj.empty()) throw ContractError("monitor_totally_geodesic: empty trajectory");
  auto sample = [&](const models::ModelState& s) {
    if (const auto* v = std::get_if<models::VorticityState>(&s))
      return std::pair{std::max(std::abs(v->mean[0]), std::abs(v->mean[1])), 0.0};
    const auto& p = std::get<models::VorticityPairState>(s);
    return std::pair{std::max(std::abs(p.mean[0]), std::abs(p.mean[1])), std::abs(s2::integral(p.tracer))};
  };
  const auto [m0, f0] = sample(traj.states.front());
  if (m0 > kMonitorThreshold || f0 > kMonitorThreshold)
    throw ContractError("monitor_totally_geodesic: initial state is not in the subalgebra");
  MonitorReport rep;
  for (const auto& s : traj.states) {
    const auto [m, f] = sample(s);
    rep.max_mean_u = std::max(rep.max_mean_u, m);
    rep.max_integral_f = std::max(rep.max_integral_f, f);
  }
  return rep;
}

}  // namespace ea::diagnostics
