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

#include "ea/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "ea/algebra.hpp"
#include "ea/errors.hpp"

namespace ea::models {
namespace {

namespace s1 = ea::spectral1d;
namespace s2 = ea::spectral2d;

const std::vector<ModelInfo> kCatalog = {
    {ModelId::Burgers, "burgers", Domain::Circle, "(u)", "-",
     "Burgers inviscid equation: u_t = -3 u u'"},
    {ModelId::Kdv, "kdv", Domain::Circle, "(u)", "a",
     "Korteweg-de Vries equation: u_t = -3 u u' - 2 a u'''"},
    {ModelId::CamassaHolm, "camassa-holm", Domain::Circle, "(u)", "a",
     "Camassa-Holm equation: m_t = -u m' - 2 u' m - 2 a u''', m = u - u''"},
    {ModelId::HunterSaxton, "hunter-saxton", Domain::Circle, "(v = u'')", "-",
     "Hunter-Saxton equation: (u'')_t = -2 u' u'' - u u'''"},
    {ModelId::PairL2, "pair-l2", Domain::Circle, "(u, f)", "-",
     "two-component L2 system: u_t = -3 u u' - f f', f_t = -u f' - u' f"},
    {ModelId::PairL2Sigma, "pair-l2-sigma", Domain::Circle, "(u, f)", "-",
     "two-component L2 system with sigma cocycle: u_t = -3 u u' + u f' + 2 u' f - f f', "
     "f_t = -u f' - u' f"},
    {ModelId::PairH1, "pair-h1", Domain::Circle, "(u, f)", "-",
     "two-component H1 system: (u - u'')_t = -3 u u' + 2 u' u'' + u u''' - f f' + f' f'', "
     "(f - f'')_t = -u f' - u' f + u f''' + u' f''"},
    {ModelId::PairH1Sigma, "pair-h1-sigma", Domain::Circle, "(u, f)", "-",
     "two-component H1 system with sigma cocycle: (u - u'')_t adds -2 u' f - u f' + 2 u' f'' + u f'''"},
    {ModelId::PairL2AlphaCentral, "pair-l2-alpha-central", Domain::Circle, "(u, f)", "a",
     "central extension by alpha(X) = X'': u_t = -3 u u' - f f' + a f'', "
     "f_t = -u f' - u' f - a u''"},
    {ModelId::Euler2D, "euler-2d", Domain::Torus, "(omega, mean u)", "-",
     "Euler equation for ideal flow, vorticity form: omega_t = -{omega, psi}"},
    {ModelId::QgBeta, "qg-beta", Domain::Torus, "(omega, mean u)", "beta",
     "quasigeostrophic beta-plane equation: omega_t = -{omega, psi} - beta psi_x"},
    {ModelId::Boussinesq, "boussinesq", Domain::Torus, "(omega, xi, mean u)", "brunt",
     "stratified Boussinesq system: omega_t = -{omega, psi} - xi_x, "
     "xi_t = -{xi, psi} + N^2 psi_x"},
    {ModelId::PassiveScalar, "passive-scalar", Domain::Torus, "(omega, f, mean u)", "-",
     "passive scalar in ideal flow: omega_t = -{omega, psi}, f_t = -{f, psi}"},
    {ModelId::Mhd2D, "mhd-2d", Domain::Torus, "(u, B)", "B0x, B0y",
     "ideal magnetohydrodynamics: u_t = P(-(u.grad)u + (B.grad)B), B_t = -L_u B"},
    {ModelId::ChargedFluid, "charged-fluid", Domain::Torus, "(u, rho)", "b",
     "charged ideal fluid: u_t = P(-(u.grad)u - rho u x B), rho_t = -(u.grad)rho"},
    {ModelId::TemplateMatching, "template-matching", Domain::Torus, "(u)", "-",
     "template matching equation: u_t = -(u.grad)u - (div u)u - grad|u|^2/2"},
    {ModelId::Epdiff, "epdiff", Domain::Torus, "(u)", "alpha2",
     "EPDiff equation: m_t = -(u.grad)m - (grad u)^T m - (div u)m, m = u - alpha^2 Delta u"},
    {ModelId::LaeAlpha, "lae-alpha", Domain::Torus, "(u)", "alpha2",
     "averaged Euler equation: m_t = P(-(u.grad)m - (grad u)^T m), m = u - alpha^2 Delta u"},
    {ModelId::RigidBody, "rigid-body", Domain::Algebra, "(u in so(3))", "I1, I2, I3",
     "rigid body equations: I u_t = u x (I u)"},
};

template <class T>
constexpr bool always_false = false;

double max_abs_grid(const std::vector<double>& g, double shift = 0.0) {
  double m = 0.0;
  for (double v : g) m = std::max(m, std::abs(v + shift));
  return m;
}

double max_abs(const Spectrum1D& s) {
  return max_abs_grid(s1::to_grid(s, s1::collocation_size(s.n_modes())));
}

double max_abs(const Field2D& f, double shift = 0.0) { return max_abs_grid(s2::to_grid(f), shift); }

double max_speed(const VecField2D& v) {
  const auto a = s2::to_grid(v.c[0]);
  const auto b = s2::to_grid(v.c[1]);
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::hypot(a[i] + v.mean[0], b[i] + v.mean[1]));
  return m;
}

// Element-wise helpers over all slot types.
void axpy_slot(Spectrum1D& y, double a, const Spectrum1D& x) { y.axpy(a, x); }
void axpy_slot(Field2D& y, double a, const Field2D& x) { y.axpy(a, x); }
void axpy_slot(VecField2D& y, double a, const VecField2D& x) { y.axpy(a, x); }
void axpy_slot(Mean2& y, double a, const Mean2& x) {
  y[0] += a * x[0];
  y[1] += a * x[1];
}
void axpy_slot(Eigen::VectorXd& y, double a, const Eigen::VectorXd& x) { y += a * x; }

void zero_slot(Spectrum1D& y) { y *= 0.0; }
void zero_slot(Field2D& y) { y *= 0.0; }
void zero_slot(VecField2D& y) { y *= 0.0; }
void zero_slot(Mean2& y) { y = {0.0, 0.0}; }
void zero_slot(Eigen::VectorXd& y) { y.setZero(); }

bool finite_slot(const Spectrum1D& s) {
  return std::all_of(s.coeffs().begin(), s.coeffs().end(),
                     [](const s1::Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}
bool finite_slot(const Field2D& f) {
  return std::all_of(f.data().begin(), f.data().end(),
                     [](const s2::Complex& c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); });
}
bool finite_slot(const VecField2D& v) {
  return finite_slot(v.c[0]) && finite_slot(v.c[1]) && std::isfinite(v.mean[0]) &&
         std::isfinite(v.mean[1]);
}
bool finite_slot(const Mean2& m) { return std::isfinite(m[0]) && std::isfinite(m[1]); }
bool finite_slot(const Eigen::VectorXd& v) { return v.allFinite(); }

double band_slot(const Spectrum1D& s) { return s1::upper_band_fraction(s); }
double band_slot(const Field2D& f) { return s2::upper_band_fraction(f); }
double band_slot(const VecField2D& v) {
  return std::max(s2::upper_band_fraction(v.c[0]), s2::upper_band_fraction(v.c[1]));
}
double band_slot(const Mean2&) { return 0.0; }
double band_slot(const Eigen::VectorXd&) { return 0.0; }

template <class F>
void for_each_slot(ModelState& y, const ModelState& x, F&& f) {
  if (y.index() != x.index()) throw ContractError("state alternatives differ");
  std::visit(
      [&](auto& ys) {
        using T = std::decay_t<decltype(ys)>;
        const T& xs = std::get<T>(x);
        std::apply([&](auto&... yf) { std::apply([&](const auto&... xf) { (f(yf, xf), ...); }, xs.fields()); },
                   ys.fields());
      },
      y);
}

const Spectrum1D& circle(const ModelState& s) { return std::get<CircleState>(s).u; }

Field2D zero_mean_copy(Field2D f) {
  f.set_mean(0.0);
  return f;
}

}  // namespace

const std::vector<ModelInfo>& catalog() { return kCatalog; }

const ModelInfo& info(ModelId id) {
  for (const auto& m : kCatalog)
    if (m.id == id) return m;
  throw ContractError("unknown model id");
}

ModelId parse_model(std::string_view name) {
  for (const auto& m : kCatalog)
    if (m.name == name) return m.id;
  throw ContractError("unknown model '" + std::string(name) + "'");
}

bool is_pair_model(ModelId id) {
  return id == ModelId::PairL2 || id == ModelId::PairL2Sigma || id == ModelId::PairH1 ||
         id == ModelId::PairH1Sigma || id == ModelId::PairL2AlphaCentral;
}

s1::PairVariant pair_variant(ModelId id) {
  switch (id) {
    case ModelId::PairL2: return s1::PairVariant::L2;
    case ModelId::PairL2Sigma: return s1::PairVariant::L2Sigma;
    case ModelId::PairH1: return s1::PairVariant::H1;
    case ModelId::PairH1Sigma: return s1::PairVariant::H1Sigma;
    case ModelId::PairL2AlphaCentral: return s1::PairVariant::L2AlphaCentral;
    default: throw ContractError("not a two-component model");
  }
}

size_t state_index(ModelId id) {
  switch (id) {
    case ModelId::Burgers:
    case ModelId::Kdv:
    case ModelId::CamassaHolm:
    case ModelId::HunterSaxton: return 0;
    case ModelId::PairL2:
    case ModelId::PairL2Sigma:
    case ModelId::PairH1:
    case ModelId::PairH1Sigma:
    case ModelId::PairL2AlphaCentral: return 1;
    case ModelId::Euler2D:
    case ModelId::QgBeta: return 2;
    case ModelId::Boussinesq:
    case ModelId::PassiveScalar: return 3;
    case ModelId::TemplateMatching:
    case ModelId::Epdiff:
    case ModelId::LaeAlpha: return 4;
    case ModelId::Mhd2D: return 5;
    case ModelId::ChargedFluid: return 6;
    case ModelId::RigidBody: return 7;
  }
  return 0;
}

void validate(const ModelSpec& spec, const ModelState& s) {
  const std::string name(info(spec.id).name);
  if (s.index() != state_index(spec.id))
    throw ContractError(name + ": state has the wrong shape for this model");
  if ((spec.id == ModelId::Epdiff || spec.id == ModelId::LaeAlpha) && !(spec.alpha2 > 0.0))
    throw ContractError(name + ": alpha2 must be positive");
  if (spec.id == ModelId::Boussinesq && !(spec.brunt > 0.0))
    throw ContractError(name + ": brunt must be positive");
  if (spec.id == ModelId::RigidBody) {
    for (double i : spec.inertia)
      if (!(i > 0.0)) throw ContractError(name + ": moments of inertia must be positive");
    if (std::get<AlgebraState>(s).u.size() != 3) throw ContractError(name + ": state must have 3 entries");
  }
  if (spec.id == ModelId::HunterSaxton && std::abs(circle(s)[0]) > 1e-14)
    throw ContractError(name + ": v = u'' must have zero mean");
  if (const auto* p = std::get_if<CirclePairState>(&s); p && p->u.n_modes() != p->f.n_modes())
    throw ContractError(name + ": u and f must share the band");
  std::visit(
      [&](const auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, VorticityState> || std::is_same_v<T, VorticityPairState>) {
          (void)s2::stream_solve(st.omega);
        }
        if constexpr (std::is_same_v<T, VelocityPairState>) {
          s2::require_solenoidal(st.u, name.c_str());
          s2::require_solenoidal(st.B, name.c_str());
        }
        if constexpr (std::is_same_v<T, ChargedState>) s2::require_solenoidal(st.u, name.c_str());
        if constexpr (std::is_same_v<T, VelocityState>) {
          if (spec.id == ModelId::LaeAlpha) s2::require_solenoidal(st.u, name.c_str());
        }
      },
      s);
}

ModelState rhs(const ModelSpec& spec, const ModelState& s) {
  switch (spec.id) {
    case ModelId::Burgers: return CircleState{s1::rhs_burgers(circle(s))};
    case ModelId::Kdv: return CircleState{s1::rhs_kdv(circle(s), spec.a)};
    case ModelId::CamassaHolm: return CircleState{s1::rhs_camassa_holm(circle(s), spec.a)};
    case ModelId::HunterSaxton: return CircleState{s1::rhs_hunter_saxton(circle(s))};
    case ModelId::PairL2:
    case ModelId::PairL2Sigma:
    case ModelId::PairH1:
    case ModelId::PairH1Sigma:
    case ModelId::PairL2AlphaCentral: {
      const auto& p = std::get<CirclePairState>(s);
      auto r = s1::rhs_two_component(p.u, p.f, pair_variant(spec.id), spec.a);
      return CirclePairState{std::move(r.du), std::move(r.df)};
    }
    case ModelId::Euler2D: {
      const auto& v = std::get<VorticityState>(s);
      return VorticityState{s2::rhs_euler_vorticity(v.omega, v.mean), {0.0, 0.0}};
    }
    case ModelId::QgBeta: {
      const auto& v = std::get<VorticityState>(s);
      return VorticityState{s2::rhs_qg(v.omega, spec.beta, v.mean), {0.0, 0.0}};
    }
    case ModelId::Boussinesq: {
      const auto& v = std::get<VorticityPairState>(s);
      auto r = s2::rhs_boussinesq(v.omega, v.tracer, spec.brunt, v.mean);
      return VorticityPairState{std::move(r.domega), std::move(r.dxi), r.dmean};
    }
    case ModelId::PassiveScalar: {
      const auto& v = std::get<VorticityPairState>(s);
      auto r = s2::rhs_passive_scalar(v.omega, v.tracer, v.mean);
      return VorticityPairState{std::move(r.domega), std::move(r.df), {0.0, 0.0}};
    }
    case ModelId::Mhd2D: {
      const auto& v = std::get<VelocityPairState>(s);
      auto r = s2::rhs_mhd(v.u, v.B);
      return VelocityPairState{std::move(r.du), std::move(r.dB)};
    }
    case ModelId::ChargedFluid: {
      const auto& v = std::get<ChargedState>(s);
      auto r = s2::rhs_charged_fluid(v.u, v.rho, spec.b);
      return ChargedState{std::move(r.du), std::move(r.drho)};
    }
    case ModelId::TemplateMatching:
      return VelocityState{s2::rhs_template_matching(std::get<VelocityState>(s).u)};
    case ModelId::Epdiff: return VelocityState{s2::rhs_epdiff(std::get<VelocityState>(s).u, spec.alpha2)};
    case ModelId::LaeAlpha:
      return VelocityState{s2::rhs_lae_alpha(std::get<VelocityState>(s).u, spec.alpha2)};
    case ModelId::RigidBody: {
      // Building the algebra validates Jacobi and factors the Gram matrix;
      // keep the last one per thread.
      thread_local std::optional<std::pair<std::array<double, 3>, algebra::FiniteLieAlgebra>> cached;
      if (!cached || cached->first != spec.inertia) {
        const Eigen::Vector3d inertia(spec.inertia[0], spec.inertia[1], spec.inertia[2]);
        cached.emplace(spec.inertia, algebra::so3(inertia.asDiagonal().toDenseMatrix()));
      }
      return AlgebraState{algebra::euler_rhs_plain(cached->second, std::get<AlgebraState>(s).u)};
    }
  }
  throw ContractError("rhs: unknown model");
}

void enforce(const ModelSpec& spec, ModelState& s) {
  std::visit(
      [&](auto& st) {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, CircleState>) {
          st.u.enforce_hermitian();
          if (spec.id == ModelId::HunterSaxton) st.u[0] = 0.0;
        } else if constexpr (std::is_same_v<T, CirclePairState>) {
          st.u.enforce_hermitian();
          st.f.enforce_hermitian();
        } else if constexpr (std::is_same_v<T, VorticityState>) {
          st.omega.enforce();
          st.omega.set_mean(0.0);
        } else if constexpr (std::is_same_v<T, VorticityPairState>) {
          st.omega.enforce();
          st.omega.set_mean(0.0);
          st.tracer.enforce();
        } else if constexpr (std::is_same_v<T, VelocityState>) {
          st.u.enforce();
          if (spec.id == ModelId::LaeAlpha) st.u = s2::leray_project(st.u);
        } else if constexpr (std::is_same_v<T, VelocityPairState>) {
          st.u.enforce();
          st.B.enforce();
          st.u = s2::leray_project(st.u);
          st.B = s2::leray_project(st.B);
        } else if constexpr (std::is_same_v<T, ChargedState>) {
          st.u.enforce();
          st.u = s2::leray_project(st.u);
          st.rho.enforce();
        } else if constexpr (std::is_same_v<T, AlgebraState>) {
        } else {
          static_assert(always_false<T>);
        }
      },
      s);
}

void axpy(ModelState& y, double a, const ModelState& x) {
  for_each_slot(y, x, [a](auto& yf, const auto& xf) { axpy_slot(yf, a, xf); });
}

ModelState zero_like(const ModelState& s) {
  ModelState z = s;
  for_each_slot(z, s, [](auto& zf, const auto&) { zero_slot(zf); });
  return z;
}

bool all_finite(const ModelState& s) {
  return std::visit(
      [](const auto& st) {
        return std::apply([](const auto&... f) { return (finite_slot(f) && ...); }, st.fields());
      },
      s);
}

double upper_band_fraction(const ModelState& s) {
  return std::visit(
      [](const auto& st) {
        return std::apply([](const auto&... f) { return std::max({0.0, band_slot(f)...}); }, st.fields());
      },
      s);
}

double max_speed(const ModelSpec& spec, const ModelState& s) {
  return std::visit(
      [&](const auto& st) -> double {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, CircleState>) {
          if (spec.id == ModelId::HunterSaxton) {
            const Spectrum1D u = s1::antideriv(st.u, 2);
            return 3.0 * (max_abs(u) + max_abs(s1::deriv(u, 1)));
          }
          return 3.0 * max_abs(st.u);
        } else if constexpr (std::is_same_v<T, CirclePairState>) {
          return 3.0 * max_abs(st.u) + max_abs(st.f);
        } else if constexpr (std::is_same_v<T, VorticityState>) {
          return max_speed(s2::velocity_from_vorticity(zero_mean_copy(st.omega), st.mean));
        } else if constexpr (std::is_same_v<T, VorticityPairState>) {
          return max_speed(s2::velocity_from_vorticity(zero_mean_copy(st.omega), st.mean));
        } else if constexpr (std::is_same_v<T, VelocityState>) {
          return (spec.id == ModelId::LaeAlpha ? 2.0 : 3.0) * max_speed(st.u);
        } else if constexpr (std::is_same_v<T, VelocityPairState>) {
          return max_speed(st.u) + max_speed(st.B);
        } else if constexpr (std::is_same_v<T, ChargedState>) {
          return max_speed(st.u);
        } else {
          const Eigen::Vector3d inertia(spec.inertia[0], spec.inertia[1], spec.inertia[2]);
          return st.u.cwiseAbs().maxCoeff() * inertia.maxCoeff() / inertia.minCoeff();
        }
      },
      s);
}

double grid_spacing(const ModelState& s) {
  return std::visit(
      [](const auto& st) -> double {
        using T = std::decay_t<decltype(st)>;
        constexpr double two_pi = 2.0 * std::numbers::pi;
        if constexpr (std::is_same_v<T, CircleState> || std::is_same_v<T, CirclePairState>) {
          return two_pi / s1::collocation_size(st.u.n_modes());
        } else if constexpr (std::is_same_v<T, VorticityState> || std::is_same_v<T, VorticityPairState>) {
          return two_pi / std::max(st.omega.nx(), st.omega.ny());
        } else if constexpr (std::is_same_v<T, AlgebraState>) {
          return 1.0;
        } else {
          return two_pi / std::max(st.u.nx(), st.u.ny());
        }
      },
      s);
}

double dispersive_frequency(const ModelSpec& spec, const ModelState& s) {
  const double a = std::abs(spec.a);
  switch (spec.id) {
    case ModelId::Kdv: {
      const double n = circle(s).n_modes();
      return 2.0 * a * n * n * n;
    }
    case ModelId::CamassaHolm: {
      const double n = circle(s).n_modes();
      return 2.0 * a * n * n * n / (1.0 + n * n);
    }
    case ModelId::PairL2AlphaCentral: {
      const double n = std::get<CirclePairState>(s).u.n_modes();
      return a * n * n;
    }
    case ModelId::QgBeta: return std::abs(spec.beta);
    case ModelId::Boussinesq: return std::abs(spec.brunt);
    case ModelId::ChargedFluid: {
      const auto& c = std::get<ChargedState>(s);
      return std::abs(spec.b) * max_abs(c.rho);
    }
    default: return 0.0;
  }
}

}  // namespace ea::models
