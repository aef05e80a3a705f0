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

#include "ea/spectral2d.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ea/errors.hpp"
#include "ea/fft.hpp"

namespace ea::spectral2d {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kArea = kTwoPi * kTwoPi;

using Grid = std::vector<double>;

Grid grid_with_mean(const Field2D& f, double mean) {
  Grid g = to_grid(f);
  if (mean != 0.0)
    for (double& v : g) v += mean;
  return g;
}

Grid pointwise(const Grid& a, const Grid& b) {
  Grid out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

// Moves the k = 0 coefficients into the harmonic part.
VecField2D split_mean(Field2D a, Field2D b) {
  const Mean2 m{a.mean(), b.mean()};
  a.set_mean(0.0);
  b.set_mean(0.0);
  return VecField2D(std::move(a), std::move(b), m);
}

VecField2D helmholtz(const VecField2D& v, double s, bool invert) {
  return VecField2D(helmholtz(v.c[0], s, invert), helmholtz(v.c[1], s, invert), v.mean);
}

double max_coefficient_times_k(const Field2D& f) {
  double worst = 0.0;
  for (int i = 0; i < f.nx(); ++i)
    for (int j = 0; j < f.nky(); ++j) {
      const double k = std::hypot(double(f.kx(i)), double(j));
      worst = std::max(worst, k * std::abs(f.at(i, j)));
    }
  return worst;
}

}  // namespace

// ---------------------------------------------------------------------------
// Field2D

Field2D::Field2D(int nx, int ny) : nx_(nx), ny_(ny) {
  if (nx < 4 || ny < 4 || nx % 2 != 0 || ny % 2 != 0)
    throw ContractError("Field2D: grid sizes must be even and at least 4");
  c_.assign(static_cast<size_t>(nx) * nky(), Complex{});
}

bool Field2D::retained(int k1, int k2) const {
  return std::abs(k1) <= band_x() && std::abs(k2) <= band_y();
}

Complex Field2D::coefficient(int k1, int k2) const {
  if (!retained(k1, k2)) return {};
  if (k2 < 0) return std::conj(at(row(-k1), -k2));
  return at(row(k1), k2);
}

void Field2D::set_mode(int k1, int k2, Complex value) {
  if (!retained(k1, k2))
    throw ContractError("Field2D::set_mode: mode (" + std::to_string(k1) + ", " +
                        std::to_string(k2) + ") outside the retained band");
  if (k2 < 0) {
    k1 = -k1;
    k2 = -k2;
    value = std::conj(value);
  }
  if (k1 == 0 && k2 == 0) value.imag(0.0);
  at(row(k1), k2) = value;
  if (k2 == 0) at(row(-k1), 0) = std::conj(value);
}

void Field2D::enforce() {
  const int bx = band_x(), by = band_y();
  for (int i = 0; i < nx_; ++i) {
    const bool row_in = std::abs(kx(i)) <= bx;
    for (int j = 0; j < nky(); ++j)
      if (!row_in || j > by) at(i, j) = Complex{};
  }
  for (int k1 = 1; k1 <= bx; ++k1) {
    const Complex avg = 0.5 * (at(row(k1), 0) + std::conj(at(row(-k1), 0)));
    at(row(k1), 0) = avg;
    at(row(-k1), 0) = std::conj(avg);
  }
  c_[0].imag(0.0);
}

double Field2D::evaluate(double x, double y) const {
  double v = 0.0;
  for (int i = 0; i < nx_; ++i)
    for (int j = 0; j < nky(); ++j) {
      const Complex c = at(i, j);
      if (c == Complex{}) continue;
      const double w = j == 0 ? 1.0 : 2.0;
      v += w * (c * std::polar(1.0, kx(i) * x + j * y)).real();
    }
  return v;
}

void require_same_grid(const Field2D& a, const Field2D& b, const char* op) {
  if (a.nx() != b.nx() || a.ny() != b.ny())
    throw ContractError(std::string(op) + ": grid mismatch");
}

Field2D& Field2D::operator+=(const Field2D& o) {
  require_same_grid(*this, o, "Field2D +=");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Field2D& Field2D::operator-=(const Field2D& o) {
  require_same_grid(*this, o, "Field2D -=");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Field2D& Field2D::operator*=(double s) {
  for (auto& c : c_) c *= s;
  return *this;
}

void Field2D::axpy(double s, const Field2D& o) {
  require_same_grid(*this, o, "Field2D axpy");
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += s * o.c_[i];
}

Field2D Field2D::trig(int nx, int ny, int k1, int k2, double cos_amp, double sin_amp) {
  Field2D f(nx, ny);
  if (k1 == 0 && k2 == 0) {
    f.set_mean(cos_amp);
    return f;
  }
  // a cos(k.x) + b sin(k.x) = (a - ib)/2 e^{ik.x} + c.c.
  f.set_mode(k1, k2, Complex(0.5 * cos_amp, -0.5 * sin_amp));
  return f;
}

Field2D operator+(Field2D a, const Field2D& b) { return a += b; }
Field2D operator-(Field2D a, const Field2D& b) { return a -= b; }
Field2D operator*(double s, Field2D a) { return a *= s; }

// ---------------------------------------------------------------------------
// VecField2D

VecField2D::VecField2D(Field2D u1, Field2D u2, Mean2 m) : c{std::move(u1), std::move(u2)}, mean(m) {
  require_same_grid(c[0], c[1], "VecField2D");
  for (auto& f : c) {
    mean[&f - c.data()] += f.mean();
    f.set_mean(0.0);
  }
}

VecField2D& VecField2D::operator+=(const VecField2D& o) {
  c[0] += o.c[0];
  c[1] += o.c[1];
  mean[0] += o.mean[0];
  mean[1] += o.mean[1];
  return *this;
}

VecField2D& VecField2D::operator-=(const VecField2D& o) {
  c[0] -= o.c[0];
  c[1] -= o.c[1];
  mean[0] -= o.mean[0];
  mean[1] -= o.mean[1];
  return *this;
}

VecField2D& VecField2D::operator*=(double s) {
  c[0] *= s;
  c[1] *= s;
  mean[0] *= s;
  mean[1] *= s;
  return *this;
}

void VecField2D::axpy(double s, const VecField2D& o) {
  c[0].axpy(s, o.c[0]);
  c[1].axpy(s, o.c[1]);
  mean[0] += s * o.mean[0];
  mean[1] += s * o.mean[1];
}

void VecField2D::enforce() {
  for (auto& f : c) {
    f.enforce();
    f.set_mean(0.0);
  }
}

VecField2D operator+(VecField2D a, const VecField2D& b) { return a += b; }
VecField2D operator-(VecField2D a, const VecField2D& b) { return a -= b; }
VecField2D operator*(double s, VecField2D a) { return a *= s; }

// ---------------------------------------------------------------------------
// Linear operators

Field2D dx(const Field2D& f) {
  Field2D out(f);
  for (int i = 0; i < f.nx(); ++i)
    for (int j = 0; j < f.nky(); ++j) out.at(i, j) *= Complex(0.0, f.kx(i));
  return out;
}

Field2D dy(const Field2D& f) {
  Field2D out(f);
  for (int i = 0; i < f.nx(); ++i)
    for (int j = 0; j < f.nky(); ++j) out.at(i, j) *= Complex(0.0, j);
  return out;
}

Field2D laplacian(const Field2D& f) {
  Field2D out(f);
  for (int i = 0; i < f.nx(); ++i)
    for (int j = 0; j < f.nky(); ++j) out.at(i, j) *= -double(f.kx(i) * f.kx(i) + j * j);
  return out;
}

Field2D inverse_laplacian(const Field2D& f) {
  Field2D out(f);
  for (int i = 0; i < f.nx(); ++i)
    for (int j = 0; j < f.nky(); ++j) {
      const int k2 = f.kx(i) * f.kx(i) + j * j;
      out.at(i, j) = k2 == 0 ? Complex{} : out.at(i, j) / double(-k2);
    }
  return out;
}

Field2D helmholtz(const Field2D& f, double s, bool invert) {
  Field2D out(f);
  for (int i = 0; i < f.nx(); ++i)
    for (int j = 0; j < f.nky(); ++j) {
      const double lam = 1.0 + s * double(f.kx(i) * f.kx(i) + j * j);
      if (invert) out.at(i, j) /= lam;
      else out.at(i, j) *= lam;
    }
  return out;
}

std::vector<double> to_grid(const Field2D& f) {
  const auto tr = fft::transform_2d(f.nx(), f.ny());
  std::vector<double> g(static_cast<size_t>(f.nx()) * f.ny());
  tr->backward(f.data(), g);
  return g;
}

Field2D from_grid(const std::vector<double>& grid, int nx, int ny) {
  if (grid.size() != static_cast<size_t>(nx) * ny) throw ContractError("from_grid: size mismatch");
  Field2D out(nx, ny);
  const auto tr = fft::transform_2d(nx, ny);
  tr->forward(grid, out.data());
  out *= 1.0 / (double(nx) * ny);
  out.enforce();
  return out;
}

Field2D multiply(const Field2D& f, const Field2D& g) {
  require_same_grid(f, g, "multiply");
  return from_grid(pointwise(to_grid(f), to_grid(g)), f.nx(), f.ny());
}

double inner(const Field2D& f, const Field2D& g) {
  require_same_grid(f, g, "inner");
  double acc = 0.0;
  for (int i = 0; i < f.nx(); ++i)
    for (int j = 0; j < f.nky(); ++j) {
      const Complex a = f.at(i, j), b = g.at(i, j);
      const double w = j == 0 ? 1.0 : 2.0;
      acc += w * (a.real() * b.real() + a.imag() * b.imag());
    }
  return kArea * acc;
}

double integral(const Field2D& f) { return kArea * f.mean(); }

double inner(const VecField2D& u, const VecField2D& v) {
  return inner(u.c[0], v.c[0]) + inner(u.c[1], v.c[1]) +
         kArea * (u.mean[0] * v.mean[0] + u.mean[1] * v.mean[1]);
}

Field2D divergence(const VecField2D& v) { return dx(v.c[0]) + dy(v.c[1]); }

Field2D vorticity(const VecField2D& v) { return dy(v.c[0]) - dx(v.c[1]); }

double max_divergence(const VecField2D& v) {
  double worst = 0.0;
  for (int i = 0; i < v.c[0].nx(); ++i)
    for (int j = 0; j < v.c[0].nky(); ++j)
      worst = std::max(worst, std::abs(double(v.c[0].kx(i)) * v.c[0].at(i, j) +
                                       double(j) * v.c[1].at(i, j)));
  return worst;
}

void require_solenoidal(const VecField2D& v, const char* op) {
  const double scale = std::max({1.0, max_coefficient_times_k(v.c[0]), max_coefficient_times_k(v.c[1])});
  if (max_divergence(v) > kSolenoidalTolerance * scale)
    throw ContractError(std::string(op) + ": velocity field is not divergence-free");
}

VecField2D gradient(const Field2D& f) { return VecField2D(dx(f), dy(f)); }

VecField2D leray_project(const VecField2D& v) {
  VecField2D out(v);
  Field2D& a = out.c[0];
  Field2D& b = out.c[1];
  for (int i = 0; i < a.nx(); ++i)
    for (int j = 0; j < a.nky(); ++j) {
      const double k1 = a.kx(i), k2 = j;
      const double kk = k1 * k1 + k2 * k2;
      if (kk == 0.0) continue;
      const Complex kdot = (k1 * a.at(i, j) + k2 * b.at(i, j)) / kk;
      a.at(i, j) -= k1 * kdot;
      b.at(i, j) -= k2 * kdot;
    }
  return out;
}

StreamSolution stream_solve(const Field2D& omega) {
  double scale = 1.0;
  for (const Complex& c : omega.data()) scale = std::max(scale, std::abs(c));
  if (std::abs(omega.mean()) > 1e-12 * scale)
    throw ContractError("stream_solve: vorticity must have zero mean");
  Field2D psi = inverse_laplacian(omega);
  VecField2D u(dy(psi), -1.0 * dx(psi));
  return {std::move(psi), std::move(u)};
}

VecField2D velocity_from_vorticity(const Field2D& omega, Mean2 mean) {
  VecField2D u = stream_solve(omega).u;
  u.mean = mean;
  return u;
}

Field2D jacobian(const Field2D& f, const Field2D& g) {
  require_same_grid(f, g, "jacobian");
  // d_x(f g_y) - d_y(f g_x)
  const Grid gf = to_grid(f);
  const int nx = f.nx(), ny = f.ny();
  const Field2D a = from_grid(pointwise(gf, to_grid(dy(g))), nx, ny);
  const Field2D b = from_grid(pointwise(gf, to_grid(dx(g))), nx, ny);
  return dx(a) - dy(b);
}

Field2D transport_flux(const VecField2D& u, const Field2D& f) {
  require_same_grid(u.c[0], f, "transport_flux");
  const int nx = f.nx(), ny = f.ny();
  const Grid gf = to_grid(f);
  const Field2D a = from_grid(pointwise(grid_with_mean(u.c[0], u.mean[0]), gf), nx, ny);
  const Field2D b = from_grid(pointwise(grid_with_mean(u.c[1], u.mean[1]), gf), nx, ny);
  return dx(a) + dy(b);
}

// ---------------------------------------------------------------------------
// Vorticity-form models

Field2D rhs_euler_vorticity(const Field2D& omega, Mean2 mean) {
  const VecField2D u = velocity_from_vorticity(omega, mean);
  return -1.0 * transport_flux(u, omega);
}

Field2D rhs_qg(const Field2D& omega, double beta, Mean2 mean) {
  const StreamSolution s = stream_solve(omega);
  VecField2D u = s.u;
  u.mean = mean;
  Field2D out = -1.0 * transport_flux(u, omega);
  if (beta != 0.0) out.axpy(-beta, dx(s.psi));
  return out;
}

BoussinesqRate rhs_boussinesq(const Field2D& omega, const Field2D& xi, double brunt, Mean2 mean) {
  require_same_grid(omega, xi, "rhs_boussinesq");
  const StreamSolution s = stream_solve(omega);
  VecField2D u = s.u;
  u.mean = mean;
  const double n2 = brunt * brunt;
  BoussinesqRate r;
  r.domega = -1.0 * transport_flux(u, omega) - dx(xi);
  r.dxi = -1.0 * transport_flux(u, xi);
  if (n2 != 0.0) {
    r.dxi.axpy(n2, dx(s.psi));
    r.dxi.set_mean(r.dxi.mean() - n2 * mean[1]);
  }
  r.dmean = {0.0, xi.mean()};
  return r;
}

ScalarPairRate rhs_passive_scalar(const Field2D& omega, const Field2D& f, Mean2 mean) {
  require_same_grid(omega, f, "rhs_passive_scalar");
  const VecField2D u = velocity_from_vorticity(omega, mean);
  return {-1.0 * transport_flux(u, omega), -1.0 * transport_flux(u, f)};
}

// ---------------------------------------------------------------------------
// Velocity-form models

MhdRate rhs_mhd(const VecField2D& u, const VecField2D& B) {
  require_solenoidal(u, "rhs_mhd");
  require_solenoidal(B, "rhs_mhd");
  const int nx = u.nx(), ny = u.ny();
  const Grid u1 = grid_with_mean(u.c[0], u.mean[0]), u2 = grid_with_mean(u.c[1], u.mean[1]);
  const Grid b1 = grid_with_mean(B.c[0], B.mean[0]), b2 = grid_with_mean(B.c[1], B.mean[1]);
  Grid p11(u1.size()), p12(u1.size()), p22(u1.size()), t12(u1.size());
  for (size_t i = 0; i < u1.size(); ++i) {
    p11[i] = u1[i] * u1[i] - b1[i] * b1[i];
    p12[i] = u1[i] * u2[i] - b1[i] * b2[i];
    p22[i] = u2[i] * u2[i] - b2[i] * b2[i];
    t12[i] = b2[i] * u1[i] - u2[i] * b1[i];
  }
  const Field2D s11 = from_grid(p11, nx, ny), s12 = from_grid(p12, nx, ny),
                s22 = from_grid(p22, nx, ny), t = from_grid(t12, nx, ny);
  // -(u.grad)u + (B.grad)B = -d_j(u_j u_i - B_j B_i) for solenoidal u, B
  VecField2D du(-1.0 * (dx(s11) + dy(s12)), -1.0 * (dx(s12) + dy(s22)));
  // -(u.grad)B + (B.grad)u = d_j(B_j u_i - u_j B_i)
  VecField2D dB(dy(t), -1.0 * dx(t));
  return {leray_project(du), std::move(dB)};
}

ChargedRate rhs_charged_fluid(const VecField2D& u, const Field2D& rho, double b) {
  require_solenoidal(u, "rhs_charged_fluid");
  require_same_grid(u.c[0], rho, "rhs_charged_fluid");
  const int nx = u.nx(), ny = u.ny();
  const Grid u1 = grid_with_mean(u.c[0], u.mean[0]), u2 = grid_with_mean(u.c[1], u.mean[1]);
  const Grid r = to_grid(rho);
  const Field2D q11 = from_grid(pointwise(u1, u1), nx, ny);
  const Field2D q12 = from_grid(pointwise(u1, u2), nx, ny);
  const Field2D q22 = from_grid(pointwise(u2, u2), nx, ny);
  const Field2D ru1 = from_grid(pointwise(r, u1), nx, ny);
  const Field2D ru2 = from_grid(pointwise(r, u2), nx, ny);
  // -(u.grad)u - b rho (-u2, u1)
  Field2D a1 = -1.0 * (dx(q11) + dy(q12));
  Field2D a2 = -1.0 * (dx(q12) + dy(q22));
  if (b != 0.0) {
    a1.axpy(b, ru2);
    a2.axpy(-b, ru1);
  }
  ChargedRate out;
  out.du = leray_project(split_mean(std::move(a1), std::move(a2)));
  out.drho = -1.0 * (dx(ru1) + dy(ru2));
  return out;
}

VecField2D rhs_template_matching(const VecField2D& u) {
  const int nx = u.nx(), ny = u.ny();
  const Grid u1 = grid_with_mean(u.c[0], u.mean[0]), u2 = grid_with_mean(u.c[1], u.mean[1]);
  const Field2D q11 = from_grid(pointwise(u1, u1), nx, ny);
  const Field2D q12 = from_grid(pointwise(u1, u2), nx, ny);
  const Field2D q22 = from_grid(pointwise(u2, u2), nx, ny);
  // -(u.grad)u - (div u)u = -d_j(u_j u_i); -grad |u|^2 / 2
  const Field2D k = 0.5 * (q11 + q22);
  return VecField2D(-1.0 * (dx(q11) + dy(q12) + dx(k)), -1.0 * (dx(q12) + dy(q22) + dy(k)));
}

namespace {

// -d_j(u_j m) - (grad u)^T m, which is -(u.grad)m - (div u)m - (grad u)^T m
// and loses the divergence term for solenoidal u. The mean of
// (grad u)^T m = sum_j m_j grad u_j vanishes identically for m = (1 - s Delta)u
// (it is the gradient of |u|^2/2 + s|grad u|^2/2 minus a divergence), so the
// k = 0 rate is set to zero rather than left at roundoff.
VecField2D momentum_rate(const VecField2D& u, const VecField2D& m) {
  const int nx = u.nx(), ny = u.ny();
  const Grid u1 = grid_with_mean(u.c[0], u.mean[0]), u2 = grid_with_mean(u.c[1], u.mean[1]);
  const Grid m1 = grid_with_mean(m.c[0], m.mean[0]), m2 = grid_with_mean(m.c[1], m.mean[1]);
  const Grid d1u1 = to_grid(dx(u.c[0])), d1u2 = to_grid(dx(u.c[1]));
  const Grid d2u1 = to_grid(dy(u.c[0])), d2u2 = to_grid(dy(u.c[1]));
  Grid s1(u1.size()), s2(u1.size());
  for (size_t i = 0; i < u1.size(); ++i) {
    s1[i] = m1[i] * d1u1[i] + m2[i] * d1u2[i];
    s2[i] = m1[i] * d2u1[i] + m2[i] * d2u2[i];
  }
  Field2D a1 = -1.0 * from_grid(s1, nx, ny);
  Field2D a2 = -1.0 * from_grid(s2, nx, ny);
  const Field2D f11 = from_grid(pointwise(u1, m1), nx, ny);
  const Field2D f21 = from_grid(pointwise(u2, m1), nx, ny);
  const Field2D f12 = from_grid(pointwise(u1, m2), nx, ny);
  const Field2D f22 = from_grid(pointwise(u2, m2), nx, ny);
  a1 -= dx(f11) + dy(f21);
  a2 -= dx(f12) + dy(f22);
  a1.set_mean(0.0);
  a2.set_mean(0.0);
  return VecField2D(std::move(a1), std::move(a2));
}

}  // namespace

VecField2D rhs_epdiff(const VecField2D& u, double alpha2) {
  if (!(alpha2 > 0.0)) throw ContractError("rhs_epdiff: alpha2 must be positive");
  const VecField2D m = helmholtz(u, alpha2, false);
  return helmholtz(momentum_rate(u, m), alpha2, true);
}

VecField2D rhs_lae_alpha(const VecField2D& u, double alpha2) {
  if (!(alpha2 > 0.0)) throw ContractError("rhs_lae_alpha: alpha2 must be positive");
  require_solenoidal(u, "rhs_lae_alpha");
  const VecField2D m = helmholtz(u, alpha2, false);
  return helmholtz(leray_project(momentum_rate(u, m)), alpha2, true);
}

double upper_band_fraction(const Field2D& f) {
  const double bx = f.band_x(), by = f.band_y();
  double total = 0.0, upper = 0.0;
  for (int i = 0; i < f.nx(); ++i)
    for (int j = 0; j < f.nky(); ++j) {
      const double kk = double(f.kx(i)) * f.kx(i) + double(j) * j;
      const double e = (j == 0 ? 1.0 : 2.0) * kk * std::norm(f.at(i, j));
      total += e;
      if (std::abs(f.kx(i)) > 2.0 * bx / 3.0 || j > 2.0 * by / 3.0) upper += e;
    }
  return total > 0.0 ? upper / total : 0.0;
}

}  // namespace ea::spectral2d
