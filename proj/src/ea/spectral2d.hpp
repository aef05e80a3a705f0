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

// Pseudospectral calculus on the flat torus [0, 2pi)^2 and the torus-model
// right-hand sides.
//
// Conventions: grids are nx-by-ny, x is the slow index, spectra use the r2c
// half layout nx * (ny/2 + 1). Retained modes satisfy |k1| <= (nx-1)/3 and
// |k2| <= (ny-1)/3 (2/3 rule); products are formed on the same grid and
// truncated, which is alias-free for quadratic terms.
// Delta psi = omega, u = (psi_y, -psi_x), omega = d_y u1 - d_x u2,
// {f, g} = f_x g_y - f_y g_x.

#include <array>
#include <complex>
#include <vector>

namespace ea::spectral2d {

using Complex = std::complex<double>;
using Mean2 = std::array<double, 2>;

class Field2D {
 public:
  Field2D() = default;
  Field2D(int nx, int ny);

  int nx() const { return nx_; }
  int ny() const { return ny_; }
  int nky() const { return ny_ / 2 + 1; }
  int band_x() const { return (nx_ - 1) / 3; }
  int band_y() const { return (ny_ - 1) / 3; }
  bool empty() const { return c_.empty(); }

  /// Signed x-wavenumber of row i.
  int kx(int i) const { return i <= nx_ / 2 ? i : i - nx_; }
  int row(int k1) const { return k1 >= 0 ? k1 : k1 + nx_; }
  bool retained(int k1, int k2) const;

  Complex& at(int i, int j) { return c_[static_cast<size_t>(i) * nky() + j]; }
  const Complex& at(int i, int j) const { return c_[static_cast<size_t>(i) * nky() + j]; }
  std::vector<Complex>& data() { return c_; }
  const std::vector<Complex>& data() const { return c_; }

  /// c_k for any k; zero outside the retained band.
  Complex coefficient(int k1, int k2) const;
  /// Sets c_k and c_{-k} = conj(c_k).
  void set_mode(int k1, int k2, Complex value);

  /// Spatial mean (the k = 0 coefficient).
  double mean() const { return c_.empty() ? 0.0 : c_[0].real(); }
  void set_mean(double m) { c_[0] = m; }

  /// Re-impose Hermitian symmetry of the k2 = 0 column and zero modes
  /// outside the band.
  void enforce();

  double evaluate(double x, double y) const;

  Field2D& operator+=(const Field2D& o);
  Field2D& operator-=(const Field2D& o);
  Field2D& operator*=(double s);
  void axpy(double s, const Field2D& o);

  /// a cos(k.x) + b sin(k.x).
  static Field2D trig(int nx, int ny, int k1, int k2, double cos_amp, double sin_amp);

 private:
  int nx_ = 0;
  int ny_ = 0;
  std::vector<Complex> c_;
};

Field2D operator+(Field2D a, const Field2D& b);
Field2D operator-(Field2D a, const Field2D& b);
Field2D operator*(double s, Field2D a);

/// Two zero-mean components plus the harmonic (constant) part.
struct VecField2D {
  std::array<Field2D, 2> c;
  Mean2 mean{0.0, 0.0};

  VecField2D() = default;
  VecField2D(int nx, int ny) : c{Field2D(nx, ny), Field2D(nx, ny)} {}
  VecField2D(Field2D u1, Field2D u2, Mean2 m = {0.0, 0.0});

  int nx() const { return c[0].nx(); }
  int ny() const { return c[0].ny(); }

  VecField2D& operator+=(const VecField2D& o);
  VecField2D& operator-=(const VecField2D& o);
  VecField2D& operator*=(double s);
  void axpy(double s, const VecField2D& o);
  void enforce();
};

VecField2D operator+(VecField2D a, const VecField2D& b);
VecField2D operator-(VecField2D a, const VecField2D& b);
VecField2D operator*(double s, VecField2D a);

void require_same_grid(const Field2D& a, const Field2D& b, const char* op);

Field2D dx(const Field2D& f);
Field2D dy(const Field2D& f);
Field2D laplacian(const Field2D& f);
/// Zero-mean solution of Delta p = f; the mean of f is ignored.
Field2D inverse_laplacian(const Field2D& f);
/// Multiplies c_k by 1 + s |k|^2 (s = alpha^2), or divides when `invert`.
Field2D helmholtz(const Field2D& f, double s, bool invert = false);

/// Grid values including the mean.
std::vector<double> to_grid(const Field2D& f);
/// Spectral coefficients of grid samples, truncated to the band.
Field2D from_grid(const std::vector<double>& grid, int nx, int ny);
/// Alias-free product truncated to the band.
Field2D multiply(const Field2D& f, const Field2D& g);

/// int f g over the torus (exact Parseval sum).
double inner(const Field2D& f, const Field2D& g);
double integral(const Field2D& f);
/// int_T u . v, including the harmonic parts.
double inner(const VecField2D& u, const VecField2D& v);

Field2D divergence(const VecField2D& v);
/// d_y u1 - d_x u2.
Field2D vorticity(const VecField2D& v);
/// max_k |k . v_k|.
double max_divergence(const VecField2D& v);

VecField2D gradient(const Field2D& f);
VecField2D leray_project(const VecField2D& v);

struct StreamSolution {
  Field2D psi;
  VecField2D u;
};

/// Requires zero-mean omega.
StreamSolution stream_solve(const Field2D& omega);
/// Velocity of vorticity omega with harmonic part `mean`.
VecField2D velocity_from_vorticity(const Field2D& omega, Mean2 mean = {0.0, 0.0});

Field2D jacobian(const Field2D& f, const Field2D& g);
/// d_j(u_j f), the transport term in flux form.
Field2D transport_flux(const VecField2D& u, const Field2D& f);

Field2D rhs_euler_vorticity(const Field2D& omega, Mean2 mean = {0.0, 0.0});
Field2D rhs_qg(const Field2D& omega, double beta, Mean2 mean = {0.0, 0.0});

struct BoussinesqRate {
  Field2D domega;
  Field2D dxi;
  Mean2 dmean{0.0, 0.0};
};
/// With mean = 0 and zero-mean xi this is exactly the displayed pair. A
/// harmonic part V in y adds dV/dt = <xi> and -N^2 V to the xi-rate.
BoussinesqRate rhs_boussinesq(const Field2D& omega, const Field2D& xi, double brunt,
                              Mean2 mean = {0.0, 0.0});

struct ScalarPairRate {
  Field2D domega;
  Field2D df;
};
ScalarPairRate rhs_passive_scalar(const Field2D& omega, const Field2D& f, Mean2 mean = {0.0, 0.0});

struct MhdRate {
  VecField2D du;
  VecField2D dB;
};
MhdRate rhs_mhd(const VecField2D& u, const VecField2D& B);

struct ChargedRate {
  VecField2D du;
  Field2D drho;
};
ChargedRate rhs_charged_fluid(const VecField2D& u, const Field2D& rho, double b);

VecField2D rhs_template_matching(const VecField2D& u);
/// Returns the u-rate; m = (1 - alpha2 Delta) u.
VecField2D rhs_epdiff(const VecField2D& u, double alpha2);
VecField2D rhs_lae_alpha(const VecField2D& u, double alpha2);

/// Divergence tolerance used to reject non-solenoidal inputs, relative to
/// the largest coefficient.
inline constexpr double kSolenoidalTolerance = 1e-10;
void require_solenoidal(const VecField2D& v, const char* op);

/// Fraction of the gradient energy int |grad f|^2 carried by modes beyond
/// 2/3 of the band.
double upper_band_fraction(const Field2D& f);

}  // namespace ea::spectral2d
