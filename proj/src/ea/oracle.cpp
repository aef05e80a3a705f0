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

#include "ea/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ea/errors.hpp"
#include "ea/spectral2d.hpp"

namespace ea::oracle {

using spectral1d::Complex;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Parseval inner product written out per mode, accumulated in extended
// precision so the oracle's own rounding stays well below the tolerance.
double parseval(const Spectrum1D& a, const Spectrum1D& b, Metric1D metric) {
  const int n = std::min(a.n_modes(), b.n_modes());
  long double s = static_cast<long double>(a[0].real()) * b[0].real();
  for (int k = 1; k <= n; ++k) {
    const long double w = metric == Metric1D::H1 ? 1.0L + static_cast<long double>(k) * k : 1.0L;
    const long double re = static_cast<long double>(a[k].real()) * b[k].real() +
                           static_cast<long double>(a[k].imag()) * b[k].imag();
    s += 2.0L * w * re;
  }
  return static_cast<double>(2.0L * std::numbers::pi_v<long double> * s);
}

Spectrum1D derivative(const Spectrum1D& a) {
  Spectrum1D out(a.n_modes());
  for (int k = 0; k <= a.n_modes(); ++k) out[k] = Complex(0.0, k) * a[k];
  return out;
}

int bandwidth(const Spectrum1D& s) {
  for (int k = s.n_modes(); k > 0; --k)
    if (s[k] != Complex(0.0)) return k;
  return 0;
}

Matrix zeros(int r, int c) { return Matrix::Zero(r, c); }

CoefVector unit(int dim, int i) {
  CoefVector e = CoefVector::Zero(dim);
  e[i] = 1.0;
  return e;
}

}  // namespace

BandLimitedTriple random_triple(int n_modes, std::mt19937_64& rng) {
  if (n_modes < 3) throw ContractError("random_triple: cutoff must be at least 3");
  std::normal_distribution<double> normal(0.0, 1.0);
  const int band = n_modes / 3;
  auto field = [&] {
    Spectrum1D s(n_modes);
    s[0] = normal(rng);
    for (int k = 1; k <= band; ++k) {
      // Unit-size coefficients decaying like e^{-k/2}: products stay O(1) so an
      // absolute 1e-12 budget is meaningful in both metrics.
      const double scale = std::exp(-0.5 * k);
      s[k] = scale * Complex(normal(rng), normal(rng));
    }
    return s;
  };
  BandLimitedTriple t;
  t.x = field();
  t.y = field();
  t.z = field();
  return t;
}

Spectrum1D convolve(const Spectrum1D& a, const Spectrum1D& b) {
  const int n = a.n_modes();
  Spectrum1D out(n);
  for (int k = 0; k <= n; ++k) {
    long double re = 0.0L, im = 0.0L;
    for (int p = -a.n_modes(); p <= a.n_modes(); ++p) {
      const int q = k - p;
      if (std::abs(q) > b.n_modes()) continue;
      const Complex x = a.coefficient(p), y = b.coefficient(q);
      re += static_cast<long double>(x.real()) * y.real() - static_cast<long double>(x.imag()) * y.imag();
      im += static_cast<long double>(x.real()) * y.imag() + static_cast<long double>(x.imag()) * y.real();
    }
    out[k] = Complex(static_cast<double>(re), static_cast<double>(im));
  }
  return out;
}

void check_bandwidth(const BandLimitedTriple& t) {
  const int n = t.x.n_modes();
  if (t.y.n_modes() != n || t.z.n_modes() != n)
    throw ContractError("adjoint_residual: triple fields must share the cutoff");
  for (const Spectrum1D* s : {&t.x, &t.y, &t.z})
    if (bandwidth(*s) > n / 3)
      throw ContractError("adjoint_residual: field exceeds bandwidth N/3 = " + std::to_string(n / 3));
}

double adjoint_residual(const AdTransposeFunction& adT, Metric1D metric, const BandLimitedTriple& t) {
  check_bandwidth(t);
  const Spectrum1D lhs_field = adT(t.x, t.y);
  // [X, Z] = X'Z - XZ'
  Spectrum1D br = convolve(derivative(t.x), t.z);
  br -= convolve(t.x, derivative(t.z));
  const double lhs = parseval(lhs_field, t.z, metric);
  const double rhs = parseval(t.y, br, metric);
  return std::abs(lhs - rhs);
}

// ---------------------------------------------------------------------------

FiniteLieAlgebra build_extension_algebra(const FiniteLieAlgebra& g, const ExtensionData& ext) {
  const int n = g.dim(), m = ext.dim_v(), d = n + m;
  if (ext.dim_g() != n) throw ContractError("build_extension_algebra: dimension mismatch");
  const auto& h = ext.h_bracket();
  std::vector<Matrix> ad(d, zeros(d, d));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) ad[i](k, j) = g.structure_constant(i, j, k);
      ad[i].block(n, j, m, 1) = ext.cocycle_basis(i).col(j);
    }
    // [e_i, v_a] = b(e_i) v_a
    ad[i].block(n, n, m, m) = ext.action_basis(i);
  }
  for (int a = 0; a < m; ++a) {
    for (int j = 0; j < n; ++j) ad[n + a].block(n, j, m, 1) = -ext.action_basis(j).col(a);
    if (h)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c) ad[n + a](n + c, n + b) = h->structure_constant(a, b, c);
  }
  Matrix gram = zeros(d, d);
  gram.topLeftCorner(n, n) = g.gram();
  gram.bottomRightCorner(m, m) = ext.gram_v();
  return FiniteLieAlgebra(std::move(ad), std::move(gram));
}

FiniteLieAlgebra build_central_algebra(const FiniteLieAlgebra& g, const Matrix& omega) {
  const int n = g.dim(), d = n + 1;
  if (omega.rows() != n || omega.cols() != n)
    throw ContractError("build_central_algebra: cocycle must be dim x dim");
  std::vector<Matrix> ad(d, zeros(d, d));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) ad[i](k, j) = g.structure_constant(i, j, k);
      ad[i](n, j) = omega(i, j);
    }
  Matrix gram = zeros(d, d);
  gram.topLeftCorner(n, n) = g.gram();
  gram(n, n) = 1.0;
  return FiniteLieAlgebra(std::move(ad), std::move(gram));
}

std::function<CoefVector(const CoefVector&)> extension_bruteforce(const FiniteLieAlgebra& alg) {
  const int d = alg.dim();
  std::vector<double> c(static_cast<size_t>(d) * d * d);
  for (int a = 0; a < d; ++a)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k) c[(static_cast<size_t>(a) * d + j) * d + k] = alg.structure_constant(a, j, k);
  const Matrix gram = alg.gram();
  const Eigen::PartialPivLU<Matrix> lu(gram);
  return [d, c, gram, lu](const CoefVector& u) {
    if (u.size() != d) throw ContractError("extension_bruteforce: state dimension mismatch");
    const CoefVector gu = gram * u;
    // r_j = <u, [u, e_j]> = sum_{a,k} u_a c(a, j, k) (G u)_k
    CoefVector r = CoefVector::Zero(d);
    for (int j = 0; j < d; ++j) {
      double s = 0.0;
      for (int a = 0; a < d; ++a) {
        if (u[a] == 0.0) continue;
        double t = 0.0;
        for (int k = 0; k < d; ++k) t += c[(static_cast<size_t>(a) * d + j) * d + k] * gu[k];
        s += u[a] * t;
      }
      r[j] = s;
    }
    return CoefVector(-lu.solve(r));
  };
}

Matrix sd_central_cocycle(const FiniteLieAlgebra& g, const ExtensionData& ext, const Matrix& alpha) {
  const int n = g.dim(), m = ext.dim_v();
  if (alpha.rows() != m || alpha.cols() != n)
    throw ContractError("sd_central_cocycle: alpha must be dim_v x dim_g");
  const Matrix ga = ext.gram_v() * alpha;  // ga(a, i) = <alpha e_i, v_a>
  Matrix w = zeros(n + m, n + m);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < m; ++a) {
      w(i, n + a) = ga(a, i);
      w(n + a, i) = -ga(a, i);
    }
  return w;
}

FiniteLieAlgebra sl2_polynomial() {
  // [x^i, x^j] = (i - j) x^{i+j-1}
  std::vector<double> c(27, 0.0);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int k = i + j - 1;
      if (k >= 0 && k <= 2) c[(i * 3 + j) * 3 + k] = double(i - j);
    }
  Matrix gram = zeros(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if ((i + j) % 2 == 0) gram(i, j) = 2.0 / (i + j + 1);
  return FiniteLieAlgebra::from_structure_constants(3, c, gram);
}

Matrix random_spd(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) a(i, j) = normal(rng);
  return a.transpose() * a / dim + 0.5 * Matrix::Identity(dim, dim);
}

FiniteLieAlgebra random_algebra(std::mt19937_64& rng) {
  // so(3) + aff(1) with [f1, f2] = f2 on the last two coordinates.
  constexpr int d = 5;
  std::vector<Matrix> ad(d, zeros(d, d));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const int k = 3 - i - j;
      if (i == j) continue;
      ad[i](k, j) = ((j - i + 3) % 3 == 1) ? 1.0 : -1.0;
    }
  ad[3](4, 4) = 1.0;
  ad[4](4, 3) = -1.0;
  std::uniform_real_distribution<double> uni(-0.3, 0.3);
  Matrix p = Matrix::Identity(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) p(i, j) += uni(rng);
  const Matrix pinv = p.inverse();
  std::vector<Matrix> out(d);
  for (int i = 0; i < d; ++i) {
    Matrix adx = zeros(d, d);
    for (int k = 0; k < d; ++k) adx += p(k, i) * ad[k];
    out[i] = pinv * adx * p;
  }
  return FiniteLieAlgebra(std::move(out), random_spd(d, rng));
}

ExtensionData adjoint_module(const FiniteLieAlgebra& g, const Matrix& gram_v, bool invariant) {
  const int n = g.dim();
  std::vector<Matrix> action(n), cocycle(n, zeros(n, n));
  for (int i = 0; i < n; ++i) action[i] = g.ad_matrix(unit(n, i));
  return ExtensionData(g, std::move(action), std::move(cocycle), gram_v, invariant);
}

ExtensionData adjoint_coboundary(const FiniteLieAlgebra& g, const Matrix& phi, const Matrix& gram_v) {
  const int n = g.dim();
  std::vector<Matrix> action(n), cocycle(n, zeros(n, n));
  for (int i = 0; i < n; ++i) action[i] = g.ad_matrix(unit(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CoefVector ei = unit(n, i), ej = unit(n, j);
      cocycle[i].col(j) = g.bracket(ei, phi * ej) - g.bracket(ej, phi * ei) - phi * g.bracket(ei, ej);
    }
  return ExtensionData(g, std::move(action), std::move(cocycle), gram_v);
}

ExtensionData trivial_module(const FiniteLieAlgebra& g, const Matrix& phi, const Matrix& gram_v) {
  const int n = g.dim(), m = static_cast<int>(gram_v.rows());
  if (phi.rows() != m || phi.cols() != n) throw ContractError("trivial_module: phi must be m x n");
  std::vector<Matrix> action(n, zeros(m, m)), cocycle(n, zeros(m, n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cocycle[i].col(j) = phi * g.bracket(unit(n, i), unit(n, j));
  return ExtensionData(g, std::move(action), std::move(cocycle), gram_v);
}

ExtensionData twisted_general(const FiniteLieAlgebra& g, const FiniteLieAlgebra& h, const Matrix& phi) {
  const int n = g.dim(), m = h.dim();
  if (phi.rows() != m || phi.cols() != n) throw ContractError("twisted_general: phi must be dim_h x dim_g");
  std::vector<Matrix> action(n), cocycle(n, zeros(m, n));
  for (int i = 0; i < n; ++i) action[i] = h.ad_matrix(phi.col(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cocycle[i].col(j) = h.bracket(phi.col(i), phi.col(j)) - phi * g.bracket(unit(n, i), unit(n, j));
  return ExtensionData(g, std::move(action), std::move(cocycle), h.gram(), false, h);
}

// ---------------------------------------------------------------------------
// Finite differences.

namespace {

using spectral2d::Field2D;
using spectral2d::VecField2D;
using Grid = std::vector<double>;

struct Fd {
  int n;
  double h;

  size_t at(int p, int q) const { return static_cast<size_t>((p + n) % n) * n + (q + n) % n; }

  // Direct trigonometric sum of a spectral field plus a constant.
  Grid sample(const Field2D& f, double offset = 0.0) const {
    Grid v(static_cast<size_t>(n) * n, offset);
    double cmax = 0.0;
    for (const Complex& c : f.data()) cmax = std::max(cmax, std::abs(c));
    std::vector<Complex> ex(n), ey(n);
    for (int i = 0; i < f.nx(); ++i)
      for (int j = 0; j < f.nky(); ++j) {
        const Complex c = f.at(i, j);
        if (std::abs(c) <= 1e-15 * cmax || (i == 0 && j == 0)) continue;
        const int k1 = f.kx(i), k2 = j;
        // The k2 = 0 column stores both +k1 and -k1; other columns stand for a pair.
        const double w = j == 0 ? 1.0 : 2.0;
        for (int p = 0; p < n; ++p) ex[p] = w * c * std::polar(1.0, k1 * h * p);
        for (int q = 0; q < n; ++q) ey[q] = std::polar(1.0, k2 * h * q);
        for (int p = 0; p < n; ++p)
          for (int q = 0; q < n; ++q) v[static_cast<size_t>(p) * n + q] += (ex[p] * ey[q]).real();
      }
    const double mean = f.mean();
    if (mean != 0.0)
      for (double& x : v) x += mean;
    return v;
  }

  Grid dx(const Grid& f) const {
    Grid out(f.size());
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) out[at(p, q)] = (f[at(p + 1, q)] - f[at(p - 1, q)]) / (2.0 * h);
    return out;
  }
  Grid dy(const Grid& f) const {
    Grid out(f.size());
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) out[at(p, q)] = (f[at(p, q + 1)] - f[at(p, q - 1)]) / (2.0 * h);
    return out;
  }
  Grid lap(const Grid& f) const {
    Grid out(f.size());
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        out[at(p, q)] = (f[at(p + 1, q)] + f[at(p - 1, q)] + f[at(p, q + 1)] + f[at(p, q - 1)] -
                         4.0 * f[at(p, q)]) / (h * h);
    return out;
  }
};

Grid lin(double a, const Grid& x, double b, const Grid& y) {
  Grid out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = a * x[i] + b * y[i];
  return out;
}

Grid mul(const Grid& x, const Grid& y) {
  Grid out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = x[i] * y[i];
  return out;
}

double average(const Grid& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

// (a . grad) f
Grid advect(const Fd& fd, const Grid& a1, const Grid& a2, const Grid& f) {
  return lin(1.0, mul(a1, fd.dx(f)), 1.0, mul(a2, fd.dy(f)));
}

// Stream function by per-mode division, independent of the spectral solver.
Field2D stream_of(const Field2D& omega) {
  Field2D psi(omega.nx(), omega.ny());
  for (int i = 0; i < omega.nx(); ++i)
    for (int j = 0; j < omega.nky(); ++j) {
      const double k1 = omega.kx(i), k2 = j, kk = k1 * k1 + k2 * k2;
      if (kk > 0.0) psi.at(i, j) = -omega.at(i, j) / kk;
    }
  return psi;
}

struct Velocity {
  Grid u1, u2;
};

Velocity velocity_of(const Fd& fd, const Field2D& omega, spectral2d::Mean2 mean, Grid* psi_out) {
  const Grid psi = fd.sample(stream_of(omega));
  Velocity v{fd.dy(psi), fd.dx(psi)};
  for (size_t i = 0; i < v.u1.size(); ++i) {
    v.u1[i] += mean[0];
    v.u2[i] = -v.u2[i] + mean[1];
  }
  if (psi_out) *psi_out = psi;
  return v;
}

Velocity sample_vec(const Fd& fd, const VecField2D& u) {
  return {fd.sample(u.c[0], u.mean[0]), fd.sample(u.c[1], u.mean[1])};
}

void put_curl_and_mean(GridRate& out, const Fd& fd, const std::string& name, const Grid& r1,
                       const Grid& r2) {
  out.fields["curl_" + name] = lin(1.0, fd.dy(r1), -1.0, fd.dx(r2));
  out.scalars["mean_" + name + "1"] = average(r1);
  out.scalars["mean_" + name + "2"] = average(r2);
}

// Spectral field evaluated on the n-by-n grid by zero padding.
Grid pad_to_grid(const Field2D& f, int n, double offset = 0.0) {
  Field2D big(n, n);
  for (int i = 0; i < f.nx(); ++i)
    for (int j = 0; j < f.nky() && j < big.nky(); ++j) {
      const int k1 = f.kx(i);
      if (!big.retained(k1, j)) continue;
      big.at(big.row(k1), j) = f.at(i, j);
    }
  big.set_mean(big.mean() + offset);
  return spectral2d::to_grid(big);
}

}  // namespace

GridRate finite_difference_rhs(const models::ModelSpec& spec, const models::ModelState& s, int n) {
  using models::ModelId;
  if (n < 8 || n % 2 != 0) throw ContractError("finite_difference_rhs: grid must be even and >= 8");
  const Fd fd{n, kTwoPi / n};
  GridRate out;
  out.n = n;
  switch (spec.id) {
    case ModelId::Euler2D:
    case ModelId::QgBeta: {
      const auto& st = std::get<models::VorticityState>(s);
      Grid psi;
      const Velocity u = velocity_of(fd, st.omega, st.mean, &psi);
      const Grid w = fd.sample(st.omega);
      Grid r = advect(fd, u.u1, u.u2, w);
      for (double& x : r) x = -x;
      if (spec.id == ModelId::QgBeta) r = lin(1.0, r, -spec.beta, fd.dx(psi));
      out.fields["omega"] = std::move(r);
      return out;
    }
    case ModelId::Boussinesq:
    case ModelId::PassiveScalar: {
      const auto& st = std::get<models::VorticityPairState>(s);
      Grid psi;
      const Velocity u = velocity_of(fd, st.omega, st.mean, &psi);
      const Grid w = fd.sample(st.omega), f = fd.sample(st.tracer);
      Grid rw = lin(-1.0, advect(fd, u.u1, u.u2, w), 0.0, w);
      Grid rf = lin(-1.0, advect(fd, u.u1, u.u2, f), 0.0, f);
      if (spec.id == ModelId::Boussinesq) {
        const double n2 = spec.brunt * spec.brunt;
        rw = lin(1.0, rw, -1.0, fd.dx(f));
        rf = lin(1.0, rf, -n2, u.u2);
        out.scalars["mean_u2"] = average(f);
      }
      out.fields["omega"] = std::move(rw);
      out.fields["tracer"] = std::move(rf);
      return out;
    }
    case ModelId::Mhd2D: {
      const auto& st = std::get<models::VelocityPairState>(s);
      const Velocity u = sample_vec(fd, st.u), b = sample_vec(fd, st.B);
      const Grid r1 = lin(-1.0, advect(fd, u.u1, u.u2, u.u1), 1.0, advect(fd, b.u1, b.u2, b.u1));
      const Grid r2 = lin(-1.0, advect(fd, u.u1, u.u2, u.u2), 1.0, advect(fd, b.u1, b.u2, b.u2));
      put_curl_and_mean(out, fd, "du", r1, r2);
      out.fields["dB1"] = lin(-1.0, advect(fd, u.u1, u.u2, b.u1), 1.0, advect(fd, b.u1, b.u2, u.u1));
      out.fields["dB2"] = lin(-1.0, advect(fd, u.u1, u.u2, b.u2), 1.0, advect(fd, b.u1, b.u2, u.u2));
      return out;
    }
    case ModelId::ChargedFluid: {
      const auto& st = std::get<models::ChargedState>(s);
      const Velocity u = sample_vec(fd, st.u);
      const Grid rho = fd.sample(st.rho);
      // -(u.grad)u - b rho J u with J u = (-u2, u1)
      const Grid r1 = lin(-1.0, advect(fd, u.u1, u.u2, u.u1), spec.b, mul(rho, u.u2));
      const Grid r2 = lin(-1.0, advect(fd, u.u1, u.u2, u.u2), -spec.b, mul(rho, u.u1));
      put_curl_and_mean(out, fd, "du", r1, r2);
      out.fields["drho"] = lin(-1.0, advect(fd, u.u1, u.u2, rho), 0.0, rho);
      return out;
    }
    case ModelId::TemplateMatching:
    case ModelId::Epdiff:
    case ModelId::LaeAlpha: {
      const auto& st = std::get<models::VelocityState>(s);
      const Velocity u = sample_vec(fd, st.u);
      const double s2 = spec.id == ModelId::TemplateMatching ? 0.0 : spec.alpha2;
      const Grid m1 = lin(1.0, u.u1, -s2, fd.lap(u.u1));
      const Grid m2 = lin(1.0, u.u2, -s2, fd.lap(u.u2));
      const Grid div = lin(1.0, fd.dx(u.u1), 1.0, fd.dy(u.u2));
      // -(u.grad)m - (grad u)^T m - (div u) m
      Grid r1 = lin(-1.0, advect(fd, u.u1, u.u2, m1), -1.0,
                    lin(1.0, mul(m1, fd.dx(u.u1)), 1.0, mul(m2, fd.dx(u.u2))));
      Grid r2 = lin(-1.0, advect(fd, u.u1, u.u2, m2), -1.0,
                    lin(1.0, mul(m1, fd.dy(u.u1)), 1.0, mul(m2, fd.dy(u.u2))));
      if (spec.id == ModelId::LaeAlpha) {
        put_curl_and_mean(out, fd, "dm", r1, r2);
        return out;
      }
      r1 = lin(1.0, r1, -1.0, mul(div, m1));
      r2 = lin(1.0, r2, -1.0, mul(div, m2));
      out.fields["dm1"] = std::move(r1);
      out.fields["dm2"] = std::move(r2);
      return out;
    }
    default:
      throw ContractError("finite_difference_rhs: torus models only");
  }
}

GridRate spectral_rate_on_grid(const models::ModelSpec& spec, const models::ModelState& s, int n) {
  using models::ModelId;
  using spectral2d::helmholtz;
  using spectral2d::vorticity;
  const models::ModelState rate = models::rhs(spec, s);
  GridRate out;
  out.n = n;
  auto curl_and_mean = [&](const std::string& name, const VecField2D& r) {
    out.fields["curl_" + name] = pad_to_grid(vorticity(r), n);
    out.scalars["mean_" + name + "1"] = r.mean[0];
    out.scalars["mean_" + name + "2"] = r.mean[1];
  };
  switch (spec.id) {
    case ModelId::Euler2D:
    case ModelId::QgBeta:
      out.fields["omega"] = pad_to_grid(std::get<models::VorticityState>(rate).omega, n);
      return out;
    case ModelId::Boussinesq:
    case ModelId::PassiveScalar: {
      const auto& r = std::get<models::VorticityPairState>(rate);
      out.fields["omega"] = pad_to_grid(r.omega, n);
      out.fields["tracer"] = pad_to_grid(r.tracer, n);
      if (spec.id == ModelId::Boussinesq) out.scalars["mean_u2"] = r.mean[1];
      return out;
    }
    case ModelId::Mhd2D: {
      const auto& r = std::get<models::VelocityPairState>(rate);
      curl_and_mean("du", r.u);
      out.fields["dB1"] = pad_to_grid(r.B.c[0], n, r.B.mean[0]);
      out.fields["dB2"] = pad_to_grid(r.B.c[1], n, r.B.mean[1]);
      return out;
    }
    case ModelId::ChargedFluid: {
      const auto& r = std::get<models::ChargedState>(rate);
      curl_and_mean("du", r.u);
      out.fields["drho"] = pad_to_grid(r.rho, n);
      return out;
    }
    case ModelId::TemplateMatching:
    case ModelId::Epdiff:
    case ModelId::LaeAlpha: {
      const VecField2D& du = std::get<models::VelocityState>(rate).u;
      const double s2 = spec.id == ModelId::TemplateMatching ? 0.0 : spec.alpha2;
      const VecField2D dm(helmholtz(du.c[0], s2), helmholtz(du.c[1], s2), du.mean);
      if (spec.id == ModelId::LaeAlpha) {
        curl_and_mean("dm", dm);
        return out;
      }
      out.fields["dm1"] = pad_to_grid(dm.c[0], n, dm.mean[0]);
      out.fields["dm2"] = pad_to_grid(dm.c[1], n, dm.mean[1]);
      return out;
    }
    default:
      throw ContractError("spectral_rate_on_grid: torus models only");
  }
}

GridRate richardson(const GridRate& fine, const GridRate& coarse) {
  if (fine.n != 2 * coarse.n) throw ContractError("richardson: fine grid must be twice the coarse grid");
  GridRate out;
  out.n = coarse.n;
  const int n = coarse.n;
  for (const auto& [name, c] : coarse.fields) {
    const auto it = fine.fields.find(name);
    if (it == fine.fields.end()) throw ContractError("richardson: missing field " + name);
    Grid r(c.size());
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        const size_t i = static_cast<size_t>(p) * n + q;
        const double f = it->second[static_cast<size_t>(2 * p) * fine.n + 2 * q];
        r[i] = (4.0 * f - c[i]) / 3.0;
      }
    out.fields[name] = std::move(r);
  }
  for (const auto& [name, c] : coarse.scalars)
    out.scalars[name] = (4.0 * fine.scalars.at(name) - c) / 3.0;
  return out;
}

FdComparison finite_difference_check(const models::ModelSpec& spec, const models::ModelState& s, int n) {
  const GridRate fd = richardson(finite_difference_rhs(spec, s, n), finite_difference_rhs(spec, s, n / 2));
  const GridRate sp = spectral_rate_on_grid(spec, s, n / 2);
  FdComparison cmp;
  auto consider = [&](const std::string& name, double err, double scale) {
    cmp.max_rate = std::max(cmp.max_rate, scale);
    const double rel = err / std::max(1.0, scale);
    if (rel >= cmp.max_error) {
      cmp.max_error = rel;
      cmp.worst = name;
    }
  };
  for (const auto& [name, ref] : sp.fields) {
    const Grid& v = fd.fields.at(name);
    double err = 0.0, scale = 0.0;
    for (size_t i = 0; i < ref.size(); ++i) {
      err = std::max(err, std::abs(v[i] - ref[i]));
      scale = std::max(scale, std::abs(ref[i]));
    }
    consider(name, err, scale);
  }
  for (const auto& [name, ref] : sp.scalars) consider(name, std::abs(fd.scalars.at(name) - ref), std::abs(ref));
  return cmp;
}

}  // namespace ea::oracle
