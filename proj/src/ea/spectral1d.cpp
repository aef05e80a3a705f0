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

#include "ea/spectral1d.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ea/errors.hpp"
#include "ea/fft.hpp"

namespace ea::spectral1d {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_same_band(const Spectrum1D& a, const Spectrum1D& b, const char* op) {
  if (a.n_modes() != b.n_modes())
    throw ContractError(std::string(op) + ": band mismatch (" + std::to_string(a.n_modes()) +
                        " vs " + std::to_string(b.n_modes()) + ")");
}

Complex ipow(int k, int order) {
  // (ik)^order
  const double mag = std::pow(double(k), order);
  switch (order % 4) {
    case 0: return {mag, 0.0};
    case 1: return {0.0, mag};
    case 2: return {-mag, 0.0};
    default: return {0.0, -mag};
  }
}

}  // namespace

Complex Spectrum1D::coefficient(int k) const {
  const int n = n_modes();
  if (k > n || k < -n) return {};
  return k >= 0 ? c_[k] : std::conj(c_[-k]);
}

double Spectrum1D::evaluate(double x) const {
  if (c_.empty()) return 0.0;
  double v = c_[0].real();
  for (int k = 1; k <= n_modes(); ++k) v += 2.0 * (c_[k] * std::polar(1.0, k * x)).real();
  return v;
}

Spectrum1D& Spectrum1D::operator+=(const Spectrum1D& o) {
  require_same_band(*this, o, "operator+=");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

Spectrum1D& Spectrum1D::operator-=(const Spectrum1D& o) {
  require_same_band(*this, o, "operator-=");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

Spectrum1D& Spectrum1D::operator*=(double s) {
  for (auto& c : c_) c *= s;
  return *this;
}

void Spectrum1D::axpy(double s, const Spectrum1D& o) {
  require_same_band(*this, o, "axpy");
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += s * o.c_[k];
}

Spectrum1D Spectrum1D::sine(int n_modes, int k, double amplitude) {
  // a sin(kx) = a/(2i) e^{ikx} + c.c.
  Spectrum1D s(n_modes);
  if (k > 0 && k <= n_modes) s[k] = Complex(0.0, -0.5 * amplitude);
  return s;
}

Spectrum1D Spectrum1D::cosine(int n_modes, int k, double amplitude) {
  Spectrum1D s(n_modes);
  if (k == 0) s[0] = amplitude;
  else if (k > 0 && k <= n_modes) s[k] = 0.5 * amplitude;
  return s;
}

Spectrum1D Spectrum1D::constant(int n_modes, double value) { return cosine(n_modes, 0, value); }

Spectrum1D operator+(Spectrum1D a, const Spectrum1D& b) { return a += b; }
Spectrum1D operator-(Spectrum1D a, const Spectrum1D& b) { return a -= b; }
Spectrum1D operator*(double s, Spectrum1D a) { return a *= s; }

int collocation_size(int n_modes) {
  int m = 1;
  while (m < 3 * n_modes + 1) m *= 2;
  return std::max(m, 4);
}

Spectrum1D deriv(const Spectrum1D& s, int order) {
  if (order < 0) throw ContractError("deriv: negative order");
  Spectrum1D out(s.n_modes());
  if (order == 0) return s;
  for (int k = 1; k <= s.n_modes(); ++k) out[k] = ipow(k, order) * s[k];
  return out;
}

Spectrum1D antideriv(const Spectrum1D& s, int order) {
  if (order < 0) throw ContractError("antideriv: negative order");
  if (!s.empty() && std::abs(s[0]) != 0.0 && order > 0)
    throw ContractError("antideriv: input must have zero mean");
  Spectrum1D out(s.n_modes());
  if (order == 0) return s;
  for (int k = 1; k <= s.n_modes(); ++k) out[k] = s[k] / ipow(k, order);
  return out;
}

std::vector<double> to_grid(const Spectrum1D& s, int points) {
  if (2 * s.n_modes() >= points)
    throw ContractError("to_grid: grid too coarse for the band");
  const auto tr = fft::transform_1d(points);
  std::vector<Complex> spec(tr->spectral_size());
  for (int k = 0; k <= s.n_modes() && k < tr->spectral_size(); ++k) spec[k] = s[k];
  spec[0].imag(0.0);
  std::vector<double> grid(points);
  tr->backward(spec, grid);
  return grid;
}

Spectrum1D from_grid(const std::vector<double>& grid, int n_modes) {
  const int points = static_cast<int>(grid.size());
  if (2 * n_modes >= points) throw ContractError("from_grid: band exceeds the grid's Nyquist limit");
  const auto tr = fft::transform_1d(points);
  std::vector<Complex> spec(tr->spectral_size());
  tr->forward(grid, spec);
  Spectrum1D out(n_modes);
  const double scale = 1.0 / points;
  for (int k = 0; k <= n_modes; ++k) out[k] = spec[k] * scale;
  out.enforce_hermitian();
  return out;
}

Spectrum1D multiply(const Spectrum1D& s, const Spectrum1D& t) {
  require_same_band(s, t, "multiply");
  const int n = s.n_modes();
  const int m = collocation_size(n);
  const auto tr = fft::transform_1d(m);
  std::vector<Complex> a(tr->spectral_size()), b(tr->spectral_size());
  for (int k = 0; k <= n; ++k) {
    a[k] = s[k];
    b[k] = t[k];
  }
  a[0].imag(0.0);
  b[0].imag(0.0);
  std::vector<double> ga(m), gb(m);
  tr->backward(a, ga);
  tr->backward(b, gb);
  for (int j = 0; j < m; ++j) ga[j] *= gb[j];
  tr->forward(ga, a);
  Spectrum1D out(n);
  const double scale = 1.0 / m;
  for (int k = 0; k <= n; ++k) out[k] = a[k] * scale;
  out.enforce_hermitian();
  return out;
}

Spectrum1D inertia_apply(const Spectrum1D& u, Metric1D metric) {
  Spectrum1D out(u);
  for (int k = 0; k <= u.n_modes(); ++k) out[k] *= multiplier(metric, k);
  return out;
}

Spectrum1D inertia_invert(const Spectrum1D& m, Metric1D metric) {
  Spectrum1D out(m);
  for (int k = 0; k <= m.n_modes(); ++k) out[k] /= multiplier(metric, k);
  return out;
}

double inner(const Spectrum1D& a, const Spectrum1D& b, Metric1D metric) {
  require_same_band(a, b, "inner");
  if (a.empty()) return 0.0;
  double acc = a[0].real() * b[0].real();
  for (int k = 1; k <= a.n_modes(); ++k)
    acc += 2.0 * multiplier(metric, k) * (a[k].real() * b[k].real() + a[k].imag() * b[k].imag());
  return kTwoPi * acc;
}

double integral(const Spectrum1D& u) { return u.empty() ? 0.0 : kTwoPi * u[0].real(); }

Spectrum1D bracket(const Spectrum1D& x, const Spectrum1D& y) {
  return multiply(deriv(x, 1), y) - multiply(x, deriv(y, 1));
}

Spectrum1D ad_transpose_l2(const Spectrum1D& x, const Spectrum1D& y) {
  return 2.0 * multiply(deriv(x, 1), y) + multiply(x, deriv(y, 1));
}

Spectrum1D ad_transpose_h1(const Spectrum1D& x, const Spectrum1D& y) {
  // (1 - d^2)^{-1}(2YX' + Y'X - 2Y''X' - Y'''X)
  const Spectrum1D dx = deriv(x, 1);
  Spectrum1D w = 2.0 * multiply(y, dx);
  w += multiply(deriv(y, 1), x);
  w.axpy(-2.0, multiply(deriv(y, 2), dx));
  w -= multiply(deriv(y, 3), x);
  return inertia_invert(w, Metric1D::H1);
}

Spectrum1D rhs_burgers(const Spectrum1D& u) {
  // -3uu' = -(3/2)(u^2)'
  return -1.5 * deriv(multiply(u, u), 1);
}

Spectrum1D rhs_kdv(const Spectrum1D& u, double a) {
  Spectrum1D out = rhs_burgers(u);
  if (a != 0.0) out.axpy(-2.0 * a, deriv(u, 3));
  return out;
}

Spectrum1D rhs_camassa_holm_momentum(const Spectrum1D& u, double a) {
  // -um' - 2u'm = -(um + u^2/2 - u'^2/2)'
  const Spectrum1D m = inertia_apply(u, Metric1D::H1);
  const Spectrum1D du = deriv(u, 1);
  Spectrum1D flux = multiply(u, m);
  flux.axpy(0.5, multiply(u, u));
  flux.axpy(-0.5, multiply(du, du));
  Spectrum1D out = -1.0 * deriv(flux, 1);
  if (a != 0.0) out.axpy(-2.0 * a, deriv(u, 3));
  return out;
}

Spectrum1D rhs_camassa_holm(const Spectrum1D& u, double a) {
  return inertia_invert(rhs_camassa_holm_momentum(u, a), Metric1D::H1);
}

Spectrum1D rhs_hunter_saxton(const Spectrum1D& v) {
  if (!v.empty() && std::abs(v[0]) > 1e-14)
    throw ContractError("rhs_hunter_saxton: v = u'' must have zero mean");
  Spectrum1D v0(v);
  if (!v0.empty()) v0[0] = 0.0;
  const Spectrum1D u = antideriv(v0, 2);
  const Spectrum1D du = deriv(u, 1);
  // -2u'v - uv' = -(uv + u'^2/2)'
  Spectrum1D flux = multiply(u, v0);
  flux.axpy(0.5, multiply(du, du));
  return -1.0 * deriv(flux, 1);
}

PairVariant parse_pair_variant(std::string_view id) {
  if (id == "l2") return PairVariant::L2;
  if (id == "l2-sigma") return PairVariant::L2Sigma;
  if (id == "h1") return PairVariant::H1;
  if (id == "h1-sigma") return PairVariant::H1Sigma;
  if (id == "l2-alpha-central") return PairVariant::L2AlphaCentral;
  throw ContractError("unknown two-component variant '" + std::string(id) + "'");
}

std::string_view pair_variant_id(PairVariant v) {
  switch (v) {
    case PairVariant::L2: return "l2";
    case PairVariant::L2Sigma: return "l2-sigma";
    case PairVariant::H1: return "h1";
    case PairVariant::H1Sigma: return "h1-sigma";
    case PairVariant::L2AlphaCentral: return "l2-alpha-central";
  }
  return "";
}

Metric1D pair_metric(PairVariant v) {
  return (v == PairVariant::H1 || v == PairVariant::H1Sigma) ? Metric1D::H1 : Metric1D::L2;
}

PairRate1D rhs_two_component(const Spectrum1D& u, const Spectrum1D& f, PairVariant variant,
                             double a) {
  require_same_band(u, f, "rhs_two_component");
  const Spectrum1D uf = multiply(u, f);
  switch (variant) {
    case PairVariant::L2:
    case PairVariant::L2AlphaCentral: {
      // du = -(3u^2/2 + f^2/2)', df = -(uf)'
      Spectrum1D flux = 1.5 * multiply(u, u);
      flux.axpy(0.5, multiply(f, f));
      PairRate1D r{-1.0 * deriv(flux, 1), -1.0 * deriv(uf, 1)};
      if (variant == PairVariant::L2AlphaCentral && a != 0.0) {
        r.du.axpy(a, deriv(f, 2));
        r.df.axpy(-a, deriv(u, 2));
      }
      return r;
    }
    case PairVariant::L2Sigma: {
      // uf' + 2u'f = (uf)' + u'f
      Spectrum1D flux = 1.5 * multiply(u, u);
      flux.axpy(0.5, multiply(f, f));
      flux -= uf;
      Spectrum1D du = -1.0 * deriv(flux, 1);
      du += multiply(deriv(u, 1), f);
      return {std::move(du), -1.0 * deriv(uf, 1)};
    }
    case PairVariant::H1:
    case PairVariant::H1Sigma: {
      const Spectrum1D n = inertia_apply(f, Metric1D::H1);
      const Spectrum1D fp = deriv(f, 1);
      // u-momentum: CH part, then -ff' + f'f'' = -(f^2/2 - f'^2/2)'
      Spectrum1D dm = rhs_camassa_holm_momentum(u, 0.0);
      Spectrum1D fflux = 0.5 * multiply(f, f);
      fflux.axpy(-0.5, multiply(fp, fp));
      dm -= deriv(fflux, 1);
      const Spectrum1D un = multiply(u, n);
      if (variant == PairVariant::H1Sigma) {
        // -2u'n - un' = -(un)' - u'n
        dm -= deriv(un, 1);
        dm -= multiply(deriv(u, 1), n);
      }
      // f-momentum: -uf' - u'f + uf''' + u'f'' = -(un)'
      const Spectrum1D dn = -1.0 * deriv(un, 1);
      return {inertia_invert(dm, Metric1D::H1), inertia_invert(dn, Metric1D::H1)};
    }
  }
  throw ContractError("rhs_two_component: unknown variant");
}

PairRate1D rhs_two_component(const Spectrum1D& u, const Spectrum1D& f, std::string_view variant,
                             double a) {
  return rhs_two_component(u, f, parse_pair_variant(variant), a);
}

double upper_band_fraction(const Spectrum1D& s) {
  if (s.empty()) return 0.0;
  const int n = s.n_modes();
  const double cut = 2.0 * n / 3.0;
  double total = 0.0, upper = 0.0;
  for (int k = 1; k <= n; ++k) {
    const double e = double(k) * k * std::norm(s[k]);
    total += e;
    if (k > cut) upper += e;
  }
  return total > 0.0 ? upper / total : 0.0;
}

}  // namespace ea::spectral1d
