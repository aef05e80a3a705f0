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

// Truncated Fourier calculus on the circle R/2piZ and the circle-model
// right-hand sides. A Spectrum1D stores c_0..c_N of u(x) = sum_k c_k e^{ikx};
// negative modes are implied by c_{-k} = conj(c_k).

#include <complex>
#include <string_view>
#include <vector>

namespace ea::spectral1d {

using Complex = std::complex<double>;

class Spectrum1D {
 public:
  Spectrum1D() = default;
  explicit Spectrum1D(int n_modes) : c_(static_cast<size_t>(n_modes) + 1) {}

  int n_modes() const { return static_cast<int>(c_.size()) - 1; }
  bool empty() const { return c_.empty(); }

  Complex& operator[](int k) { return c_[k]; }
  const Complex& operator[](int k) const { return c_[k]; }
  /// Any k in -N..N; zero outside the band.
  Complex coefficient(int k) const;

  std::vector<Complex>& coeffs() { return c_; }
  const std::vector<Complex>& coeffs() const { return c_; }

  /// Zero the imaginary part of c_0.
  void enforce_hermitian() { if (!c_.empty()) c_[0].imag(0.0); }

  double evaluate(double x) const;

  Spectrum1D& operator+=(const Spectrum1D& o);
  Spectrum1D& operator-=(const Spectrum1D& o);
  Spectrum1D& operator*=(double s);
  /// this += s * o
  void axpy(double s, const Spectrum1D& o);

  /// sum_k a_k sin(kx) + b_k cos(kx) style builders.
  static Spectrum1D sine(int n_modes, int k, double amplitude = 1.0);
  static Spectrum1D cosine(int n_modes, int k, double amplitude = 1.0);
  static Spectrum1D constant(int n_modes, double value);

 private:
  std::vector<Complex> c_;
};

Spectrum1D operator+(Spectrum1D a, const Spectrum1D& b);
Spectrum1D operator-(Spectrum1D a, const Spectrum1D& b);
Spectrum1D operator*(double s, Spectrum1D a);

enum class Metric1D { L2, H1 };

/// lambda_k: 1 for L2, 1 + k^2 for H1.
inline double multiplier(Metric1D m, int k) { return m == Metric1D::L2 ? 1.0 : 1.0 + double(k) * k; }

/// Smallest power of two >= 3N + 1.
int collocation_size(int n_modes);

Spectrum1D deriv(const Spectrum1D& s, int order);
/// Zero-mean antiderivative of a zero-mean spectrum, `order` times.
Spectrum1D antideriv(const Spectrum1D& s, int order);
/// Alias-free product truncated to the band of s.
Spectrum1D multiply(const Spectrum1D& s, const Spectrum1D& t);
Spectrum1D inertia_apply(const Spectrum1D& u, Metric1D metric);
Spectrum1D inertia_invert(const Spectrum1D& m, Metric1D metric);

/// Exact Parseval inner product int_0^{2pi} (A a) b dx.
double inner(const Spectrum1D& a, const Spectrum1D& b, Metric1D metric = Metric1D::L2);
/// int_0^{2pi} u dx.
double integral(const Spectrum1D& u);

/// Grid values on `points` equispaced nodes x_j = 2 pi j / points.
std::vector<double> to_grid(const Spectrum1D& s, int points);
/// Coefficients of grid samples, truncated to n_modes.
Spectrum1D from_grid(const std::vector<double>& grid, int n_modes);

// Lie algebra of vector fields on the circle, [X, Y] = X'Y - XY'.
Spectrum1D bracket(const Spectrum1D& x, const Spectrum1D& y);
/// ad(X)^T Y = 2X'Y + XY' for the L2 metric.
Spectrum1D ad_transpose_l2(const Spectrum1D& x, const Spectrum1D& y);
/// ad(X)^T Y = (1 - d^2)^{-1}(2YX' + Y'X - 2Y''X' - Y'''X) for the H1 metric.
Spectrum1D ad_transpose_h1(const Spectrum1D& x, const Spectrum1D& y);

Spectrum1D rhs_burgers(const Spectrum1D& u);
Spectrum1D rhs_kdv(const Spectrum1D& u, double a);
/// m-rate of (extended) Camassa-Holm, m = u - u''.
Spectrum1D rhs_camassa_holm_momentum(const Spectrum1D& u, double a);
/// u-rate of (extended) Camassa-Holm.
Spectrum1D rhs_camassa_holm(const Spectrum1D& u, double a);
/// State v = u'' with zero mean; returns the v-rate.
Spectrum1D rhs_hunter_saxton(const Spectrum1D& v);

enum class PairVariant { L2, L2Sigma, H1, H1Sigma, L2AlphaCentral };

PairVariant parse_pair_variant(std::string_view id);
std::string_view pair_variant_id(PairVariant v);
Metric1D pair_metric(PairVariant v);

struct PairRate1D {
  Spectrum1D du;
  Spectrum1D df;
};

/// u- and f-rates of the two-component systems; H1 variants are returned
/// after inverting 1 - d^2 per component. `a` is used only by l2-alpha-central.
PairRate1D rhs_two_component(const Spectrum1D& u, const Spectrum1D& f, PairVariant variant,
                             double a = 0.0);
PairRate1D rhs_two_component(const Spectrum1D& u, const Spectrum1D& f, std::string_view variant,
                             double a = 0.0);

/// Fraction of the gradient energy sum_k k^2 |c_k|^2 carried by k > 2N/3.
double upper_band_fraction(const Spectrum1D& s);

}  // namespace ea::spectral1d
