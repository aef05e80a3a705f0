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
#include <functional>
#include <numbers>
#include <random>

#include "ea/errors.hpp"
#include "ea/spectral2d.hpp"

namespace ea::spectral2d {
namespace {

constexpr int n = 32;

Field2D trig(int k1, int k2, double c, double s) { return Field2D::trig(n, n, k1, k2, c, s); }
Field2D sinx() { return trig(1, 0, 0, 1); }
Field2D siny() { return trig(0, 1, 0, 1); }
Field2D cosx() { return trig(1, 0, 1, 0); }
Field2D cosy() { return trig(0, 1, 1, 0); }

// Max deviation from a closed form over a fixed set of points.
double max_dev(const Field2D& f, const std::function<double(double, double)>& g) {
  double m = 0.0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      const double x = 0.37 + 0.9 * i, y = 0.11 + 0.87 * j;
      m = std::max(m, std::abs(f.evaluate(x, y) - g(x, y)));
    }
  return m;
}

double max_coef(const Field2D& f) {
  double m = 0.0;
  for (const auto& c : f.data()) m = std::max(m, std::abs(c));
  return m;
}
double max_coef(const VecField2D& v) {
  return std::max({max_coef(v.c[0]), max_coef(v.c[1]), std::abs(v.mean[0]), std::abs(v.mean[1])});
}

Field2D random_field(std::mt19937_64& rng, bool zero_mean = true) {
  std::normal_distribution<double> n01;
  Field2D f(n, n);
  for (int k1 = -f.band_x(); k1 <= f.band_x(); ++k1)
    for (int k2 = 0; k2 <= f.band_y(); ++k2) {
      if (k2 == 0 && k1 <= 0) continue;
      if (!f.retained(k1, k2)) continue;
      f.set_mode(k1, k2, Complex(n01(rng), n01(rng)) * std::exp(-0.4 * std::hypot(k1, k2)));
    }
  if (!zero_mean) f.set_mean(n01(rng));
  return f;
}

VecField2D random_solenoidal(std::mt19937_64& rng) {
  return velocity_from_vorticity(random_field(rng), {0.3, -0.2});
}

TEST(Field2D, TrigAndHermitianStorage) {
  const Field2D f = trig(2, -1, 0.5, 1.5);
  EXPECT_LE(max_dev(f, [](double x, double y) { return 0.5 * std::cos(2 * x - y) + 1.5 * std::sin(2 * x - y); }),
            1e-14);
  EXPECT_EQ(f.coefficient(-2, 1), std::conj(f.coefficient(2, -1)));
  EXPECT_EQ(f.coefficient(n, 0), Complex(0.0));
  Field2D g(n, n);
  EXPECT_THROW(g.set_mode(n / 2, 0, 1.0), ContractError);
}

TEST(Field2D, GridRoundTripAndProduct) {
  std::mt19937_64 rng(1);
  const Field2D f = random_field(rng, false);
  EXPECT_LE(max_coef(from_grid(to_grid(f), n, n) - f), 1e-14);
  EXPECT_LE(max_dev(multiply(sinx(), siny()), [](double x, double y) { return std::sin(x) * std::sin(y); }),
            1e-14);
}

TEST(Calculus, DerivativesAndLaplacian) {
  EXPECT_LE(max_coef(dx(sinx()) - cosx()), 1e-15);
  EXPECT_LE(max_coef(dy(cosy()) + siny()), 1e-15);
  std::mt19937_64 rng(2);
  const Field2D f = random_field(rng);
  EXPECT_LE(max_coef(laplacian(inverse_laplacian(f)) - f), 1e-14);
  EXPECT_LE(max_coef(helmholtz(helmholtz(f, 0.3), 0.3, true) - f), 1e-14);
  EXPECT_NEAR(integral(Field2D::trig(n, n, 0, 0, 1.0, 0.0)), 4.0 * std::numbers::pi * std::numbers::pi, 1e-12);
  EXPECT_NEAR(inner(sinx(), sinx()), 2.0 * std::numbers::pi * std::numbers::pi, 1e-12);
}

TEST(Leray, Examples) {
  std::mt19937_64 rng(3);
  const Field2D phi = random_field(rng);
  const VecField2D g = gradient(phi);
  EXPECT_LE(max_coef(leray_project(g)), 1e-14);
  const VecField2D u = random_solenoidal(rng);
  EXPECT_LE(max_coef(leray_project(u) - u), 1e-14);
  const VecField2D v(sinx(), sinx());
  const VecField2D p = leray_project(v);
  EXPECT_LE(max_coef(p.c[0]), 1e-15);
  EXPECT_LE(max_coef(p.c[1] - sinx()), 1e-15);
}

TEST(Stream, Examples) {
  const StreamSolution s = stream_solve(siny());
  EXPECT_LE(max_coef(s.psi + siny()), 1e-15);
  EXPECT_LE(max_coef(s.u.c[0] + cosy()), 1e-15);
  EXPECT_LE(max_coef(s.u.c[1]), 1e-15);
  EXPECT_LE(max_coef(stream_solve(Field2D(n, n)).u), 0.0);
  std::mt19937_64 rng(4);
  const Field2D w = random_field(rng);
  EXPECT_LE(max_coef(vorticity(stream_solve(w).u) - w), 1e-14);
  EXPECT_LE(max_divergence(stream_solve(w).u), 1e-14);
  EXPECT_THROW(stream_solve(Field2D::trig(n, n, 0, 0, 1.0, 0.0)), ContractError);
}

TEST(Jacobian, Examples) {
  std::mt19937_64 rng(5);
  const Field2D f = random_field(rng);
  EXPECT_LE(max_coef(jacobian(f, f)), 1e-14);
  EXPECT_LE(max_dev(jacobian(sinx(), siny()), [](double x, double y) { return std::cos(x) * std::cos(y); }),
            1e-14);
  EXPECT_LE(max_coef(jacobian(f, Field2D::trig(n, n, 0, 0, 2.0, 0.0))), 1e-15);
}

TEST(Euler, Examples) {
  EXPECT_LE(max_coef(rhs_euler_vorticity(siny())), 1e-15);
  EXPECT_LE(max_coef(rhs_euler_vorticity(cosx() + cosy())), 1e-15);
  // psi = -sin x - cos(2y)/4, u = (sin(2y)/2, cos x).
  const Field2D w = sinx() + trig(0, 2, 1, 0);
  EXPECT_LE(max_dev(rhs_euler_vorticity(w), [](double x, double y) { return 1.5 * std::cos(x) * std::sin(2 * y); }),
            1e-14);
}

TEST(Euler, EnstrophyAndEnergyAreOrthogonalToRate) {
  std::mt19937_64 rng(6);
  const Field2D w = random_field(rng);
  const Field2D r = rhs_euler_vorticity(w);
  EXPECT_LE(std::abs(inner(w, r)), 1e-12);
  EXPECT_LE(std::abs(inner(stream_solve(w).psi, r)), 1e-12);
}

TEST(Qg, Examples) {
  std::mt19937_64 rng(7);
  const Field2D w = random_field(rng);
  EXPECT_LE(max_coef(rhs_qg(w, 0.0) - rhs_euler_vorticity(w)), 0.0);
  EXPECT_LE(max_coef(rhs_qg(siny(), 2.5)), 1e-15);
  EXPECT_LE(max_coef(rhs_qg(sinx(), 1.0) - cosx()), 1e-15);
}

TEST(Boussinesq, Examples) {
  std::mt19937_64 rng(8);
  const Field2D w = random_field(rng);
  const Field2D zero(n, n);
  const auto r = rhs_boussinesq(w, zero, 0.0);
  EXPECT_LE(max_coef(r.domega - rhs_euler_vorticity(w)), 1e-15);
  EXPECT_LE(max_coef(r.dxi), 0.0);
  const auto s = rhs_boussinesq(zero, siny(), 1.0);
  EXPECT_LE(max_coef(s.domega), 1e-15);
  EXPECT_LE(max_coef(s.dxi), 1e-15);
  const auto t = rhs_boussinesq(zero, sinx(), 2.0);
  EXPECT_LE(max_coef(t.domega + cosx()), 1e-15);
  EXPECT_LE(max_coef(t.dxi), 1e-15);
}

TEST(PassiveScalar, Examples) {
  std::mt19937_64 rng(9);
  const Field2D w = random_field(rng);
  EXPECT_LE(max_coef(rhs_passive_scalar(w, Field2D::trig(n, n, 0, 0, 1.0, 0.0)).df), 1e-15);
  const auto locked = rhs_passive_scalar(w, w);
  EXPECT_LE(max_coef(locked.df - locked.domega), 1e-15);
  EXPECT_LE(max_dev(rhs_passive_scalar(siny(), sinx()).df,
                    [](double x, double y) { return std::cos(x) * std::cos(y); }),
            1e-14);
}

TEST(Mhd, Examples) {
  std::mt19937_64 rng(10);
  const VecField2D u = random_solenoidal(rng);
  const VecField2D zero(n, n);
  const auto r = rhs_mhd(u, zero);
  EXPECT_LE(max_coef(vorticity(r.du) - rhs_euler_vorticity(vorticity(u), u.mean)), 1e-10);
  EXPECT_LE(max_coef(r.dB), 1e-15);
  const auto aligned = rhs_mhd(u, u);
  EXPECT_LE(max_coef(aligned.du), 1e-13);
  EXPECT_LE(max_coef(aligned.dB), 1e-13);
  const VecField2D B = random_solenoidal(rng);
  const auto still = rhs_mhd(zero, B);
  EXPECT_LE(max_coef(still.dB), 1e-15);
  EXPECT_LE(max_divergence(still.du), 1e-13);
}

TEST(ChargedFluid, Reductions) {
  std::mt19937_64 rng(11);
  const VecField2D u = random_solenoidal(rng);
  const Field2D rho = random_field(rng);
  const Field2D euler = rhs_euler_vorticity(vorticity(u), u.mean);
  EXPECT_LE(max_coef(vorticity(rhs_charged_fluid(u, Field2D(n, n), 1.0).du) - euler), 1e-10);
  EXPECT_LE(max_coef(vorticity(rhs_charged_fluid(u, rho, 0.0).du) - euler), 1e-10);
  const auto c = rhs_charged_fluid(u, Field2D::trig(n, n, 0, 0, 0.7, 0.0), 1.3);
  EXPECT_LE(max_coef(vorticity(c.du) - euler), 1e-10);
}

TEST(TemplateMatching, Examples) {
  VecField2D c(n, n);
  c.mean = {0.4, -1.1};
  EXPECT_LE(max_coef(rhs_template_matching(c)), 0.0);
  const VecField2D r = rhs_template_matching(VecField2D(sinx(), Field2D(n, n)));
  EXPECT_LE(max_coef(r.c[0] - trig(2, 0, 0, -1.5)), 1e-15);
  EXPECT_LE(max_coef(r.c[1]), 1e-15);
  const VecField2D s = rhs_template_matching(VecField2D(Field2D(n, n), sinx()));
  EXPECT_LE(max_coef(s.c[0] - trig(2, 0, 0, -0.5)), 1e-15);
  EXPECT_LE(max_coef(s.c[1]), 1e-15);
}

TEST(Epdiff, Examples) {
  VecField2D c(n, n);
  c.mean = {0.4, -1.1};
  EXPECT_LE(max_coef(rhs_epdiff(c, 1.0)), 0.0);
  const VecField2D r = rhs_epdiff(VecField2D(sinx(), Field2D(n, n)), 1.0);
  EXPECT_LE(max_coef(r.c[0] - trig(2, 0, 0, -0.6)), 1e-15);
  EXPECT_LE(max_coef(r.c[1]), 1e-15);
  const VecField2D u(sinx() + trig(0, 2, 0.5, 0.0), trig(1, 1, 0.0, 1.0), {0.2, 0.1});
  EXPECT_LE(max_coef(rhs_epdiff(u, 1e-6) - rhs_template_matching(u)), 1e-4);
  EXPECT_THROW(rhs_epdiff(u, -1.0), ContractError);
}

TEST(LaeAlpha, Examples) {
  std::mt19937_64 rng(13);
  const VecField2D u = random_solenoidal(rng);
  EXPECT_LE(max_coef(vorticity(rhs_lae_alpha(u, 1e-6)) - rhs_euler_vorticity(vorticity(u), u.mean)), 1e-4);
  const VecField2D shear(Field2D::trig(n, n, 0, 1, -1.0, 0.0), Field2D(n, n));
  EXPECT_LE(max_coef(rhs_lae_alpha(shear, 0.3)), 1e-14);
  EXPECT_LE(max_coef(rhs_lae_alpha(VecField2D(n, n), 0.3)), 0.0);
  EXPECT_THROW(rhs_lae_alpha(VecField2D(sinx(), Field2D(n, n)), 0.3), ContractError);
}

TEST(UpperBand, Fraction) {
  EXPECT_EQ(upper_band_fraction(sinx()), 0.0);
  const Field2D f(n, n);
  EXPECT_EQ(upper_band_fraction(f), 0.0);
  EXPECT_NEAR(upper_band_fraction(trig(f.band_x(), 0, 1.0, 0.0)), 1.0, 1e-15);
}

}  // namespace
}  // namespace ea::spectral2d
