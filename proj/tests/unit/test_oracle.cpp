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

#include <random>

#include "ea/errors.hpp"
#include "ea/oracle.hpp"
#include "ea/presets.hpp"

namespace ea::oracle {
namespace {

using models::ModelId;
using spectral2d::Field2D;

TEST(AdjointHarness, ZeroXGivesZeroResidual) {
  std::mt19937_64 rng(1);
  auto t = random_triple(85, rng);
  t.x = Spectrum1D(85);
  EXPECT_EQ(adjoint_residual(spectral1d::ad_transpose_l2, Metric1D::L2, t), 0.0);
  EXPECT_EQ(adjoint_residual(spectral1d::ad_transpose_h1, Metric1D::H1, t), 0.0);
}

TEST(AdjointHarness, WrongFormulaIsCaught) {
  std::mt19937_64 rng(2);
  const auto t = random_triple(85, rng);
  const AdTransposeFunction wrong = [](const Spectrum1D& x, const Spectrum1D& y) {
    Spectrum1D w = 2.0 * spectral1d::multiply(spectral1d::deriv(x, 1), y);
    w -= spectral1d::multiply(x, spectral1d::deriv(y, 1));
    return w;
  };
  EXPECT_GE(adjoint_residual(wrong, Metric1D::L2, t), 1e-2);
}

TEST(AdjointHarness, BandwidthIsEnforced) {
  std::mt19937_64 rng(3);
  auto t = random_triple(85, rng);
  EXPECT_NO_THROW(check_bandwidth(t));
  t.y[60] = 1.0;
  EXPECT_THROW(check_bandwidth(t), ContractError);
  EXPECT_THROW(adjoint_residual(spectral1d::ad_transpose_l2, Metric1D::L2, t), ContractError);
}

TEST(AdjointHarness, ConvolutionMatchesProductOfTrigFunctions) {
  const Spectrum1D s = Spectrum1D::sine(20, 2), c = Spectrum1D::cosine(20, 3);
  // sin 2x cos 3x = (sin 5x - sin x) / 2.
  const Spectrum1D p = convolve(s, c);
  const Spectrum1D want = Spectrum1D::sine(20, 5, 0.5) - Spectrum1D::sine(20, 1, 0.5);
  for (int k = 0; k <= 20; ++k) EXPECT_LE(std::abs(p[k] - want[k]), 1e-16);
}

TEST(ExtensionAlgebras, AreLieAlgebras) {
  EXPECT_LE(sl2_polynomial().jacobi_residual(), 1e-14);
  std::mt19937_64 rng(4);
  const auto g = random_algebra(rng);
  EXPECT_EQ(g.dim(), 5);
  const auto ext = adjoint_coboundary(g, Matrix::Random(5, 5), random_spd(5, rng));
  EXPECT_LE(build_extension_algebra(g, ext).jacobi_residual(), 1e-10);
}

TEST(ExtensionAlgebras, CentralExtensionOfSo3) {
  const auto g = algebra::so3(Eigen::Vector3d(1, 2, 3).asDiagonal());
  Matrix omega(3, 3);
  omega << 0, 0.4, -0.2, -0.4, 0, 0.7, 0.2, -0.7, 0;
  const auto k = algebra::CentralMap::from_cocycle(g, omega);
  const auto big = build_central_algebra(g, omega);
  const auto brute = extension_bruteforce(big);
  CoefVector u(3);
  u << 0.2, -0.5, 0.9;
  const double a = 1.7;
  CoefVector w(4);
  w << u, a;
  const auto r = algebra::euler_rhs_central(g, k, u, a);
  CoefVector got(4);
  got << r.du, r.da;
  EXPECT_LE((got - brute(w)).lpNorm<Eigen::Infinity>(), 1e-12);
}

TEST(ExtensionAlgebras, DirectProductIsBlockDiagonal) {
  const auto g = algebra::so3(Eigen::Vector3d(1, 2, 3).asDiagonal());
  const auto ext = trivial_module(g, Matrix::Zero(2, 3), Matrix::Identity(2, 2));
  const auto brute = extension_bruteforce(build_extension_algebra(g, ext));
  CoefVector w(5);
  w << 0.2, -0.5, 0.9, 1.0, 2.0;
  const CoefVector r = brute(w);
  EXPECT_LE((r.head(3) - algebra::euler_rhs_plain(g, w.head(3))).norm(), 1e-14);
  EXPECT_LE(r.tail(2).norm(), 1e-14);
}

models::ModelState torus(const models::ModelSpec& spec, const std::string& preset, int n = 64) {
  presets::InitialSpec init;
  init.preset = preset;
  init.seed = 3;
  presets::GridSpec g;
  g.nx = g.ny = n;
  return presets::initial_state(spec, init, g);
}

TEST(FiniteDifference, EulerTwoModeField) {
  models::ModelSpec spec;
  spec.id = ModelId::Euler2D;
  const Field2D w = Field2D::trig(32, 32, 1, 0, 0.0, 1.0) + Field2D::trig(32, 32, 0, 2, 1.0, 0.0);
  const auto c = finite_difference_check(spec, models::VorticityState{w, {0.0, 0.0}}, 512);
  EXPECT_LE(c.max_error, 1e-4) << c.worst;
  EXPECT_GT(c.max_rate, 1.0);
}

TEST(FiniteDifference, SteadyStateBothRatesVanish) {
  models::ModelSpec spec;
  spec.id = ModelId::Euler2D;
  const auto s = torus(spec, "taylor-green", 32);
  const auto fd = finite_difference_rhs(spec, s, 128);
  for (const auto& [name, values] : fd.fields)
    for (double v : values) ASSERT_LE(std::abs(v), 1e-6) << name;
  const auto c = finite_difference_check(spec, s, 128);
  EXPECT_LE(c.max_rate, 1e-6);
}

TEST(FiniteDifference, ChargedFluidGenericState) {
  models::ModelSpec spec;
  spec.id = ModelId::ChargedFluid;
  spec.b = 0.8;
  const auto c = finite_difference_check(spec, torus(spec, "random-band"), 512);
  EXPECT_LE(c.max_error, 1e-4) << c.worst;
}

TEST(FiniteDifference, DetectsAWrongSign) {
  // The oracle is sensitive: QG with beta against Euler's spectral rate.
  models::ModelSpec qg;
  qg.id = ModelId::QgBeta;
  qg.beta = 1.0;
  models::ModelSpec euler;
  euler.id = ModelId::Euler2D;
  const auto s = torus(euler, "random-band", 32);
  const auto fd = finite_difference_rhs(qg, s, 128);
  const auto sp = spectral_rate_on_grid(euler, s, 128);
  double m = 0.0;
  const auto& a = fd.fields.at("omega");
  const auto& b = sp.fields.at("omega");
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  EXPECT_GT(m, 1e-2);
}

TEST(FiniteDifference, RichardsonCombination) {
  GridRate fine, coarse;
  fine.n = 4;
  coarse.n = 2;
  fine.fields["q"] = std::vector<double>(16, 1.0);
  coarse.fields["q"] = {0.0, 0.0, 0.0, 0.0};
  fine.scalars["s"] = 2.0;
  coarse.scalars["s"] = 1.0;
  const GridRate r = richardson(fine, coarse);
  EXPECT_EQ(r.n, 2);
  for (double v : r.fields.at("q")) EXPECT_NEAR(v, 4.0 / 3.0, 1e-15);
  EXPECT_NEAR(r.scalars.at("s"), 7.0 / 3.0, 1e-15);
}

}  // namespace
}  // namespace ea::oracle
