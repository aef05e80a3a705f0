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

#include "ea/algebra.hpp"
#include "ea/errors.hpp"
#include "ea/oracle.hpp"

namespace ea::algebra {
namespace {

Matrix diag3(double a, double b, double c) { return Eigen::Vector3d(a, b, c).asDiagonal(); }
CoefVector vec(std::initializer_list<double> v) {
  CoefVector out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

TEST(FiniteLieAlgebra, So3AdjointMatrixOfE1) {
  const auto g = so3(Matrix::Identity(3, 3));
  const Matrix m = g.ad_matrix(vec({1, 0, 0}));
  EXPECT_NEAR((m * vec({0, 1, 0}) - vec({0, 0, 1})).norm(), 0.0, 1e-15);
  EXPECT_NEAR((m * vec({0, 0, 1}) - vec({0, -1, 0})).norm(), 0.0, 1e-15);
  EXPECT_NEAR((m * vec({1, 0, 0})).norm(), 0.0, 1e-15);
}

TEST(FiniteLieAlgebra, AdOfZeroAndAbelian) {
  const auto g = so3(Matrix::Identity(3, 3));
  EXPECT_EQ(g.ad_matrix(CoefVector::Zero(3)).norm(), 0.0);
  const auto a = abelian(4, Matrix::Identity(4, 4));
  EXPECT_EQ(a.ad_matrix(vec({1, 2, 3, 4})).norm(), 0.0);
  EXPECT_EQ(ad_transpose_bruteforce(a, vec({1, 2, 3, 4})).norm(), 0.0);
  EXPECT_EQ(euler_rhs_plain(a, vec({1, -1, 2, 0.5})).norm(), 0.0);
}

TEST(FiniteLieAlgebra, StructuralInvariants) {
  std::mt19937_64 rng(5);
  const auto g = oracle::random_algebra(rng);
  EXPECT_LE(g.jacobi_residual(), 1e-12);
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j)
      for (int k = 0; k < g.dim(); ++k)
        EXPECT_NEAR(g.structure_constant(i, j, k), -g.structure_constant(j, i, k), 1e-14);
  EXPECT_LE((g.gram() - g.gram().transpose()).norm(), 0.0);
  EXPECT_GT(Eigen::SelfAdjointEigenSolver<Matrix>(g.gram()).eigenvalues().minCoeff(), 0.0);
}

TEST(FiniteLieAlgebra, RejectsBrokenInput) {
  // Not antisymmetric.
  std::vector<double> c(27, 0.0);
  c[(0 * 3 + 1) * 3 + 2] = 1.0;
  EXPECT_THROW(FiniteLieAlgebra::from_structure_constants(3, c, Matrix::Identity(3, 3)), ConstructionError);
  // Antisymmetric but violates Jacobi: [e0,e1] = e1, [e0,e2] = e0, [e1,e2] = e2.
  std::vector<double> j(27, 0.0);
  auto set = [&](int a, int b, int k, double v) {
    j[(a * 3 + b) * 3 + k] = v;
    j[(b * 3 + a) * 3 + k] = -v;
  };
  set(0, 1, 1, 1.0);
  set(0, 2, 0, 1.0);
  set(1, 2, 2, 1.0);
  EXPECT_THROW(FiniteLieAlgebra::from_structure_constants(3, j, Matrix::Identity(3, 3)), ConstructionError);
  // Gram not positive definite.
  EXPECT_THROW(so3(diag3(1, -1, 1)), ConstructionError);
}

TEST(AdTranspose, So3IdentityGram) {
  const auto g = so3(Matrix::Identity(3, 3));
  const Matrix adt = ad_transpose_bruteforce(g, vec({1, 0, 0}));
  EXPECT_NEAR((adt + g.ad_matrix(vec({1, 0, 0}))).norm(), 0.0, 1e-15);
  EXPECT_NEAR((adt * vec({0, 0, 1}) - vec({0, 1, 0})).norm(), 0.0, 1e-15);
}

TEST(EulerRhs, RigidBodyExamples) {
  const auto g = so3(diag3(1, 2, 3));
  EXPECT_NEAR(euler_rhs_plain(g, vec({1, 0, 0})).norm(), 0.0, 1e-15);
  EXPECT_NEAR((euler_rhs_plain(g, vec({0, 1, 1})) - vec({1, 0, 0})).norm(), 0.0, 1e-14);
  EXPECT_NEAR(hamiltonian_residual(g, vec({0, 1, 1})), 0.0, 1e-14);
  EXPECT_EQ(hamiltonian_residual(g, CoefVector::Zero(3)), 0.0);
}

TEST(EulerRhs, HamiltonianFormOnRandomAlgebra) {
  std::mt19937_64 rng(17);
  std::normal_distribution<double> n01;
  const auto g = oracle::random_algebra(rng);
  for (int trial = 0; trial < 10; ++trial) {
    CoefVector u(g.dim());
    for (int i = 0; i < g.dim(); ++i) u(i) = n01(rng);
    EXPECT_LE(hamiltonian_residual(g, u), 1e-12);
  }
}

TEST(Semidirect, ZeroFAndInvariantReductions) {
  const auto g = so3(diag3(1, 2, 3));
  const auto ext = oracle::adjoint_module(g, Matrix::Identity(3, 3), true);
  const CoefVector u = vec({0.3, -1.0, 0.7});
  const auto r0 = euler_rhs_semidirect(g, ext, u, CoefVector::Zero(3));
  EXPECT_NEAR((r0.du - euler_rhs_plain(g, u)).norm(), 0.0, 1e-14);
  EXPECT_NEAR(r0.df.norm(), 0.0, 1e-14);
  // Invariant scalar product: l(f, f) = f x f = 0.
  const CoefVector f = vec({0.2, 0.5, -0.4});
  EXPECT_NEAR(l_map(g, ext, f, f).norm(), 0.0, 1e-14);
  const auto r = euler_rhs_semidirect(g, ext, u, f);
  EXPECT_NEAR((r.du - euler_rhs_plain(g, u)).norm(), 0.0, 1e-14);
}

TEST(Semidirect, MatchesBruteForceOnExtensionAlgebra) {
  const auto g = so3(diag3(1, 2, 3));
  std::mt19937_64 rng(3);
  const auto ext = oracle::adjoint_module(g, oracle::random_spd(3, rng), false);
  const auto big = oracle::build_extension_algebra(g, ext);
  const auto brute = oracle::extension_bruteforce(big);
  const CoefVector u = vec({0.3, -1.0, 0.7}), f = vec({0.2, 0.5, -0.4});
  CoefVector w(6);
  w << u, f;
  const auto r = euler_rhs_semidirect(g, ext, u, f);
  CoefVector got(6);
  got << r.du, r.df;
  EXPECT_LE((got - brute(w)).lpNorm<Eigen::Infinity>(), 1e-12);
}

TEST(Central, ReductionsAndFromCocycle) {
  std::mt19937_64 rng(9);
  const auto g = oracle::random_algebra(rng);
  const int d = g.dim();
  // A coboundary omega(X,Y) = <mu, [X,Y]> is always a cocycle.
  const CoefVector mu = CoefVector::Random(d);
  Matrix cob(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) cob(i, j) = mu.dot(g.bracket(CoefVector::Unit(d, i), CoefVector::Unit(d, j)));
  const auto k = CentralMap::from_cocycle(g, cob);
  // <k e_i, e_j> = omega(e_i, e_j) by a direct solve.
  const Matrix k_direct = g.gram().fullPivLu().solve(cob.transpose());
  EXPECT_LE((k.matrix() - k_direct).lpNorm<Eigen::Infinity>(), 1e-12);
  const CoefVector u = CoefVector::Random(d);
  const auto r0 = euler_rhs_central(g, k, u, 0.0);
  EXPECT_NEAR((r0.du - euler_rhs_plain(g, u)).norm(), 0.0, 1e-14);
  const auto rz = euler_rhs_central(g, k, CoefVector::Zero(d), 1.3);
  EXPECT_EQ(rz.du.norm(), 0.0);
  EXPECT_EQ(rz.da, 0.0);
  // A non-skew k is rejected.
  EXPECT_THROW(CentralMap(g, Matrix::Identity(d, d)), ConstructionError);
}

TEST(Abelian, DirectProductAndZeroF) {
  const auto g = so3(diag3(1, 2, 3));
  const Matrix phi = Matrix::Zero(2, 3);
  const auto ext = oracle::trivial_module(g, phi, Matrix::Identity(2, 2));
  const CoefVector u = vec({0.1, 0.4, -0.3});
  const auto r = euler_rhs_abelian(g, ext, u, vec({0.7, -0.2}));
  EXPECT_NEAR((r.du - euler_rhs_plain(g, u)).norm(), 0.0, 1e-14);
  EXPECT_NEAR(r.df.norm(), 0.0, 1e-14);
  const auto r0 = euler_rhs_abelian(g, ext, u, CoefVector::Zero(2));
  EXPECT_NEAR((r0.du - euler_rhs_plain(g, u)).norm(), 0.0, 1e-14);
}

TEST(Abelian, CocycleIdentityIsChecked) {
  const auto g = so3(Matrix::Identity(3, 3));
  // omega(e0, e1) = 1 without omega(e1, e0) = -1 is not skew.
  std::vector<Matrix> action(3, Matrix::Zero(1, 1));
  std::vector<Matrix> cocycle(3, Matrix::Zero(1, 3));
  cocycle[0](0, 1) = 1.0;
  EXPECT_THROW(ExtensionData(g, action, cocycle, Matrix::Identity(1, 1)), ConstructionError);
}

TEST(General, AbelianHCoincidesWithAbelian) {
  const auto g = so3(diag3(1, 2, 3));
  const auto h = abelian(3, Matrix::Identity(3, 3));
  const Matrix phi = Matrix::Random(3, 3);
  const auto ext = oracle::twisted_general(g, h, phi);
  const CoefVector u = vec({0.5, 0.1, -0.2}), rho = vec({0.3, -0.6, 0.9});
  const auto a = euler_rhs_abelian(g, ext, u, rho);
  const auto b = euler_rhs_general(g, ext, u, rho);
  EXPECT_LE((a.du - b.du).norm(), 1e-14);
  EXPECT_LE((a.df - b.df).norm(), 1e-14);
  const auto z = euler_rhs_general(g, ext, u, CoefVector::Zero(3));
  EXPECT_LE((z.du - euler_rhs_plain(g, u)).norm(), 1e-14);
}

TEST(General, So3SemidirectSo3MatchesBruteForce) {
  const auto g = so3(diag3(1, 2, 3));
  const auto h = so3(Matrix::Identity(3, 3));
  const auto ext = oracle::twisted_general(g, h, Matrix::Zero(3, 3));
  const auto big = oracle::build_extension_algebra(g, ext);
  const auto brute = oracle::extension_bruteforce(big);
  const CoefVector u = vec({0.5, 0.1, -0.2}), rho = vec({0.3, -0.6, 0.9});
  CoefVector w(6);
  w << u, rho;
  const auto r = euler_rhs_general(g, ext, u, rho);
  CoefVector got(6);
  got << r.du, r.df;
  EXPECT_LE((got - brute(w)).lpNorm<Eigen::Infinity>(), 1e-12);
}

TEST(SdCentral, Reductions) {
  const auto g = so3(diag3(1, 2, 3));
  const auto ext = oracle::adjoint_module(g, Matrix::Identity(3, 3), true);
  // Coboundary of the dual action: alpha(X) = -b(X)^T v0.
  const CoefVector v0 = vec({0.4, -0.1, 0.2});
  Matrix alpha(3, 3);
  for (int j = 0; j < 3; ++j) alpha.col(j) = -ext.action(CoefVector::Unit(3, j)).transpose() * v0;
  const OneCocycle oc(g, ext, alpha);
  const CoefVector u = vec({0.3, 0.2, -0.5}), f = vec({0.1, 0.7, 0.3});
  const auto r0 = euler_rhs_sd_central(g, ext, oc, u, f, 0.0);
  const auto s = euler_rhs_semidirect(g, ext, u, f);
  EXPECT_LE((r0.du - s.du).norm(), 1e-14);
  EXPECT_LE((r0.df - s.df).norm(), 1e-14);
  const double a = 0.8;
  const auto ru = euler_rhs_sd_central(g, ext, oc, CoefVector::Zero(3), f, a);
  EXPECT_LE((ru.du - a * oc.transpose_apply(g, ext, f)).norm(), 1e-14);
  EXPECT_LE(ru.df.norm(), 1e-14);
  // A non-cocycle alpha is rejected.
  EXPECT_THROW(OneCocycle(g, ext, Matrix::Identity(3, 3)), ConstructionError);
}

}  // namespace
}  // namespace ea::algebra
