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

// Finite-dimensional Euler-Arnold machinery: structure constants, metric
// adjoints, and one right-hand side per extension type. Everything here is
// dense linear algebra on basis coefficients, so each identity can be
// checked exactly against a brute-force bracket.
//
// Conventions:
//   [e_i, e_j] = sum_k c(i, j, k) e_k,   G(i, j) = <e_i, e_j>.
//   ad(x)^T is the metric adjoint, <ad(x)^T y, z> = <y, [x, z]>,
//   so in coordinates ad(x)^T = G^{-1} ad(x)' G.
//   ad*(x) m is defined by (ad*(x) m, y) = (m, -[x, y]), i.e. ad*(x) = -ad(x)'.

#include <Eigen/Dense>

#include <optional>
#include <vector>

namespace ea::algebra {

using Matrix = Eigen::MatrixXd;
using CoefVector = Eigen::VectorXd;

/// Construction tolerance for structural identities.
inline constexpr double kConstructionTolerance = 1e-10;

class FiniteLieAlgebra {
 public:
  /// ad_basis[i] is the matrix of ad(e_i): column j holds the coefficients
  /// of [e_i, e_j]. Throws ConstructionError if the bracket is not
  /// antisymmetric, fails Jacobi, or the Gram matrix is not SPD.
  FiniteLieAlgebra(std::vector<Matrix> ad_basis, Matrix gram);

  /// Structure constants in the flat layout c[(i * dim + j) * dim + k].
  static FiniteLieAlgebra from_structure_constants(int dim, const std::vector<double>& c,
                                                   Matrix gram);

  int dim() const { return dim_; }
  const Matrix& gram() const { return gram_; }
  double structure_constant(int i, int j, int k) const { return ad_basis_[i](k, j); }

  Matrix ad_matrix(const CoefVector& x) const;
  CoefVector bracket(const CoefVector& x, const CoefVector& y) const;
  double inner(const CoefVector& x, const CoefVector& y) const { return x.dot(gram_ * y); }

  /// G^{-1} v via the cached Cholesky factor.
  CoefVector solve_gram(const CoefVector& v) const { return gram_llt_.solve(v); }
  Matrix solve_gram(const Matrix& m) const { return gram_llt_.solve(m); }

  /// Largest entry of the cyclic sum [[e_i,e_j],e_k] + cyclic.
  double jacobi_residual() const;

 private:
  void check_dim(const CoefVector& x) const;

  int dim_;
  std::vector<Matrix> ad_basis_;
  Matrix gram_;
  Eigen::LLT<Matrix> gram_llt_;
};

/// Extension data (b, omega) of g by a module V, optionally with a Lie
/// bracket on V (general extensions). cocycle[i] is dim_v x dim_g with
/// column j equal to omega(e_i, e_j).
class ExtensionData {
 public:
  ExtensionData(const FiniteLieAlgebra& g, std::vector<Matrix> action, std::vector<Matrix> cocycle,
                Matrix gram_v, bool g_invariant = false,
                std::optional<FiniteLieAlgebra> h_bracket = std::nullopt);

  int dim_g() const { return static_cast<int>(action_.size()); }
  int dim_v() const { return static_cast<int>(gram_v_.rows()); }
  const Matrix& gram_v() const { return gram_v_; }
  bool g_invariant() const { return g_invariant_; }
  bool has_zero_cocycle() const { return zero_cocycle_; }
  const std::optional<FiniteLieAlgebra>& h_bracket() const { return h_bracket_; }

  Matrix action(const CoefVector& x) const;            // b(x)
  Matrix action_transpose(const CoefVector& x) const;  // gram_v adjoint of b(x)
  CoefVector cocycle(const CoefVector& x, const CoefVector& y) const;
  const Matrix& action_basis(int i) const { return action_[i]; }
  const Matrix& cocycle_basis(int i) const { return cocycle_[i]; }

  CoefVector solve_gram_v(const CoefVector& v) const { return gram_v_llt_.solve(v); }
  double inner_v(const CoefVector& v, const CoefVector& w) const { return v.dot(gram_v_ * w); }

  /// Largest entry of sum_cycl omega([X1,X2],X3) - sum_cycl b(X1) omega(X2,X3).
  double cocycle_residual(const FiniteLieAlgebra& g) const;

 private:
  std::vector<Matrix> action_;
  std::vector<Matrix> cocycle_;
  Matrix gram_v_;
  Eigen::LLT<Matrix> gram_v_llt_;
  bool g_invariant_;
  bool zero_cocycle_;
  std::optional<FiniteLieAlgebra> h_bracket_;
};

/// Skew-adjoint k with <k X, Y> = omega(X, Y) for a real 2-cocycle omega.
class CentralMap {
 public:
  /// Rejects k unless G k + k' G = 0 to construction tolerance.
  CentralMap(const FiniteLieAlgebra& g, Matrix k);
  /// omega(i, j) = omega(e_i, e_j); solves G k = omega'.
  static CentralMap from_cocycle(const FiniteLieAlgebra& g, const Matrix& omega);
  const Matrix& matrix() const { return k_; }

 private:
  Matrix k_;
};

/// Linear alpha: g -> V (V identified with its dual through gram_v) satisfying
/// alpha([X1,X2]) = b*(X1) alpha(X2) - b*(X2) alpha(X1) with b*(X) = -b(X)^T.
/// This is what makes <alpha X1, v2> - <alpha X2, v1> a 2-cocycle on the
/// semidirect product; for invariant gram_v, b* = b.
class OneCocycle {
 public:
  OneCocycle(const FiniteLieAlgebra& g, const ExtensionData& ext, Matrix alpha);
  const Matrix& matrix() const { return alpha_; }
  /// alpha^T: V -> g, the adjoint for gram_g and gram_v.
  CoefVector transpose_apply(const FiniteLieAlgebra& g, const ExtensionData& ext,
                             const CoefVector& v) const;

 private:
  Matrix alpha_;
};

struct PairRate {
  CoefVector du;
  CoefVector df;
};

struct CentralRate {
  CoefVector du;
  double da = 0.0;
};

struct SdCentralRate {
  CoefVector du;
  CoefVector df;
  double da = 0.0;
};

Matrix ad_matrix(const FiniteLieAlgebra& alg, const CoefVector& x);
Matrix ad_transpose_bruteforce(const FiniteLieAlgebra& alg, const CoefVector& x);
/// Coadjoint action on dual coordinates: -ad(x)' m.
CoefVector coadjoint(const FiniteLieAlgebra& alg, const CoefVector& x, const CoefVector& m);

CoefVector euler_rhs_plain(const FiniteLieAlgebra& alg, const CoefVector& u);

/// || G * euler_rhs_plain(u) - ad*(u) G u ||_inf.
double hamiltonian_residual(const FiniteLieAlgebra& alg, const CoefVector& u);

/// h(v) in L(g): <h(v) X1, X2>_g = <omega(X1, X2), v>_V.
Matrix h_map(const FiniteLieAlgebra& alg, const ExtensionData& ext, const CoefVector& v);
/// l(v1, v2) in g: <l(v1, v2), X>_g = <b(X) v1, v2>_V.
CoefVector l_map(const FiniteLieAlgebra& alg, const ExtensionData& ext, const CoefVector& v1,
                 const CoefVector& v2);

PairRate euler_rhs_semidirect(const FiniteLieAlgebra& alg, const ExtensionData& ext,
                              const CoefVector& u, const CoefVector& f);
CentralRate euler_rhs_central(const FiniteLieAlgebra& alg, const CentralMap& k,
                              const CoefVector& u, double a);
PairRate euler_rhs_abelian(const FiniteLieAlgebra& alg, const ExtensionData& ext,
                           const CoefVector& u, const CoefVector& f);
PairRate euler_rhs_general(const FiniteLieAlgebra& alg, const ExtensionData& ext,
                           const CoefVector& u, const CoefVector& rho);
SdCentralRate euler_rhs_sd_central(const FiniteLieAlgebra& alg, const ExtensionData& ext,
                                   const OneCocycle& alpha, const CoefVector& u,
                                   const CoefVector& f, double a);

// Frequently used algebras.
FiniteLieAlgebra so3(const Matrix& gram);
FiniteLieAlgebra abelian(int dim, const Matrix& gram);

}  // namespace ea::algebra
