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

#include "ea/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ea/errors.hpp"

namespace ea::algebra {
namespace {

double max_abs(const Matrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

Eigen::LLT<Matrix> factor_gram(const Matrix& gram, const char* what) {
  if (gram.rows() != gram.cols() || gram.rows() == 0)
    throw ConstructionError(std::string(what) + ": Gram matrix must be square and non-empty");
  const double scale = std::max(1.0, max_abs(gram));
  if (max_abs(gram - gram.transpose()) > 1e-12 * scale)
    throw ConstructionError(std::string(what) + ": Gram matrix is not symmetric");
  Eigen::LLT<Matrix> llt(gram);
  if (llt.info() != Eigen::Success)
    throw ConstructionError(std::string(what) + ": Gram matrix is not positive definite");
  return llt;
}

CoefVector basis(int dim, int i) { return CoefVector::Unit(dim, i); }

}  // namespace

// ---------------------------------------------------------------------------
// FiniteLieAlgebra

FiniteLieAlgebra::FiniteLieAlgebra(std::vector<Matrix> ad_basis, Matrix gram)
    : dim_(static_cast<int>(ad_basis.size())),
      ad_basis_(std::move(ad_basis)),
      gram_(std::move(gram)),
      gram_llt_(factor_gram(gram_, "FiniteLieAlgebra")) {
  if (dim_ == 0) throw ConstructionError("FiniteLieAlgebra: dimension must be positive");
  if (gram_.rows() != dim_) throw ConstructionError("FiniteLieAlgebra: Gram size mismatch");
  double scale = 1.0;
  for (const auto& m : ad_basis_) {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw ConstructionError("FiniteLieAlgebra: ad(e_i) must be dim x dim");
    scale = std::max(scale, max_abs(m));
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      if ((ad_basis_[i].col(j) + ad_basis_[j].col(i)).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw ConstructionError("FiniteLieAlgebra: bracket is not antisymmetric");
  if (jacobi_residual() > kConstructionTolerance * scale * scale)
    throw ConstructionError("FiniteLieAlgebra: Jacobi identity fails (residual " +
                            std::to_string(jacobi_residual()) + ")");
}

FiniteLieAlgebra FiniteLieAlgebra::from_structure_constants(int dim, const std::vector<double>& c,
                                                            Matrix gram) {
  if (dim <= 0 || c.size() != static_cast<size_t>(dim) * dim * dim)
    throw ConstructionError("structure constants must have dim^3 entries");
  std::vector<Matrix> ad(dim, Matrix::Zero(dim, dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) ad[i](k, j) = c[(static_cast<size_t>(i) * dim + j) * dim + k];
  return FiniteLieAlgebra(std::move(ad), std::move(gram));
}

void FiniteLieAlgebra::check_dim(const CoefVector& x) const {
  if (x.size() != dim_)
    throw ContractError("coefficient vector has length " + std::to_string(x.size()) +
                        ", algebra dimension is " + std::to_string(dim_));
}

Matrix FiniteLieAlgebra::ad_matrix(const CoefVector& x) const {
  check_dim(x);
  Matrix m = Matrix::Zero(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    if (x[i] != 0.0) m += x[i] * ad_basis_[i];
  return m;
}

CoefVector FiniteLieAlgebra::bracket(const CoefVector& x, const CoefVector& y) const {
  check_dim(y);
  return ad_matrix(x) * y;
}

double FiniteLieAlgebra::jacobi_residual() const {
  double worst = 0.0;
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      for (int k = 0; k < dim_; ++k) {
        const CoefVector eij = ad_basis_[i].col(j);
        const CoefVector ejk = ad_basis_[j].col(k);
        const CoefVector eki = ad_basis_[k].col(i);
        const CoefVector cyc =
            ad_matrix(eij).col(k) + ad_matrix(ejk).col(i) + ad_matrix(eki).col(j);
        worst = std::max(worst, cyc.cwiseAbs().maxCoeff());
      }
  return worst;
}

// ---------------------------------------------------------------------------
// ExtensionData

ExtensionData::ExtensionData(const FiniteLieAlgebra& g, std::vector<Matrix> action,
                             std::vector<Matrix> cocycle, Matrix gram_v, bool g_invariant,
                             std::optional<FiniteLieAlgebra> h_bracket)
    : action_(std::move(action)),
      cocycle_(std::move(cocycle)),
      gram_v_(std::move(gram_v)),
      gram_v_llt_(factor_gram(gram_v_, "ExtensionData")),
      g_invariant_(g_invariant),
      zero_cocycle_(true),
      h_bracket_(std::move(h_bracket)) {
  const int n = g.dim();
  const int m = dim_v();
  if (static_cast<int>(action_.size()) != n || static_cast<int>(cocycle_.size()) != n)
    throw ConstructionError("ExtensionData: need one action matrix and one cocycle slice per basis vector");
  double scale = 1.0;
  for (int i = 0; i < n; ++i) {
    if (action_[i].rows() != m || action_[i].cols() != m)
      throw ConstructionError("ExtensionData: action matrices must be dim_v x dim_v");
    if (cocycle_[i].rows() != m || cocycle_[i].cols() != n)
      throw ConstructionError("ExtensionData: cocycle slices must be dim_v x dim_g");
    scale = std::max({scale, max_abs(action_[i]), max_abs(cocycle_[i])});
    if (max_abs(cocycle_[i]) != 0.0) zero_cocycle_ = false;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((cocycle_[i].col(j) + cocycle_[j].col(i)).cwiseAbs().maxCoeff() > 1e-12 * scale)
        throw ConstructionError("ExtensionData: cocycle is not skew");

  const double tol = kConstructionTolerance * scale * scale;
  if (h_bracket_) {
    if (h_bracket_->dim() != m) throw ConstructionError("ExtensionData: h bracket dimension mismatch");
    if (max_abs(h_bracket_->gram() - gram_v_) > 1e-12 * std::max(1.0, max_abs(gram_v_)))
      throw ConstructionError("ExtensionData: h bracket must carry gram_v as its metric");
    // b(X) acts by derivations of h.
    for (int i = 0; i < n; ++i)
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
          const CoefVector va = basis(m, a), vb = basis(m, b);
          const CoefVector r = action_[i] * h_bracket_->bracket(va, vb) -
                               h_bracket_->bracket(action_[i] * va, vb) -
                               h_bracket_->bracket(va, action_[i] * vb);
          if (r.cwiseAbs().maxCoeff() > tol)
            throw ConstructionError("ExtensionData: b(X) is not a derivation of h");
        }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Matrix r = action_[i] * action_[j] - action_[j] * action_[i] -
                 this->action(g.bracket(basis(n, i), basis(n, j)));
      if (h_bracket_) r -= h_bracket_->ad_matrix(cocycle_[i].col(j));
      if (max_abs(r) > tol)
        throw ConstructionError(h_bracket_ ? "ExtensionData: [b(X1),b(X2)] - b([X1,X2]) != ad(omega(X1,X2))"
                                           : "ExtensionData: b is not a Lie algebra action");
    }
  const double res = cocycle_residual(g);
  if (res > tol)
    throw ConstructionError("ExtensionData: 2-cocycle identity fails (residual " +
                            std::to_string(res) + ")");
  if (g_invariant_) {
    for (int i = 0; i < n; ++i)
      if (max_abs(action_[i].transpose() * gram_v_ + gram_v_ * action_[i]) > tol)
        throw ConstructionError("ExtensionData: gram_v is not g-invariant");
  }
}

Matrix ExtensionData::action(const CoefVector& x) const {
  if (x.size() != dim_g()) throw ContractError("ExtensionData::action: dimension mismatch");
  Matrix b = Matrix::Zero(dim_v(), dim_v());
  for (int i = 0; i < dim_g(); ++i)
    if (x[i] != 0.0) b += x[i] * action_[i];
  return b;
}

Matrix ExtensionData::action_transpose(const CoefVector& x) const {
  return gram_v_llt_.solve(action(x).transpose() * gram_v_);
}

CoefVector ExtensionData::cocycle(const CoefVector& x, const CoefVector& y) const {
  if (x.size() != dim_g() || y.size() != dim_g())
    throw ContractError("ExtensionData::cocycle: dimension mismatch");
  CoefVector out = CoefVector::Zero(dim_v());
  for (int i = 0; i < dim_g(); ++i)
    if (x[i] != 0.0) out += x[i] * (cocycle_[i] * y);
  return out;
}

double ExtensionData::cocycle_residual(const FiniteLieAlgebra& g) const {
  const int n = dim_g();
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const CoefVector ei = basis(n, i), ej = basis(n, j), ek = basis(n, k);
        const CoefVector lhs = cocycle(g.bracket(ei, ej), ek) + cocycle(g.bracket(ej, ek), ei) +
                               cocycle(g.bracket(ek, ei), ej);
        const CoefVector rhs = action_[i] * cocycle_[j].col(k) + action_[j] * cocycle_[k].col(i) +
                               action_[k] * cocycle_[i].col(j);
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
      }
  return worst;
}

// ---------------------------------------------------------------------------
// CentralMap / OneCocycle

CentralMap::CentralMap(const FiniteLieAlgebra& g, Matrix k) : k_(std::move(k)) {
  if (k_.rows() != g.dim() || k_.cols() != g.dim())
    throw ConstructionError("CentralMap: k must be dim x dim");
  const Matrix gk = g.gram() * k_;
  const double scale = std::max(1.0, max_abs(gk));
  if (max_abs(gk + gk.transpose()) > kConstructionTolerance * scale)
    throw ConstructionError("CentralMap: k is not skew-adjoint for the Gram metric");
}

CentralMap CentralMap::from_cocycle(const FiniteLieAlgebra& g, const Matrix& omega) {
  if (omega.rows() != g.dim() || omega.cols() != g.dim())
    throw ConstructionError("CentralMap: cocycle matrix must be dim x dim");
  // <k e_i, e_j> = (G k)(j, i) = omega(i, j)
  return CentralMap(g, g.solve_gram(Matrix(omega.transpose())));
}

OneCocycle::OneCocycle(const FiniteLieAlgebra& g, const ExtensionData& ext, Matrix alpha)
    : alpha_(std::move(alpha)) {
  const int n = g.dim();
  if (alpha_.rows() != ext.dim_v() || alpha_.cols() != n)
    throw ConstructionError("OneCocycle: alpha must be dim_v x dim_g");
  const double scale = std::max(1.0, max_abs(alpha_));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const CoefVector ei = basis(n, i), ej = basis(n, j);
      // Cocycle for the dual action -b(X)^T; equals b(X) for invariant gram_v.
      const CoefVector r = alpha_ * g.bracket(ei, ej) + ext.action_transpose(ei) * alpha_.col(j) -
                           ext.action_transpose(ej) * alpha_.col(i);
      if (r.cwiseAbs().maxCoeff() > kConstructionTolerance * scale)
        throw ConstructionError("OneCocycle: alpha([X1,X2]) != b*(X1)alpha(X2) - b*(X2)alpha(X1), b* = -b^T");
    }
}

CoefVector OneCocycle::transpose_apply(const FiniteLieAlgebra& g, const ExtensionData& ext,
                                       const CoefVector& v) const {
  return g.solve_gram(CoefVector(alpha_.transpose() * (ext.gram_v() * v)));
}

// ---------------------------------------------------------------------------
// Operators and right-hand sides

Matrix ad_matrix(const FiniteLieAlgebra& alg, const CoefVector& x) { return alg.ad_matrix(x); }

Matrix ad_transpose_bruteforce(const FiniteLieAlgebra& alg, const CoefVector& x) {
  return alg.solve_gram(Matrix(alg.ad_matrix(x).transpose() * alg.gram()));
}

CoefVector coadjoint(const FiniteLieAlgebra& alg, const CoefVector& x, const CoefVector& m) {
  return -(alg.ad_matrix(x).transpose() * m);
}

CoefVector euler_rhs_plain(const FiniteLieAlgebra& alg, const CoefVector& u) {
  return -(ad_transpose_bruteforce(alg, u) * u);
}

double hamiltonian_residual(const FiniteLieAlgebra& alg, const CoefVector& u) {
  const CoefVector m = alg.gram() * u;
  const CoefVector lhs = alg.gram() * euler_rhs_plain(alg, u);
  return (lhs - coadjoint(alg, u, m)).cwiseAbs().maxCoeff();
}

Matrix h_map(const FiniteLieAlgebra& alg, const ExtensionData& ext, const CoefVector& v) {
  if (v.size() != ext.dim_v() || alg.dim() != ext.dim_g())
    throw ContractError("h_map: dimension mismatch");
  const CoefVector gv = ext.gram_v() * v;
  Matrix w(alg.dim(), alg.dim());
  for (int i = 0; i < alg.dim(); ++i) w.col(i) = ext.cocycle_basis(i).transpose() * gv;
  return alg.solve_gram(w);
}

CoefVector l_map(const FiniteLieAlgebra& alg, const ExtensionData& ext, const CoefVector& v1,
                 const CoefVector& v2) {
  if (v1.size() != ext.dim_v() || v2.size() != ext.dim_v() || alg.dim() != ext.dim_g())
    throw ContractError("l_map: dimension mismatch");
  const CoefVector gv2 = ext.gram_v() * v2;
  CoefVector r(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) r[i] = (ext.action_basis(i) * v1).dot(gv2);
  return alg.solve_gram(r);
}

PairRate euler_rhs_semidirect(const FiniteLieAlgebra& alg, const ExtensionData& ext,
                              const CoefVector& u, const CoefVector& f) {
  if (!ext.has_zero_cocycle())
    throw ContractError("euler_rhs_semidirect: nonzero cocycle, use euler_rhs_abelian");
  if (f.size() != ext.dim_v()) throw ContractError("euler_rhs_semidirect: f has wrong length");
  if (ext.g_invariant()) return {euler_rhs_plain(alg, u), ext.action(u) * f};
  return {euler_rhs_plain(alg, u) + l_map(alg, ext, f, f), -(ext.action_transpose(u) * f)};
}

CentralRate euler_rhs_central(const FiniteLieAlgebra& alg, const CentralMap& k,
                              const CoefVector& u, double a) {
  return {euler_rhs_plain(alg, u) - a * (k.matrix() * u), 0.0};
}

PairRate euler_rhs_abelian(const FiniteLieAlgebra& alg, const ExtensionData& ext,
                           const CoefVector& u, const CoefVector& f) {
  if (f.size() != ext.dim_v()) throw ContractError("euler_rhs_abelian: f has wrong length");
  CoefVector du = euler_rhs_plain(alg, u) - h_map(alg, ext, f) * u + l_map(alg, ext, f, f);
  return {std::move(du), -(ext.action_transpose(u) * f)};
}

PairRate euler_rhs_general(const FiniteLieAlgebra& alg, const ExtensionData& ext,
                           const CoefVector& u, const CoefVector& rho) {
  if (!ext.h_bracket()) throw ContractError("euler_rhs_general: extension has no h bracket");
  if (rho.size() != ext.dim_v()) throw ContractError("euler_rhs_general: rho has wrong length");
  CoefVector du = euler_rhs_plain(alg, u) - h_map(alg, ext, rho) * u + l_map(alg, ext, rho, rho);
  CoefVector drho = euler_rhs_plain(*ext.h_bracket(), rho) - ext.action_transpose(u) * rho;
  return {std::move(du), std::move(drho)};
}

SdCentralRate euler_rhs_sd_central(const FiniteLieAlgebra& alg, const ExtensionData& ext,
                                   const OneCocycle& alpha, const CoefVector& u,
                                   const CoefVector& f, double a) {
  if (!ext.has_zero_cocycle())
    throw ContractError("euler_rhs_sd_central: the module extension must be semidirect");
  if (f.size() != ext.dim_v()) throw ContractError("euler_rhs_sd_central: f has wrong length");
  const CoefVector alpha_t_f = alpha.transpose_apply(alg, ext, f);
  const CoefVector alpha_u = alpha.matrix() * u;
  if (ext.g_invariant()) {
    return {euler_rhs_plain(alg, u) + a * alpha_t_f, ext.action(u) * f - a * alpha_u, 0.0};
  }
  return {euler_rhs_plain(alg, u) + l_map(alg, ext, f, f) + a * alpha_t_f,
          -(ext.action_transpose(u) * f) - a * alpha_u, 0.0};
}

FiniteLieAlgebra so3(const Matrix& gram) {
  // [e_i, e_j] = eps_ijk e_k
  std::vector<Matrix> ad(3, Matrix::Zero(3, 3));
  ad[0](2, 1) = 1.0;
  ad[0](1, 2) = -1.0;
  ad[1](0, 2) = 1.0;
  ad[1](2, 0) = -1.0;
  ad[2](1, 0) = 1.0;
  ad[2](0, 1) = -1.0;
  return FiniteLieAlgebra(std::move(ad), gram);
}

FiniteLieAlgebra abelian(int dim, const Matrix& gram) {
  return FiniteLieAlgebra(std::vector<Matrix>(dim, Matrix::Zero(dim, dim)), gram);
}

}  // namespace ea::algebra
