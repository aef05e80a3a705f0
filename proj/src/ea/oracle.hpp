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
// Independent ground truth for the hand-coded formulas: exact adjoint
// identities on band-limited circle fields, full-bracket Euler equations on
// finite extension algebras, and finite-difference evaluation of the torus
// right-hand sides. Nothing here calls the formula it is meant to check.
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>
#include "ea/algebra.hpp"
#include "ea/models.hpp"
#include "ea/spectral1d.hpp"

namespace ea::oracle {

using algebra::CoefVector;
using algebra::ExtensionData;
using algebra::FiniteLieAlgebra;
using algebra::Matrix;
using spectral1d::Metric1D;
using spectral1d::Spectrum1D;

// ---------------------------------------------------------------------------
// Circle adjoint identities.

struct BandLimitedTriple {
  Spectrum1D x;
  Spectrum1D y;
  Spectrum1D z;
};

/// Random triple on cutoff n_modes with every mode |k| <= n_modes / 3 and
/// coefficients of size e^{-k/2}.
BandLimitedTriple random_triple(int n_modes, std::mt19937_64& rng);

using AdTransposeFunction = std::function<Spectrum1D(const Spectrum1D&, const Spectrum1D&)>;

/// Product by direct convolution of the coefficient sequences. Exact when the
/// bandwidths of a and b add up to at most the cutoff.
Spectrum1D convolve(const Spectrum1D& a, const Spectrum1D& b);

/// Throws ContractError unless every field of t is band-limited to N/3.
void check_bandwidth(const BandLimitedTriple& t);

/// |<adT(X)Y, Z> - <Y, X'Z - XZ'>| in the given metric.
double adjoint_residual(const AdTransposeFunction& adT, Metric1D metric, const BandLimitedTriple& t);

// ---------------------------------------------------------------------------
// Finite-dimensional extension algebras.

/// g + V with the bracket
/// [(X1,v1),(X2,v2)] = ([X1,X2], [v1,v2]_h + b(X1)v2 - b(X2)v1 + omega(X1,X2)).
/// Coordinates list g first. Gram = blockdiag(G_g, G_V). Throws
/// ConstructionError when Jacobi fails (an invalid omega).
FiniteLieAlgebra build_extension_algebra(const FiniteLieAlgebra& g, const ExtensionData& ext);

/// Central extension g + R by the real cocycle omega(i, j) = omega(e_i, e_j),
/// central direction last with unit norm.
FiniteLieAlgebra build_central_algebra(const FiniteLieAlgebra& g, const Matrix& omega);

/// u -> -G^{-1} ad(u)' G u assembled from structure constants by explicit
/// sums and solved with partial-pivot LU.
std::function<CoefVector(const CoefVector&)> extension_bruteforce(const FiniteLieAlgebra& alg);

/// Real cocycle on g + V induced by a one-cocycle alpha:
/// omega((X1,v1),(X2,v2)) = <alpha X1, v2>_V - <alpha X2, v1>_V.
Matrix sd_central_cocycle(const FiniteLieAlgebra& g, const ExtensionData& ext, const Matrix& alpha);

// Test algebras.

/// Polynomial vector fields {1, x, x^2} d/dx with [X,Y] = X'Y - XY', Gram
/// int_{-1}^{1} p q dx.
FiniteLieAlgebra sl2_polynomial();
/// so(3) + aff(1) in a random basis with a random SPD Gram matrix.
FiniteLieAlgebra random_algebra(std::mt19937_64& rng);
Matrix random_spd(int dim, std::mt19937_64& rng);
/// b = ad on V = g (the adjoint module), V Gram given.
ExtensionData adjoint_module(const FiniteLieAlgebra& g, const Matrix& gram_v, bool invariant);
/// Adjoint-module extension with the coboundary omega = d(phi):
/// omega(X,Y) = [X, phi Y] - [Y, phi X] - phi[X,Y].
ExtensionData adjoint_coboundary(const FiniteLieAlgebra& g, const Matrix& phi, const Matrix& gram_v);
/// Trivial action on R^m with omega(X,Y) = phi[X,Y].
ExtensionData trivial_module(const FiniteLieAlgebra& g, const Matrix& phi, const Matrix& gram_v);
/// General extension by h with b(X) = ad_h(phi X) and
/// omega(X1,X2) = [phi X1, phi X2]_h - phi[X1,X2]; isomorphic to g + h.
ExtensionData twisted_general(const FiniteLieAlgebra& g, const FiniteLieAlgebra& h,
                              const Matrix& phi);

// ---------------------------------------------------------------------------
// Finite differences on the torus.

/// Named n-by-n grid functions (x slow) plus named scalars.
struct GridRate {
  int n = 0;
  std::map<std::string, std::vector<double>> fields;
  std::map<std::string, double> scalars;
};

/// Second-order centered-difference evaluation of a torus model right-hand
/// side on an n-by-n grid. Fields are sampled by direct trigonometric sums
/// and stream functions come from a per-mode inversion. Projected velocity
/// rates are compared through their curl and mean, so no pressure solve is
/// needed.
GridRate finite_difference_rhs(const models::ModelSpec& spec, const models::ModelState& s, int n);

/// The same quantities computed from the spectral right-hand side.
GridRate spectral_rate_on_grid(const models::ModelSpec& spec, const models::ModelState& s, int n);

/// Combines 2nd-order results on grids n and n/2 into a 4th-order estimate
/// on the coarse grid: (4 fine - coarse) / 3.
GridRate richardson(const GridRate& fine, const GridRate& coarse);

struct FdComparison {
  double max_error = 0.0;  // max over quantities of |fd - spectral|_inf / max(1, |spectral|_inf)
  double max_rate = 0.0;   // max over quantities of |spectral|_inf
  std::string worst;       // quantity attaining max_error
};

/// Finite differences at n and n/2, extrapolated, against the spectral rate.
FdComparison finite_difference_check(const models::ModelSpec& spec, const models::ModelState& s,
                                     int n = 512);

}  // namespace ea::oracle
