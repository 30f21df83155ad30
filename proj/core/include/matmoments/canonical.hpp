// Copyright 2026 The matmoments Authors.
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

#include <Eigen/Dense>
#include <vector>

#include "matmoments/moment_space.hpp"

namespace matmoments {

// Canonical moments U_1, ..., U_n of an interior moment sequence: the
// position of each S_k inside its admissible range [S_k^-, S_k^+], rescaled
// to the matrix interval (0_p, I_p). Construction validates that every entry
// lies strictly inside (0_p, I_p); boundary entries are rejected, never
// projected.
class CanonicalSequence {
 public:
  CanonicalSequence(Field field, int p, std::vector<SymHermMatrix> u,
                    const Tolerance& tol = {});

  Field field() const { return field_; }
  int dim() const { return p_; }
  int length() const { return static_cast<int>(u_.size()); }

  // 1-based accessor: canonical(k) is U_k.
  const SymHermMatrix& canonical(int k) const;
  const std::vector<SymHermMatrix>& entries() const { return u_; }

  CanonicalSequence prefix(int m) const;

  // The constant sequence U_k = I_p / 2: the canonical moments of the
  // arcsine matrix measure and the center of every moment space.
  static CanonicalSequence Center(Field field, int p, int n);

 private:
  Field field_;
  int p_;
  std::vector<SymHermMatrix> u_;
};

// Range widths D_m = S_m^+ - S_m^- expressed through the canonical moments:
// D_1 = I_p and D_{m+1} = D_m^{1/2} U_m (I - U_m) D_m^{1/2}. Each D_m is
// hermitian positive definite for interior data; at the center sequence,
// D_m = 4^{1-m} I_p.
struct RangeWidths {
  // widths[m-1] holds D_m, m = 1..n.
  std::vector<SymHermMatrix> widths;
};

RangeWidths range_widths(const CanonicalSequence& u, const Tolerance& tol = {});

// Non-symmetric canonical moments and the zeta recursion coefficients:
//   Ubar_m  = D_m^{-1/2} U_m D_m^{1/2}
//   zeta_1  = Ubar_1,   zeta_j = (I - Ubar_{j-1}) Ubar_j  for j >= 2.
// The zeta_j are not hermitian in general; each is similar to a positive
// product, so its spectrum lies in (0, 1).
struct ZetaSequence {
  Field field;
  int p;
  std::vector<Eigen::MatrixXcd> zeta;  // zeta[j-1] = zeta_j, j = 1..n
  std::vector<Eigen::MatrixXcd> ubar;  // ubar[m-1] = Ubar_m, m = 1..n
  RangeWidths widths;
};

ZetaSequence nonsymmetric_canonical(const CanonicalSequence& u,
                                    const Tolerance& tol = {});

// Canonical moments of an interior moment sequence:
//   U_k = (S_k^+ - S_k^-)^{-1/2} (S_k - S_k^-) (S_k^+ - S_k^-)^{-1/2}.
// Throws NotInteriorError for non-interior input and SingularRangeError when
// a range S_k^+ - S_k^- fails strict positivity at tolerance.
CanonicalSequence moments_to_canonical(const MomentSequence& s,
                                       const Tolerance& tol = {});

// Inverse map: reconstructs S_1, ..., S_n from the canonical moments through
// the triangular array
//   G_{0,j} = I_p,  G_{i,j} = 0_p for i > j,
//   G_{i,j} = G_{i,j-1} + zeta_{j-i+1} G_{i-1,j},
// with S_k = G_{k,k}. This is the production inverse; the K-matrix recursion
// below is a structurally different route kept as a numerical oracle.
MomentSequence canonical_to_moments(const CanonicalSequence& u,
                                    const Tolerance& tol = {});

// Oracle route to S_n: the lower triangular block array of the symmetrized
// measure's monomial coordinates, filled by
//   K_{i,i} = I_p,  K_{i,j} = 0_p when i + j is odd,
//   K_{r,c} = K_{r-1,c-1} + K_{r-1,c+1} zeta_{c+1}^*,
// returning S_n = K_{2n,0}. Agrees with canonical_to_moments(u) entry for
// entry; the two recursions share no code path.
SymHermMatrix moments_via_k_matrix_oracle(const CanonicalSequence& u, int n,
                                          const Tolerance& tol = {});

// Truncated block Jacobi operator of the symmetrized measure: N x N blocks
// with identity super-diagonal, zero diagonal, and sub-diagonal blocks
// zeta_r^* (r = 1..N-1).
Eigen::MatrixXcd block_jacobi_operator(const ZetaSequence& zeta, int N);

// Moments S_j = sum_i points[i]^j weights[i] of a finitely supported matrix
// measure. Weights must be PSD and sum to the identity within 1e-12
// (WeightError otherwise); points must be distinct.
MomentSequence discrete_measure_moments(
    const std::vector<double>& points,
    const std::vector<SymHermMatrix>& weights, int k);

// Jacobian of the inverse map at the center sequence by central finite
// differences: column (j-1)p + a holds column a of
//   [S(U0 + h E) - S(U0 - h E)] / (2h)
// for the diagonal perturbation E = e_a e_a^T placed in block j. The result
// is a (k p) x (k p) matrix expected to equal clt_matrix_A(k) (x) I_p up to
// O(h^2). Requires h in (1e-7, 1e-3).
Eigen::MatrixXcd numerical_jacobian_at_center(int k, int p, double h,
                                              Field field = Field::kReal);

}  // namespace matmoments
