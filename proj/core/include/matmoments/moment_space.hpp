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

#include "matmoments/linalg.hpp"
#include "matmoments/matrix.hpp"

namespace matmoments {

// Ordered moments S_1, ..., S_n of a normalized p x p matrix measure on
// [0, 1]. The zeroth moment S_0 = I_p is implicit and injected wherever the
// Hankel machinery needs it; it is never stored.
class MomentSequence {
 public:
  MomentSequence(Field field, int p, std::vector<SymHermMatrix> moments);

  Field field() const { return field_; }
  int dim() const { return p_; }
  int length() const { return static_cast<int>(s_.size()); }

  // 1-based accessor: moment(k) is S_k for 1 <= k <= length().
  const SymHermMatrix& moment(int k) const;
  // Same, but moment_or_identity(0) yields the implicit S_0 = I_p.
  SymHermMatrix moment_or_identity(int k) const;

  const std::vector<SymHermMatrix>& moments() const { return s_; }

  // The sequence S_1, ..., S_m for m <= length().
  MomentSequence prefix(int m) const;

 private:
  Field field_;
  int p_;
  std::vector<SymHermMatrix> s_;
};

// Loewner-extremal values of the k-th moment given S_1, ..., S_{k-1}:
// lower is the smallest and upper the largest hermitian matrix that extends
// the prefix to a point of the k-th moment space.
struct ExtremalPair {
  SymHermMatrix lower;
  SymHermMatrix upper;
};

struct HankelPair {
  Eigen::MatrixXcd lower;  // the "lower" Hankel matrix of order m
  Eigen::MatrixXcd upper;  // the "upper" (complementary) Hankel matrix
};

// Block Hankel matrices of order m built from S_0 = I, S_1, ..., S_m.
//
// Even m = 2j:  lower has block (r, c) = S_{r+c} for r, c <= j;
//               upper has block (r, c) = S_{r+c+1} - S_{r+c+2} for r, c <= j-1.
// Odd m = 2j+1: lower has block (r, c) = S_{r+c+1} for r, c <= j;
//               upper has block (r, c) = S_{r+c} - S_{r+c+1} for r, c <= j.
//
// Throws IndexError when m < 1 or m > length().
HankelPair hankel_matrices(const MomentSequence& s, int m);

// True iff both Hankel matrices of order n = length() are positive definite,
// i.e. the sequence lies in the interior of the n-th moment space. Boundary
// points are classified as non-interior.
//
// The decision is graded order by order: for each k the moment S_k must sit
// strictly between its extremal bounds, measured at the scale of the k-th
// admissible range. A fixed eigenvalue floor on the raw Hankel matrices
// would misclassify every deep sequence, because their smallest eigenvalues
// decay like 4^(-n^2/4) even at the center of the moment space.
bool is_interior(const MomentSequence& s, const Tolerance& tol = {});

// Extremal moments S_k^- and S_k^+ computed from the prefix S_1..S_{k-1} by
// Schur complements of the bordered block Hankel matrices, with the
// conventions S_1^- = 0_p, S_1^+ = I_p and S_2^+ = S_1. Requires the prefix
// to be interior (NotInteriorError otherwise); a failed block factorization
// raises SingularHankelError.
ExtremalPair extremal_moments(const MomentSequence& s, int k,
                              const Tolerance& tol = {});

// Extremal moments without the interiority precondition check; throws
// SingularHankelError when a prefix Hankel matrix cannot be factorized.
// Building block for the graded interiority sweep.
ExtremalPair extremal_moments_unchecked(const MomentSequence& s, int k);

// Log volume of the n-th moment space of p x p matrix measures on [0, 1]:
//   real field:    sum_{k=1..n} log B_p(k(p+1)/2, k(p+1)/2)
//   complex field: sum_{k=1..n} log B_p^(2)(kp, kp)
// The complex constant is the normalization implied by the product-Beta law
// of the canonical moments; it is cross-checked by Monte Carlo rejection
// sampling in the test suite.
double log_volume(int n, int p, Field field);

// First k moments of the arcsine distribution on [0, 1]:
// s_j = binom(2j, j) / 4^j. This sequence (times I_p) is the centering point
// of all the limit statements; its canonical moments are identically I_p/2.
std::vector<double> arcsine_moments(int k);

// Lower triangular k x k matrix A with entries
// a_{i,j} = 2^(-2i+2) binom(2i, i-j), 1 <= j <= i <= k: the derivative of
// the canonical-to-ordinary moment map at the arcsine center (scalar case),
// and the whitening matrix of the moment-vector limit theorem.
Eigen::MatrixXd clt_matrix_A(int k);

// The constants of the moment-vector central limit statement.
struct CltConstants {
  int k;
  Field field;
  Eigen::MatrixXd A;            // clt_matrix_A(k)
  std::vector<double> arcsine;  // arcsine_moments(k)

  // Standardization factor: sqrt(4 n (p+1)) for the real field,
  // sqrt(8 n p) for the complex field.
  double scale(int n, int p) const;
};

CltConstants clt_constants(int k, Field field);

// Centers the first k moments at the arcsine point, applies A^{-1} (x) I_p
// blockwise by forward substitution, and multiplies by the field's scale.
// `prefix` holds S_1..S_k of a sample from the n-th moment space; n is the
// ambient dimension entering the scale factor.
std::vector<SymHermMatrix> standardize_moment_vector(
    const MomentSequence& prefix, int ambient_n);

namespace detail {

// Internal: rescaled positions of every moment inside its admissible range,
// computed in one progressive sweep. Throws NotInteriorError or
// SingularRangeError at the first failing order.
std::vector<Eigen::MatrixXcd> canonical_positions(const MomentSequence& s,
                                                  const Tolerance& tol);

}  // namespace detail

}  // namespace matmoments
