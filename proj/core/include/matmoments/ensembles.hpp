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

#include <vector>

#include "matmoments/canonical.hpp"
#include "matmoments/rng.hpp"

namespace matmoments {

// Gaussian orthogonal ensemble: symmetric with density proportional to
// exp(-tr(X^2)/2), i.e. N(0,1) diagonal and N(0,1/2) off-diagonal entries.
SymHermMatrix sample_goe(int p, Rng& rng);

// Gaussian unitary ensemble: hermitian, N(0,1) diagonal, off-diagonal real
// and imaginary parts each N(0,1/2).
SymHermMatrix sample_gue(int p, Rng& rng);

// GOE or GUE according to the field.
SymHermMatrix sample_gaussian_ensemble(int p, Field field, Rng& rng);

// Wishart draw with identity scale via the Bartlett factorization, allowing
// fractional degrees of freedom:
//   real field:    L_ii^2 ~ chi^2(dof - i + 1),    L_ij ~ N(0,1),   W = L L^T
//   complex field: L_ii^2 ~ Gamma(dof - i + 1, 1), L_ij complex standard
//                  normal (Re, Im each N(0,1/2)),  W = L L^*
// Requires dof > p - 1 in both conventions. Internal building block of the
// matrix Beta sampler.
SymHermMatrix sample_wishart(int p, double dof, Field field, Rng& rng);

// Parameters of the matrix-variate Beta distribution on (0_p, I_p) with
// density proportional to
//   det(X)^(a - (p+1)/2) det(I - X)^(b - (p+1)/2)   (real field)
//   det(X)^(a - p)       det(I - X)^(b - p)         (complex field).
struct BetaParams {
  Field field = Field::kReal;
  int p = 1;
  double a = 1.0;
  double b = 1.0;
};

// Throws DomainError unless a, b > (p-1)/2 (real) resp. a, b > p-1 (complex).
void validate(const BetaParams& params);

// Matrix Beta draw as the two-Wishart quotient
//   X = (A + B)^{-1/2} A (A + B)^{-1/2},
// A and B independent Wisharts with dof 2a, 2b (real) or a, b (complex).
// Draws where A + B fails strict positivity at tolerance are resampled and
// counted in *degenerate_retries when the pointer is non-null.
SymHermMatrix sample_matrix_beta(const BetaParams& params, Rng& rng,
                                 long* degenerate_retries = nullptr);

// Closed-form first and second moment scalars: E[X] = mean_coeff * I_p and
// E[X^2] = second_coeff * I_p, with
//   mean_coeff   = a / (a+b)
//   second_coeff = a / ((a+b)(a+b+1)) * (a + 1 + (p-1) b / (2a+2b-1))  (real)
//   second_coeff = a / ((a+b)(a+b+1)) * (a + 1 + (p-1) b / (a+b-1))  (complex)
struct BetaMomentCoefficients {
  double mean_coeff;
  double second_coeff;
};

BetaMomentCoefficients beta_moment_formulas(const BetaParams& params);

// Exact E || X - E[X] ||_F^2 = p (second_coeff - mean_coeff^2). For a = b
// this reduces to p/(8a+4) (1 + (p-1) 2a/(4a-1)) in the real case.
double beta_l2_deviation(const BetaParams& params);

// Jacobi ensemble: joint eigenvalue density on (0,1)^p proportional to
// |Delta(lambda)|^beta prod lambda_i^(a-1) (1-lambda_i)^(b-1).
struct JacobiParams {
  double a = 1.0;
  double b = 1.0;
  double beta = 1.0;  // Dyson index
  int p = 1;
};

// Log of the normalizing constant (a Selberg integral in closed form).
double jacobi_log_normalization(const JacobiParams& params);

// Log density at an eigenvalue vector; DomainError outside (0,1)^p.
double jacobi_log_density(const std::vector<double>& lambda,
                          const JacobiParams& params);

// Mixed moment E[lambda_1 ... lambda_m] for m <= p, in closed form:
// with gamma = beta/2, prod_{i=1..m} (a + gamma(p-i)) / (a + b + gamma(2p-i-1)).
double aomoto_product_moment(const JacobiParams& params, int m);

// Second moment E[lambda_1^2] from the closed-form recursion companion to
// the product-moment formula.
double aomoto_second_moment(const JacobiParams& params);

// Beta parameter of the k-th canonical moment under the uniform distribution
// on the n-th moment space: (n-k+1)(p+1)/2 (real) or (n-k+1)p (complex).
double uniform_canonical_beta_parameter(int n, int k, int p, Field field);

// Uniform draw from the n-th moment space: independent canonical moments
// U_k ~ Beta_p(a_k, a_k) with the parameter above, pushed through the
// inverse canonical map. Output always passes is_interior.
MomentSequence sample_uniform_moment_space(int n, int p, Field field, Rng& rng);

// First k moments of a uniform draw from the n-th moment space; only
// U_1..U_k are drawn since the leading moments depend on nothing else.
MomentSequence sample_uniform_moment_prefix(int n, int k, int p, Field field,
                                            Rng& rng);

}  // namespace matmoments
