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

#include "matmoments/ensembles.hpp"

#include <cmath>
#include <string>

namespace matmoments {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

SymHermMatrix sample_goe(int p, Rng& rng) {
  if (p < 1) throw DomainError("ensemble dimension must be >= 1");
  Eigen::MatrixXcd m(p, p);
  for (int i = 0; i < p; ++i) {
    m(i, i) = rng.normal();
    for (int j = i + 1; j < p; ++j) {
      const double value = kInvSqrt2 * rng.normal();
      m(i, j) = value;
      m(j, i) = value;
    }
  }
  return SymHermMatrix(Field::kReal, m);
}

SymHermMatrix sample_gue(int p, Rng& rng) {
  if (p < 1) throw DomainError("ensemble dimension must be >= 1");
  Eigen::MatrixXcd m(p, p);
  for (int i = 0; i < p; ++i) {
    m(i, i) = rng.normal();
    for (int j = i + 1; j < p; ++j) {
      const std::complex<double> value(kInvSqrt2 * rng.normal(),
                                       kInvSqrt2 * rng.normal());
      m(i, j) = value;
      m(j, i) = std::conj(value);
    }
  }
  return SymHermMatrix(Field::kComplex, m);
}

SymHermMatrix sample_gaussian_ensemble(int p, Field field, Rng& rng) {
  return field == Field::kReal ? sample_goe(p, rng) : sample_gue(p, rng);
}

SymHermMatrix sample_wishart(int p, double dof, Field field, Rng& rng) {
  if (p < 1) throw DomainError("Wishart dimension must be >= 1");
  if (!(dof > p - 1)) {
    throw DomainError("Wishart needs dof > p - 1, got dof=" +
                      std::to_string(dof));
  }
  Eigen::MatrixXcd lower = Eigen::MatrixXcd::Zero(p, p);
  for (int i = 0; i < p; ++i) {
    const double shape_dof = dof - i;  // dof - (i+1) + 1 with 0-based i
    if (field == Field::kReal) {
      lower(i, i) = std::sqrt(rng.chi_square(shape_dof));
    } else {
      lower(i, i) = std::sqrt(rng.gamma(shape_dof));
    }
    for (int j = 0; j < i; ++j) {
      if (field == Field::kReal) {
        lower(i, j) = rng.normal();
      } else {
        lower(i, j) = std::complex<double>(kInvSqrt2 * rng.normal(),
                                           kInvSqrt2 * rng.normal());
      }
    }
  }
  return SymHermMatrix::Project(field, lower * lower.adjoint());
}

void validate(const BetaParams& params) {
  if (params.p < 1) throw DomainError("matrix Beta needs p >= 1");
  const double limit = params.field == Field::kReal
                           ? 0.5 * (params.p - 1)
                           : static_cast<double>(params.p - 1);
  if (!(params.a > limit) || !(params.b > limit)) {
    throw DomainError("matrix Beta parameters out of domain: a=" +
                      std::to_string(params.a) + ", b=" +
                      std::to_string(params.b) + ", p=" +
                      std::to_string(params.p));
  }
}

SymHermMatrix sample_matrix_beta(const BetaParams& params, Rng& rng,
                                 long* degenerate_retries) {
  validate(params);
  const double factor = params.field == Field::kReal ? 2.0 : 1.0;
  const Tolerance tol;
  for (;;) {
    const SymHermMatrix a =
        sample_wishart(params.p, factor * params.a, params.field, rng);
    const SymHermMatrix b =
        sample_wishart(params.p, factor * params.b, params.field, rng);
    const SymHermMatrix total = a + b;
    if (!is_positive_definite(total, tol)) {
      if (degenerate_retries != nullptr) ++(*degenerate_retries);
      continue;
    }
    const SymHermMatrix whitener = sym_sqrt(total, /*inverse=*/true, tol);
    return SymHermMatrix::Project(
        params.field, whitener.mat() * a.mat() * whitener.mat());
  }
}

BetaMomentCoefficients beta_moment_formulas(const BetaParams& params) {
  validate(params);
  const double a = params.a;
  const double b = params.b;
  const double p = params.p;
  BetaMomentCoefficients out;
  out.mean_coeff = a / (a + b);
  const double mixing = params.field == Field::kReal
                            ? (p - 1) * b / (2.0 * a + 2.0 * b - 1.0)
                            : (p - 1) * b / (a + b - 1.0);
  out.second_coeff = a / ((a + b) * (a + b + 1.0)) * (a + 1.0 + mixing);
  return out;
}

double beta_l2_deviation(const BetaParams& params) {
  const BetaMomentCoefficients c = beta_moment_formulas(params);
  return params.p * (c.second_coeff - c.mean_coeff * c.mean_coeff);
}

double jacobi_log_normalization(const JacobiParams& params) {
  if (params.p < 1 || !(params.a > 0.0) || !(params.b > 0.0) ||
      !(params.beta > 0.0)) {
    throw DomainError("Jacobi ensemble parameters must be positive");
  }
  const double g = 0.5 * params.beta;
  double log_c = 0.0;
  for (int j = 1; j <= params.p; ++j) {
    log_c += std::lgamma(1.0 + g) +
             std::lgamma(params.a + params.b + g * (params.p + j - 2)) -
             std::lgamma(1.0 + g * j) - std::lgamma(params.a + g * (j - 1)) -
             std::lgamma(params.b + g * (j - 1));
  }
  return log_c;
}

double jacobi_log_density(const std::vector<double>& lambda,
                          const JacobiParams& params) {
  if (static_cast<int>(lambda.size()) != params.p) {
    throw DomainError("eigenvalue vector length must equal p");
  }
  double log_f = jacobi_log_normalization(params);
  for (int i = 0; i < params.p; ++i) {
    const double x = lambda[static_cast<std::size_t>(i)];
    if (!(x > 0.0 && x < 1.0)) {
      throw DomainError("Jacobi eigenvalues must lie in (0, 1)");
    }
    log_f += (params.a - 1.0) * std::log(x) +
             (params.b - 1.0) * std::log1p(-x);
    for (int j = i + 1; j < params.p; ++j) {
      log_f += params.beta *
               std::log(std::abs(lambda[static_cast<std::size_t>(j)] - x));
    }
  }
  return log_f;
}

double aomoto_product_moment(const JacobiParams& params, int m) {
  if (m < 1 || m > params.p) {
    throw DomainError("product moment order must satisfy 1 <= m <= p");
  }
  const double g = 0.5 * params.beta;
  double value = 1.0;
  for (int i = 1; i <= m; ++i) {
    value *= (params.a + g * (params.p - i)) /
             (params.a + params.b + g * (2 * params.p - i - 1));
  }
  return value;
}

double aomoto_second_moment(const JacobiParams& params) {
  const double g = 0.5 * params.beta;
  const double a = params.a;
  const double b = params.b;
  const double q = g * (params.p - 1);
  const double denom = (a + b + 2.0 * q) * (a + b + 1.0 + 2.0 * q);
  const double bracket = (a + 1.0 + q) + q * (b + q) / (a + b + 2.0 * q - g);
  return (a + q) / denom * bracket;
}

double uniform_canonical_beta_parameter(int n, int k, int p, Field field) {
  if (n < 1 || k < 1 || k > n || p < 1) {
    throw DomainError("uniform canonical Beta parameter needs 1 <= k <= n");
  }
  return field == Field::kReal ? 0.5 * (n - k + 1) * (p + 1)
                               : static_cast<double>(n - k + 1) * p;
}

namespace {

MomentSequence sample_uniform_impl(int n, int k, int p, Field field,
                                   Rng& rng) {
  std::vector<SymHermMatrix> u;
  u.reserve(static_cast<std::size_t>(k));
  for (int j = 1; j <= k; ++j) {
    BetaParams params;
    params.field = field;
    params.p = p;
    params.a = uniform_canonical_beta_parameter(n, j, p, field);
    params.b = params.a;
    u.push_back(sample_matrix_beta(params, rng));
  }
  return canonical_to_moments(CanonicalSequence(field, p, std::move(u)));
}

}  // namespace

MomentSequence sample_uniform_moment_space(int n, int p, Field field,
                                           Rng& rng) {
  return sample_uniform_impl(n, n, p, field, rng);
}

MomentSequence sample_uniform_moment_prefix(int n, int k, int p, Field field,
                                            Rng& rng) {
  if (k > n) throw DomainError("prefix length must satisfy k <= n");
  return sample_uniform_impl(n, k, p, field, rng);
}

}  // namespace matmoments
