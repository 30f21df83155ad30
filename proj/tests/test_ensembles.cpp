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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "matmoments/ensembles.hpp"
#include "support/quadrature.hpp"

using namespace matmoments;

TEST_CASE("gaussian ensemble entry variances") {
  Rng rng(RngState{101, 0});
  const int count = 100000;

  double var11 = 0.0;
  double var12 = 0.0;
  for (int i = 0; i < count; ++i) {
    const SymHermMatrix x = sample_goe(2, rng);
    var11 += x.mat()(0, 0).real() * x.mat()(0, 0).real();
    var12 += x.mat()(0, 1).real() * x.mat()(0, 1).real();
  }
  CHECK(var11 / count == doctest::Approx(1.0).epsilon(0.02));
  CHECK(var12 / count == doctest::Approx(0.5).epsilon(0.02));

  const SymHermMatrix scalar = sample_goe(1, rng);
  CHECK(scalar.dim() == 1);
}

TEST_CASE("unitary ensemble entry variances and trace moment") {
  Rng rng(RngState{102, 0});
  const int count = 100000;
  double var_re12 = 0.0;
  double var_im12 = 0.0;
  double trace_sq = 0.0;
  for (int i = 0; i < count; ++i) {
    const SymHermMatrix x = sample_gue(2, rng);
    var_re12 += x.mat()(0, 1).real() * x.mat()(0, 1).real();
    var_im12 += x.mat()(0, 1).imag() * x.mat()(0, 1).imag();
    trace_sq += (x.mat() * x.mat()).trace().real();
  }
  CHECK(var_re12 / count == doctest::Approx(0.5).epsilon(0.02));
  CHECK(var_im12 / count == doctest::Approx(0.5).epsilon(0.02));
  // E tr X^2 = p^2 for the unitary ensemble.
  CHECK(trace_sq / count == doctest::Approx(4.0).epsilon(0.0125));
}

TEST_CASE("wishart reduces to chi square at p = 1") {
  Rng rng(RngState{103, 0});
  const int count = 100000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < count; ++i) {
    const double w = sample_wishart(1, 4.0, Field::kReal, rng).mat()(0, 0).real();
    sum += w;
    sum_sq += w * w;
  }
  CHECK(sum / count == doctest::Approx(4.0).epsilon(0.02));
  CHECK(sum_sq / count - 16.0 == doctest::Approx(8.0).epsilon(0.05));
}

TEST_CASE("wishart mean and positivity") {
  Rng rng(RngState{104, 0});
  const int count = 100000;
  Eigen::MatrixXcd mean = Eigen::MatrixXcd::Zero(2, 2);
  for (int i = 0; i < count; ++i) {
    const SymHermMatrix w = sample_wishart(2, 5.0, Field::kReal, rng);
    mean += w.mat();
  }
  mean /= count;
  CHECK((mean - 5.0 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
        0.1);

  for (Field field : {Field::kReal, Field::kComplex}) {
    for (int i = 0; i < 200; ++i) {
      CHECK(is_positive_definite(sample_wishart(3, 3.5, field, rng)));
    }
  }
  CHECK_THROWS_AS(sample_wishart(3, 1.5, Field::kReal, rng), DomainError);
}

TEST_CASE("complex wishart mean") {
  Rng rng(RngState{105, 0});
  const int count = 50000;
  Eigen::MatrixXcd mean = Eigen::MatrixXcd::Zero(2, 2);
  for (int i = 0; i < count; ++i) {
    mean += sample_wishart(2, 5.0, Field::kComplex, rng).mat();
  }
  mean /= count;
  CHECK((mean - 5.0 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
        0.15);
}

TEST_CASE("matrix beta parameter validation") {
  CHECK_THROWS_AS(validate(BetaParams{Field::kReal, 2, 0.5, 1.0}), DomainError);
  CHECK_THROWS_AS(validate(BetaParams{Field::kComplex, 2, 1.0, 1.0}),
                  DomainError);
  CHECK_NOTHROW(validate(BetaParams{Field::kReal, 2, 0.51, 0.51}));
  CHECK_NOTHROW(validate(BetaParams{Field::kComplex, 2, 1.01, 1.01}));
}

TEST_CASE("scalar beta(1,1) is uniform") {
  Rng rng(RngState{106, 0});
  const BetaParams params{Field::kReal, 1, 1.0, 1.0};
  const int count = 100000;
  double sum = 0.0;
  for (int i = 0; i < count; ++i) {
    sum += sample_matrix_beta(params, rng).mat()(0, 0).real();
  }
  CHECK(sum / count == doctest::Approx(0.5).epsilon(0.02));
}

TEST_CASE("matrix beta draws live strictly inside the interval") {
  Rng rng(RngState{107, 0});
  for (Field field : {Field::kReal, Field::kComplex}) {
    const BetaParams params{field, 3, 2.5, 4.0};
    for (int i = 0; i < 300; ++i) {
      CHECK(loewner_interval_contains(sample_matrix_beta(params, rng)));
    }
  }
}

TEST_CASE("matrix beta empirical mean matches the closed form") {
  Rng rng(RngState{108, 0});
  const BetaParams params{Field::kReal, 2, 6.0, 6.0};
  const int count = 100000;
  Eigen::MatrixXcd mean = Eigen::MatrixXcd::Zero(2, 2);
  for (int i = 0; i < count; ++i) {
    mean += sample_matrix_beta(params, rng).mat();
  }
  mean /= count;
  CHECK((mean - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
        0.01);
}

TEST_CASE("beta moment coefficients") {
  // Equal parameters center the law at I/2 in every dimension and field.
  for (Field field : {Field::kReal, Field::kComplex}) {
    for (int p : {1, 2, 4}) {
      const BetaParams params{field, p, 6.0, 6.0};
      CHECK(beta_moment_formulas(params).mean_coeff == doctest::Approx(0.5));
    }
  }
  // Scalar Beta(2,2): E[X^2] = 3/10.
  CHECK(beta_moment_formulas(BetaParams{Field::kReal, 1, 2.0, 2.0})
            .second_coeff == doctest::Approx(0.3).epsilon(1e-14));
  // p = 2, a = b = 2: (1/10)(3 + 2/7) = 23/70.
  CHECK(beta_moment_formulas(BetaParams{Field::kReal, 2, 2.0, 2.0})
            .second_coeff == doctest::Approx(23.0 / 70.0).epsilon(1e-14));
}

TEST_CASE("second moments agree with the eigenvalue-ensemble route") {
  // Dual algebraic route: the closed-form E[X^2] scalar must equal the
  // second moment of the corresponding Jacobi eigenvalue ensemble.
  for (int p : {1, 2, 3}) {
    const BetaParams real_params{Field::kReal, p, 3.0, 4.5};
    const JacobiParams real_eig{3.0 - 0.5 * (p - 1), 4.5 - 0.5 * (p - 1), 1.0,
                                p};
    CHECK(beta_moment_formulas(real_params).second_coeff ==
          doctest::Approx(aomoto_second_moment(real_eig)).epsilon(1e-12));

    const BetaParams complex_params{Field::kComplex, p, 3.5, 5.0};
    const JacobiParams complex_eig{3.5 - (p - 1), 5.0 - (p - 1), 2.0, p};
    CHECK(beta_moment_formulas(complex_params).second_coeff ==
          doctest::Approx(aomoto_second_moment(complex_eig)).epsilon(1e-12));
  }
}

TEST_CASE("beta second moment against a monte carlo eigenvalue sum") {
  Rng rng(RngState{109, 0});
  const BetaParams params{Field::kReal, 2, 6.0, 6.0};
  const int count = 100000;
  double mean_eig_sq = 0.0;
  double mean_sq_of_sq = 0.0;
  for (int i = 0; i < count; ++i) {
    const SymHermMatrix x = sample_matrix_beta(params, rng);
    const double v = (x.mat() * x.mat()).trace().real() / params.p;
    mean_eig_sq += v;
    mean_sq_of_sq += v * v;
  }
  mean_eig_sq /= count;
  mean_sq_of_sq /= count;
  const double stderr_mc =
      std::sqrt((mean_sq_of_sq - mean_eig_sq * mean_eig_sq) / count);
  const double exact = beta_moment_formulas(params).second_coeff;
  CHECK(std::abs(mean_eig_sq - exact) <= 3.0 * stderr_mc);
}

TEST_CASE("distribution is invariant under conjugation by a permutation") {
  Rng rng(RngState{110, 0});
  const BetaParams params{Field::kReal, 3, 3.0, 3.0};
  const int count = 40000;

  Eigen::MatrixXd perm = Eigen::MatrixXd::Zero(3, 3);
  perm(0, 2) = perm(1, 0) = perm(2, 1) = 1.0;
  const Eigen::MatrixXcd permc = perm.cast<std::complex<double>>();

  Eigen::MatrixXcd mean_a = Eigen::MatrixXcd::Zero(3, 3);
  Eigen::MatrixXcd mean_b = Eigen::MatrixXcd::Zero(3, 3);
  Eigen::MatrixXcd second_a = Eigen::MatrixXcd::Zero(3, 3);
  Eigen::MatrixXcd second_b = Eigen::MatrixXcd::Zero(3, 3);
  for (int i = 0; i < count; ++i) {
    const Eigen::MatrixXcd xa = sample_matrix_beta(params, rng).mat();
    const Eigen::MatrixXcd yb = sample_matrix_beta(params, rng).mat();
    const Eigen::MatrixXcd xb = permc * yb * permc.transpose();
    mean_a += xa;
    mean_b += xb;
    second_a += xa.cwiseProduct(xa);
    second_b += xb.cwiseProduct(xb);
  }
  // 3 sigma at this count for entries of a bounded matrix family.
  const double band = 3.0 * 0.3 / std::sqrt(static_cast<double>(count));
  CHECK(((mean_a - mean_b) / count).cwiseAbs().maxCoeff() <= band);
  CHECK(((second_a - second_b) / count).cwiseAbs().maxCoeff() <= band);
}

TEST_CASE("jacobi density reduces to the scalar beta density") {
  const JacobiParams params{2.5, 3.5, 1.0, 1};
  for (double x : {0.1, 0.5, 0.9}) {
    const double expected = (params.a - 1) * std::log(x) +
                            (params.b - 1) * std::log1p(-x) +
                            std::lgamma(params.a + params.b) -
                            std::lgamma(params.a) - std::lgamma(params.b);
    CHECK(jacobi_log_density({x}, params) ==
          doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("jacobi density integrates to one") {
  // Integrate over the ordered region x < y via x = t y, where the
  // integrand is smooth, and double the result.
  const JacobiParams params{2.0, 2.0, 1.0, 2};
  const double integral =
      2.0 * matmoments_test::integrate01_2d(
                [&](double t, double y) {
                  const double x = t * y;
                  if (x <= 0.0 || x >= y || y >= 1.0) return 0.0;
                  return y * std::exp(jacobi_log_density({x, y}, params));
                },
                96);
  CHECK(integral == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("jacobi density is symmetric under coordinate swaps") {
  const JacobiParams params{1.7, 2.4, 2.0, 3};
  const std::vector<double> lambda{0.2, 0.55, 0.83};
  const std::vector<double> swapped{0.55, 0.2, 0.83};
  CHECK(jacobi_log_density(lambda, params) ==
        doctest::Approx(jacobi_log_density(swapped, params)).epsilon(1e-14));
  CHECK_THROWS_AS(jacobi_log_density({0.2, 1.1, 0.5}, params), DomainError);
}

TEST_CASE("product moments of the eigenvalue ensemble") {
  // p = 1 reduces to the scalar Beta mean.
  const JacobiParams scalar{2.0, 3.0, 1.0, 1};
  CHECK(aomoto_product_moment(scalar, 1) == doctest::Approx(2.0 / 5.0));

  // Symmetric parameters force mean 1/2.
  const JacobiParams sym{1.5, 1.5, 1.0, 2};
  CHECK(aomoto_product_moment(sym, 1) == doctest::Approx(0.5));

  CHECK_THROWS_AS(aomoto_product_moment(sym, 3), DomainError);
}

TEST_CASE("uniform moment space scalars at n = 1 are uniform") {
  Rng rng(RngState{111, 0});
  const int count = 50000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < count; ++i) {
    Rng sub = rng.substream(9, static_cast<std::uint64_t>(i));
    const double s = sample_uniform_moment_space(1, 1, Field::kReal, sub)
                         .moment(1)
                         .mat()(0, 0)
                         .real();
    sum += s;
    sum_sq += s * s;
  }
  CHECK(sum / count == doctest::Approx(0.5).epsilon(0.02));
  CHECK(sum_sq / count == doctest::Approx(1.0 / 3.0).epsilon(0.03));
}

TEST_CASE("uniform moment draws are interior and centered") {
  Rng rng(RngState{112, 0});
  Eigen::MatrixXcd mean = Eigen::MatrixXcd::Zero(2, 2);
  const int count = 4000;
  for (int i = 0; i < count; ++i) {
    Rng sub = rng.substream(9, static_cast<std::uint64_t>(i));
    const MomentSequence s =
        sample_uniform_moment_space(10, 2, Field::kReal, sub);
    REQUIRE(is_interior(s));
    mean += s.moment(1).mat();
  }
  mean /= count;
  CHECK((mean - 0.5 * Eigen::MatrixXcd::Identity(2, 2)).cwiseAbs().maxCoeff() <=
        0.02);
}

TEST_CASE("uniform prefix agrees with the full draw on leading moments") {
  Rng a(RngState{113, 5});
  Rng b(RngState{113, 5});
  const MomentSequence full = sample_uniform_moment_space(6, 2, Field::kReal, a);
  const MomentSequence prefix =
      sample_uniform_moment_prefix(6, 3, 2, Field::kReal, b);
  for (int k = 1; k <= 3; ++k) {
    CHECK(full.moment(k).max_abs_diff(prefix.moment(k)) == 0.0);
  }
}

TEST_CASE("interior hit rate of the unit box reproduces the volume") {
  Rng rng(RngState{114, 0});
  const int count = 40000;
  int hits = 0;
  for (int i = 0; i < count; ++i) {
    std::vector<SymHermMatrix> s{
        SymHermMatrix::ScaledIdentity(1, Field::kReal, rng.uniform01()),
        SymHermMatrix::ScaledIdentity(1, Field::kReal, rng.uniform01())};
    if (is_interior(MomentSequence(Field::kReal, 1, std::move(s)))) ++hits;
  }
  const double rate = static_cast<double>(hits) / count;
  const double exact = 1.0 / 6.0;
  const double stderr_mc = std::sqrt(exact * (1 - exact) / count);
  CHECK(std::abs(rate - exact) <= 3.0 * stderr_mc);
}

TEST_CASE("uniform canonical beta parameters") {
  CHECK(uniform_canonical_beta_parameter(10, 1, 2, Field::kReal) ==
        doctest::Approx(15.0));
  CHECK(uniform_canonical_beta_parameter(10, 10, 2, Field::kReal) ==
        doctest::Approx(1.5));
  CHECK(uniform_canonical_beta_parameter(10, 1, 2, Field::kComplex) ==
        doctest::Approx(20.0));
  CHECK_THROWS_AS(uniform_canonical_beta_parameter(5, 6, 2, Field::kReal),
                  DomainError);
}

TEST_CASE("complex beta eigenvalues follow the shifted ensemble law") {
  // Freezes the complex Wishart dof convention: with A, B of dof a, b the
  // quotient's eigenvalue moments must match the beta = 2 ensemble with
  // parameters (a - p + 1, b - p + 1).
  Rng rng(RngState{115, 0});
  const int p = 2;
  const BetaParams params{Field::kComplex, p, 3.5, 5.0};
  const JacobiParams eig_law{3.5 - (p - 1), 5.0 - (p - 1), 2.0, p};
  const int count = 60000;
  double mean1 = 0.0;
  double mean2 = 0.0;
  double mean2_sq = 0.0;
  for (int i = 0; i < count; ++i) {
    const SymHermMatrix x = sample_matrix_beta(params, rng);
    mean1 += x.mat().trace().real() / p;
    const double second = (x.mat() * x.mat()).trace().real() / p;
    mean2 += second;
    mean2_sq += second * second;
  }
  mean1 /= count;
  mean2 /= count;
  mean2_sq /= count;
  const double stderr2 = std::sqrt((mean2_sq - mean2 * mean2) / count);
  CHECK(std::abs(mean1 - aomoto_product_moment(eig_law, 1)) <= 0.005);
  CHECK(std::abs(mean2 - aomoto_second_moment(eig_law)) <= 3.0 * stderr2);
}

TEST_CASE("samplers are deterministic given the state") {
  const BetaParams params{Field::kComplex, 2, 3.0, 3.0};
  Rng a(RngState{7, 3});
  Rng b(RngState{7, 3});
  for (int i = 0; i < 10; ++i) {
    CHECK(sample_matrix_beta(params, a).max_abs_diff(
              sample_matrix_beta(params, b)) == 0.0);
  }
}
