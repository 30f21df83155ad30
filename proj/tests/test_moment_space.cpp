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

#include "matmoments/moment_space.hpp"
#include "matmoments/ensembles.hpp"
#include "support/quadrature.hpp"
#include "support/test_util.hpp"

using namespace matmoments;

namespace {

MomentSequence scalar_sequence(std::initializer_list<double> values) {
  std::vector<SymHermMatrix> s;
  for (double v : values) {
    s.push_back(SymHermMatrix::ScaledIdentity(1, Field::kReal, v));
  }
  return MomentSequence(Field::kReal, 1, std::move(s));
}

MomentSequence scaled_identity_sequence(int p, Field field,
                                        std::initializer_list<double> values) {
  std::vector<SymHermMatrix> s;
  for (double v : values) s.push_back(SymHermMatrix::ScaledIdentity(p, field, v));
  return MomentSequence(field, p, std::move(s));
}

}  // namespace

TEST_CASE("Hankel matrices of order one") {
  Rng rng(RngState{21, 0});
  const SymHermMatrix s1 = matmoments_test::random_interval_matrix(2, Field::kReal, rng);
  const MomentSequence seq(Field::kReal, 2, {s1});
  const HankelPair h = hankel_matrices(seq, 1);
  CHECK((h.lower - s1.mat()).norm() == 0.0);
  CHECK((h.upper - (Eigen::MatrixXcd::Identity(2, 2) - s1.mat())).norm() == 0.0);
}

TEST_CASE("Hankel matrices of the scalar arcsine prefix") {
  const MomentSequence seq = scalar_sequence({0.5, 0.375});
  const HankelPair h = hankel_matrices(seq, 2);
  Eigen::MatrixXcd expected_lower(2, 2);
  expected_lower << 1.0, 0.5, 0.5, 0.375;
  CHECK((h.lower - expected_lower).norm() <= 1e-15);
  CHECK(h.upper.rows() == 1);
  CHECK(h.upper(0, 0).real() == doctest::Approx(0.125));
}

TEST_CASE("boundary measure at one makes the upper Hankel singular") {
  const MomentSequence seq = scalar_sequence({1.0});
  const HankelPair h = hankel_matrices(seq, 1);
  CHECK(h.upper(0, 0).real() == doctest::Approx(0.0));
  CHECK_FALSE(is_interior(seq));
}

TEST_CASE("Hankel order out of range") {
  const MomentSequence seq = scalar_sequence({0.5});
  CHECK_THROWS_AS(hankel_matrices(seq, 2), IndexError);
  CHECK_THROWS_AS(hankel_matrices(seq, 0), IndexError);
}

TEST_CASE("interiority examples") {
  CHECK(is_interior(scalar_sequence({0.5, 0.375, 0.3125})));
  CHECK_FALSE(is_interior(scaled_identity_sequence(2, Field::kReal, {1.0})));
  // The lower Hankel has determinant 1/4 but the upper one is [0].
  CHECK_FALSE(is_interior(scalar_sequence({0.5, 0.5})));
}

TEST_CASE("extremal moments at k = 1 and the scalar bounds") {
  const MomentSequence seq = scalar_sequence({0.5});
  const ExtremalPair first = extremal_moments(seq, 1);
  CHECK(first.lower.mat()(0, 0).real() == 0.0);
  CHECK(first.upper.mat()(0, 0).real() == 1.0);

  const ExtremalPair second = extremal_moments(seq, 2);
  CHECK(second.lower.mat()(0, 0).real() == doctest::Approx(0.25));
  CHECK(second.upper.mat()(0, 0).real() == doctest::Approx(0.5));
}

TEST_CASE("extremal moments reduce entrywise for scaled identities") {
  const MomentSequence seq = scaled_identity_sequence(2, Field::kReal, {0.5});
  const ExtremalPair ext = extremal_moments(seq, 2);
  CHECK(ext.lower.max_abs_diff(
            SymHermMatrix::ScaledIdentity(2, Field::kReal, 0.25)) <= 1e-14);
  CHECK(ext.upper.max_abs_diff(
            SymHermMatrix::ScaledIdentity(2, Field::kReal, 0.5)) <= 1e-14);
}

TEST_CASE("scalar second-moment bounds hold for random first moments") {
  Rng rng(RngState{22, 0});
  for (int rep = 0; rep < 20; ++rep) {
    const double s1 = rng.uniform01();
    const ExtremalPair ext = extremal_moments(scalar_sequence({s1}), 2);
    CHECK(ext.lower.mat()(0, 0).real() == doctest::Approx(s1 * s1));
    CHECK(ext.upper.mat()(0, 0).real() == doctest::Approx(s1));
  }
}

TEST_CASE("extremal moments depend only on the prefix, bit for bit") {
  Rng rng(RngState{23, 0});
  for (Field field : {Field::kReal, Field::kComplex}) {
    const MomentSequence a =
        sample_uniform_moment_space(6, 2, field, rng);
    // Replace the tail S_4..S_6 with a different interior tail.
    Rng rng2(RngState{24, 0});
    const MomentSequence other = sample_uniform_moment_space(6, 2, field, rng2);
    std::vector<SymHermMatrix> mixed(a.moments().begin(),
                                     a.moments().begin() + 3);
    for (int k = 4; k <= 6; ++k) mixed.push_back(other.moment(k));
    const MomentSequence b(field, 2, mixed);

    for (int k = 1; k <= 4; ++k) {
      const ExtremalPair ea = extremal_moments(a, k);
      const ExtremalPair eb = extremal_moments(b, k);
      CHECK(ea.lower.max_abs_diff(eb.lower) == 0.0);
      CHECK(ea.upper.max_abs_diff(eb.upper) == 0.0);
    }
  }
}

TEST_CASE("interior sequences satisfy the strict moment sandwich") {
  Rng rng(RngState{25, 0});
  const Tolerance tol;
  for (Field field : {Field::kReal, Field::kComplex}) {
    for (int p : {1, 2, 3}) {
      const MomentSequence s = sample_uniform_moment_space(6, p, field, rng);
      REQUIRE(is_interior(s));
      for (int k = 1; k <= s.length(); ++k) {
        const ExtremalPair ext = extremal_moments(s, k);
        CHECK(is_positive_definite(s.moment(k) - ext.lower, tol));
        CHECK(is_positive_definite(ext.upper - s.moment(k), tol));
      }
    }
  }
}

TEST_CASE("non-interior prefix is rejected") {
  const MomentSequence boundary = scalar_sequence({1.0, 1.0});
  CHECK_THROWS_AS(extremal_moments(boundary, 3), NotInteriorError);
}

TEST_CASE("log volume on the line") {
  CHECK(log_volume(1, 1, Field::kReal) == doctest::Approx(0.0));

  // Independent oracle: the second moment space of scalar measures is the
  // region s_1^2 <= s_2 <= s_1, whose area is a quadrature integral.
  const double area = matmoments_test::integrate01(
      [](double s1) { return s1 - s1 * s1; }, 64);
  CHECK(log_volume(2, 1, Field::kReal) ==
        doctest::Approx(std::log(area)).epsilon(1e-12));

  // Hand evaluation of the multivariate Beta value.
  CHECK(log_volume(1, 2, Field::kReal) ==
        doctest::Approx(std::log(std::numbers::pi / 6)).epsilon(1e-13));
}

TEST_CASE("scalar volume equals the product of scalar Beta functions") {
  for (int n = 1; n <= 10; ++n) {
    double expected = 0.0;
    for (int k = 1; k <= n; ++k) {
      expected += 2.0 * std::lgamma(static_cast<double>(k)) -
                  std::lgamma(static_cast<double>(2 * k));
    }
    CHECK(log_volume(n, 1, Field::kReal) ==
          doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("volume domain errors") {
  CHECK_THROWS_AS(log_volume(0, 1, Field::kReal), DomainError);
  CHECK_THROWS_AS(log_volume(1, 0, Field::kReal), DomainError);
}

TEST_CASE("arcsine moments") {
  CHECK(arcsine_moments(1) == std::vector<double>{0.5});
  const std::vector<double> first3 = arcsine_moments(3);
  CHECK(first3[0] == 0.5);
  CHECK(first3[1] == 0.375);
  CHECK(first3[2] == 0.3125);

  const std::vector<double> many = arcsine_moments(40);
  for (std::size_t j = 1; j < many.size(); ++j) {
    CHECK(many[j] < many[j - 1]);
    CHECK(many[j] > 0.0);
  }
}

TEST_CASE("standardization matrix A") {
  const Eigen::MatrixXd a1 = clt_matrix_A(1);
  CHECK(a1(0, 0) == 1.0);

  const Eigen::MatrixXd a2 = clt_matrix_A(2);
  CHECK(a2(0, 0) == 1.0);
  CHECK(a2(0, 1) == 0.0);
  CHECK(a2(1, 0) == 1.0);
  CHECK(a2(1, 1) == 0.25);

  const Eigen::MatrixXd a3 = clt_matrix_A(3);
  CHECK(a3(2, 0) == doctest::Approx(15.0 / 16.0));
  CHECK(a3(2, 1) == doctest::Approx(3.0 / 8.0));
  CHECK(a3(2, 2) == doctest::Approx(1.0 / 16.0));

  const Eigen::MatrixXd a6 = clt_matrix_A(6);
  for (int i = 0; i < 6; ++i) {
    CHECK(a6(i, i) > 0.0);
    for (int j = i + 1; j < 6; ++j) CHECK(a6(i, j) == 0.0);
  }
}

TEST_CASE("standardized moment vector vanishes at the arcsine center") {
  for (Field field : {Field::kReal, Field::kComplex}) {
    for (int p : {1, 3}) {
      std::vector<SymHermMatrix> s;
      for (double v : arcsine_moments(4)) {
        s.push_back(SymHermMatrix::ScaledIdentity(p, field, v));
      }
      const MomentSequence center(field, p, std::move(s));
      for (const SymHermMatrix& z : standardize_moment_vector(center, 100)) {
        CHECK(z.frobenius_norm() <= 1e-12);
      }
    }
  }
}

TEST_CASE("scalar standardization example") {
  // k = 1, p = 1, n = 1: scale sqrt(8), centered 1/4.
  const MomentSequence s = scalar_sequence({0.75});
  const auto z = standardize_moment_vector(s, 1);
  CHECK(z[0].mat()(0, 0).real() ==
        doctest::Approx(std::sqrt(2.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("forward substitution matches the explicit two-by-two inverse") {
  // A = [[1, 0], [1, 1/4]] has inverse [[1, 0], [-4, 4]].
  Rng rng(RngState{26, 0});
  const double s1 = 0.4 + 0.2 * rng.uniform01();
  const double s2 = s1 * s1 + (s1 - s1 * s1) * rng.uniform01();
  const MomentSequence s = scalar_sequence({s1, s2});
  const auto z = standardize_moment_vector(s, 50);

  const auto arc = arcsine_moments(2);
  const double x1 = s1 - arc[0];
  const double x2 = s2 - arc[1];
  const double scale = std::sqrt(4.0 * 50 * 2);
  CHECK(z[0].mat()(0, 0).real() == doctest::Approx(scale * x1));
  CHECK(z[1].mat()(0, 0).real() ==
        doctest::Approx(scale * (-4.0 * x1 + 4.0 * x2)));
}

TEST_CASE("clt scale per field") {
  const CltConstants real = clt_constants(2, Field::kReal);
  CHECK(real.scale(400, 2) == doctest::Approx(std::sqrt(4.0 * 400 * 3)));
  const CltConstants complex = clt_constants(2, Field::kComplex);
  CHECK(complex.scale(400, 2) == doctest::Approx(std::sqrt(8.0 * 400 * 2)));
}
