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

#include "support/invariance_suite.hpp"

using namespace matmoments;
using namespace matmoments_test;

TEST_CASE("interval oracle agrees with the production map on [0, 1]") {
  // Same measure, two structurally different computations of its canonical
  // moments; ties the oracle to the production path before the oracle is
  // used as the referee on other intervals.
  Rng rng(RngState{401, 0});
  for (Field field : {Field::kReal, Field::kComplex}) {
    for (int p : {1, 2, 3}) {
      const auto atoms = distinct_atoms01(4, rng);
      const auto weights = random_weight_partition(4, p, field, rng);
      const MomentSequence moments =
          discrete_measure_moments(atoms, wrap_weights(weights, field), 6);
      const CanonicalSequence u = moments_to_canonical(moments);

      IntervalMeasure mu;
      mu.lo = 0.0;
      mu.hi = 1.0;
      mu.atoms = atoms;
      mu.weights = weights;
      const auto oracle = interval_canonical_moments(mu, 6);
      for (int k = 1; k <= 6; ++k) {
        CHECK((oracle[static_cast<std::size_t>(k - 1)] -
               u.canonical(k).mat())
                  .cwiseAbs()
                  .maxCoeff() <= 1e-10);
      }
    }
  }
}

TEST_CASE("canonical moments are invariant under affine interval maps") {
  for (Field field : {Field::kReal, Field::kComplex}) {
    const InvarianceOutcome outcome = run_invariance_suite(field, 402);
    CHECK(outcome.worst_affine <= 1e-9);
  }
}

TEST_CASE("symmetric measures have odd canonical moments at one half") {
  for (Field field : {Field::kReal, Field::kComplex}) {
    const InvarianceOutcome outcome = run_invariance_suite(field, 403);
    CHECK(outcome.worst_symmetric <= 1e-9);
  }
}

TEST_CASE("quadratic symmetrization shifts canonical indices by two") {
  for (Field field : {Field::kReal, Field::kComplex}) {
    const InvarianceOutcome outcome = run_invariance_suite(field, 404);
    CHECK(outcome.worst_symmetrization_even <= 1e-9);
    CHECK(outcome.worst_symmetrization_odd <= 1e-9);
  }
}
