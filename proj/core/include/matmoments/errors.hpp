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

#include <stdexcept>
#include <string>

namespace matmoments {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// A matrix argument violates its structural invariants (non-finite entries,
// broken symmetry/hermiticity, dimension mismatch).
class InvalidMatrixError : public Error {
 public:
  using Error::Error;
};

// A scalar parameter lies outside the mathematical domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// An inverse (or inverse square root) was requested for a matrix whose
// smallest eigenvalue sits at or below the tolerance floor.
class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

// A moment sequence is not in the interior of its moment space.
class NotInteriorError : public Error {
 public:
  using Error::Error;
};

// A block Hankel system could not be factorized.
class SingularHankelError : public Error {
 public:
  using Error::Error;
};

// The admissible range of a moment fails strict positivity.
class SingularRangeError : public Error {
 public:
  using Error::Error;
};

// Discrete-measure weights are not PSD or do not sum to the identity.
class WeightError : public Error {
 public:
  using Error::Error;
};

// A statistic was requested on a sample that is too small.
class TooFewSamplesError : public Error {
 public:
  using Error::Error;
};

// An index is outside the valid range for the given sequence.
class IndexError : public Error {
 public:
  using Error::Error;
};

// An experiment or CLI configuration is inconsistent.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace matmoments
