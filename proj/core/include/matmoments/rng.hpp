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

#include <cstdint>

namespace matmoments {

// Root identity of a random stream. Identical (seed, stream) pairs yield
// bit-identical draw sequences; sub-streams are derived by hashing a purpose
// tag and a draw index into the stream id, so batches are reproducible for
// any parallel schedule.
struct RngState {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

// Counter-based generator: the i-th output is a finalizing hash of
// key + i * gamma, where the key mixes (seed, stream). No state beyond the
// counter, so jumping to a sub-stream is O(1) and scheduling-independent.
class Rng {
 public:
  explicit Rng(RngState state);

  RngState state_id() const { return state_; }

  // Fresh generator on an independent stream derived from (tag, index).
  Rng substream(std::uint64_t tag, std::uint64_t index) const;

  std::uint64_t next_u64();

  // Uniform on the open interval (0, 1); never returns an endpoint.
  double uniform01();

  // Standard normal via the Box-Muller transform (pairs, one cached).
  double normal();

  // Gamma(shape alpha, scale 1), Marsaglia-Tsang squeeze with the usual
  // boost to shape alpha + 1 when alpha < 1. Supports any alpha > 0.
  double gamma(double alpha);

  // Chi-square with (possibly fractional) dof degrees of freedom.
  double chi_square(double dof);

 private:
  RngState state_;
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace matmoments
