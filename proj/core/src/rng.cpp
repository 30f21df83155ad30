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

#include "matmoments/rng.hpp"

#include <cmath>
#include <numbers>

#include "matmoments/errors.hpp"

namespace matmoments {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ull;

// SplitMix64 finalizer; passes the usual statistical batteries when driven
// by a Weyl sequence.
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream) {
  return mix64(mix64(seed + kGamma) ^ (stream * 0xD1B54A32D192ED03ull));
}

}  // namespace

Rng::Rng(RngState state) : state_(state), key_(derive_key(state.seed, state.stream)) {}

Rng Rng::substream(std::uint64_t tag, std::uint64_t index) const {
  RngState derived;
  derived.seed = state_.seed;
  derived.stream =
      mix64(state_.stream + kGamma * (tag + 1)) + mix64(index + kGamma);
  return Rng(derived);
}

std::uint64_t Rng::next_u64() {
  counter_ += 1;
  return mix64(key_ + counter_ * kGamma);
}

double Rng::uniform01() {
  // 53 random bits shifted into (0, 1): (bits + 0.5) * 2^-53.
  const std::uint64_t bits = next_u64() >> 11;
  return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform01();
  const double u2 = uniform01();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

double Rng::gamma(double alpha) {
  if (!(alpha > 0.0)) {
    throw DomainError("gamma sampler needs a positive shape");
  }
  if (alpha < 1.0) {
    const double boost = std::pow(uniform01(), 1.0 / alpha);
    return gamma(alpha + 1.0) * boost;
  }
  const double d = alpha - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal();
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = uniform01();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double Rng::chi_square(double dof) {
  return 2.0 * gamma(0.5 * dof);
}

}  // namespace matmoments
