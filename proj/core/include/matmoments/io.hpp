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

#include <string>

#include "matmoments/canonical.hpp"
#include "matmoments/convergence.hpp"

namespace matmoments {

// JSON encodings used library-wide.
//
// Matrix: {"field": "real"|"complex", "p": int, "re": [row-major doubles],
//          "im": [row-major doubles]}  with "im" omitted for the real field.
// MomentSequence:    {"field", "p", "n", "S": [matrix, ...]}
// CanonicalSequence: {"field", "p", "n", "U": [matrix, ...]}
//
// All serialization throws ConfigError on malformed input.

std::string to_json(const SymHermMatrix& m);
SymHermMatrix matrix_from_json(const std::string& text);

std::string to_json(const MomentSequence& s);
MomentSequence moment_sequence_from_json(const std::string& text);

std::string to_json(const CanonicalSequence& u);
CanonicalSequence canonical_sequence_from_json(const std::string& text);

std::string to_json(const ExperimentConfig& config);
ExperimentConfig experiment_config_from_json(const std::string& text);

// Report serialization. Wall time is a diagnostic and is excluded unless
// include_timing is set, so report files are bit-identical across runs.
std::string to_json(const StatReport& report, bool include_timing = false);

// Header line of an NDJSON batch:
// {"kind": ..., "params": {...}, "seed": int, "stream": int, "count": int}.
std::string batch_header_json(const std::string& kind,
                              const std::string& params_json, RngState rng,
                              long count);

}  // namespace matmoments
