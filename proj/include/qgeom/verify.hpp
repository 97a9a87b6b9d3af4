// Copyright 2026 The qgeom Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qgeom/io.hpp"

// Randomized property ensembles. Each (property, dim, sample) draws its inputs
// from a generator seeded by derive_seed(seed, {property, dim, sample}), so a
// failing sample can be replayed from its seed alone.
namespace qgeom::verify {

struct Tolerances {
  double slack = 1e-9;         // inequality and attainment slack
  double containment = 1e-8;   // orbit interval containment
  double monotonicity = 1e-8;  // contraction under channels
  double equivalence = 1e-8;   // D_tr = 1, D_B = sqrt(2) on orthogonal pairs
  double povm = 1e-8;          // POVM success probabilities and completeness
  double overlap = kOverlapTol;
  double symmetry = 1e-10;
  double classical = 1e-10;
};

struct Config {
  std::vector<Index> dims{2, 3, 4, 5, 6};
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  Tolerances tol;
  std::vector<std::string> properties;  // empty: all
  // Runs exactly one sample per (property, dim) with this sample seed.
  std::optional<std::uint64_t> replay_seed;
  // Fault injection for harness self-tests: inflates the trace distance.
  bool corrupt_metric = false;
};

struct PropertyResult {
  std::string property;
  Index dim;
  std::size_t samples;
  std::size_t passes;
  std::size_t failures;
  double worst_residual;  // largest observed residual; positive beyond slack fails
  std::uint64_t seed;
  std::optional<io::Json> first_failure;  // replay seed and serialized inputs
};

struct Summary {
  std::vector<PropertyResult> results;
  bool all_pass() const;
};

const std::vector<std::string>& property_names();

// Throws kInvalidArgument on unknown property names or an empty dim list.
Summary run(const Config& config);

std::string to_csv(const Summary& summary);
io::Json to_json(const Summary& summary, const Config& config);

}  // namespace qgeom::verify
