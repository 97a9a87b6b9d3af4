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

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "qgeom/discrimination.hpp"
#include "qgeom/orbits.hpp"

// JSON interchange. Matrices are {"dim": n, "re": [[...]], "im": [[...]]}
// in row-major order; spectra are {"p": [...]}. Malformed input raises
// kParseError; well-formed input describing an invalid object raises the
// validation error of the corresponding constructor.
namespace qgeom::io {

using Json = nlohmann::ordered_json;

Json parse(const std::string& text);
std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& text);

ComplexMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ComplexMatrix& m);

DensityMatrix state_from_json(const Json& j);
// A top-level array of states, or {"states": [...]}.
std::vector<DensityMatrix> states_from_json(const Json& j);
Json state_to_json(const DensityMatrix& rho);

Spectrum spectrum_from_json(const Json& j);
Json spectrum_to_json(const Spectrum& p);

Json permutation_to_json(const Permutation& p);
Json to_json(const OrbitBoundsReport& r);
Json to_json(const Povm& povm);
Json to_json(const DiscriminationReport& r);

// Serialized with 17 significant digits for double round-trip.
std::string dump(const Json& j, int indent = 2);

}  // namespace qgeom::io
