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
#include <span>
#include <vector>

#include "qgeom/metrics.hpp"

namespace qgeom {

inline constexpr double kPovmHermiticityTol = 1e-10;
inline constexpr double kPovmEigenTol = 1e-9;
inline constexpr double kPovmCompletenessTol = 1e-8;
inline constexpr std::size_t kCliqueCap = 24;

// Positive operators 0 <= A_i <= I summing to the identity.
class Povm {
 public:
  // Throws kInvalidArgument when an element is not Hermitian, has an
  // eigenvalue outside [-1e-9, 1 + 1e-9], or the sum misses I by > 1e-8.
  explicit Povm(std::vector<ComplexMatrix> elements);

  const std::vector<ComplexMatrix>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  Index dim() const noexcept { return elements_.front().rows(); }

  // Tr(A_k rho)
  double probability(std::size_t k, const DensityMatrix& rho) const;
  double completeness_residual() const;  // ||sum A_i - I||_max

 private:
  std::vector<ComplexMatrix> elements_;
};

struct DiscriminationReport {
  bool discriminable;
  std::size_t rank_sum;
  Index dim;
  double max_pairwise_overlap;  // max_{i<j} Tr(P_i P_j); 0 for a single state
  std::optional<Povm> povm;     // present when discriminable
};

DiscriminationReport can_discriminate(std::span<const DensityMatrix> states,
                                      double overlap_tol = kOverlapTol);

// {P_1, ..., P_K, I - sum P_k}. The support bases are symmetrically
// orthonormalized first so the elements are exactly orthogonal projectors.
Povm build_discrimination_povm(std::span<const DensityMatrix> states,
                               double overlap_tol = kOverlapTol);

struct Clique {
  std::size_t size;
  std::vector<std::size_t> indices;  // ascending
};

// Exact maximum clique by branch and bound; the lexicographically smallest
// index set wins ties. adjacency[i][j] must be symmetric.
Clique max_clique(const std::vector<std::vector<bool>>& adjacency);

Clique max_distinguishable_subset(std::span<const DensityMatrix> states,
                                  double overlap_tol = kOverlapTol);

// True iff all pairwise distances equal the metric's diameter within tol.
bool simplex_side_check(std::span<const DensityMatrix> states, MetricKind metric,
                        double tol = 1e-9);

// Bures side length sqrt(2 - 2 / sqrt(dim + 1)) of the SIC-POVM simplex.
double sic_simplex_side(Index dim);

// Falsification harness: the largest perfectly distinguishable subset of the
// diagonal states built from `spectra` is never beaten by the same spectra
// rotated by independent Haar unitaries, over `trials` draws.
bool diagonal_reduction_check(std::span<const Spectrum> spectra,
                              double overlap_tol, std::size_t trials,
                              std::uint64_t seed);

}  // namespace qgeom
