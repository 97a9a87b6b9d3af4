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

#include "qgeom/discrimination.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <string>

namespace qgeom {
namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

Index common_dim(std::span<const DensityMatrix> states) {
  if (states.empty()) throw Error(ErrorCode::kEmptySet, "no states given");
  const Index dim = states.front().dim();
  for (const DensityMatrix& s : states) {
    if (s.dim() != dim) {
      throw Error(ErrorCode::kDimensionMismatch,
                  "states of dimension " + std::to_string(dim) + " and " +
                      std::to_string(s.dim()));
    }
  }
  return dim;
}

using Mask = std::uint32_t;

struct CliqueSearch {
  std::vector<Mask> neighbors;
  Mask best = 0;
  int best_size = 0;

  // Candidates are expanded in ascending index order, so cliques are visited
  // in lexicographic order and the first maximum found is the smallest one.
  void expand(Mask current, int size, Mask candidates) {
    if (size > best_size) {
      best_size = size;
      best = current;
    }
    while (candidates != 0) {
      if (size + std::popcount(candidates) <= best_size) return;
      int v = std::countr_zero(candidates);
      Mask bit = Mask{1} << v;
      candidates &= ~bit;
      expand(current | bit, size + 1, candidates & neighbors[v]);
    }
  }
};

}  // namespace

// ---------------------------------------------------------------------------
// Povm

Povm::Povm(std::vector<ComplexMatrix> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(ErrorCode::kInvalidArgument, "empty POVM");
  const Index dim = elements_.front().rows();
  ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
  for (const ComplexMatrix& a : elements_) {
    require_square_finite(a, "POVM element");
    if (a.rows() != dim) {
      throw Error(ErrorCode::kDimensionMismatch, "POVM elements differ in size");
    }
    double herm = hermiticity_residual(a);
    if (herm > kPovmHermiticityTol) {
      throw Error(ErrorCode::kInvalidArgument,
                  "POVM element not Hermitian: " + fmt(herm));
    }
    EigenDecomposition eig = herm_eig(a, kPovmHermiticityTol);
    if (eig.values(0) < -kPovmEigenTol ||
        eig.values(dim - 1) > 1.0 + kPovmEigenTol) {
      throw Error(ErrorCode::kInvalidArgument,
                  "POVM element eigenvalues outside [0, 1]");
    }
    sum += a;
  }
  double r = max_abs(sum - ComplexMatrix::Identity(dim, dim));
  if (r > kPovmCompletenessTol) {
    throw Error(ErrorCode::kInvalidArgument,
                "POVM elements do not sum to identity: " + fmt(r));
  }
}

double Povm::probability(std::size_t k, const DensityMatrix& rho) const {
  if (k >= elements_.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "POVM element index");
  }
  if (rho.dim() != dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "state and POVM differ in size");
  }
  return (elements_[k] * rho.matrix()).trace().real();
}

double Povm::completeness_residual() const {
  ComplexMatrix sum = ComplexMatrix::Zero(dim(), dim());
  for (const ComplexMatrix& a : elements_) sum += a;
  return max_abs(sum - ComplexMatrix::Identity(dim(), dim()));
}

// ---------------------------------------------------------------------------

DiscriminationReport can_discriminate(std::span<const DensityMatrix> states,
                                      double overlap_tol) {
  const Index dim = common_dim(states);
  std::vector<Projector> supports;
  supports.reserve(states.size());
  std::size_t rank_sum = 0;
  for (const DensityMatrix& s : states) {
    supports.push_back(support_projector(s));
    rank_sum += supports.back().rank();
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < supports.size(); ++i) {
    for (std::size_t j = i + 1; j < supports.size(); ++j) {
      worst = std::max(worst, projector_overlap(supports[i], supports[j]));
    }
  }
  DiscriminationReport report{worst <= overlap_tol && rank_sum <= static_cast<std::size_t>(dim),
                              rank_sum, dim, worst, std::nullopt};
  if (report.discriminable) {
    report.povm = build_discrimination_povm(states, overlap_tol);
  }
  return report;
}

Povm build_discrimination_povm(std::span<const DensityMatrix> states,
                               double overlap_tol) {
  const Index dim = common_dim(states);
  std::vector<Projector> supports;
  Index total = 0;
  for (const DensityMatrix& s : states) {
    supports.push_back(support_projector(s));
    total += static_cast<Index>(supports.back().rank());
  }
  for (std::size_t i = 0; i < supports.size(); ++i) {
    for (std::size_t j = i + 1; j < supports.size(); ++j) {
      double ov = projector_overlap(supports[i], supports[j]);
      if (ov > overlap_tol) {
        throw Error(ErrorCode::kNotDiscriminable,
                    "supports of states " + std::to_string(i) + " and " +
                        std::to_string(j) + " overlap: Tr(PiPj) = " + fmt(ov));
      }
    }
  }
  if (total > dim) {
    throw Error(ErrorCode::kNotDiscriminable,
                "rank sum " + std::to_string(total) + " exceeds dimension " +
                    std::to_string(dim));
  }

  // Symmetric (Loewdin) orthonormalization of the stacked support bases:
  // S -> S (S^dag S)^{-1/2}. Exact orthogonality makes completeness and
  // positivity hold to machine precision.
  ComplexMatrix stacked(dim, total);
  Index col = 0;
  for (const Projector& p : supports) {
    const auto r = static_cast<Index>(p.rank());
    stacked.middleCols(col, r) = p.basis();
    col += r;
  }
  ComplexMatrix gram = stacked.adjoint() * stacked;
  EigenDecomposition eig = herm_eig(gram, 1e-8);
  RealVector inv_root = eig.values.unaryExpr([](double x) { return 1.0 / std::sqrt(x); });
  const ComplexMatrix& v = eig.vectors.matrix();
  ComplexMatrix ortho = stacked * (v * inv_root.cast<Complex>().asDiagonal() * v.adjoint());

  std::vector<ComplexMatrix> elements;
  ComplexMatrix rest = ComplexMatrix::Identity(dim, dim);
  col = 0;
  for (const Projector& p : supports) {
    const auto r = static_cast<Index>(p.rank());
    ComplexMatrix block = ortho.middleCols(col, r);
    ComplexMatrix a = block * block.adjoint();
    a = 0.5 * (a + a.adjoint());
    rest -= a;
    elements.push_back(std::move(a));
    col += r;
  }
  rest = 0.5 * (rest + rest.adjoint());
  elements.push_back(std::move(rest));
  return Povm(std::move(elements));
}

// ---------------------------------------------------------------------------

Clique max_clique(const std::vector<std::vector<bool>>& adjacency) {
  const std::size_t n = adjacency.size();
  if (n > kCliqueCap) {
    throw Error(ErrorCode::kSetTooLarge,
                "exact clique search capped at " + std::to_string(kCliqueCap));
  }
  CliqueSearch search;
  search.neighbors.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && adjacency[i][j]) search.neighbors[i] |= Mask{1} << j;
    }
  }
  Mask all = n == 0 ? 0 : static_cast<Mask>((std::uint64_t{1} << n) - 1);
  search.expand(0, 0, all);

  Clique out{static_cast<std::size_t>(search.best_size), {}};
  for (std::size_t i = 0; i < n; ++i) {
    if (search.best & (Mask{1} << i)) out.indices.push_back(i);
  }
  return out;
}

Clique max_distinguishable_subset(std::span<const DensityMatrix> states,
                                  double overlap_tol) {
  if (states.size() > kCliqueCap) {
    throw Error(ErrorCode::kSetTooLarge,
                "exact clique search capped at " + std::to_string(kCliqueCap));
  }
  if (states.empty()) return {0, {}};
  common_dim(states);
  std::vector<Projector> supports;
  for (const DensityMatrix& s : states) supports.push_back(support_projector(s));
  const std::size_t n = states.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool edge = projector_overlap(supports[i], supports[j]) <= overlap_tol;
      adj[i][j] = adj[j][i] = edge;
    }
  }
  return max_clique(adj);
}

bool simplex_side_check(std::span<const DensityMatrix> states, MetricKind metric,
                        double tol) {
  if (metric == MetricKind::kHilbertSchmidt) {
    throw Error(ErrorCode::kUnsupportedMetric,
                "maximal distance does not characterize orthogonality for HS");
  }
  if (states.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "a simplex needs at least two states");
  }
  common_dim(states);
  const double side = diameter(metric);
  for (std::size_t i = 0; i < states.size(); ++i) {
    for (std::size_t j = i + 1; j < states.size(); ++j) {
      if (std::abs(distance(metric, states[i], states[j]) - side) > tol) return false;
    }
  }
  return true;
}

double sic_simplex_side(Index dim) {
  if (dim < 2) throw Error(ErrorCode::kInvalidDimension, "dim must be >= 2");
  return std::sqrt(2.0 - 2.0 / std::sqrt(static_cast<double>(dim) + 1.0));
}

bool diagonal_reduction_check(std::span<const Spectrum> spectra,
                              double overlap_tol, std::size_t trials,
                              std::uint64_t seed) {
  if (spectra.size() > kCliqueCap) {
    throw Error(ErrorCode::kSetTooLarge,
                "exact clique search capped at " + std::to_string(kCliqueCap));
  }
  if (spectra.empty()) return true;
  const std::size_t n = spectra.front().size();
  for (const Spectrum& s : spectra) {
    if (s.size() != n) throw Error(ErrorCode::kDimensionMismatch, "spectra lengths differ");
  }
  std::vector<DensityMatrix> diagonal;
  for (const Spectrum& s : spectra) diagonal.push_back(diag_state(s));
  const std::size_t base = max_distinguishable_subset(diagonal, overlap_tol).size;

  Rng root(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Rng trial = root.split(t);
    std::vector<DensityMatrix> rotated;
    for (std::size_t k = 0; k < diagonal.size(); ++k) {
      Rng rng = trial.split(k);
      Unitary u = haar_unitary(static_cast<Index>(n), rng);
      ComplexMatrix m = u.conjugate(diagonal[k].matrix());
      rotated.push_back(validate_state(0.5 * (m + m.adjoint())));
    }
    if (max_distinguishable_subset(rotated, overlap_tol).size > base) return false;
  }
  return true;
}

}  // namespace qgeom
