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

#include <gtest/gtest.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "qgeom/discrimination.hpp"
#include "test_support.hpp"

namespace qgeom {
namespace {

using testing::diag;
using testing::ket;
using testing::plus_ket;

// Random states with mutually orthogonal supports: disjoint column blocks of
// one Haar unitary, each carrying a random positive spectrum.
std::vector<DensityMatrix> orthogonal_family(Index dim, std::size_t count, Rng& rng) {
  Unitary u = haar_unitary(dim, rng);
  std::vector<Index> ranks(count, 1);
  Index spare = dim - static_cast<Index>(count);
  for (std::size_t k = 0; k < count && spare > 0; ++k) {
    Index extra = static_cast<Index>(rng.index(static_cast<std::size_t>(spare) + 1));
    ranks[k] += extra;
    spare -= extra;
  }
  std::vector<DensityMatrix> out;
  Index col = 0;
  for (Index r : ranks) {
    ComplexMatrix block = u.matrix().middleCols(col, r);
    RealVector w(r);
    for (Index i = 0; i < r; ++i) w(i) = 0.1 + rng.uniform();
    w /= w.sum();
    ComplexMatrix m = block * w.cast<Complex>().asDiagonal() * block.adjoint();
    out.push_back(validate_state(0.5 * (m + m.adjoint())));
    col += r;
  }
  return out;
}

TEST(Povm, ValidatesElements) {
  Povm ok({testing::diag_matrix({1, 0}), testing::diag_matrix({0, 1})});
  EXPECT_EQ(ok.size(), 2u);
  EXPECT_EQ(ok.dim(), 2);
  EXPECT_NEAR(ok.completeness_residual(), 0.0, 1e-15);
  EXPECT_NEAR(ok.probability(0, diag({0.25, 0.75})), 0.25, 1e-15);

  EXPECT_QG_ERROR(Povm({}), ErrorCode::kInvalidArgument);
  EXPECT_QG_ERROR(Povm({testing::diag_matrix({1, 0})}), ErrorCode::kInvalidArgument);
  EXPECT_QG_ERROR(Povm({testing::diag_matrix({1.5, 0}), testing::diag_matrix({-0.5, 1})}),
                  ErrorCode::kInvalidArgument);
  ComplexMatrix skew = ComplexMatrix::Zero(2, 2);
  skew(0, 1) = 0.5;
  EXPECT_QG_ERROR(Povm({ComplexMatrix::Identity(2, 2) + skew, -skew}),
                  ErrorCode::kInvalidArgument);
  EXPECT_QG_ERROR(Povm({ComplexMatrix::Identity(2, 2), ComplexMatrix::Zero(3, 3)}),
                  ErrorCode::kDimensionMismatch);
  EXPECT_QG_ERROR(ok.probability(2, diag({1, 0})), ErrorCode::kIndexOutOfRange);
  EXPECT_QG_ERROR(ok.probability(0, diag({1, 0, 0})), ErrorCode::kDimensionMismatch);
}

TEST(Discrimination, OrthogonalExample) {
  std::vector<DensityMatrix> states{diag({1, 0, 0}), diag({0, 0.5, 0.5})};
  DiscriminationReport r = can_discriminate(states);
  ASSERT_TRUE(r.discriminable);
  EXPECT_EQ(r.rank_sum, 3u);
  EXPECT_EQ(r.dim, 3);
  EXPECT_NEAR(r.max_pairwise_overlap, 0.0, 1e-15);
  ASSERT_TRUE(r.povm.has_value());
  const auto& e = r.povm->elements();
  ASSERT_EQ(e.size(), 3u);
  EXPECT_LT(max_abs(e[0] - testing::diag_matrix({1, 0, 0})), 1e-12);
  EXPECT_LT(max_abs(e[1] - testing::diag_matrix({0, 1, 1})), 1e-12);
  EXPECT_LT(max_abs(e[2]), 1e-12);
}

TEST(Discrimination, FullRankPairIsNot) {
  std::vector<DensityMatrix> states{diag({0.5, 0.5}), diag({0.9, 0.1})};
  DiscriminationReport r = can_discriminate(states);
  EXPECT_FALSE(r.discriminable);
  EXPECT_FALSE(r.povm.has_value());
  EXPECT_EQ(r.rank_sum, 4u);
  EXPECT_QG_ERROR(build_discrimination_povm(states), ErrorCode::kNotDiscriminable);
}

TEST(Discrimination, SingleStateAndErrors) {
  std::vector<DensityMatrix> one{diag({0.3, 0.7})};
  DiscriminationReport r = can_discriminate(one);
  EXPECT_TRUE(r.discriminable);
  EXPECT_EQ(r.max_pairwise_overlap, 0.0);

  std::vector<DensityMatrix> none;
  EXPECT_QG_ERROR(can_discriminate(none), ErrorCode::kEmptySet);
  std::vector<DensityMatrix> mixed{diag({1, 0}), diag({0, 0, 1})};
  EXPECT_QG_ERROR(can_discriminate(mixed), ErrorCode::kDimensionMismatch);
}

TEST(Discrimination, BasisStatesLeaveNoInconclusiveOutcome) {
  Rng rng(21);
  for (Index d = 2; d <= 6; ++d) {
    Unitary u = haar_unitary(d, rng);
    std::vector<DensityMatrix> states;
    for (Index i = 0; i < d; ++i) states.push_back(pure_state(u.matrix().col(i)));
    Povm povm = build_discrimination_povm(states);
    ASSERT_EQ(povm.size(), static_cast<std::size_t>(d) + 1);
    EXPECT_LT(max_abs(povm.elements().back()), 1e-10);
  }
}

TEST(Discrimination, ConstructedSetsSatisfyPovmConditions) {
  Rng rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    Index d = 2 + static_cast<Index>(rng.index(5));
    std::size_t k = 1 + rng.index(static_cast<std::size_t>(d));
    auto states = orthogonal_family(d, k, rng);
    DiscriminationReport r = can_discriminate(states);
    ASSERT_TRUE(r.discriminable);
    const Povm& povm = *r.povm;
    ASSERT_EQ(povm.size(), k + 1);
    EXPECT_LE(povm.completeness_residual(), 1e-8);
    for (const ComplexMatrix& a : povm.elements()) {
      RealVector ev = testing::hermitian_eigenvalues(a);
      EXPECT_GE(ev.minCoeff(), -1e-8);
      EXPECT_LE(ev.maxCoeff(), 1 + 1e-8);
    }
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_NEAR(povm.probability(i, states[i]), 1.0, 1e-8);
      for (std::size_t j = 0; j < k; ++j) {
        if (j != i) {
          EXPECT_NEAR(povm.probability(i, states[j]), 0.0, 1e-8);
        }
      }
      EXPECT_NEAR(povm.probability(k, states[i]), 0.0, 1e-8);
    }
  }
}

TEST(Discrimination, OverlappingSupportsAreRejected) {
  Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    Index d = 2 + static_cast<Index>(rng.index(5));
    auto states = orthogonal_family(d, 2, rng);
    // Mixing a little of the first state into the second makes the supports
    // overlap while keeping both valid.
    ComplexMatrix m = 0.9 * states[1].matrix() + 0.1 * states[0].matrix();
    states[1] = validate_state(m);
    DiscriminationReport r = can_discriminate(states);
    EXPECT_FALSE(r.discriminable);
    EXPECT_GT(r.max_pairwise_overlap, kOverlapTol);
    // Helstrom: the best two-outcome success is (1 + D_tr) / 2 < 1.
    EXPECT_LT(testing::trace_distance_oracle(states[0].matrix(), states[1].matrix()),
              1.0 - 1e-6);
  }
}

TEST(Discrimination, ProjectiveSearchFindsNoPerfectPovmForOverlaps) {
  // Every assignment of basis vectors to {state 0, state 1, inconclusive},
  // over the eigenbases, the computational basis and Haar bases.
  Rng rng(28);
  for (Index d : {2, 3}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto states = orthogonal_family(d, 2, rng);
      states[1] = validate_state(0.7 * states[1].matrix() + 0.3 * states[0].matrix());
      ASSERT_FALSE(can_discriminate(states).discriminable);

      std::vector<ComplexMatrix> bases{ComplexMatrix::Identity(d, d),
                                       states[0].eigenvectors().matrix(),
                                       states[1].eigenvectors().matrix()};
      for (int k = 0; k < 100; ++k) bases.push_back(haar_unitary(d, rng).matrix());
      std::size_t assignments = 1;
      for (Index i = 0; i < d; ++i) assignments *= 3;
      double best = 0.0;
      for (const ComplexMatrix& u : bases) {
        for (std::size_t code = 0; code < assignments; ++code) {
          std::vector<ComplexMatrix> e(3, ComplexMatrix::Zero(d, d));
          std::size_t c = code;
          for (Index i = 0; i < d; ++i, c /= 3) {
            e[c % 3] += u.col(i) * u.col(i).adjoint();
          }
          Povm povm(e);
          best = std::max(best, std::min(povm.probability(0, states[0]),
                                         povm.probability(1, states[1])));
        }
      }
      EXPECT_LT(best, 1.0 - 1e-6) << "dim " << d;
    }
  }
}

TEST(Discrimination, RankSumBeyondDimensionIsRejected) {
  std::vector<DensityMatrix> states{diag({1, 0}), diag({0, 1}), diag({0.5, 0.5})};
  DiscriminationReport r = can_discriminate(states);
  EXPECT_FALSE(r.discriminable);
  EXPECT_EQ(r.rank_sum, 4u);
}

TEST(Discrimination, NoRandomPovmSeparatesOverlappingStates) {
  // Pure states with |<a|b>|^2 = c cannot both be identified with certainty:
  // for any POVM, p(a|a) + p(b|b) <= 1 + sqrt(1 - c).
  Rng rng(24);
  std::vector<DensityMatrix> states{pure_state(ket(2, 0)), pure_state(plus_ket())};
  const double cap = 1.0 + std::sqrt(0.5);
  for (int trial = 0; trial < 500; ++trial) {
    Unitary u = haar_unitary(2, rng);
    double t = rng.uniform();
    ComplexMatrix e0 = t * u.matrix().col(0) * u.matrix().col(0).adjoint();
    Povm povm({e0, ComplexMatrix::Identity(2, 2) - e0});
    double s = povm.probability(0, states[0]) + povm.probability(1, states[1]);
    EXPECT_LE(s, cap + 1e-12);
  }
}

TEST(Clique, Examples) {
  std::vector<DensityMatrix> states{pure_state(ket(2, 0)), pure_state(ket(2, 1)),
                                    pure_state(plus_ket())};
  Clique c = max_distinguishable_subset(states);
  EXPECT_EQ(c.size, 2u);
  EXPECT_EQ(c.indices, (std::vector<std::size_t>{0, 1}));

  std::vector<DensityMatrix> none;
  EXPECT_EQ(max_distinguishable_subset(none).size, 0u);

  std::vector<std::vector<bool>> empty_graph(4, std::vector<bool>(4, false));
  Clique single = max_clique(empty_graph);
  EXPECT_EQ(single.size, 1u);
  EXPECT_EQ(single.indices, (std::vector<std::size_t>{0}));
}

TEST(Clique, MatchesExhaustiveSearch) {
  Rng rng(25);
  for (int trial = 0; trial < 100; ++trial) {
    std::size_t n = 1 + rng.index(12);
    double density = rng.uniform();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        adj[i][j] = adj[j][i] = rng.uniform() < density;
      }
    }
    // Exhaustive oracle over all vertex subsets.
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      bool clique = true;
      for (std::size_t i = 0; i < n && clique; ++i) {
        for (std::size_t j = i + 1; j < n && clique; ++j) {
          if ((mask >> i & 1u) && (mask >> j & 1u) && !adj[i][j]) clique = false;
        }
      }
      if (clique) best = std::max<std::size_t>(best, std::popcount(mask));
    }
    Clique c = max_clique(adj);
    EXPECT_EQ(c.size, best);
    ASSERT_EQ(c.indices.size(), c.size);
    EXPECT_TRUE(std::is_sorted(c.indices.begin(), c.indices.end()));
    for (std::size_t a = 0; a < c.indices.size(); ++a) {
      for (std::size_t b = a + 1; b < c.indices.size(); ++b) {
        EXPECT_TRUE(adj[c.indices[a]][c.indices[b]]);
      }
    }
  }
}

TEST(Clique, Cap) {
  std::vector<std::vector<bool>> big(kCliqueCap + 1,
                                     std::vector<bool>(kCliqueCap + 1, true));
  EXPECT_QG_ERROR(max_clique(big), ErrorCode::kSetTooLarge);
  std::vector<std::vector<bool>> at_cap(kCliqueCap, std::vector<bool>(kCliqueCap, true));
  EXPECT_EQ(max_clique(at_cap).size, kCliqueCap);
}

TEST(Simplex, OrthogonalSetsAreMaximal) {
  Rng rng(26);
  for (int trial = 0; trial < 50; ++trial) {
    Index d = 2 + static_cast<Index>(rng.index(5));
    auto states = orthogonal_family(d, 2 + rng.index(static_cast<std::size_t>(d) - 1), rng);
    EXPECT_TRUE(simplex_side_check(states, MetricKind::kTrace));
    EXPECT_TRUE(simplex_side_check(states, MetricKind::kBures, 1e-7));
  }
  std::vector<DensityMatrix> overlap{pure_state(ket(2, 0)), pure_state(plus_ket())};
  EXPECT_FALSE(simplex_side_check(overlap, MetricKind::kTrace));
  EXPECT_FALSE(simplex_side_check(overlap, MetricKind::kBures));
}

TEST(Simplex, Errors) {
  std::vector<DensityMatrix> two{diag({1, 0}), diag({0, 1})};
  EXPECT_QG_ERROR(simplex_side_check(two, MetricKind::kHilbertSchmidt),
                  ErrorCode::kUnsupportedMetric);
  std::vector<DensityMatrix> one{diag({1, 0})};
  EXPECT_QG_ERROR(simplex_side_check(one, MetricKind::kTrace), ErrorCode::kInvalidArgument);
}

TEST(Sic, SideLength) {
  EXPECT_NEAR(sic_simplex_side(3), 1.0, 1e-12);
  EXPECT_NEAR(sic_simplex_side(2), std::sqrt(2.0 - 2.0 / std::sqrt(3.0)), 1e-15);
  EXPECT_NEAR(sic_simplex_side(2), 0.9194, 1e-4);
  for (Index d = 2; d <= 64; ++d) {
    EXPECT_LT(sic_simplex_side(d), std::sqrt(2.0));
    if (d > 2) {
      EXPECT_GT(sic_simplex_side(d), sic_simplex_side(d - 1));
    }
  }
  EXPECT_QG_ERROR(sic_simplex_side(1), ErrorCode::kInvalidDimension);
}

TEST(Sic, QubitTetrahedronMatchesSide) {
  // Bloch vectors of a regular tetrahedron give the qubit SIC set.
  const double r = 1.0 / std::sqrt(3.0);
  const double v[4][3] = {{r, r, r}, {r, -r, -r}, {-r, r, -r}, {-r, -r, r}};
  std::vector<DensityMatrix> sic;
  for (const auto& b : v) {
    ComplexMatrix m(2, 2);
    m << Complex(1 + b[2], 0), Complex(b[0], -b[1]), Complex(b[0], b[1]),
        Complex(1 - b[2], 0);
    sic.push_back(validate_state(0.5 * m));
  }
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      EXPECT_NEAR(fidelity(sic[i], sic[j]), 1.0 / 3.0, 1e-12);
      EXPECT_NEAR(d_bures(sic[i], sic[j]), sic_simplex_side(2), 1e-10);
    }
  }
}

TEST(DiagonalReduction, Examples) {
  std::vector<Spectrum> basis{Spectrum({1, 0, 0}), Spectrum({0, 1, 0}), Spectrum({0, 0, 1})};
  EXPECT_TRUE(diagonal_reduction_check(basis, kOverlapTol, 20, 1));
  std::vector<Spectrum> mixed{Spectrum({0.5, 0.5}), Spectrum({0.9, 0.1})};
  EXPECT_TRUE(diagonal_reduction_check(mixed, kOverlapTol, 20, 2));
  std::vector<Spectrum> none;
  EXPECT_TRUE(diagonal_reduction_check(none, kOverlapTol, 5, 3));
}

TEST(DiagonalReduction, RandomEnsembles) {
  Rng rng(27);
  for (int trial = 0; trial < 20; ++trial) {
    Index d = 2 + static_cast<Index>(rng.index(3));
    std::size_t k = 1 + rng.index(5);
    std::vector<Spectrum> spectra;
    for (std::size_t i = 0; i < k; ++i) {
      Index rank = 1 + static_cast<Index>(rng.index(static_cast<std::size_t>(d)));
      spectra.push_back(validate_state(random_density(d, rank, rng)).spectrum());
    }
    EXPECT_TRUE(diagonal_reduction_check(spectra, kOverlapTol, 10, rng.next_u64()));
  }
}

TEST(DiagonalReduction, Errors) {
  std::vector<Spectrum> uneven{Spectrum({1, 0}), Spectrum({1, 0, 0})};
  EXPECT_QG_ERROR(diagonal_reduction_check(uneven, kOverlapTol, 1, 1),
                  ErrorCode::kDimensionMismatch);
  std::vector<Spectrum> many(kCliqueCap + 1, Spectrum({1, 0}));
  EXPECT_QG_ERROR(diagonal_reduction_check(many, kOverlapTol, 1, 1),
                  ErrorCode::kSetTooLarge);
}

}  // namespace
}  // namespace qgeom
