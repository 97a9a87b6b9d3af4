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

#include "oracles.hpp"
#include "qgeom/metrics.hpp"
#include "test_support.hpp"

namespace qgeom {
namespace {

using testing::diag;
using testing::half_block_state;

const double kSqrt2 = std::sqrt(2.0);

DensityMatrix random_state(Rng& rng, Index d) {
  return validate_state(random_density(d, 1 + static_cast<Index>(rng.index(d)), rng));
}

TEST(Metrics, NamesAndDiameters) {
  EXPECT_EQ(parse_metric("hs"), MetricKind::kHilbertSchmidt);
  EXPECT_EQ(parse_metric("Hilbert-Schmidt"), MetricKind::kHilbertSchmidt);
  EXPECT_EQ(parse_metric("TRACE"), MetricKind::kTrace);
  EXPECT_EQ(parse_metric("bures"), MetricKind::kBures);
  EXPECT_QG_ERROR(parse_metric("kl"), ErrorCode::kInvalidArgument);
  EXPECT_EQ(to_string(MetricKind::kBures), "bures");
  EXPECT_DOUBLE_EQ(diameter(MetricKind::kHilbertSchmidt), kSqrt2);
  EXPECT_DOUBLE_EQ(diameter(MetricKind::kTrace), 1.0);
  EXPECT_DOUBLE_EQ(diameter(MetricKind::kBures), kSqrt2);
}

TEST(Metrics, OrthogonalSupportExample) {
  DensityMatrix a = diag({1, 0, 0});
  DensityMatrix b = diag({0, 0.5, 0.5});
  EXPECT_NEAR(d_hs(a, b), std::sqrt(1.5), 1e-12);
  EXPECT_NEAR(d_trace(a, b), 1.0, 1e-10);
  EXPECT_NEAR(d_bures(a, b), kSqrt2, 1e-10);
  EXPECT_NEAR(root_fidelity(a, b), 0.0, 1e-12);
  EXPECT_TRUE(orthogonal_supports(a, b));
}

TEST(Metrics, HalfBlockExamples) {
  for (Index n : {4, 8, 16}) {
    DensityMatrix a = half_block_state(n, false);
    DensityMatrix b = half_block_state(n, true);
    EXPECT_NEAR(d_hs(a, b), 2.0 / std::sqrt(static_cast<double>(n)), 1e-10);
    EXPECT_NEAR(d_trace(a, b), 1.0, 1e-10);
    EXPECT_NEAR(d_bures(a, b), kSqrt2, 1e-10);
  }
  EXPECT_NEAR(d_hs(half_block_state(4, false), half_block_state(4, true)), 1.0, 1e-12);
}

TEST(Metrics, IdenticalStates) {
  Rng rng(1);
  for (Index d = 1; d <= 6; ++d) {
    DensityMatrix rho = random_state(rng, d);
    EXPECT_EQ(d_hs(rho, rho), 0.0);
    EXPECT_LE(d_trace(rho, rho), 1e-15);
    EXPECT_LE(d_bures(rho, rho), 1e-9);
    EXPECT_NEAR(root_fidelity(rho, rho), 1.0, 1e-9);
    EXPECT_NEAR(fidelity(rho, rho), 1.0, 1e-9);
    FuchsVdgBounds f = fuchs_vdg_check(rho, rho);
    EXPECT_NEAR(f.lower, 0.0, 1e-9);
    EXPECT_NEAR(f.d_tr, 0.0, 1e-9);
    EXPECT_NEAR(f.upper, 0.0, 1e-4);  // sqrt(1 - F) amplifies rounding in F
  }
}

TEST(Metrics, DimensionMismatch) {
  DensityMatrix a = diag({1, 0});
  DensityMatrix b = diag({1, 0, 0});
  EXPECT_QG_ERROR(d_hs(a, b), ErrorCode::kDimensionMismatch);
  EXPECT_QG_ERROR(d_trace(a, b), ErrorCode::kDimensionMismatch);
  EXPECT_QG_ERROR(root_fidelity(a, b), ErrorCode::kDimensionMismatch);
  EXPECT_QG_ERROR(d_bures(a, b), ErrorCode::kDimensionMismatch);
  EXPECT_QG_ERROR(fuchs_vdg_check(a, b), ErrorCode::kDimensionMismatch);
  EXPECT_QG_ERROR(orthogonal_supports(a, b), ErrorCode::kDimensionMismatch);
  EXPECT_QG_ERROR(bhattacharyya(Spectrum({1.0}), Spectrum({0.5, 0.5})),
                  ErrorCode::kDimensionMismatch);
}

TEST(Metrics, AgreeWithOracles) {
  Rng rng(2);
  for (Index d = 1; d <= 6; ++d) {
    for (int k = 0; k < 50; ++k) {
      DensityMatrix a = random_state(rng, d);
      DensityMatrix b = random_state(rng, d);
      EXPECT_NEAR(d_hs(a, b), testing::hs_oracle(a.matrix(), b.matrix()), 1e-12);
      EXPECT_NEAR(d_trace(a, b), testing::trace_distance_oracle(a.matrix(), b.matrix()),
                  1e-10);
      double rf = testing::root_fidelity_oracle(a.matrix(), b.matrix());
      EXPECT_NEAR(root_fidelity(a, b), rf, 1e-7);
      EXPECT_NEAR(fidelity(a, b), root_fidelity(a, b) * root_fidelity(a, b), 1e-12);
      EXPECT_NEAR(d_bures(a, b), std::sqrt(std::max(0.0, 2.0 - 2.0 * root_fidelity(a, b))),
                  1e-12);
    }
  }
}

TEST(Metrics, PureStateFidelityIsOverlap) {
  DensityMatrix zero = pure_state(testing::ket(2, 0));
  DensityMatrix plus = pure_state(testing::plus_ket());
  EXPECT_NEAR(fidelity(zero, plus), 0.5, 1e-12);
  Rng rng(3);
  for (int k = 0; k < 50; ++k) {
    Unitary u = haar_unitary(4, rng);
    Eigen::VectorXcd psi = u.matrix().col(0), phi = u.matrix().col(1) + 0.3 * u.matrix().col(0);
    phi.normalize();
    EXPECT_NEAR(fidelity(pure_state(psi), pure_state(phi)), std::norm(psi.dot(phi)), 1e-9);
  }
}

TEST(Metrics, DiagonalStatesReduceToClassical) {
  Rng rng(4);
  for (Index d = 1; d <= 6; ++d) {
    for (int k = 0; k < 50; ++k) {
      std::vector<double> p(static_cast<std::size_t>(d)), q(p.size());
      double sp = 0, sq = 0;
      for (auto& x : p) sp += (x = rng.uniform() < 0.3 ? 0.0 : rng.uniform());
      for (auto& x : q) sq += (x = rng.uniform());
      if (sp == 0) { p[0] = 1; sp = 1; }
      for (auto& x : p) x /= sp;
      for (auto& x : q) x /= sq;
      DensityMatrix a = diag(p), b = diag(q);
      EXPECT_NEAR(d_trace(a, b), testing::classical_trace_oracle(p, q), 1e-10);
      EXPECT_NEAR(d_hs(a, b), testing::classical_hs_oracle(p, q), 1e-10);
      EXPECT_NEAR(root_fidelity(a, b), testing::bhattacharyya_oracle(p, q), 1e-10);
      EXPECT_NEAR(d_bures(a, b), testing::classical_bures_oracle(p, q), 1e-7);
      EXPECT_NEAR(classical_trace(p, q), testing::classical_trace_oracle(p, q), 1e-15);
      EXPECT_NEAR(classical_bures(p, q), testing::classical_bures_oracle(p, q), 1e-12);
      EXPECT_NEAR(classical_hs(p, q), testing::classical_hs_oracle(p, q), 1e-15);
    }
  }
}

TEST(Bhattacharyya, Examples) {
  EXPECT_NEAR(bhattacharyya(Spectrum({0.3, 0.7}), Spectrum({0.3, 0.7})), 1.0, 1e-15);
  EXPECT_EQ(bhattacharyya(Spectrum({1, 0}), Spectrum({0, 1})), 0.0);
  EXPECT_NEAR(bhattacharyya(Spectrum({0.5, 0.5}), Spectrum({1, 0})), std::sqrt(0.5), 1e-15);
}

TEST(BuresFromRootFidelity, Clamping) {
  EXPECT_EQ(bures_from_root_fidelity(1.0 + 1e-12), 0.0);
  EXPECT_EQ(bures_from_root_fidelity(1.0 - 1e-15), 0.0);
  EXPECT_NEAR(bures_from_root_fidelity(0.0), kSqrt2, 1e-15);
  EXPECT_NEAR(bures_from_root_fidelity(-1e-12), kSqrt2, 1e-15);
  EXPECT_NEAR(bures_from_root_fidelity(0.5), 1.0, 1e-15);
}

TEST(FuchsVanDeGraaf, Examples) {
  FuchsVdgBounds f = fuchs_vdg_check(diag({1, 0, 0}), diag({0, 0.5, 0.5}));
  EXPECT_NEAR(f.lower, 1.0, 1e-12);
  EXPECT_NEAR(f.d_tr, 1.0, 1e-12);
  EXPECT_NEAR(f.upper, 1.0, 1e-12);
  Rng rng(5);
  for (Index d = 2; d <= 6; ++d) {
    for (int k = 0; k < 200; ++k) {
      DensityMatrix a = random_state(rng, d), b = random_state(rng, d);
      FuchsVdgBounds g = fuchs_vdg_check(a, b);
      EXPECT_LE(g.lower, g.d_tr + 1e-9);
      EXPECT_LE(g.d_tr, g.upper + 1e-9);
    }
  }
}

TEST(OrthogonalSupports, Examples) {
  DensityMatrix rho = diag({0.2, 0.8, 0.0});
  EXPECT_FALSE(orthogonal_supports(rho, rho));
  Rng rng(6);
  DensityMatrix f1 = validate_state(random_density(3, 3, rng));
  DensityMatrix f2 = validate_state(random_density(3, 3, rng));
  EXPECT_FALSE(orthogonal_supports(f1, f2));
  EXPECT_NEAR(support_overlap(f1, f2), 3.0, 1e-8);
}

TEST(MetricAxioms, RandomTriples) {
  Rng rng(7);
  for (Index d = 2; d <= 4; ++d) {
    for (int k = 0; k < 500; ++k) {
      DensityMatrix a = random_state(rng, d), b = random_state(rng, d), c = random_state(rng, d);
      for (MetricKind m : {MetricKind::kHilbertSchmidt, MetricKind::kTrace, MetricKind::kBures}) {
        double ab = distance(m, a, b);
        EXPECT_NEAR(ab, distance(m, b, a), 1e-10);
        EXPECT_LE(distance(m, a, a), 1e-9);
        EXPECT_LE(distance(m, a, c), ab + distance(m, b, c) + 1e-9);
        EXPECT_LE(ab, diameter(m) + 1e-9);
      }
    }
  }
}

TEST(Equivalence, OrthogonalPairsHaveMaximalDistance) {
  Rng rng(8);
  for (Index d = 2; d <= 6; ++d) {
    for (int k = 0; k < 100; ++k) {
      Unitary u = haar_unitary(d, rng);
      Index split = 1 + static_cast<Index>(rng.index(d - 1));
      ComplexMatrix a = u.matrix().leftCols(split);
      ComplexMatrix b = u.matrix().rightCols(d - split);
      DensityMatrix ra = validate_state(a * a.adjoint() / static_cast<double>(split));
      DensityMatrix rb = validate_state(b * b.adjoint() / static_cast<double>(d - split));
      EXPECT_LE(support_overlap(ra, rb), 1e-10);
      EXPECT_NEAR(d_trace(ra, rb), 1.0, 1e-8);
      EXPECT_NEAR(d_bures(ra, rb), kSqrt2, 1e-8);
      EXPECT_NEAR((ra.matrix() * rb.matrix()).trace().real(), 0.0, 1e-12);
    }
  }
}

TEST(Monotonicity, TraceAndBuresContractUnderChannels) {
  Rng rng(9);
  for (Index d = 2; d <= 4; ++d) {
    for (int k = 0; k < 200; ++k) {
      DensityMatrix a = random_state(rng, d), b = random_state(rng, d);
      Index env = 1 + static_cast<Index>(rng.index(d));
      std::uint64_t seed = rng.next_u64();
      DensityMatrix ca = validate_state(random_channel_apply(a.matrix(), env, seed));
      DensityMatrix cb = validate_state(random_channel_apply(b.matrix(), env, seed));
      EXPECT_LE(d_trace(ca, cb), d_trace(a, b) + 1e-8);
      EXPECT_LE(d_bures(ca, cb), d_bures(a, b) + 1e-8);
    }
  }
}

}  // namespace
}  // namespace qgeom
