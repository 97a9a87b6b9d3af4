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

#include <span>
#include <string_view>

#include "qgeom/states.hpp"

namespace qgeom {

enum class MetricKind { kHilbertSchmidt, kTrace, kBures };

std::string_view to_string(MetricKind kind);
// Accepts "hs", "hilbert-schmidt", "trace", "bures" (case-insensitive).
MetricKind parse_metric(std::string_view name);

// Largest distance between any two states: sqrt(2), 1, sqrt(2).
double diameter(MetricKind kind);

double d_hs(const DensityMatrix& rho1, const DensityMatrix& rho2);
double d_trace(const DensityMatrix& rho1, const DensityMatrix& rho2);
// Tr|sqrt(rho1) sqrt(rho2)|, evaluated as a trace norm (SVD).
double root_fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);
double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2);
double d_bures(const DensityMatrix& rho1, const DensityMatrix& rho2);
double distance(MetricKind kind, const DensityMatrix& rho1,
                const DensityMatrix& rho2);

// Bures distance as a function of the root fidelity; the radicand is clamped
// to [0, 2].
double bures_from_root_fidelity(double root_fid);

double bhattacharyya(const Spectrum& p, const Spectrum& q);
double bhattacharyya(std::span<const double> p, std::span<const double> q);

// Classical counterparts on probability vectors, compared index by index.
double classical_hs(std::span<const double> p, std::span<const double> q);
double classical_trace(std::span<const double> p, std::span<const double> q);
double classical_bures(std::span<const double> p, std::span<const double> q);
double classical_distance(MetricKind kind, std::span<const double> p,
                          std::span<const double> q);

struct FuchsVdgBounds {
  double lower;  // 1 - sqrt(F)
  double d_tr;
  double upper;  // sqrt(1 - F)
};

FuchsVdgBounds fuchs_vdg_check(const DensityMatrix& rho1,
                               const DensityMatrix& rho2);

inline constexpr double kOverlapTol = 1e-8;

// Tr(P1 P2) for the support projectors.
double support_overlap(const DensityMatrix& rho1, const DensityMatrix& rho2,
                       double rank_tol = kRankTol);
double projector_overlap(const Projector& a, const Projector& b);

bool orthogonal_supports(const DensityMatrix& rho1, const DensityMatrix& rho2,
                         double tol = kOverlapTol);

}  // namespace qgeom
