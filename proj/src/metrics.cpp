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

#include "qgeom/metrics.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace qgeom {
namespace {

void require_same_dim(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "states of dimension " + std::to_string(a.dim()) + " and " +
                    std::to_string(b.dim()));
  }
}

void require_same_len(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "vectors of length " + std::to_string(p.size()) + " and " +
                    std::to_string(q.size()));
  }
}

}  // namespace

std::string_view to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::kHilbertSchmidt: return "hs";
    case MetricKind::kTrace: return "trace";
    case MetricKind::kBures: return "bures";
  }
  return "unknown";
}

MetricKind parse_metric(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  if (lower == "hs" || lower == "hilbert-schmidt" || lower == "hilbertschmidt") {
    return MetricKind::kHilbertSchmidt;
  }
  if (lower == "trace" || lower == "tr") return MetricKind::kTrace;
  if (lower == "bures") return MetricKind::kBures;
  throw Error(ErrorCode::kInvalidArgument, "unknown metric '" + lower + "'");
}

double diameter(MetricKind kind) {
  switch (kind) {
    case MetricKind::kHilbertSchmidt: return std::sqrt(2.0);
    case MetricKind::kTrace: return 1.0;
    case MetricKind::kBures: return std::sqrt(2.0);
  }
  return 0.0;
}

double d_hs(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_same_dim(rho1, rho2);
  // Frobenius norm of a Hermitian difference: sqrt(Tr (rho1 - rho2)^2).
  return (rho1.matrix() - rho2.matrix()).norm();
}

double d_trace(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_same_dim(rho1, rho2);
  return 0.5 * trace_norm(rho1.matrix() - rho2.matrix());
}

double root_fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  require_same_dim(rho1, rho2);
  return trace_norm(rho1.sqrt() * rho2.sqrt());
}

double fidelity(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  double r = root_fidelity(rho1, rho2);
  return r * r;
}

double bures_from_root_fidelity(double root_fid) {
  // Below the floor the radicand is rounding noise of a root fidelity equal
  // to one; rooting it would turn ~1e-15 into ~1e-8.
  constexpr double kRadicandFloor = 1e-13;
  double radicand = std::clamp(2.0 - 2.0 * root_fid, 0.0, 2.0);
  return radicand < kRadicandFloor ? 0.0 : std::sqrt(radicand);
}

double d_bures(const DensityMatrix& rho1, const DensityMatrix& rho2) {
  return bures_from_root_fidelity(root_fidelity(rho1, rho2));
}

double distance(MetricKind kind, const DensityMatrix& rho1,
                const DensityMatrix& rho2) {
  switch (kind) {
    case MetricKind::kHilbertSchmidt: return d_hs(rho1, rho2);
    case MetricKind::kTrace: return d_trace(rho1, rho2);
    case MetricKind::kBures: return d_bures(rho1, rho2);
  }
  throw Error(ErrorCode::kUnsupportedMetric, "unknown metric");
}

double bhattacharyya(std::span<const double> p, std::span<const double> q) {
  require_same_len(p, q);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    acc += std::sqrt(std::max(p[i], 0.0) * std::max(q[i], 0.0));
  }
  return acc;
}

double bhattacharyya(const Spectrum& p, const Spectrum& q) {
  return bhattacharyya(std::span<const double>(p.values()),
                       std::span<const double>(q.values()));
}

double classical_hs(std::span<const double> p, std::span<const double> q) {
  require_same_len(p, q);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(acc);
}

double classical_trace(std::span<const double> p, std::span<const double> q) {
  require_same_len(p, q);
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
  return 0.5 * acc;
}

double classical_bures(std::span<const double> p, std::span<const double> q) {
  return bures_from_root_fidelity(bhattacharyya(p, q));
}

double classical_distance(MetricKind kind, std::span<const double> p,
                          std::span<const double> q) {
  switch (kind) {
    case MetricKind::kHilbertSchmidt: return classical_hs(p, q);
    case MetricKind::kTrace: return classical_trace(p, q);
    case MetricKind::kBures: return classical_bures(p, q);
  }
  throw Error(ErrorCode::kUnsupportedMetric, "unknown metric");
}

FuchsVdgBounds fuchs_vdg_check(const DensityMatrix& rho1,
                               const DensityMatrix& rho2) {
  double root = root_fidelity(rho1, rho2);
  double f = root * root;
  return {1.0 - root, d_trace(rho1, rho2), std::sqrt(std::max(0.0, 1.0 - f))};
}

double projector_overlap(const Projector& a, const Projector& b) {
  if (a.matrix().rows() != b.matrix().rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "projectors of different size");
  }
  // Tr(P1 P2) = ||Q1^dag Q2||_F^2, nonnegative by construction.
  if (a.rank() == 0 || b.rank() == 0) return 0.0;
  return (a.basis().adjoint() * b.basis()).squaredNorm();
}

double support_overlap(const DensityMatrix& rho1, const DensityMatrix& rho2,
                       double rank_tol) {
  require_same_dim(rho1, rho2);
  return projector_overlap(support_projector(rho1, rank_tol),
                           support_projector(rho2, rank_tol));
}

bool orthogonal_supports(const DensityMatrix& rho1, const DensityMatrix& rho2,
                         double tol) {
  return support_overlap(rho1, rho2) <= tol;
}

}  // namespace qgeom
