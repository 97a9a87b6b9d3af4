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

#include "qgeom/orbits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>

namespace qgeom {
namespace {

void require_same_len(const Spectrum& p, const Spectrum& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "spectra of length " + std::to_string(p.size()) + " and " +
                    std::to_string(q.size()));
  }
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

std::vector<double> elementwise_sqrt(std::vector<double> v) {
  for (double& x : v) x = std::sqrt(std::max(x, 0.0));
  return v;
}

std::vector<double> up(const Spectrum& p) {
  return sorted_values(p.values(), SortDirection::kAscending);
}
std::vector<double> down(const Spectrum& p) {
  return sorted_values(p.values(), SortDirection::kDescending);
}

std::vector<double> to_std(const RealVector& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

std::vector<double> clamped_power(std::vector<double> v, double s) {
  for (double& x : v) x = x > 0.0 ? std::pow(x, s) : 0.0;
  return v;
}

void require_exponent(double s) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::kInvalidExponent, "exponents must be positive");
  }
}

ComplexMatrix diag_matrix(const std::vector<double>& v) {
  const auto n = static_cast<Index>(v.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = v[static_cast<std::size_t>(i)];
  return m;
}

// (I - i e K / 2)^{-1} (I + i e K / 2) for Hermitian K.
ComplexMatrix cayley(const ComplexMatrix& k, double step) {
  const Index n = k.rows();
  ComplexMatrix half = Complex(0.0, 0.5 * step) * k;
  ComplexMatrix id = ComplexMatrix::Identity(n, n);
  return (id - half).partialPivLu().solve(id + half);
}

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

}  // namespace

Interval fidelity_orbit_bounds(const Spectrum& p, const Spectrum& q) {
  require_same_len(p, q);
  auto pu = up(p);
  double lo = bhattacharyya(pu, down(q));
  double hi = bhattacharyya(pu, up(q));
  return {lo * lo, hi * hi};
}

Interval bures_orbit_bounds(const Spectrum& p, const Spectrum& q) {
  require_same_len(p, q);
  auto sp = elementwise_sqrt(up(p));
  double aligned = dot(sp, elementwise_sqrt(up(q)));
  double opposite = dot(sp, elementwise_sqrt(down(q)));
  return {bures_from_root_fidelity(aligned), bures_from_root_fidelity(opposite)};
}

Interval trace_orbit_bounds(const Spectrum& p, const Spectrum& q) {
  require_same_len(p, q);
  auto pu = up(p);
  return {classical_trace(pu, up(q)), classical_trace(pu, down(q))};
}

Interval hs_orbit_bounds(const Spectrum& p, const Spectrum& q) {
  require_same_len(p, q);
  auto pu = up(p);
  return {classical_hs(pu, up(q)), classical_hs(pu, down(q))};
}

Interval orbit_bounds(MetricKind metric, const Spectrum& p, const Spectrum& q) {
  switch (metric) {
    case MetricKind::kHilbertSchmidt: return hs_orbit_bounds(p, q);
    case MetricKind::kTrace: return trace_orbit_bounds(p, q);
    case MetricKind::kBures: return bures_orbit_bounds(p, q);
  }
  throw Error(ErrorCode::kUnsupportedMetric, "unknown metric");
}

bool OrbitBoundsReport::consistent(std::string* why, double tol) const {
  auto fail = [why](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (lower > oracle_min + tol) {
    return fail("lower " + fmt(lower) + " exceeds oracle_min " + fmt(oracle_min));
  }
  if (oracle_max > upper + tol) {
    return fail("oracle_max " + fmt(oracle_max) + " exceeds upper " + fmt(upper));
  }
  if (metric != MetricKind::kHilbertSchmidt) {
    if (std::abs(lower - oracle_min) > tol) {
      return fail("lower bound not attained: " + fmt(lower) + " vs " + fmt(oracle_min));
    }
    if (std::abs(upper - oracle_max) > tol) {
      return fail("upper bound not attained: " + fmt(upper) + " vs " + fmt(oracle_max));
    }
  }
  return true;
}

OrbitBoundsReport orbit_extremes(const Spectrum& p, const Spectrum& q,
                                 MetricKind metric, std::size_t haar_samples,
                                 std::uint64_t seed) {
  require_same_len(p, q);
  const std::size_t n = p.size();
  if (n > kPermutationCap) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "exhaustive orbit oracle capped at dimension " +
                    std::to_string(kPermutationCap));
  }
  constexpr double kTieTol = 1e-12;

  Interval bounds = orbit_bounds(metric, p, q);
  OrbitBoundsReport report{metric,
                           bounds.lower,
                           bounds.upper,
                           std::numeric_limits<double>::infinity(),
                           -std::numeric_limits<double>::infinity(),
                           Permutation::identity(n),
                           Permutation::identity(n),
                           haar_samples,
                           seed};

  // Diagonal states diag(p) and diag(pi(q)); the classical formulas are exact
  // for commuting diagonal pairs.
  for (const Permutation& perm : all_permutations(n)) {
    double d = classical_distance(metric, p.values(), perm.apply(q.values()));
    if (d < report.oracle_min - kTieTol) {
      report.oracle_min = d;
      report.argmin_permutation = perm;
    }
    if (d > report.oracle_max + kTieTol) {
      report.oracle_max = d;
      report.argmax_permutation = perm;
    }
  }
  if (haar_samples == 0) return report;

  const DensityMatrix rho1 = diag_state(p);
  const ComplexMatrix sigma = diag_matrix(q.values());
  auto evaluate = [&](const ComplexMatrix& u) {
    ComplexMatrix rotated = u * sigma * u.adjoint();
    return distance(metric, rho1, validate_state(0.5 * (rotated + rotated.adjoint())));
  };

  ComplexMatrix best_min = Unitary::from_permutation(report.argmin_permutation).matrix();
  ComplexMatrix best_max = Unitary::from_permutation(report.argmax_permutation).matrix();
  double val_min = evaluate(best_min);
  double val_max = evaluate(best_max);
  Rng root(seed);
  for (std::size_t i = 0; i < haar_samples; ++i) {
    Rng rng = root.split(i);
    Unitary u = haar_unitary(static_cast<Index>(n), rng);
    double d = evaluate(u.matrix());
    if (d < val_min) { val_min = d; best_min = u.matrix(); }
    if (d > val_max) { val_max = d; best_max = u.matrix(); }
  }

  // Local search on the unitary group around the best candidates.
  constexpr int kRefineSteps = 200;
  auto refine = [&](ComplexMatrix& u, double& value, bool minimize, Rng rng) {
    double step = 0.1;
    for (int it = 0; it < kRefineSteps; ++it) {
      ComplexMatrix k = random_hermitian(static_cast<Index>(n), rng);
      k /= std::max(k.norm(), 1e-300);
      ComplexMatrix cand = cayley(k, step) * u;
      double d = evaluate(cand);
      if (minimize ? d < value : d > value) {
        value = d;
        u = std::move(cand);
      } else {
        step *= 0.5;
      }
    }
  };
  refine(best_min, val_min, true, root.split(haar_samples));
  refine(best_max, val_max, false, root.split(haar_samples + 1));

  report.oracle_min = std::min(report.oracle_min, val_min);
  report.oracle_max = std::max(report.oracle_max, val_max);
  return report;
}

TraceUnitaryMax trace_unitary_max_check(const ComplexMatrix& a,
                                        std::size_t samples,
                                        std::uint64_t seed) {
  require_square_finite(a, "operand");
  if (samples == 0) {
    throw Error(ErrorCode::kInvalidArgument, "samples must be positive");
  }
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const RealVector& s = svd.singularValues();
  if (!s.allFinite()) {
    throw Error(ErrorCode::kNoConvergence, "SVD produced non-finite values");
  }
  // A = W S V^dag  =>  Tr(V W^dag A) = Tr(S).
  Unitary maximizer(svd.matrixV() * svd.matrixU().adjoint(), 1e-9);

  Rng root(seed);
  double best = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    Rng rng = root.split(i);
    Unitary u = haar_unitary(a.rows(), rng);
    best = std::max(best, std::abs((u.matrix() * a).trace()));
  }
  return {s.sum(), best, std::move(maximizer)};
}

InequalityPair von_neumann_bound(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_square_finite(a, "A");
  require_square_finite(b, "B");
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "A and B differ in size");
  }
  double lhs = std::abs((a * b).trace());
  double rhs = singular_values(a).dot(singular_values(b));
  return {lhs, rhs};
}

Sandwich trace_product_bounds(const DensityMatrix& rho,
                              const DensityMatrix& sigma, double s, double t) {
  require_exponent(s);
  require_exponent(t);
  if (rho.dim() != sigma.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "states differ in dimension");
  }
  double mid = (rho.power(s) * sigma.power(t)).trace().real();
  auto ps = clamped_power(up(rho.spectrum()), s);
  auto qt = clamped_power(sigma.spectrum().values(), t);
  return {dot(ps, sorted_values(qt, SortDirection::kDescending)), mid,
          dot(ps, sorted_values(qt, SortDirection::kAscending))};
}

Sandwich trace_product_bounds_hermitian(const DensityMatrix& rho,
                                        const ComplexMatrix& sigma, double s) {
  require_exponent(s);
  if (sigma.rows() != rho.dim() || sigma.cols() != rho.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "operator size differs from state");
  }
  EigenDecomposition eig = herm_eig(sigma, kHermiticityTol);
  auto q = to_std(eig.values);
  double mid = (rho.power(s) * sigma).trace().real();
  auto ps = clamped_power(up(rho.spectrum()), s);
  return {dot(ps, sorted_values(q, SortDirection::kDescending)), mid,
          dot(ps, sorted_values(q, SortDirection::kAscending))};
}

Sandwich eigen_difference_bounds(const DensityMatrix& rho1,
                                 const DensityMatrix& rho2) {
  if (rho1.dim() != rho2.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "states differ in dimension");
  }
  auto a = down(rho1.spectrum());
  auto b = down(rho2.spectrum());
  const std::size_t n = a.size();
  double lower = 0.0;
  double upper = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    lower += std::abs(a[i] - b[i]);
    upper += std::abs(a[i] - b[n - 1 - i]);
  }
  return {lower, trace_norm(rho1.matrix() - rho2.matrix()), upper};
}

InequalityPair horn_johnson_partial_sums(const ComplexMatrix& a,
                                         const ComplexMatrix& b, std::size_t k) {
  require_square_finite(a, "A");
  require_square_finite(b, "B");
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::kDimensionMismatch, "A and B differ in size");
  }
  const auto n = static_cast<std::size_t>(a.rows());
  if (k < 1 || k > n) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "k must lie in [1, " + std::to_string(n) + "]");
  }
  RealVector sa = singular_values(a);
  RealVector sb = singular_values(b);
  RealVector sd = singular_values(a - b);
  std::vector<double> gaps(n);
  for (std::size_t i = 0; i < n; ++i) {
    gaps[i] = std::abs(sa(static_cast<Index>(i)) - sb(static_cast<Index>(i)));
  }
  std::sort(gaps.begin(), gaps.end(), std::greater<>());
  double lhs = 0.0;
  double rhs = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    lhs += gaps[i];
    rhs += sd(static_cast<Index>(i));
  }
  return {lhs, rhs};
}

WeylChamber weyl_chamber_index(const Spectrum& p) {
  const std::size_t n = p.size();
  // order[k] is the position in p of the k-th largest entry.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return p[x] > p[y]; });
  Permutation chamber = Permutation(order).inverse();
  return {std::move(chamber), sort_spectrum(p, SortDirection::kDescending)};
}

}  // namespace qgeom
