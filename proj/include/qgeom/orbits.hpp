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
#include <string>

#include "qgeom/metrics.hpp"

// Extremal distances between the unitary orbits {U rho U^dag} of two states,
// together with the trace inequalities used to establish them. Every bound
// below is computed from sorted spectra only; the matching oracles evaluate
// the actual matrices.
namespace qgeom {

struct Interval {
  double lower;
  double upper;
};

// F(rho1, rho2) over the orbits lies in [B^2(p^up, q^down), B^2(p^up, q^up)].
Interval fidelity_orbit_bounds(const Spectrum& p, const Spectrum& q);
// [sqrt(2 - 2 sqrt(p^up).sqrt(q^up)), sqrt(2 - 2 sqrt(p^up).sqrt(q^down))]
Interval bures_orbit_bounds(const Spectrum& p, const Spectrum& q);
// [D_tr(p^up, q^up), D_tr(p^up, q^down)] with the classical L1/2 distance.
Interval trace_orbit_bounds(const Spectrum& p, const Spectrum& q);
// [D_HS(p^up, q^up), D_HS(p^up, q^down)]; follows from the s = t = 1 trace
// product bounds since D_HS^2 = Tr rho^2 + Tr sigma^2 - 2 Tr rho sigma.
Interval hs_orbit_bounds(const Spectrum& p, const Spectrum& q);
Interval orbit_bounds(MetricKind metric, const Spectrum& p, const Spectrum& q);

struct OrbitBoundsReport {
  MetricKind metric;
  double lower;
  double upper;
  double oracle_min;
  double oracle_max;
  Permutation argmin_permutation;
  Permutation argmax_permutation;
  std::size_t samples;
  std::uint64_t seed;

  // Containment always; attainment for trace and Bures. On failure `why`
  // describes the first violated relation.
  bool consistent(std::string* why = nullptr, double tol = 1e-9) const;
};

// Closed-form bounds plus an oracle that searches all permutations of q
// against p exhaustively, then `haar_samples` random unitaries, then a local
// Cayley-perturbation refinement around the best candidates. Argmin/argmax
// are the lexicographically smallest optimal permutations.
OrbitBoundsReport orbit_extremes(const Spectrum& p, const Spectrum& q,
                                 MetricKind metric, std::size_t haar_samples,
                                 std::uint64_t seed);

struct TraceUnitaryMax {
  double analytic;    // ||A||_1
  double best_found;  // max |Tr(U A)| over random unitaries
  Unitary maximizer;  // V W^dag from A = W S V^dag
};

TraceUnitaryMax trace_unitary_max_check(const ComplexMatrix& a,
                                        std::size_t samples,
                                        std::uint64_t seed);

struct InequalityPair {
  double lhs;
  double rhs;
};

// |Tr AB| <= sum_i sigma_i(A) sigma_i(B), both descending.
InequalityPair von_neumann_bound(const ComplexMatrix& a, const ComplexMatrix& b);

struct Sandwich {
  double lower;
  double mid;
  double upper;
};

// (p^s)^up . (q^t)^down <= Tr rho^s sigma^t <= (p^s)^up . (q^t)^up
Sandwich trace_product_bounds(const DensityMatrix& rho,
                              const DensityMatrix& sigma, double s, double t);

// Same with sigma only Hermitian: (p^s)^up . q^down <= Tr rho^s sigma <= ...
Sandwich trace_product_bounds_hermitian(const DensityMatrix& rho,
                                        const ComplexMatrix& sigma, double s);

// sum |l_i(rho1) - l_i(rho2)| <= Tr|rho1 - rho2| <= sum |l_i(rho1) - l_{n+1-i}(rho2)|
Sandwich eigen_difference_bounds(const DensityMatrix& rho1,
                                 const DensityMatrix& rho2);

// k largest |sigma_i(A) - sigma_i(B)| against the k largest sigma_i(A - B).
InequalityPair horn_johnson_partial_sums(const ComplexMatrix& a,
                                         const ComplexMatrix& b, std::size_t k);

struct WeylChamber {
  Permutation chamber;  // p = chamber(canonical)
  Spectrum canonical;   // p sorted descending
};

WeylChamber weyl_chamber_index(const Spectrum& p);

}  // namespace qgeom
