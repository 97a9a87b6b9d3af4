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

// Reference computations used by the tests. They deliberately take different
// numerical routes from the library (eigenvalues instead of SVD, the Uhlmann
// form of the fidelity, brute-force enumeration) so agreement is meaningful.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <vector>

#include "qgeom/metrics.hpp"
#include "qgeom/states.hpp"

namespace qgeom::testing {

inline ComplexMatrix diag_matrix(const std::vector<double>& v) {
  RealVector r = Eigen::Map<const RealVector>(v.data(), static_cast<Index>(v.size()));
  return r.cast<Complex>().asDiagonal();
}

inline DensityMatrix diag(const std::vector<double>& v) {
  return validate_state(diag_matrix(v));
}

inline Eigen::VectorXcd ket(Index dim, Index i) {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
  v(i) = 1.0;
  return v;
}

inline Eigen::VectorXcd plus_ket() {
  Eigen::VectorXcd v(2);
  v << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  return v;
}

inline RealVector hermitian_eigenvalues(const ComplexMatrix& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (h + h.adjoint()),
                                                  Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

// 1/2 sum |eigenvalues of rho1 - rho2|.
inline double trace_distance_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  return 0.5 * hermitian_eigenvalues(a - b).cwiseAbs().sum();
}

inline ComplexMatrix psd_sqrt_oracle(const ComplexMatrix& m) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(0.5 * (m + m.adjoint()));
  RealVector r = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * r.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
}

// Uhlmann form: Tr sqrt(sqrt(rho1) rho2 sqrt(rho1)).
inline double root_fidelity_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix s = psd_sqrt_oracle(a);
  return hermitian_eigenvalues(s * b * s).cwiseMax(0.0).cwiseSqrt().sum();
}

inline double hs_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  return std::sqrt(std::max(0.0, (a - b).cwiseAbs2().sum()));
}

// Singular values from the Gram matrix, descending.
inline RealVector singular_values_oracle(const ComplexMatrix& a) {
  return hermitian_eigenvalues(a.adjoint() * a).cwiseMax(0.0).cwiseSqrt().reverse();
}

// min and max of f(p, sigma(q)) over all orderings sigma of q.
struct Extremes {
  double min;
  double max;
};

inline Extremes permutation_extremes(
    const std::vector<double>& p, std::vector<double> q,
    const std::function<double(const std::vector<double>&, const std::vector<double>&)>& f) {
  std::vector<std::size_t> idx(q.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  Extremes e{INFINITY, -INFINITY};
  do {
    std::vector<double> perm(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) perm[i] = q[idx[i]];
    double v = f(p, perm);
    e.min = std::min(e.min, v);
    e.max = std::max(e.max, v);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return e;
}

inline double classical_trace_oracle(const std::vector<double>& p,
                                     const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::abs(p[i] - q[i]);
  return 0.5 * s;
}

inline double bhattacharyya_oracle(const std::vector<double>& p,
                                   const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += std::sqrt(p[i] * q[i]);
  return s;
}

inline double classical_bures_oracle(const std::vector<double>& p,
                                     const std::vector<double>& q) {
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * bhattacharyya_oracle(p, q)));
}

inline double classical_hs_oracle(const std::vector<double>& p,
                                  const std::vector<double>& q) {
  double s = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) s += (p[i] - q[i]) * (p[i] - q[i]);
  return std::sqrt(s);
}

// Block states of the non-monotonicity example: 2/N on one half of the
// diagonal, zero on the other; `upper` selects the second half.
inline DensityMatrix half_block_state(Index n, bool upper) {
  std::vector<double> v(static_cast<std::size_t>(n), 0.0);
  for (Index i = 0; i < n / 2; ++i) {
    v[static_cast<std::size_t>(upper ? n / 2 + i : i)] = 2.0 / static_cast<double>(n);
  }
  return diag(v);
}

}  // namespace qgeom::testing
