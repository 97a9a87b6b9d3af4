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

#include <Eigen/Dense>

#include <complex>
#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "qgeom/error.hpp"
#include "qgeom/rng.hpp"

namespace qgeom {

using Complex = std::complex<double>;
using Index = Eigen::Index;
using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kHermiticityTol = 1e-10;
inline constexpr double kPsdTol = 1e-9;
inline constexpr std::size_t kPermutationCap = 8;

// Throws kInvalidArgument unless `m` is square, non-empty and finite.
void require_square_finite(const ComplexMatrix& m, std::string_view what);

double max_abs(const ComplexMatrix& m);
double hermiticity_residual(const ComplexMatrix& m);  // ||M - M^dag||_max
double unitarity_residual(const ComplexMatrix& m);    // ||M M^dag - I||_max

// Bijection on {0, ..., n-1}. Acting on a vector v it produces w with
// w[i] = v[mapping[i]]. Ordering is lexicographic on the mapping.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> mapping);

  static Permutation identity(std::size_t n);

  std::size_t size() const noexcept { return mapping_.size(); }
  std::size_t operator[](std::size_t i) const { return mapping_[i]; }
  const std::vector<std::size_t>& mapping() const noexcept { return mapping_; }

  Permutation inverse() const;
  std::vector<double> apply(std::span<const double> v) const;
  RealVector apply(const RealVector& v) const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.mapping_ <=> b.mapping_;
  }

 private:
  std::vector<std::size_t> mapping_;
};

class Unitary {
 public:
  // Throws kNotUnitary if ||U U^dag - I||_max exceeds `tol`.
  explicit Unitary(ComplexMatrix m, double tol = kUnitarityTol);

  static Unitary identity(Index dim);
  // U(i, p[i]) = 1, so that U diag(v) U^dag = diag(p(v)).
  static Unitary from_permutation(const Permutation& p);

  const ComplexMatrix& matrix() const noexcept { return m_; }
  Index dim() const noexcept { return m_.rows(); }

  // U X U^dag
  ComplexMatrix conjugate(const ComplexMatrix& x) const;

 private:
  ComplexMatrix m_;
};

struct EigenDecomposition {
  RealVector values;  // ascending
  Unitary vectors;    // columns are eigenvectors
};

EigenDecomposition herm_eig(const ComplexMatrix& h,
                            double hermiticity_tol = kHermiticityTol);

// Negative eigenvalues in [-psd_tol, 0) are clamped to zero before rooting.
ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m, double psd_tol = kPsdTol);

// Spectral power M^s for s > 0 of a PSD matrix, with 0^s = 0.
ComplexMatrix matrix_power_psd(const ComplexMatrix& m, double s,
                               double psd_tol = kPsdTol);

RealVector singular_values(const ComplexMatrix& a);  // descending
double trace_norm(const ComplexMatrix& a);
// |A| = sqrt(A A^dag)
ComplexMatrix abs_of(const ComplexMatrix& a);

ComplexMatrix ginibre(Index rows, Index cols, Rng& rng);
ComplexMatrix random_hermitian(Index dim, Rng& rng);

Unitary haar_unitary(Index dim, Rng& rng);
Unitary haar_unitary(Index dim, std::uint64_t seed);

ComplexMatrix random_density(Index dim, Index rank, Rng& rng);
ComplexMatrix random_density(Index dim, Index rank, std::uint64_t seed);

// Stinespring channel: rho -> Tr_env(V rho V^dag) with V a Haar isometry from
// C^dim into C^dim (x) C^env_dim.
ComplexMatrix random_channel_apply(const ComplexMatrix& rho, Index env_dim,
                                   std::uint64_t seed);

// Measure-and-prepare channel: outcome i of a measurement in the columns of
// `basis` is filed under class group[i]; class g prepares column g of `prep`.
ComplexMatrix measure_prepare_apply(const ComplexMatrix& rho, const Unitary& basis,
                                    std::span<const Index> group, const Unitary& prep);

// measure_prepare_apply with Haar basis and preparations and a random
// partition of the outcomes into `groups` non-empty classes.
ComplexMatrix random_measure_prepare_apply(const ComplexMatrix& rho, Index groups,
                                           std::uint64_t seed);

// All n! permutations in lexicographic order.
std::vector<Permutation> all_permutations(std::size_t dim);

// B_ij = |U_ij|^2
RealMatrix unistochastic_from(const Unitary& u);

}  // namespace qgeom
