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

#include <optional>
#include <span>
#include <vector>

#include "qgeom/numerics.hpp"

namespace qgeom {

inline constexpr double kRankTol = 1e-10;
inline constexpr double kStateHermiticityTol = 1e-10;
inline constexpr double kStatePsdTol = 1e-9;
inline constexpr double kStateTraceTol = 1e-10;
inline constexpr double kSpectrumClampTol = 1e-12;
inline constexpr double kSpectrumSumTol = 1e-10;

enum class SortDirection { kAscending, kDescending };

class DensityMatrix;

// Probability vector. Kept in the order it was constructed with; every
// reordering is explicit.
class Spectrum {
 public:
  // Entries in [-1e-12, 0) are clamped to zero; throws kInvalidSpectrum on
  // negative entries below that, non-finite entries, or a sum off by > 1e-10.
  explicit Spectrum(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const noexcept { return values_; }
  RealVector vector() const;

  friend bool operator==(const Spectrum&, const Spectrum&) = default;

 private:
  struct Trusted {};
  Spectrum(std::vector<double> values, Trusted) : values_(std::move(values)) {}
  friend class DensityMatrix;
  friend DensityMatrix validate_state(const ComplexMatrix& m);
  friend Spectrum sort_spectrum(const Spectrum&, SortDirection);

  std::vector<double> values_;
};

Spectrum sort_spectrum(const Spectrum& p, SortDirection direction);

// Stable sort of a plain vector; ties keep their original relative order.
std::vector<double> sorted_values(std::span<const double> v,
                                  SortDirection direction);

// Hermitian, PSD, unit-trace matrix with its eigendecomposition cached.
class DensityMatrix {
 public:
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  Index dim() const noexcept { return matrix_.rows(); }
  // Ascending eigenvalues, clamped to be nonnegative.
  const Spectrum& spectrum() const noexcept { return spectrum_; }
  const Unitary& eigenvectors() const noexcept { return eigenvectors_; }

  ComplexMatrix sqrt() const;
  // rho^s for s > 0 with 0^s = 0.
  ComplexMatrix power(double s) const;

 private:
  DensityMatrix(ComplexMatrix m, Spectrum s, Unitary v)
      : matrix_(std::move(m)), spectrum_(std::move(s)), eigenvectors_(std::move(v)) {}
  friend DensityMatrix validate_state(const ComplexMatrix& m);

  ComplexMatrix matrix_;
  Spectrum spectrum_;
  Unitary eigenvectors_;
};

// Throws kNotHermitian, kNotPsd or kTraceNotOne with the measured residual.
DensityMatrix validate_state(const ComplexMatrix& m);

DensityMatrix diag_state(const Spectrum& p);
DensityMatrix pure_state(const Eigen::VectorXcd& psi);  // normalizes psi
DensityMatrix maximally_mixed(Index dim);

class Projector {
 public:
  // P = Q Q^dag for a matrix Q with orthonormal columns.
  static Projector from_orthonormal_columns(const ComplexMatrix& q);

  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  std::size_t rank() const noexcept { return rank_; }
  // Orthonormal basis of the range.
  const ComplexMatrix& basis() const noexcept { return basis_; }

 private:
  Projector(ComplexMatrix p, ComplexMatrix basis, std::size_t rank)
      : matrix_(std::move(p)), basis_(std::move(basis)), rank_(rank) {}

  ComplexMatrix matrix_;
  ComplexMatrix basis_;
  std::size_t rank_;
};

Projector support_projector(const DensityMatrix& rho, double rank_tol = kRankTol);
std::size_t numerical_rank(const DensityMatrix& rho, double rank_tol = kRankTol);

}  // namespace qgeom
