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

#include "qgeom/states.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <string>

namespace qgeom {
namespace {

std::string fmt(double r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", r);
  return buf;
}

// Eigenvalues below this are indistinguishable from rounding in the
// eigensolver; their roots (~1e-8 for a 1e-16 eigenvalue) would otherwise
// leak into fidelities of rank-deficient states.
double eigen_noise_floor(Index dim) {
  return 16.0 * static_cast<double>(dim) * std::numeric_limits<double>::epsilon();
}

}  // namespace

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) {
    throw Error(ErrorCode::kInvalidSpectrum, "spectrum is empty");
  }
  for (double& v : values_) {
    if (!std::isfinite(v)) {
      throw Error(ErrorCode::kInvalidSpectrum, "non-finite entry");
    }
    if (v < -kSpectrumClampTol) {
      throw Error(ErrorCode::kInvalidSpectrum, "negative entry " + fmt(v));
    }
    if (v < 0.0) v = 0.0;
  }
  double sum = std::accumulate(values_.begin(), values_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSpectrumSumTol) {
    throw Error(ErrorCode::kInvalidSpectrum,
                "entries sum to 1 + " + fmt(sum - 1.0));
  }
}

RealVector Spectrum::vector() const {
  return Eigen::Map<const RealVector>(values_.data(),
                                      static_cast<Index>(values_.size()));
}

std::vector<double> sorted_values(std::span<const double> v,
                                  SortDirection direction) {
  std::vector<double> out(v.begin(), v.end());
  if (direction == SortDirection::kAscending) {
    std::stable_sort(out.begin(), out.end());
  } else {
    std::stable_sort(out.begin(), out.end(), std::greater<>());
  }
  return out;
}

Spectrum sort_spectrum(const Spectrum& p, SortDirection direction) {
  return Spectrum(sorted_values(p.values(), direction), Spectrum::Trusted{});
}

// ---------------------------------------------------------------------------

ComplexMatrix DensityMatrix::sqrt() const {
  const ComplexMatrix& v = eigenvectors_.matrix();
  const double floor = eigen_noise_floor(dim());
  RealVector roots = spectrum_.vector().unaryExpr(
      [floor](double x) { return x > floor ? std::sqrt(x) : 0.0; });
  ComplexMatrix out = v * roots.cast<Complex>().asDiagonal() * v.adjoint();
  return 0.5 * (out + out.adjoint());
}

ComplexMatrix DensityMatrix::power(double s) const {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::kInvalidExponent, "exponent must be positive");
  }
  const ComplexMatrix& v = eigenvectors_.matrix();
  const double floor = eigen_noise_floor(dim());
  RealVector powered = spectrum_.vector().unaryExpr(
      [s, floor](double x) { return x > floor ? std::pow(x, s) : 0.0; });
  ComplexMatrix out = v * powered.cast<Complex>().asDiagonal() * v.adjoint();
  return 0.5 * (out + out.adjoint());
}

DensityMatrix validate_state(const ComplexMatrix& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorCode::kInvalidArgument, "state must be a non-empty square matrix");
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "state has non-finite entries");
  }
  double herm = hermiticity_residual(m);
  if (herm > kStateHermiticityTol) {
    throw Error(ErrorCode::kNotHermitian, "||rho - rho^dag||_max = " + fmt(herm));
  }
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  double trace_err = h.trace().real() - 1.0;
  if (std::abs(trace_err) > kStateTraceTol) {
    throw Error(ErrorCode::kTraceNotOne, "Tr(rho) - 1 = " + fmt(trace_err));
  }
  EigenDecomposition eig = herm_eig(h, kStateHermiticityTol);
  if (eig.values(0) < -kStatePsdTol) {
    throw Error(ErrorCode::kNotPsd, "minimum eigenvalue " + fmt(eig.values(0)));
  }
  std::vector<double> values(eig.values.data(),
                             eig.values.data() + eig.values.size());
  const double floor = eigen_noise_floor(h.rows());
  for (double& v : values) v = v <= floor ? 0.0 : v;
  double sum = std::accumulate(values.begin(), values.end(), 0.0);
  for (double& v : values) v /= sum;
  return DensityMatrix(std::move(h), Spectrum(std::move(values), Spectrum::Trusted{}),
                       std::move(eig.vectors));
}

DensityMatrix diag_state(const Spectrum& p) {
  const auto n = static_cast<Index>(p.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = p[static_cast<std::size_t>(i)];
  return validate_state(m);
}

DensityMatrix pure_state(const Eigen::VectorXcd& psi) {
  double norm = psi.norm();
  if (!(norm > 0.0) || !std::isfinite(norm)) {
    throw Error(ErrorCode::kInvalidArgument, "state vector has zero norm");
  }
  Eigen::VectorXcd unit = psi / norm;
  return validate_state(unit * unit.adjoint());
}

DensityMatrix maximally_mixed(Index dim) {
  if (dim < 1) throw Error(ErrorCode::kInvalidDimension, "dim must be >= 1");
  return validate_state(ComplexMatrix::Identity(dim, dim) /
                        static_cast<double>(dim));
}

// ---------------------------------------------------------------------------

Projector Projector::from_orthonormal_columns(const ComplexMatrix& q) {
  const Index cols = q.cols();
  if (cols > 0) {
    double r = max_abs(q.adjoint() * q - ComplexMatrix::Identity(cols, cols));
    if (r > 1e-8) {
      throw Error(ErrorCode::kInvalidArgument,
                  "projector basis is not orthonormal: " + fmt(r));
    }
  }
  ComplexMatrix p = q * q.adjoint();
  p = 0.5 * (p + p.adjoint());
  return Projector(std::move(p), q, static_cast<std::size_t>(cols));
}

Projector support_projector(const DensityMatrix& rho, double rank_tol) {
  const ComplexMatrix& v = rho.eigenvectors().matrix();
  const auto& values = rho.spectrum().values();
  // Ascending order: the support is a trailing block of columns.
  Index first = static_cast<Index>(values.size());
  while (first > 0 && values[static_cast<std::size_t>(first - 1)] > rank_tol) {
    --first;
  }
  return Projector::from_orthonormal_columns(v.rightCols(v.cols() - first));
}

std::size_t numerical_rank(const DensityMatrix& rho, double rank_tol) {
  const auto& values = rho.spectrum().values();
  return static_cast<std::size_t>(std::count_if(
      values.begin(), values.end(), [rank_tol](double v) { return v > rank_tol; }));
}

}  // namespace qgeom
