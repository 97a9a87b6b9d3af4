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

#include "qgeom/numerics.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>
#include <cmath>
#include <numeric>
#include <string>

namespace qgeom {
namespace {

std::string fmt_residual(double r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", r);
  return buf;
}

ComplexMatrix hermitian_part(const ComplexMatrix& h) {
  return 0.5 * (h + h.adjoint());
}

// Clamped spectral function f(lambda) of a PSD matrix.
template <typename F>
ComplexMatrix psd_function(const ComplexMatrix& m, double psd_tol, F&& f) {
  EigenDecomposition eig = herm_eig(m, std::max(kHermiticityTol, psd_tol));
  if (eig.values.size() > 0 && eig.values(0) < -psd_tol) {
    throw Error(ErrorCode::kNotPsd,
                "minimum eigenvalue " + fmt_residual(eig.values(0)) +
                    " below -" + fmt_residual(psd_tol));
  }
  RealVector mapped = eig.values.unaryExpr([&](double x) {
    return x <= 0.0 ? 0.0 : f(x);
  });
  const ComplexMatrix& v = eig.vectors.matrix();
  ComplexMatrix out = v * mapped.cast<Complex>().asDiagonal() * v.adjoint();
  return hermitian_part(out);
}

}  // namespace

void require_square_finite(const ComplexMatrix& m, std::string_view what) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " must be a non-empty square matrix");
  }
  if (!m.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(what) + " has non-finite entries");
  }
}

double max_abs(const ComplexMatrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermiticity_residual(const ComplexMatrix& m) {
  return max_abs(m - m.adjoint());
}

double unitarity_residual(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs(m * m.adjoint() - ComplexMatrix::Identity(m.rows(), m.cols()));
}

// ---------------------------------------------------------------------------
// Permutation

Permutation::Permutation(std::vector<std::size_t> mapping)
    : mapping_(std::move(mapping)) {
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t v : mapping_) {
    if (v >= mapping_.size() || seen[v]) {
      throw Error(ErrorCode::kInvalidArgument, "mapping is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> m(n);
  std::iota(m.begin(), m.end(), std::size_t{0});
  return Permutation(std::move(m));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(mapping_.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) inv[mapping_[i]] = i;
  return Permutation(std::move(inv));
}

std::vector<double> Permutation::apply(std::span<const double> v) const {
  if (v.size() != mapping_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation/vector length");
  }
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[mapping_[i]];
  return out;
}

RealVector Permutation::apply(const RealVector& v) const {
  if (static_cast<std::size_t>(v.size()) != mapping_.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "permutation/vector length");
  }
  RealVector out(v.size());
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    out(static_cast<Index>(i)) = v(static_cast<Index>(mapping_[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Unitary

Unitary::Unitary(ComplexMatrix m, double tol) : m_(std::move(m)) {
  require_square_finite(m_, "unitary");
  double r = unitarity_residual(m_);
  if (!(r <= tol)) {
    throw Error(ErrorCode::kNotUnitary,
                "||U U^dag - I||_max = " + fmt_residual(r));
  }
}

Unitary Unitary::identity(Index dim) {
  return Unitary(ComplexMatrix::Identity(dim, dim));
}

Unitary Unitary::from_permutation(const Permutation& p) {
  const auto n = static_cast<Index>(p.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) m(i, static_cast<Index>(p[i])) = 1.0;
  return Unitary(std::move(m));
}

ComplexMatrix Unitary::conjugate(const ComplexMatrix& x) const {
  if (x.rows() != m_.rows() || x.cols() != m_.cols()) {
    throw Error(ErrorCode::kDimensionMismatch, "conjugation operand");
  }
  return m_ * x * m_.adjoint();
}

// ---------------------------------------------------------------------------
// Spectral routines

EigenDecomposition herm_eig(const ComplexMatrix& h, double hermiticity_tol) {
  require_square_finite(h, "Hermitian operand");
  double r = hermiticity_residual(h);
  if (r > hermiticity_tol) {
    throw Error(ErrorCode::kNotHermitian,
                "||H - H^dag||_max = " + fmt_residual(r));
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part(h));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorCode::kNoConvergence, "Hermitian eigensolver failed");
  }
  try {
    return {solver.eigenvalues(), Unitary(solver.eigenvectors())};
  } catch (const Error&) {
    throw Error(ErrorCode::kNoConvergence, "eigenvectors lost orthonormality");
  }
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m, double psd_tol) {
  return psd_function(m, psd_tol, [](double x) { return std::sqrt(x); });
}

ComplexMatrix matrix_power_psd(const ComplexMatrix& m, double s,
                               double psd_tol) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorCode::kInvalidExponent, "exponent must be positive");
  }
  return psd_function(m, psd_tol, [s](double x) { return std::pow(x, s); });
}

RealVector singular_values(const ComplexMatrix& a) {
  require_square_finite(a, "operand");
  Eigen::JacobiSVD<ComplexMatrix> svd(a);
  RealVector s = svd.singularValues();
  if (!s.allFinite()) {
    throw Error(ErrorCode::kNoConvergence, "SVD produced non-finite values");
  }
  return s;
}

double trace_norm(const ComplexMatrix& a) { return singular_values(a).sum(); }

ComplexMatrix abs_of(const ComplexMatrix& a) {
  require_square_finite(a, "operand");
  Eigen::JacobiSVD<ComplexMatrix> svd(a, Eigen::ComputeFullU);
  const RealVector& s = svd.singularValues();
  if (!s.allFinite()) {
    throw Error(ErrorCode::kNoConvergence, "SVD produced non-finite values");
  }
  const ComplexMatrix& u = svd.matrixU();
  return hermitian_part(u * s.cast<Complex>().asDiagonal() * u.adjoint());
}

// ---------------------------------------------------------------------------
// Sampling

ComplexMatrix ginibre(Index rows, Index cols, Rng& rng) {
  ComplexMatrix g(rows, cols);
  for (Index j = 0; j < cols; ++j) {
    for (Index i = 0; i < rows; ++i) g(i, j) = rng.complex_normal();
  }
  return g;
}

ComplexMatrix random_hermitian(Index dim, Rng& rng) {
  ComplexMatrix g = ginibre(dim, dim, rng);
  return hermitian_part(g);
}

Unitary haar_unitary(Index dim, Rng& rng) {
  if (dim < 1) throw Error(ErrorCode::kInvalidDimension, "dim must be >= 1");
  ComplexMatrix z = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR: Q -> Q diag(r_ii / |r_ii|).
  for (Index j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    double mag = std::abs(d);
    Complex phase = mag > 0.0 ? d / mag : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return Unitary(std::move(q));
}

Unitary haar_unitary(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_unitary(dim, rng);
}

ComplexMatrix random_density(Index dim, Index rank, Rng& rng) {
  if (dim < 1) throw Error(ErrorCode::kInvalidDimension, "dim must be >= 1");
  if (rank < 1 || rank > dim) {
    throw Error(ErrorCode::kInvalidArgument, "rank must lie in [1, dim]");
  }
  ComplexMatrix g = ginibre(dim, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return hermitian_part(rho);
}

ComplexMatrix random_density(Index dim, Index rank, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rank, rng);
}

namespace {

void require_channel_input(const ComplexMatrix& rho) {
  constexpr double kStateTol = 1e-9;
  require_square_finite(rho, "state");
  if (hermiticity_residual(rho) > kStateTol ||
      std::abs(rho.trace() - Complex(1.0, 0.0)) > kStateTol) {
    throw Error(ErrorCode::kInvalidState, "input is not a density matrix");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(hermitian_part(rho),
                                                  Eigen::EigenvaluesOnly);
  if (es.eigenvalues()(0) < -kStateTol) {
    throw Error(ErrorCode::kInvalidState, "input is not positive semidefinite");
  }
}

}  // namespace

ComplexMatrix random_channel_apply(const ComplexMatrix& rho, Index env_dim,
                                   std::uint64_t seed) {
  require_channel_input(rho);
  if (env_dim < 1) {
    throw Error(ErrorCode::kInvalidDimension, "env_dim must be >= 1");
  }
  const Index dim = rho.rows();
  const Index big = dim * env_dim;
  Unitary u = haar_unitary(big, seed);
  // Rows are indexed (system i, environment e) -> i * env_dim + e.
  ComplexMatrix iso = u.matrix().leftCols(dim);
  ComplexMatrix joint = iso * rho * iso.adjoint();
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Index i = 0; i < dim; ++i) {
    for (Index j = 0; j < dim; ++j) {
      Complex acc = 0.0;
      for (Index e = 0; e < env_dim; ++e) {
        acc += joint(i * env_dim + e, j * env_dim + e);
      }
      out(i, j) = acc;
    }
  }
  return hermitian_part(out);
}

ComplexMatrix measure_prepare_apply(const ComplexMatrix& rho, const Unitary& basis,
                                    std::span<const Index> group, const Unitary& prep) {
  require_channel_input(rho);
  const Index dim = rho.rows();
  if (basis.dim() != dim || prep.dim() != dim ||
      group.size() != static_cast<std::size_t>(dim)) {
    throw Error(ErrorCode::kDimensionMismatch, "channel data does not match the state");
  }
  RealVector weight = RealVector::Zero(dim);
  for (Index i = 0; i < dim; ++i) {
    const Index g = group[static_cast<std::size_t>(i)];
    if (g < 0 || g >= dim) throw Error(ErrorCode::kIndexOutOfRange, "group index out of range");
    Eigen::VectorXcd u = basis.matrix().col(i);
    weight(g) += std::max(0.0, (u.adjoint() * rho * u)(0, 0).real());
  }
  ComplexMatrix out = ComplexMatrix::Zero(dim, dim);
  for (Index g = 0; g < dim; ++g) {
    if (weight(g) == 0.0) continue;
    Eigen::VectorXcd phi = prep.matrix().col(g);
    out += weight(g) * (phi * phi.adjoint());
  }
  return hermitian_part(out);
}

ComplexMatrix random_measure_prepare_apply(const ComplexMatrix& rho, Index groups,
                                           std::uint64_t seed) {
  require_channel_input(rho);
  const Index dim = rho.rows();
  if (groups < 1 || groups > dim) {
    throw Error(ErrorCode::kInvalidDimension, "groups must lie in [1, dim]");
  }
  Rng rng(seed);
  Unitary basis = haar_unitary(dim, rng);
  Unitary prep = haar_unitary(dim, rng);
  std::vector<Index> group(static_cast<std::size_t>(dim));
  for (Index i = 0; i < dim; ++i) group[static_cast<std::size_t>(i)] = i % groups;
  for (std::size_t i = group.size(); i > 1; --i) std::swap(group[i - 1], group[rng.index(i)]);
  return measure_prepare_apply(rho, basis, group, prep);
}

std::vector<Permutation> all_permutations(std::size_t dim) {
  if (dim < 1) throw Error(ErrorCode::kInvalidDimension, "dim must be >= 1");
  if (dim > kPermutationCap) {
    throw Error(ErrorCode::kDimensionTooLarge,
                "permutation enumeration capped at " +
                    std::to_string(kPermutationCap));
  }
  std::vector<std::size_t> m(dim);
  std::iota(m.begin(), m.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

RealMatrix unistochastic_from(const Unitary& u) {
  return u.matrix().cwiseAbs2();
}

}  // namespace qgeom
