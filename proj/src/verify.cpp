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

#include "qgeom/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

namespace qgeom::verify {
namespace {

using io::Json;

constexpr double kInf = std::numeric_limits<double>::infinity();

std::uint64_t name_hash(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;  // FNV-1a
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Per-sample context: generator, dimension and the accumulated checks.
struct Ctx {
  Ctx(std::uint64_t seed, Index d, const Config& c) : rng(seed), dim(d), cfg(c) {}

  Rng rng;
  Index dim;
  const Config& cfg;
  bool recording = false;
  Json inputs = Json::object();
  double worst = 0.0;
  bool ok = true;
  bool witness = false;
  std::string failed_check;
  double failed_residual = 0.0;

  // Records `residual` (>= 0 is a violation amount) against `slack`.
  void check(const char* label, double residual, double slack) {
    double r = std::isnan(residual) ? kInf : std::max(residual, 0.0);
    worst = std::max(worst, r);
    if (!(r <= slack) && ok) {
      ok = false;
      failed_check = label;
      failed_residual = r;
    }
  }
  void at_most(const char* label, double lhs, double rhs, double slack) {
    check(label, lhs - rhs, slack);
  }
  void equal(const char* label, double a, double b, double slack) {
    check(label, std::abs(a - b), slack);
  }
  void record(const char* key, Json value) {
    if (recording) inputs[key] = std::move(value);
  }
  void record_matrix(const char* key, const ComplexMatrix& m) {
    if (recording) inputs[key] = io::matrix_to_json(m);
  }
};

// --- samplers --------------------------------------------------------------

DensityMatrix random_state(Ctx& ctx, const char* key) {
  Index rank = 1 + static_cast<Index>(ctx.rng.index(static_cast<std::size_t>(ctx.dim)));
  DensityMatrix rho = validate_state(random_density(ctx.dim, rank, ctx.rng));
  ctx.record_matrix(key, rho.matrix());
  return rho;
}

std::vector<double> dirichlet(Rng& rng, std::size_t n) {
  std::vector<double> w(n);
  for (double& x : w) x = -std::log(1.0 - rng.uniform());
  double s = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= s;
  return w;
}

// Full-rank, rank-deficient and degenerate spectra in random order.
Spectrum random_spectrum(Ctx& ctx, const char* key) {
  const auto n = static_cast<std::size_t>(ctx.dim);
  std::vector<double> v(n, 0.0);
  switch (ctx.rng.index(3)) {
    case 0: v = dirichlet(ctx.rng, n); break;
    case 1: {
      std::size_t r = 1 + ctx.rng.index(n);
      auto w = dirichlet(ctx.rng, r);
      std::copy(w.begin(), w.end(), v.begin());
      break;
    }
    default: {
      double total = 0.0;
      for (double& x : v) {
        x = static_cast<double>(ctx.rng.index(3));
        total += x;
      }
      if (total == 0.0) {
        v[0] = 1.0;
        total = 1.0;
      }
      for (double& x : v) x /= total;
      break;
    }
  }
  for (std::size_t i = n; i > 1; --i) std::swap(v[i - 1], v[ctx.rng.index(i)]);
  double s = std::accumulate(v.begin(), v.end(), 0.0);
  for (double& x : v) x /= s;
  Spectrum p(std::move(v));
  ctx.record(key, p.values());
  return p;
}

// `count` states with mutually orthogonal supports (count <= dim).
std::vector<DensityMatrix> orthogonal_set(Ctx& ctx, std::size_t count) {
  const auto n = static_cast<std::size_t>(ctx.dim);
  Unitary u = haar_unitary(ctx.dim, ctx.rng);
  // Split a random number of basis columns (>= count) into `count` blocks.
  std::size_t used = count + ctx.rng.index(n - count + 1);
  std::vector<std::size_t> sizes(count, 1);
  for (std::size_t extra = used - count; extra > 0; --extra) {
    ++sizes[ctx.rng.index(count)];
  }
  std::vector<DensityMatrix> out;
  Index col = 0;
  for (std::size_t k = 0; k < count; ++k) {
    const auto r = static_cast<Index>(sizes[k]);
    ComplexMatrix block = u.matrix().middleCols(col, r);
    auto w = dirichlet(ctx.rng, sizes[k]);
    RealVector weights = Eigen::Map<RealVector>(w.data(), r);
    ComplexMatrix m = block * weights.cast<Complex>().asDiagonal() * block.adjoint();
    out.push_back(validate_state(0.5 * (m + m.adjoint())));
    col += r;
  }
  if (ctx.recording) {
    Json arr = Json::array();
    for (const auto& s : out) arr.push_back(io::state_to_json(s));
    ctx.inputs["states"] = std::move(arr);
  }
  return out;
}

// A set of >= 2 states where at least one pair has overlapping supports.
std::vector<DensityMatrix> overlapping_set(Ctx& ctx) {
  const auto n = static_cast<std::size_t>(ctx.dim);
  std::vector<DensityMatrix> out;
  switch (ctx.rng.index(3)) {
    case 0: {  // duplicate state
      Index rank = 1 + static_cast<Index>(ctx.rng.index(n));
      DensityMatrix s = validate_state(random_density(ctx.dim, rank, ctx.rng));
      out = {s, s};
      break;
    }
    case 1: {  // generic random states
      std::size_t count = 2 + ctx.rng.index(n);
      for (std::size_t k = 0; k < count; ++k) {
        Index rank = 1 + static_cast<Index>(ctx.rng.index(n));
        out.push_back(validate_state(random_density(ctx.dim, rank, ctx.rng)));
      }
      break;
    }
    default: {  // orthogonal set with one state leaking into another's support
      std::size_t count = 2 + ctx.rng.index(n - 1);
      out = orthogonal_set(ctx, count);
      ComplexMatrix a = support_projector(out[0]).basis();
      ComplexMatrix b = support_projector(out[1]).basis();
      Eigen::VectorXcd v = a.col(0) + b.col(0);
      v.normalize();
      double eps = ctx.rng.uniform(0.05, 0.95);
      ComplexMatrix m = (1.0 - eps) * out[0].matrix() + eps * (v * v.adjoint());
      out[0] = validate_state(0.5 * (m + m.adjoint()));
      break;
    }
  }
  if (ctx.recording) {
    Json arr = Json::array();
    for (const auto& s : out) arr.push_back(io::state_to_json(s));
    ctx.inputs["states"] = std::move(arr);
  }
  return out;
}

ComplexMatrix random_operator(Ctx& ctx, const char* key) {
  ComplexMatrix a = ginibre(ctx.dim, ctx.dim, ctx.rng);
  ctx.record_matrix(key, a);
  return a;
}

double trace_dist(const Ctx& ctx, const DensityMatrix& a, const DensityMatrix& b) {
  double d = d_trace(a, b);
  return ctx.cfg.corrupt_metric ? 1.5 * d : d;
}

double dist(const Ctx& ctx, MetricKind kind, const DensityMatrix& a,
            const DensityMatrix& b) {
  return kind == MetricKind::kTrace ? trace_dist(ctx, a, b) : distance(kind, a, b);
}

constexpr MetricKind kAllMetrics[] = {MetricKind::kHilbertSchmidt, MetricKind::kTrace,
                                      MetricKind::kBures};

// --- properties ------------------------------------------------------------

void spectral_numerics(Ctx& ctx) {
  const auto& tol = ctx.cfg.tol;
  ComplexMatrix h = random_hermitian(ctx.dim, ctx.rng);
  ctx.record_matrix("hermitian", h);
  EigenDecomposition eig = herm_eig(h);
  const ComplexMatrix& v = eig.vectors.matrix();
  ctx.check("eig_reconstruction",
            max_abs(v * eig.values.cast<Complex>().asDiagonal() * v.adjoint() - h), 1e-9);

  DensityMatrix rho = random_state(ctx, "state");
  ComplexMatrix root = matrix_sqrt_psd(rho.matrix());
  ctx.check("sqrt_squared", max_abs(root * root - rho.matrix()), 1e-8);

  ComplexMatrix a = random_operator(ctx, "operator");
  RealVector sv = singular_values(a);
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> gram(a.adjoint() * a);
  RealVector oracle = gram.eigenvalues().cwiseMax(0.0).cwiseSqrt().reverse();
  ctx.check("svd_vs_gram", (sv - oracle).cwiseAbs().maxCoeff(), 1e-9);
  double tn = trace_norm(a);
  ctx.equal("trace_norm_vs_abs", tn, abs_of(a).trace().real(), 1e-8);
  ctx.at_most("trace_norm_ge_trace", std::abs(a.trace()), tn, tol.slack);

  RealVector psd_sv = singular_values(rho.matrix());
  RealVector desc = rho.spectrum().vector().reverse();
  ctx.check("psd_sv_eq_eig", (psd_sv - desc).cwiseAbs().maxCoeff(), 1e-9);

  Index rank = 1 + static_cast<Index>(ctx.rng.index(static_cast<std::size_t>(ctx.dim)));
  DensityMatrix r = validate_state(random_density(ctx.dim, rank, ctx.rng));
  ctx.record("rank", rank);
  ctx.equal("numerical_rank", static_cast<double>(numerical_rank(r)),
            static_cast<double>(rank), 0.0);
  Projector p = support_projector(r);
  ctx.check("projector_idempotent", max_abs(p.matrix() * p.matrix() - p.matrix()), 1e-8);
  ctx.check("projector_hermitian", hermiticity_residual(p.matrix()), 1e-10);
  ctx.equal("projector_captures_state", (p.matrix() * r.matrix()).trace().real(), 1.0, 1e-8);
}

void metric_axioms(Ctx& ctx) {
  DensityMatrix a = random_state(ctx, "rho1");
  DensityMatrix b = random_state(ctx, "rho2");
  DensityMatrix c = random_state(ctx, "rho3");
  for (MetricKind k : kAllMetrics) {
    double ab = dist(ctx, k, a, b);
    ctx.equal("symmetry", ab, dist(ctx, k, b, a), ctx.cfg.tol.symmetry);
    ctx.check("identity", dist(ctx, k, a, a), ctx.cfg.tol.slack);
    ctx.at_most("triangle", dist(ctx, k, a, c), ab + dist(ctx, k, b, c), ctx.cfg.tol.slack);
  }
  ctx.equal("fidelity_symmetry", root_fidelity(a, b), root_fidelity(b, a), ctx.cfg.tol.slack);
}

void diameter_bound(Ctx& ctx) {
  DensityMatrix a = random_state(ctx, "rho1");
  DensityMatrix b = random_state(ctx, "rho2");
  for (MetricKind k : kAllMetrics) {
    ctx.at_most("diameter", dist(ctx, k, a, b), diameter(k), ctx.cfg.tol.slack);
  }
  // Orthogonal pure states saturate every diameter.
  auto pair = orthogonal_set(ctx, 2);
  Eigen::VectorXcd e0 = support_projector(pair[0]).basis().col(0);
  Eigen::VectorXcd e1 = support_projector(pair[1]).basis().col(0);
  DensityMatrix p0 = pure_state(e0);
  DensityMatrix p1 = pure_state(e1);
  for (MetricKind k : kAllMetrics) {
    ctx.equal("diameter_attained", dist(ctx, k, p0, p1), diameter(k), ctx.cfg.tol.slack);
  }
}

void orthogonal_equivalence(Ctx& ctx) {
  const auto& tol = ctx.cfg.tol;
  auto pair = orthogonal_set(ctx, 2);
  ctx.check("orthogonal_overlap", support_overlap(pair[0], pair[1]), 1e-10);
  ctx.equal("trace_is_one", trace_dist(ctx, pair[0], pair[1]), 1.0, tol.equivalence);
  ctx.equal("bures_is_sqrt2", d_bures(pair[0], pair[1]), std::sqrt(2.0), tol.equivalence);
  ctx.check("hs_product_zero", std::abs((pair[0].matrix() * pair[1].matrix()).trace()), 1e-10);

  // Converse on a generic pair: maximal distance forces orthogonal supports.
  DensityMatrix a = random_state(ctx, "rho1");
  DensityMatrix b = random_state(ctx, "rho2");
  if (trace_dist(ctx, a, b) > 1.0 - tol.equivalence ||
      d_bures(a, b) > std::sqrt(2.0) - tol.equivalence) {
    ctx.check("maximal_implies_orthogonal", support_overlap(a, b), 1e-6);
  }
}

void classical_reduction(Ctx& ctx) {
  const double tol = ctx.cfg.tol.classical;
  Spectrum p = random_spectrum(ctx, "p");
  Spectrum q = random_spectrum(ctx, "q");
  DensityMatrix a = diag_state(p);
  DensityMatrix b = diag_state(q);
  ctx.equal("hs", d_hs(a, b), classical_hs(p.values(), q.values()), tol);
  ctx.equal("trace", trace_dist(ctx, a, b), classical_trace(p.values(), q.values()), tol);
  ctx.equal("root_fidelity", root_fidelity(a, b), bhattacharyya(p, q), tol);
  // Compared squared: the root amplifies rounding near zero distance.
  double db = d_bures(a, b);
  double cb = classical_bures(p.values(), q.values());
  ctx.equal("bures_squared", db * db, cb * cb, tol);
}

void fuchs_van_de_graaf(Ctx& ctx) {
  DensityMatrix a = random_state(ctx, "rho1");
  DensityMatrix b = random_state(ctx, "rho2");
  FuchsVdgBounds f = fuchs_vdg_check(a, b);
  double dt = trace_dist(ctx, a, b);
  ctx.at_most("lower", f.lower, dt, ctx.cfg.tol.slack);
  ctx.at_most("upper", dt, f.upper, ctx.cfg.tol.slack);
}

// Applies one random channel to both states: a Stinespring channel with a
// random environment, or a measure-and-prepare channel.
std::pair<DensityMatrix, DensityMatrix> random_channel_pair(Ctx& ctx,
                                                            const DensityMatrix& a,
                                                            const DensityMatrix& b) {
  const bool stinespring = ctx.rng.index(2) == 0;
  Index k = 1 + static_cast<Index>(ctx.rng.index(static_cast<std::size_t>(ctx.dim)));
  std::uint64_t channel_seed = ctx.rng.next_u64();
  ctx.record("channel", stinespring ? "stinespring" : "measure_prepare");
  ctx.record(stinespring ? "env_dim" : "groups", k);
  ctx.record("channel_seed", channel_seed);
  auto apply = [&](const DensityMatrix& rho) {
    return validate_state(stinespring
                              ? random_channel_apply(rho.matrix(), k, channel_seed)
                              : random_measure_prepare_apply(rho.matrix(), k, channel_seed));
  };
  return {apply(a), apply(b)};
}

void monotonicity(Ctx& ctx) {
  DensityMatrix a = random_state(ctx, "rho1");
  DensityMatrix b = random_state(ctx, "rho2");
  auto [ca, cb] = random_channel_pair(ctx, a, b);
  const double slack = ctx.cfg.tol.monotonicity;
  ctx.at_most("trace_contracts", trace_dist(ctx, ca, cb), trace_dist(ctx, a, b), slack);
  ctx.at_most("bures_contracts", d_bures(ca, cb), d_bures(a, b), slack);
}

// Counts channels that increase the HS distance; from dim 3 on the ensemble
// fails only if none is found. Qubit channels contract the Bloch ball, so at
// dim 2 HS contraction is checked instead.
void hs_nonmonotone_witness(Ctx& ctx) {
  DensityMatrix a = random_state(ctx, "rho1");
  DensityMatrix b = random_state(ctx, "rho2");
  DensityMatrix ca = a, cb = b;
  if (ctx.dim == 2 || ctx.rng.index(2) == 0) {
    std::tie(ca, cb) = random_channel_pair(ctx, a, b);
  } else {
    // Generic states lose their off-diagonal part under measurement, so half
    // of the draws use a pair that commutes with the measured basis.
    Unitary basis = haar_unitary(ctx.dim, ctx.rng);
    Unitary prep = haar_unitary(ctx.dim, ctx.rng);
    std::vector<Index> group(static_cast<std::size_t>(ctx.dim));
    for (Index& g : group) g = static_cast<Index>(ctx.rng.index(group.size()));
    a = validate_state(basis.conjugate(diag_state(random_spectrum(ctx, "p")).matrix()));
    b = validate_state(basis.conjugate(diag_state(random_spectrum(ctx, "q")).matrix()));
    ctx.record("channel", "measure_prepare");
    ctx.record_matrix("basis", basis.matrix());
    ctx.record_matrix("prep", prep.matrix());
    ctx.record("group", group);
    ca = validate_state(measure_prepare_apply(a.matrix(), basis, group, prep));
    cb = validate_state(measure_prepare_apply(b.matrix(), basis, group, prep));
  }
  const double before = d_hs(a, b);
  const double after = d_hs(ca, cb);
  if (ctx.dim == 2) {
    ctx.at_most("qubit_hs_contracts", after, before, ctx.cfg.tol.monotonicity);
    return;
  }
  ctx.witness = after > before + ctx.cfg.tol.monotonicity;
}

void orbit_containment(Ctx& ctx) {
  const double slack = ctx.cfg.tol.containment;
  Spectrum p = random_spectrum(ctx, "p");
  Spectrum q = random_spectrum(ctx, "q");
  Unitary u = haar_unitary(ctx.dim, ctx.rng);
  ctx.record_matrix("unitary", u.matrix());
  DensityMatrix a = diag_state(p);
  ComplexMatrix rotated = u.conjugate(diag_state(q).matrix());
  DensityMatrix b = validate_state(0.5 * (rotated + rotated.adjoint()));

  Interval f = fidelity_orbit_bounds(p, q);
  double fid = fidelity(a, b);
  ctx.at_most("fidelity_lower", f.lower, fid, slack);
  ctx.at_most("fidelity_upper", fid, f.upper, slack);
  Interval bu = bures_orbit_bounds(p, q);
  double db = d_bures(a, b);
  ctx.at_most("bures_lower", bu.lower, db, slack);
  ctx.at_most("bures_upper", db, bu.upper, slack);
  Interval tr = trace_orbit_bounds(p, q);
  double dt = trace_dist(ctx, a, b);
  ctx.at_most("trace_lower", tr.lower, dt, slack);
  ctx.at_most("trace_upper", dt, tr.upper, slack);
  Interval hs = hs_orbit_bounds(p, q);
  double dh = d_hs(a, b);
  ctx.at_most("hs_lower", hs.lower, dh, slack);
  ctx.at_most("hs_upper", dh, hs.upper, slack);
}

void orbit_attainment(Ctx& ctx) {
  if (static_cast<std::size_t>(ctx.dim) > kPermutationCap) return;
  Spectrum p = random_spectrum(ctx, "p");
  Spectrum q = random_spectrum(ctx, "q");
  for (MetricKind k : {MetricKind::kTrace, MetricKind::kBures}) {
    OrbitBoundsReport r = orbit_extremes(p, q, k, 0, 0);
    ctx.equal("min_attained", r.oracle_min, r.lower, ctx.cfg.tol.slack);
    ctx.equal("max_attained", r.oracle_max, r.upper, ctx.cfg.tol.slack);
  }
  auto pu = sorted_values(p.values(), SortDirection::kAscending);
  double aligned = bhattacharyya(pu, sorted_values(q.values(), SortDirection::kAscending));
  double opposite = bhattacharyya(pu, sorted_values(q.values(), SortDirection::kDescending));
  ctx.at_most("rearrangement", opposite, aligned, ctx.cfg.tol.slack);
}

void fidelity_chain(Ctx& ctx) {
  const double slack = ctx.cfg.tol.slack;
  DensityMatrix a = random_state(ctx, "rho1");
  DensityMatrix b = random_state(ctx, "rho2");
  auto root_vec = [](const Spectrum& s, SortDirection d) {
    auto v = sorted_values(s.values(), d);
    for (double& x : v) x = std::sqrt(x);
    return v;
  };
  auto pu = root_vec(a.spectrum(), SortDirection::kAscending);
  auto qu = root_vec(b.spectrum(), SortDirection::kAscending);
  auto qd = root_vec(b.spectrum(), SortDirection::kDescending);
  double aligned = std::inner_product(pu.begin(), pu.end(), qu.begin(), 0.0);
  double opposite = std::inner_product(pu.begin(), pu.end(), qd.begin(), 0.0);
  double rf = root_fidelity(a, b);
  double plain = (a.sqrt() * b.sqrt()).trace().real();
  ctx.at_most("root_fidelity_ge_trace", plain, rf, slack);
  ctx.at_most("trace_ge_bhattacharyya", opposite, plain, slack);
  ctx.at_most("root_fidelity_le_aligned", rf, aligned, slack);
}

void trace_product(Ctx& ctx) {
  DensityMatrix a = random_state(ctx, "rho");
  DensityMatrix b = random_state(ctx, "sigma");
  for (double s : {0.25, 0.5, 1.0, 2.0}) {
    for (double t : {0.25, 0.5, 1.0, 2.0}) {
      Sandwich w = trace_product_bounds(a, b, s, t);
      ctx.at_most("lower", w.lower, w.mid, ctx.cfg.tol.slack);
      ctx.at_most("upper", w.mid, w.upper, ctx.cfg.tol.slack);
    }
  }
}

void trace_product_hermitian(Ctx& ctx) {
  DensityMatrix a = random_state(ctx, "rho");
  ComplexMatrix h = random_hermitian(ctx.dim, ctx.rng);
  ctx.record_matrix("sigma", h);
  for (double s : {0.25, 0.5, 1.0, 2.0}) {
    Sandwich w = trace_product_bounds_hermitian(a, h, s);
    ctx.at_most("lower", w.lower, w.mid, ctx.cfg.tol.slack);
    ctx.at_most("upper", w.mid, w.upper, ctx.cfg.tol.slack);
  }
}

void eigen_difference(Ctx& ctx) {
  DensityMatrix a = random_state(ctx, "rho1");
  DensityMatrix b = random_state(ctx, "rho2");
  Sandwich w = eigen_difference_bounds(a, b);
  ctx.at_most("lower", w.lower, w.mid, ctx.cfg.tol.slack);
  ctx.at_most("upper", w.mid, w.upper, ctx.cfg.tol.slack);
}

void trace_unitary_max(Ctx& ctx) {
  ComplexMatrix a = random_operator(ctx, "A");
  TraceUnitaryMax r = trace_unitary_max_check(a, 16, ctx.rng.next_u64());
  ctx.equal("maximizer_attains",
            std::abs((r.maximizer.matrix() * a).trace()), r.analytic, ctx.cfg.tol.slack);
  ctx.at_most("search_below_norm", r.best_found, r.analytic, ctx.cfg.tol.slack);
}

void von_neumann(Ctx& ctx) {
  ComplexMatrix a = random_operator(ctx, "A");
  ComplexMatrix b = random_operator(ctx, "B");
  InequalityPair r = von_neumann_bound(a, b);
  ctx.at_most("von_neumann", r.lhs, r.rhs, ctx.cfg.tol.slack);
}

void horn_johnson(Ctx& ctx) {
  ComplexMatrix a = random_operator(ctx, "A");
  ComplexMatrix b = random_operator(ctx, "B");
  for (std::size_t k = 1; k <= static_cast<std::size_t>(ctx.dim); ++k) {
    InequalityPair r = horn_johnson_partial_sums(a, b, k);
    ctx.at_most("partial_sum", r.lhs, r.rhs, ctx.cfg.tol.slack);
  }
}

void unistochastic(Ctx& ctx) {
  Unitary u = haar_unitary(ctx.dim, ctx.rng);
  ctx.record_matrix("unitary", u.matrix());
  RealMatrix b = unistochastic_from(u);
  ctx.check("row_sums", (b.rowwise().sum().array() - 1.0).abs().maxCoeff(), 1e-10);
  ctx.check("col_sums", (b.colwise().sum().array() - 1.0).abs().maxCoeff(), 1e-10);
}

void discrimination(Ctx& ctx) {
  const auto& tol = ctx.cfg.tol;
  const auto n = static_cast<std::size_t>(ctx.dim);
  std::size_t count = 1 + ctx.rng.index(n);
  auto good = orthogonal_set(ctx, count);
  DiscriminationReport rep = can_discriminate(good, tol.overlap);
  ctx.check("orthogonal_set_discriminable", rep.discriminable ? 0.0 : 1.0, 0.0);
  ctx.at_most("rank_bound", static_cast<double>(rep.rank_sum), static_cast<double>(n), 0.0);
  Povm povm = build_discrimination_povm(good, tol.overlap);
  for (std::size_t k = 0; k < good.size(); ++k) {
    ctx.equal("success_probability", povm.probability(k, good[k]), 1.0, tol.povm);
  }
  ctx.check("completeness", povm.completeness_residual(), tol.povm);
  for (const ComplexMatrix& e : povm.elements()) {
    RealVector ev = herm_eig(e).values;
    ctx.check("positivity", -ev(0), 1e-9);
    ctx.check("below_identity", ev(ev.size() - 1) - 1.0, 1e-9);
  }

  auto bad = overlapping_set(ctx);
  DiscriminationReport neg = can_discriminate(bad, tol.overlap);
  ctx.check("overlapping_set_rejected", neg.discriminable ? 1.0 : 0.0, 0.0);
  if (neg.discriminable) {
    ctx.at_most("rank_bound", static_cast<double>(neg.rank_sum), static_cast<double>(n), 0.0);
  }
}

void simplex_equivalence(Ctx& ctx) {
  const auto n = static_cast<std::size_t>(ctx.dim);
  std::vector<DensityMatrix> states;
  if (ctx.rng.index(2) == 0) {
    states = orthogonal_set(ctx, 2 + ctx.rng.index(n - 1));
  } else {
    states = overlapping_set(ctx);
  }
  bool disc = can_discriminate(states, ctx.cfg.tol.overlap).discriminable;
  for (MetricKind k : {MetricKind::kTrace, MetricKind::kBures}) {
    bool simplex = simplex_side_check(states, k, 1e-7);
    ctx.check("simplex_iff_discriminable", simplex == disc ? 0.0 : 1.0, 0.0);
  }
}

void diagonal_reduction(Ctx& ctx) {
  const auto n = static_cast<std::size_t>(ctx.dim);
  std::size_t count = 2 + ctx.rng.index(n + 1);
  std::vector<Spectrum> spectra;
  Json arr = Json::array();
  for (std::size_t k = 0; k < count; ++k) {
    spectra.push_back(random_spectrum(ctx, "last_spectrum"));
    arr.push_back(spectra.back().values());
  }
  ctx.record("spectra", std::move(arr));
  std::uint64_t seed = ctx.rng.next_u64();
  ctx.record("rotation_seed", seed);
  bool ok = diagonal_reduction_check(spectra, ctx.cfg.tol.overlap, 5, seed);
  ctx.check("diagonal_not_beaten", ok ? 0.0 : 1.0, 0.0);
}

struct Property {
  std::string name;
  std::function<void(Ctx&)> run;
  bool witness = false;
};

const std::vector<Property>& registry() {
  static const std::vector<Property> props = {
      {"spectral_numerics", spectral_numerics},
      {"metric_axioms", metric_axioms},
      {"diameter", diameter_bound},
      {"orthogonal_equivalence", orthogonal_equivalence},
      {"classical_reduction", classical_reduction},
      {"fuchs_van_de_graaf", fuchs_van_de_graaf},
      {"monotonicity", monotonicity},
      {"hs_nonmonotone_witness", hs_nonmonotone_witness, true},
      {"orbit_containment", orbit_containment},
      {"orbit_attainment", orbit_attainment},
      {"fidelity_chain", fidelity_chain},
      {"trace_product", trace_product},
      {"trace_product_hermitian", trace_product_hermitian},
      {"eigen_difference", eigen_difference},
      {"trace_unitary_max", trace_unitary_max},
      {"von_neumann", von_neumann},
      {"horn_johnson", horn_johnson},
      {"unistochastic", unistochastic},
      {"discrimination", discrimination},
      {"simplex_equivalence", simplex_equivalence},
      {"diagonal_reduction", diagonal_reduction},
  };
  return props;
}

// Runs one sample; errors thrown by the library count as failures.
void run_sample(const Property& prop, Ctx& ctx) {
  try {
    prop.run(ctx);
  } catch (const std::exception& e) {
    if (ctx.ok) {
      ctx.ok = false;
      ctx.failed_check = std::string("exception: ") + e.what();
      ctx.failed_residual = kInf;
    }
    ctx.worst = kInf;
  }
}

PropertyResult run_job(const Property& prop, Index dim, const Config& cfg) {
  PropertyResult res{prop.name, dim, 0, 0, 0, 0.0, cfg.seed, std::nullopt};
  const std::size_t count = cfg.replay_seed ? 1 : cfg.samples;
  std::size_t witnesses = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t sample_seed =
        cfg.replay_seed ? *cfg.replay_seed
                        : derive_seed(cfg.seed, {name_hash(prop.name),
                                                 static_cast<std::uint64_t>(dim), i});
    Ctx ctx(sample_seed, dim, cfg);
    run_sample(prop, ctx);
    ++res.samples;
    if (ctx.witness) ++witnesses;
    res.worst_residual = std::max(res.worst_residual, ctx.worst);
    if (ctx.ok) {
      ++res.passes;
      continue;
    }
    ++res.failures;
    if (!res.first_failure) {
      Ctx replay(sample_seed, dim, cfg);
      replay.recording = true;
      run_sample(prop, replay);
      res.first_failure = Json{{"property", prop.name},
                               {"dim", dim},
                               {"sample", i},
                               {"sample_seed", sample_seed},
                               {"check", ctx.failed_check},
                               {"residual", ctx.failed_residual},
                               {"inputs", std::move(replay.inputs)}};
    }
  }
  if (prop.witness && dim > 2) {
    // passes counts witnesses; the property fails if none turned up.
    res.passes = witnesses;
    res.failures = witnesses == 0 ? 1 : 0;
    if (witnesses == 0) {
      res.first_failure = Json{{"property", prop.name},
                               {"dim", dim},
                               {"check", "no witness found"}};
    }
  }
  return res;
}

}  // namespace

bool Summary::all_pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const PropertyResult& r) { return r.failures == 0; });
}

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const Property& p : registry()) out.push_back(p.name);
    return out;
  }();
  return names;
}

Summary run(const Config& config) {
  if (config.dims.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "no dimensions given");
  }
  for (Index d : config.dims) {
    if (d < 2 || d > 64) {
      throw Error(ErrorCode::kInvalidDimension, "verify dims must lie in [2, 64]");
    }
  }
  if (config.samples < 1) {
    throw Error(ErrorCode::kInvalidArgument, "samples must be >= 1");
  }
  std::vector<const Property*> selected;
  for (const Property& p : registry()) {
    if (config.properties.empty() ||
        std::find(config.properties.begin(), config.properties.end(), p.name) !=
            config.properties.end()) {
      selected.push_back(&p);
    }
  }
  for (const std::string& name : config.properties) {
    const auto& names = property_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown property '" + name + "'");
    }
  }

  struct Job {
    const Property* prop;
    Index dim;
  };
  std::vector<Job> jobs;
  for (const Property* p : selected) {
    for (Index d : config.dims) jobs.push_back({p, d});
  }
  std::vector<std::optional<PropertyResult>> slots(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      slots[j] = run_job(*jobs[j].prop, jobs[j].dim, config);
    }
  };
  // Jobs are independent; results land in fixed slots, so output order does
  // not depend on scheduling.
  unsigned threads = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                     static_cast<unsigned>(jobs.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Summary summary;
  for (auto& s : slots) summary.results.push_back(std::move(*s));
  return summary;
}

std::string to_csv(const Summary& summary) {
  std::ostringstream out;
  out << "property,dim,samples,passes,failures,worst_residual,seed\n";
  for (const PropertyResult& r : summary.results) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", r.worst_residual);
    out << r.property << ',' << r.dim << ',' << r.samples << ',' << r.passes << ','
        << r.failures << ',' << buf << ',' << r.seed << '\n';
  }
  return out.str();
}

io::Json to_json(const Summary& summary, const Config& config) {
  Json results = Json::array();
  Json failures = Json::array();
  for (const PropertyResult& r : summary.results) {
    results.push_back(Json{{"property", r.property},
                           {"dim", r.dim},
                           {"samples", r.samples},
                           {"passes", r.passes},
                           {"failures", r.failures},
                           {"worst_residual", r.worst_residual},
                           {"seed", r.seed}});
    if (r.first_failure) failures.push_back(*r.first_failure);
  }
  return Json{{"all_pass", summary.all_pass()},
              {"seed", config.seed},
              {"samples", config.samples},
              {"dims", config.dims},
              {"results", std::move(results)},
              {"failures", std::move(failures)}};
}

}  // namespace qgeom::verify
