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

#include "qgeom/qgeom.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "qgeom/discrimination.hpp"
#include "qgeom/io.hpp"
#include "qgeom/orbits.hpp"
#include "qgeom/verify.hpp"

struct qg_state {
  qgeom::DensityMatrix rho;
};
struct qg_spectrum {
  qgeom::Spectrum p;
};
struct qg_state_set {
  std::vector<qgeom::DensityMatrix> states;
};

namespace {

using qgeom::ErrorCode;
using qgeom::io::Json;

thread_local std::string g_last_error;

qg_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotHermitian: return QG_ERR_NOT_HERMITIAN;
    case ErrorCode::kNotPsd: return QG_ERR_NOT_PSD;
    case ErrorCode::kTraceNotOne: return QG_ERR_TRACE_NOT_ONE;
    case ErrorCode::kInvalidSpectrum: return QG_ERR_INVALID_SPECTRUM;
    case ErrorCode::kInvalidState: return QG_ERR_INVALID_STATE;
    case ErrorCode::kNotUnitary: return QG_ERR_NOT_UNITARY;
    case ErrorCode::kNoConvergence: return QG_ERR_NO_CONVERGENCE;
    case ErrorCode::kDimensionMismatch: return QG_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kDimensionTooLarge: return QG_ERR_DIMENSION_TOO_LARGE;
    case ErrorCode::kInvalidDimension: return QG_ERR_INVALID_DIMENSION;
    case ErrorCode::kInvalidExponent: return QG_ERR_INVALID_EXPONENT;
    case ErrorCode::kIndexOutOfRange: return QG_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::kNotDiscriminable: return QG_ERR_NOT_DISCRIMINABLE;
    case ErrorCode::kEmptySet: return QG_ERR_EMPTY_SET;
    case ErrorCode::kSetTooLarge: return QG_ERR_SET_TOO_LARGE;
    case ErrorCode::kUnsupportedMetric: return QG_ERR_UNSUPPORTED_METRIC;
    case ErrorCode::kInvalidArgument: return QG_ERR_INVALID_ARGUMENT;
    case ErrorCode::kParseError: return QG_ERR_PARSE;
    case ErrorCode::kIoError: return QG_ERR_IO;
  }
  return QG_ERR_INTERNAL;
}

qg_status fail(qg_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs `body`, translating exceptions into status codes.
template <typename F>
qg_status guarded(F&& body) {
  try {
    g_last_error.clear();
    return body();
  } catch (const qgeom::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(QG_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return fail(QG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(QG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(QG_ERR_INTERNAL, "unknown exception");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

qg_status null_argument(const char* name) {
  return fail(QG_ERR_INVALID_ARGUMENT, std::string("null argument: ") + name);
}

qgeom::MetricKind to_kind(qg_metric m) {
  switch (m) {
    case QG_METRIC_HILBERT_SCHMIDT: return qgeom::MetricKind::kHilbertSchmidt;
    case QG_METRIC_TRACE: return qgeom::MetricKind::kTrace;
    case QG_METRIC_BURES: return qgeom::MetricKind::kBures;
  }
  throw qgeom::Error(ErrorCode::kUnsupportedMetric, "unknown metric enum value");
}

qg_distance_report distance_report(const qgeom::DensityMatrix& a,
                                   const qgeom::DensityMatrix& b,
                                   double overlap_tol) {
  qg_distance_report r{};
  r.d_hs = qgeom::d_hs(a, b);
  qgeom::FuchsVdgBounds f = qgeom::fuchs_vdg_check(a, b);
  r.d_trace = f.d_tr;
  r.root_fidelity = qgeom::root_fidelity(a, b);
  r.fidelity = r.root_fidelity * r.root_fidelity;
  r.d_bures = qgeom::bures_from_root_fidelity(r.root_fidelity);
  r.bhattacharyya = qgeom::bhattacharyya(a.spectrum(), b.spectrum());
  r.fvdg_lower = f.lower;
  r.fvdg_upper = f.upper;
  r.support_overlap = qgeom::support_overlap(a, b);
  r.orthogonal_supports = r.support_overlap <= overlap_tol ? 1 : 0;
  return r;
}

}  // namespace

extern "C" {

const char* qg_version(void) { return "0.1.0"; }

const char* qg_status_string(qg_status status) {
  switch (status) {
    case QG_OK: return "Ok";
    case QG_ERR_NOT_HERMITIAN: return "NotHermitian";
    case QG_ERR_NOT_PSD: return "NotPsd";
    case QG_ERR_TRACE_NOT_ONE: return "TraceNotOne";
    case QG_ERR_INVALID_SPECTRUM: return "InvalidSpectrum";
    case QG_ERR_INVALID_STATE: return "InvalidState";
    case QG_ERR_NOT_UNITARY: return "NotUnitary";
    case QG_ERR_NO_CONVERGENCE: return "NoConvergence";
    case QG_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case QG_ERR_DIMENSION_TOO_LARGE: return "DimensionTooLarge";
    case QG_ERR_INVALID_DIMENSION: return "InvalidDimension";
    case QG_ERR_INVALID_EXPONENT: return "InvalidExponent";
    case QG_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case QG_ERR_NOT_DISCRIMINABLE: return "NotDiscriminable";
    case QG_ERR_EMPTY_SET: return "EmptySet";
    case QG_ERR_SET_TOO_LARGE: return "SetTooLarge";
    case QG_ERR_UNSUPPORTED_METRIC: return "UnsupportedMetric";
    case QG_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case QG_ERR_PARSE: return "ParseError";
    case QG_ERR_IO: return "IoError";
    case QG_ERR_REPORT_INCONSISTENT: return "ReportInconsistent";
    case QG_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* qg_last_error_message(void) { return g_last_error.c_str(); }

void qg_free_string(char* s) { std::free(s); }

// --- states ----------------------------------------------------------------

qg_status qg_state_from_json(const char* json, qg_state** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new qg_state{qgeom::io::state_from_json(qgeom::io::parse(json))};
    return QG_OK;
  });
}

qg_status qg_state_from_arrays(size_t dim, const double* re, const double* im,
                               qg_state** out) {
  if (!re) return null_argument("re");
  if (!out) return null_argument("out");
  return guarded([&] {
    const auto n = static_cast<qgeom::Index>(dim);
    qgeom::ComplexMatrix m(n, n);
    for (qgeom::Index r = 0; r < n; ++r) {
      for (qgeom::Index c = 0; c < n; ++c) {
        const std::size_t k = static_cast<std::size_t>(r * n + c);
        m(r, c) = qgeom::Complex(re[k], im ? im[k] : 0.0);
      }
    }
    *out = new qg_state{qgeom::validate_state(m)};
    return QG_OK;
  });
}

void qg_state_free(qg_state* state) { delete state; }

size_t qg_state_dim(const qg_state* state) {
  return state ? static_cast<size_t>(state->rho.dim()) : 0;
}

qg_status qg_state_spectrum(const qg_state* state, double* out, size_t len) {
  if (!state) return null_argument("state");
  if (!out) return null_argument("out");
  const auto& values = state->rho.spectrum().values();
  if (len != values.size()) {
    return fail(QG_ERR_DIMENSION_MISMATCH, "output length differs from dimension");
  }
  std::copy(values.begin(), values.end(), out);
  return QG_OK;
}

qg_status qg_state_to_json(const qg_state* state, char** out) {
  if (!state) return null_argument("state");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = copy_string(qgeom::io::dump(qgeom::io::state_to_json(state->rho)));
    return QG_OK;
  });
}

qg_status qg_spectrum_from_json(const char* json, qg_spectrum** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new qg_spectrum{qgeom::io::spectrum_from_json(qgeom::io::parse(json))};
    return QG_OK;
  });
}

qg_status qg_spectrum_from_array(const double* p, size_t len, qg_spectrum** out) {
  if (!p) return null_argument("p");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new qg_spectrum{qgeom::Spectrum(std::vector<double>(p, p + len))};
    return QG_OK;
  });
}

void qg_spectrum_free(qg_spectrum* spectrum) { delete spectrum; }

size_t qg_spectrum_size(const qg_spectrum* spectrum) {
  return spectrum ? spectrum->p.size() : 0;
}

qg_status qg_state_set_from_json(const char* json, qg_state_set** out) {
  if (!json) return null_argument("json");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = new qg_state_set{qgeom::io::states_from_json(qgeom::io::parse(json))};
    return QG_OK;
  });
}

void qg_state_set_free(qg_state_set* set) { delete set; }

size_t qg_state_set_size(const qg_state_set* set) {
  return set ? set->states.size() : 0;
}

// --- metrics ---------------------------------------------------------------

qg_status qg_metric_from_name(const char* name, qg_metric* out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  return guarded([&] {
    switch (qgeom::parse_metric(name)) {
      case qgeom::MetricKind::kHilbertSchmidt: *out = QG_METRIC_HILBERT_SCHMIDT; break;
      case qgeom::MetricKind::kTrace: *out = QG_METRIC_TRACE; break;
      case qgeom::MetricKind::kBures: *out = QG_METRIC_BURES; break;
    }
    return QG_OK;
  });
}

qg_status qg_distances(const qg_state* a, const qg_state* b, double overlap_tol,
                       qg_distance_report* out) {
  if (!a || !b) return null_argument("state");
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = distance_report(a->rho, b->rho, overlap_tol);
    return QG_OK;
  });
}

qg_status qg_distance_report_json(const qg_state* a, const qg_state* b,
                                  double overlap_tol, char** out) {
  if (!a || !b) return null_argument("state");
  if (!out) return null_argument("out");
  return guarded([&] {
    qg_distance_report r = distance_report(a->rho, b->rho, overlap_tol);
    Json j{{"dim", a->rho.dim()},
           {"d_hs", r.d_hs},
           {"d_trace", r.d_trace},
           {"d_bures", r.d_bures},
           {"fidelity", r.fidelity},
           {"root_fidelity", r.root_fidelity},
           {"bhattacharyya", r.bhattacharyya},
           {"fuchs_van_de_graaf",
            Json{{"lower", r.fvdg_lower},
                 {"d_tr", r.d_trace},
                 {"upper", r.fvdg_upper},
                 {"holds", r.fvdg_lower <= r.d_trace + 1e-9 &&
                               r.d_trace <= r.fvdg_upper + 1e-9}}},
           {"support_overlap", r.support_overlap},
           {"orthogonal_supports", r.orthogonal_supports != 0}};
    *out = copy_string(qgeom::io::dump(j));
    return QG_OK;
  });
}

// --- orbits ----------------------------------------------------------------

qg_status qg_orbit_bounds(const qg_spectrum* p, const qg_spectrum* q,
                          qg_metric metric, double* lower, double* upper) {
  if (!p || !q) return null_argument("spectrum");
  if (!lower || !upper) return null_argument("lower/upper");
  return guarded([&] {
    qgeom::Interval iv = qgeom::orbit_bounds(to_kind(metric), p->p, q->p);
    *lower = iv.lower;
    *upper = iv.upper;
    return QG_OK;
  });
}

qg_status qg_orbit_report_json(const qg_spectrum* p, const qg_spectrum* q,
                               qg_metric metric, uint64_t haar_samples,
                               uint64_t seed, char** out) {
  if (!p || !q) return null_argument("spectrum");
  if (!out) return null_argument("out");
  return guarded([&] {
    qgeom::OrbitBoundsReport r =
        qgeom::orbit_extremes(p->p, q->p, to_kind(metric), haar_samples, seed);
    *out = copy_string(qgeom::io::dump(qgeom::io::to_json(r)));
    std::string why;
    if (!r.consistent(&why)) return fail(QG_ERR_REPORT_INCONSISTENT, why);
    return QG_OK;
  });
}

// --- discrimination --------------------------------------------------------

qg_status qg_discriminate_json(const qg_state_set* set, double overlap_tol,
                               int* discriminable, char** out) {
  if (!set) return null_argument("set");
  if (!out) return null_argument("out");
  return guarded([&] {
    qgeom::DiscriminationReport r = qgeom::can_discriminate(set->states, overlap_tol);
    if (discriminable) *discriminable = r.discriminable ? 1 : 0;
    *out = copy_string(qgeom::io::dump(qgeom::io::to_json(r)));
    return QG_OK;
  });
}

qg_status qg_max_distinguishable_json(const qg_state_set* set, double overlap_tol,
                                      char** out) {
  if (!set) return null_argument("set");
  if (!out) return null_argument("out");
  return guarded([&] {
    qgeom::Clique c = qgeom::max_distinguishable_subset(set->states, overlap_tol);
    Json j{{"size", c.size}, {"indices", c.indices}};
    *out = copy_string(qgeom::io::dump(j));
    return QG_OK;
  });
}

qg_status qg_sic_simplex_side(int64_t dim, double* out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    *out = qgeom::sic_simplex_side(dim);
    return QG_OK;
  });
}

// --- verification ----------------------------------------------------------

void qg_verify_options_init(qg_verify_options* options) {
  if (!options) return;
  *options = qg_verify_options{};
  options->samples = 1000;
  options->seed = 42;
}

qg_status qg_verify_run(const qg_verify_options* options, qg_format format,
                        int* all_pass, char** report, char** failures) {
  if (!options) return null_argument("options");
  if (!report) return null_argument("report");
  return guarded([&] {
    qgeom::verify::Config cfg;
    if (options->dims && options->n_dims > 0) {
      cfg.dims.assign(options->dims, options->dims + options->n_dims);
    }
    cfg.samples = options->samples;
    cfg.seed = options->seed;
    for (size_t i = 0; options->properties && i < options->n_properties; ++i) {
      cfg.properties.emplace_back(options->properties[i]);
    }
    if (options->has_replay_seed) cfg.replay_seed = options->replay_seed;
    cfg.corrupt_metric = options->corrupt_metric != 0;
    auto override_tol = [](double value, double& slot) {
      if (value > 0.0) slot = value;
    };
    override_tol(options->tol_slack, cfg.tol.slack);
    override_tol(options->tol_containment, cfg.tol.containment);
    override_tol(options->tol_monotonicity, cfg.tol.monotonicity);
    override_tol(options->tol_equivalence, cfg.tol.equivalence);
    override_tol(options->tol_povm, cfg.tol.povm);
    override_tol(options->tol_overlap, cfg.tol.overlap);

    qgeom::verify::Summary summary = qgeom::verify::run(cfg);
    if (all_pass) *all_pass = summary.all_pass() ? 1 : 0;
    Json full = qgeom::verify::to_json(summary, cfg);
    if (format == QG_FORMAT_CSV) {
      *report = copy_string(qgeom::verify::to_csv(summary));
    } else {
      *report = copy_string(qgeom::io::dump(full));
    }
    if (failures) *failures = copy_string(qgeom::io::dump(full["failures"]));
    return QG_OK;
  });
}

qg_status qg_verify_property_names(char** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    std::string s;
    for (const std::string& n : qgeom::verify::property_names()) s += n + "\n";
    *out = copy_string(s);
    return QG_OK;
  });
}

// --- sampling --------------------------------------------------------------

qg_status qg_sample_states_json(size_t dim, size_t rank, size_t count,
                                uint64_t seed, char** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    Json arr = Json::array();
    for (size_t k = 0; k < count; ++k) {
      qgeom::ComplexMatrix m = qgeom::random_density(
          static_cast<qgeom::Index>(dim), static_cast<qgeom::Index>(rank),
          qgeom::derive_seed(seed, k));
      arr.push_back(qgeom::io::state_to_json(qgeom::validate_state(m)));
    }
    *out = copy_string(qgeom::io::dump(arr));
    return QG_OK;
  });
}

qg_status qg_sample_unitaries_json(size_t dim, size_t count, uint64_t seed,
                                   char** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    Json arr = Json::array();
    for (size_t k = 0; k < count; ++k) {
      qgeom::Unitary u =
          qgeom::haar_unitary(static_cast<qgeom::Index>(dim), qgeom::derive_seed(seed, k));
      arr.push_back(qgeom::io::matrix_to_json(u.matrix()));
    }
    *out = copy_string(qgeom::io::dump(arr));
    return QG_OK;
  });
}

qg_status qg_sample_spectra_json(size_t dim, size_t rank, size_t count,
                                 uint64_t seed, char** out) {
  if (!out) return null_argument("out");
  return guarded([&] {
    Json arr = Json::array();
    for (size_t k = 0; k < count; ++k) {
      qgeom::ComplexMatrix m = qgeom::random_density(
          static_cast<qgeom::Index>(dim), static_cast<qgeom::Index>(rank),
          qgeom::derive_seed(seed, k));
      arr.push_back(qgeom::io::spectrum_to_json(qgeom::validate_state(m).spectrum()));
    }
    *out = copy_string(qgeom::io::dump(arr));
    return QG_OK;
  });
}

}  // extern "C"
