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

// qgeom command-line tool. Talks to the library only through the C API.
//
//   qgeom dist a.json b.json
//   qgeom orbit p.json q.json --metric trace
//   qgeom discriminate states.json [--max-subset]
//   qgeom verify [--dims 2-6] [--samples 1000] [--seed 42] [--format csv]
//   qgeom sample --kind state --dim 3 --rank 1 --count 2 --seed 7
//
// Exit codes: 0 success or affirmative answer, 1 negative but valid answer
// (not discriminable, verification failure), 2 usage/parse/IO error,
// 3 invalid state or spectrum, 4 dimension mismatch, 5 dimension or set too
// large, 6 any other error.

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qgeom/qgeom.h"

namespace {

using Json = nlohmann::ordered_json;

enum Exit : int {
  kExitOk = 0,
  kExitNegative = 1,
  kExitUsage = 2,
  kExitInvalidInput = 3,
  kExitDimensionMismatch = 4,
  kExitTooLarge = 5,
  kExitOther = 6,
};

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(qg_status s) {
  switch (s) {
    case QG_OK: return kExitOk;
    case QG_ERR_PARSE:
    case QG_ERR_IO: return kExitUsage;
    case QG_ERR_NOT_HERMITIAN:
    case QG_ERR_NOT_PSD:
    case QG_ERR_TRACE_NOT_ONE:
    case QG_ERR_INVALID_SPECTRUM:
    case QG_ERR_INVALID_STATE: return kExitInvalidInput;
    case QG_ERR_DIMENSION_MISMATCH: return kExitDimensionMismatch;
    case QG_ERR_DIMENSION_TOO_LARGE:
    case QG_ERR_SET_TOO_LARGE: return kExitTooLarge;
    default: return kExitOther;
  }
}

void check(qg_status s, const std::string& context) {
  if (s == QG_OK) return;
  const char* detail = qg_last_error_message();
  throw Failure{exit_code_for(s),
                context + ": " + (detail && *detail ? detail : qg_status_string(s))};
}

// Owns a string returned by the library.
class LibString {
 public:
  LibString() = default;
  ~LibString() { qg_free_string(p_); }
  LibString(const LibString&) = delete;
  LibString& operator=(const LibString&) = delete;
  char** out() { return &p_; }
  std::string str() const { return p_ ? std::string(p_) : std::string(); }

 private:
  char* p_ = nullptr;
};

template <typename T, void (*Free)(T*)>
class Handle {
 public:
  Handle() = default;
  ~Handle() { Free(p_); }
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  T** out() { return &p_; }
  const T* get() const { return p_; }

 private:
  T* p_ = nullptr;
};

using State = Handle<qg_state, qg_state_free>;
using SpectrumHandle = Handle<qg_spectrum, qg_spectrum_free>;
using StateSet = Handle<qg_state_set, qg_state_set_free>;

std::string read_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure{kExitUsage, "IoError: cannot open " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Globals {
  std::uint64_t seed = 42;
  std::optional<std::uint64_t> samples;
  std::string dims;
  std::string format = "json";
  std::string out;
  std::map<std::string, double> tol;

  double tol_or(const std::string& name, double fallback) const {
    auto it = tol.find(name);
    return it == tol.end() ? fallback : it->second;
  }
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw Failure{kExitUsage, "IoError: cannot write " + g.out};
  f << text;
  if (!f) throw Failure{kExitUsage, "IoError: write failed for " + g.out};
}

std::string number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string scalar_text(const Json& j) {
  if (j.is_number_float()) return number(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void flatten(const Json& j, const std::string& prefix,
             std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), rows);
    }
    return;
  }
  if (j.is_array() && !j.empty() && j.front().is_structured()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      flatten(j[i], prefix + "[" + std::to_string(i) + "]", rows);
    }
    return;
  }
  if (j.is_array()) {
    std::string s;
    for (const Json& x : j) s += (s.empty() ? "" : " ") + scalar_text(x);
    rows.emplace_back(prefix, s);
    return;
  }
  rows.emplace_back(prefix, scalar_text(j));
}

// Renders a library JSON report in the requested format.
std::string render(const Globals& g, const std::string& json_text) {
  if (g.format == "json") return json_text + "\n";
  Json j = Json::parse(json_text);
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(j, "", rows);
  std::string out;
  if (g.format == "csv") {
    out = "key,value\n";
    for (const auto& [k, v] : rows) out += k + "," + v + "\n";
    return out;
  }
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) {
    out += k + std::string(width + 2 - k.size(), ' ') + v + "\n";
  }
  return out;
}

std::vector<std::int64_t> parse_dims(const std::string& text) {
  std::vector<std::int64_t> dims;
  std::stringstream ss(text);
  std::string item;
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) {
      throw Failure{kExitUsage, "invalid --dims entry '" + s + "'"};
    }
    return static_cast<std::int64_t>(v);
  };
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto dash = item.find('-', 1);
    if (dash == std::string::npos) {
      dims.push_back(to_int(item));
      continue;
    }
    std::int64_t lo = to_int(item.substr(0, dash));
    std::int64_t hi = to_int(item.substr(dash + 1));
    if (hi < lo || hi - lo > 1024) throw Failure{kExitUsage, "invalid --dims range '" + item + "'"};
    for (std::int64_t d = lo; d <= hi; ++d) dims.push_back(d);
  }
  if (dims.empty()) throw Failure{kExitUsage, "--dims is empty"};
  return dims;
}

int cmd_dist(const Globals& g, const std::string& a_path, const std::string& b_path) {
  State a, b;
  check(qg_state_from_json(read_input(a_path).c_str(), a.out()), a_path);
  check(qg_state_from_json(read_input(b_path).c_str(), b.out()), b_path);
  if (qg_state_dim(a.get()) != qg_state_dim(b.get())) {
    throw Failure{kExitDimensionMismatch, "DimensionMismatch: states have dims " +
                                              std::to_string(qg_state_dim(a.get())) + " and " +
                                              std::to_string(qg_state_dim(b.get()))};
  }
  LibString report;
  check(qg_distance_report_json(a.get(), b.get(), g.tol_or("overlap", 1e-8), report.out()),
        "dist");
  emit(g, render(g, report.str()));
  return kExitOk;
}

int cmd_orbit(const Globals& g, const std::string& p_path, const std::string& q_path,
              const std::string& metric_name) {
  SpectrumHandle p, q;
  check(qg_spectrum_from_json(read_input(p_path).c_str(), p.out()), p_path);
  check(qg_spectrum_from_json(read_input(q_path).c_str(), q.out()), q_path);
  if (qg_spectrum_size(p.get()) != qg_spectrum_size(q.get())) {
    throw Failure{kExitDimensionMismatch, "DimensionMismatch: spectra have different lengths"};
  }
  qg_metric metric;
  check(qg_metric_from_name(metric_name.c_str(), &metric), "--metric");
  LibString report;
  qg_status s = qg_orbit_report_json(p.get(), q.get(), metric, g.samples.value_or(100), g.seed,
                                     report.out());
  if (s == QG_ERR_REPORT_INCONSISTENT) {
    std::fprintf(stderr, "%s\n", report.str().c_str());
    throw Failure{kExitOther, std::string("orbit report inconsistent: ") + qg_last_error_message()};
  }
  check(s, "orbit");
  emit(g, render(g, report.str()));
  return kExitOk;
}

int cmd_discriminate(const Globals& g, const std::string& path, bool max_subset) {
  StateSet set;
  check(qg_state_set_from_json(read_input(path).c_str(), set.out()), path);
  const double tol = g.tol_or("overlap", 1e-8);
  if (max_subset) {
    LibString report;
    check(qg_max_distinguishable_json(set.get(), tol, report.out()), "discriminate");
    emit(g, render(g, report.str()));
    return kExitOk;
  }
  int discriminable = 0;
  LibString report;
  check(qg_discriminate_json(set.get(), tol, &discriminable, report.out()), "discriminate");
  emit(g, render(g, report.str()));
  return discriminable ? kExitOk : kExitNegative;
}

int cmd_verify(const Globals& g, const std::vector<std::string>& properties,
               std::optional<std::uint64_t> replay_seed, bool corrupt) {
  qg_verify_options opts;
  qg_verify_options_init(&opts);
  std::vector<std::int64_t> dims;
  if (!g.dims.empty()) {
    dims = parse_dims(g.dims);
    opts.dims = dims.data();
    opts.n_dims = dims.size();
  }
  if (g.samples) opts.samples = *g.samples;
  opts.seed = g.seed;
  std::vector<const char*> names;
  for (const std::string& p : properties) names.push_back(p.c_str());
  if (!names.empty()) {
    opts.properties = names.data();
    opts.n_properties = names.size();
  }
  if (replay_seed) {
    opts.has_replay_seed = 1;
    opts.replay_seed = *replay_seed;
  }
  opts.corrupt_metric = corrupt ? 1 : 0;
  opts.tol_slack = g.tol_or("slack", 0.0);
  opts.tol_containment = g.tol_or("containment", 0.0);
  opts.tol_monotonicity = g.tol_or("monotonicity", 0.0);
  opts.tol_equivalence = g.tol_or("equivalence", 0.0);
  opts.tol_povm = g.tol_or("povm", 0.0);
  opts.tol_overlap = g.tol_or("overlap", 0.0);

  int all_pass = 0;
  LibString report, failures;
  const qg_format format = g.format == "csv" ? QG_FORMAT_CSV : QG_FORMAT_JSON;
  qg_status status =
      qg_verify_run(&opts, format, &all_pass, report.out(), failures.out());
  // Every verify argument comes from the command line, so a rejected
  // configuration is a usage error.
  if (status == QG_ERR_INVALID_ARGUMENT || status == QG_ERR_INVALID_DIMENSION) {
    throw Failure{kExitUsage, std::string("verify: ") + qg_last_error_message()};
  }
  check(status, "verify");
  std::string text = report.str();
  if (g.format == "json") text += "\n";
  if (g.format == "pretty") text = render(g, text);
  emit(g, text);
  if (!all_pass) {
    // The JSON report already carries the replay data; other formats get it on stderr.
    if (g.format != "json") std::fprintf(stderr, "%s\n", failures.str().c_str());
    return kExitNegative;
  }
  return kExitOk;
}

int cmd_sample(const Globals& g, const std::string& kind, std::int64_t dim,
               std::optional<std::int64_t> rank, std::int64_t count) {
  if (dim < 1) throw Failure{kExitUsage, "--dim must be >= 1"};
  if (count < 1) throw Failure{kExitUsage, "--count must be >= 1"};
  const std::int64_t r = rank.value_or(dim);
  if (r < 1 || r > dim) throw Failure{kExitUsage, "--rank must lie in [1, dim]"};
  LibString out;
  const auto d = static_cast<size_t>(dim);
  const auto n = static_cast<size_t>(count);
  if (kind == "state") {
    check(qg_sample_states_json(d, static_cast<size_t>(r), n, g.seed, out.out()), "sample");
  } else if (kind == "unitary") {
    check(qg_sample_unitaries_json(d, n, g.seed, out.out()), "sample");
  } else {
    check(qg_sample_spectra_json(d, static_cast<size_t>(r), n, g.seed, out.out()), "sample");
  }
  emit(g, render(g, out.str()));
  return kExitOk;
}

int run(int argc, char** argv) {
  CLI::App app{"Distances, unitary orbits and discrimination of density matrices"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(qg_version()));

  Globals g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", g.samples,
                 "Samples per (property, dim) for verify; Haar samples for orbit")
      ->check(CLI::PositiveNumber);
  app.add_option("--dims", g.dims, "Dimensions for verify, e.g. 2-6 or 2,3,5");
  app.add_option("--format", g.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "pretty"}))
      ->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  for (const char* name :
       {"overlap", "slack", "containment", "monotonicity", "equivalence", "povm"}) {
    app.add_option_function<double>(
           std::string("--tol.") + name,
           [&g, name](double v) { g.tol[name] = v; },
           std::string("Tolerance override: ") + name)
        ->check(CLI::PositiveNumber);
  }

  std::string a_path, b_path, metric = "trace", kind = "state";
  bool max_subset = false, corrupt = false;
  std::vector<std::string> properties;
  std::optional<std::uint64_t> replay_seed;
  std::int64_t dim = 2, count = 1;
  std::optional<std::int64_t> rank;

  auto* dist = app.add_subcommand("dist", "Distances and fidelities between two states");
  dist->add_option("state1", a_path)->required();
  dist->add_option("state2", b_path)->required();

  auto* orbit = app.add_subcommand("orbit", "Extremal distances between two unitary orbits");
  orbit->add_option("spectrum1", a_path)->required();
  orbit->add_option("spectrum2", b_path)->required();
  orbit->add_option("--metric", metric, "hs, trace or bures")
      ->check(CLI::IsMember({"hs", "hilbert-schmidt", "trace", "bures"}, CLI::ignore_case))
      ->capture_default_str();

  auto* disc = app.add_subcommand("discriminate", "Perfect discrimination of a state set");
  disc->add_option("states", a_path)->required();
  disc->add_flag("--max-subset", max_subset, "Report a largest perfectly discriminable subset");

  auto* verify = app.add_subcommand("verify", "Run the randomized property ensembles");
  verify->add_option("--property", properties, "Restrict to these properties (repeatable)");
  verify->add_option("--replay-seed", replay_seed, "Replay one sample seed per property/dim");
  verify->add_flag("--corrupt-metric", corrupt)->group("");
  verify->add_flag_callback("--list", [] {
    LibString names;
    check(qg_verify_property_names(names.out()), "verify");
    std::fputs(names.str().c_str(), stdout);
    throw CLI::Success();
  }, "List property names");

  auto* sample = app.add_subcommand("sample", "Draw random states, unitaries or spectra");
  sample->add_option("--kind", kind)
      ->check(CLI::IsMember({"state", "unitary", "spectrum"}))
      ->capture_default_str();
  sample->add_option("--dim", dim)->capture_default_str();
  sample->add_option("--rank", rank, "Rank of sampled states (default: dim)");
  sample->add_option("--count", count)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (*dist) return cmd_dist(g, a_path, b_path);
  if (*orbit) return cmd_orbit(g, a_path, b_path, metric);
  if (*disc) return cmd_discriminate(g, a_path, max_subset);
  if (*verify) return cmd_verify(g, properties, replay_seed, corrupt);
  if (*sample) return cmd_sample(g, kind, dim, rank, count);
  return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Failure& f) {
    std::fprintf(stderr, "qgeom: %s\n", f.message.c_str());
    return f.exit_code;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "qgeom: %s\n", e.what());
    return kExitOther;
  } catch (...) {
    std::fprintf(stderr, "qgeom: unknown error\n");
    return kExitOther;
  }
}
