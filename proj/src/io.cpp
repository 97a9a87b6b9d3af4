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

#include "qgeom/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace qgeom::io {
namespace {

[[noreturn]] void parse_error(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) parse_error("expected a JSON object");
  auto it = j.find(name);
  if (it == j.end()) parse_error(std::string("missing field '") + name + "'");
  return *it;
}

double number(const Json& j) {
  if (!j.is_number()) parse_error("expected a number");
  return j.get<double>();
}

std::vector<std::vector<double>> rows(const Json& j, std::size_t n,
                                      const char* name) {
  if (!j.is_array() || j.size() != n) {
    parse_error(std::string("'") + name + "' must have " + std::to_string(n) + " rows");
  }
  std::vector<std::vector<double>> out;
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != n) {
      parse_error(std::string("'") + name + "' rows must have " +
                  std::to_string(n) + " entries");
    }
    std::vector<double> r;
    for (const Json& x : row) r.push_back(number(x));
    out.push_back(std::move(r));
  }
  return out;
}

void emit_number(std::ostringstream& out, double x) {
  if (!std::isfinite(x)) {
    out << "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  out << buf;
}

void emit(std::ostringstream& out, const Json& j, int indent, int depth) {
  auto newline = [&](int d) {
    if (indent < 0) return;
    out << '\n' << std::string(static_cast<std::size_t>(indent * d), ' ');
  };
  // Arrays of scalars stay on one line so matrices remain readable.
  auto is_flat = [](const Json& a) {
    for (const Json& x : a) {
      if (x.is_structured()) return false;
    }
    return true;
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) { out << "{}"; return; }
      out << '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << ',';
        first = false;
        newline(depth + 1);
        out << Json(it.key()).dump() << (indent < 0 ? ":" : ": ");
        emit(out, it.value(), indent, depth + 1);
      }
      newline(depth);
      out << '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) { out << "[]"; return; }
      const bool flat = is_flat(j);
      out << '[';
      bool first = true;
      for (const Json& x : j) {
        if (!first) out << (flat && indent >= 0 ? ", " : ",");
        first = false;
        if (!flat) newline(depth + 1);
        emit(out, x, indent, depth + 1);
      }
      if (!flat) newline(depth);
      out << ']';
      return;
    }
    case Json::value_t::number_float:
      emit_number(out, j.get<double>());
      return;
    default:
      out << j.dump();
      return;
  }
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    parse_error(e.what());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIoError, "cannot write " + path.string());
  out << text;
  if (!out) throw Error(ErrorCode::kIoError, "write failed for " + path.string());
}

ComplexMatrix matrix_from_json(const Json& j) {
  const Json& dim_field = field(j, "dim");
  if (!dim_field.is_number_integer() || dim_field.get<long long>() < 1) {
    parse_error("'dim' must be a positive integer");
  }
  const auto n = static_cast<std::size_t>(dim_field.get<long long>());
  auto re = rows(field(j, "re"), n, "re");
  std::vector<std::vector<double>> im;
  if (j.contains("im")) {
    im = rows(field(j, "im"), n, "im");
  } else {
    im.assign(n, std::vector<double>(n, 0.0));
  }
  ComplexMatrix m(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(static_cast<Index>(r), static_cast<Index>(c)) = Complex(re[r][c], im[r][c]);
    }
  }
  return m;
}

Json matrix_to_json(const ComplexMatrix& m) {
  Json re = Json::array();
  Json im = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json rr = Json::array();
    Json ii = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ii.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ii));
  }
  return Json{{"dim", m.rows()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

DensityMatrix state_from_json(const Json& j) {
  // A one-element array is accepted so sampler output can be fed back in.
  if (j.is_array()) {
    if (j.size() != 1) parse_error("expected a single state");
    return state_from_json(j.front());
  }
  return validate_state(matrix_from_json(j));
}

std::vector<DensityMatrix> states_from_json(const Json& j) {
  const Json* arr = &j;
  if (j.is_object()) arr = &field(j, "states");
  if (!arr->is_array()) parse_error("expected an array of states");
  std::vector<DensityMatrix> out;
  for (const Json& s : *arr) out.push_back(validate_state(matrix_from_json(s)));
  return out;
}

Json state_to_json(const DensityMatrix& rho) { return matrix_to_json(rho.matrix()); }

Spectrum spectrum_from_json(const Json& j) {
  if (j.is_array() && j.size() == 1 && j.front().is_object()) {
    return spectrum_from_json(j.front());
  }
  const Json& p = field(j, "p");
  if (!p.is_array()) parse_error("'p' must be an array");
  std::vector<double> values;
  for (const Json& x : p) values.push_back(number(x));
  return Spectrum(std::move(values));
}

Json spectrum_to_json(const Spectrum& p) { return Json{{"p", p.values()}}; }

Json permutation_to_json(const Permutation& p) { return Json(p.mapping()); }

Json to_json(const OrbitBoundsReport& r) {
  return Json{{"metric", std::string(to_string(r.metric))},
              {"lower", r.lower},
              {"upper", r.upper},
              {"oracle_min", r.oracle_min},
              {"oracle_max", r.oracle_max},
              {"argmin_perm", permutation_to_json(r.argmin_permutation)},
              {"argmax_perm", permutation_to_json(r.argmax_permutation)},
              {"samples", r.samples},
              {"seed", r.seed}};
}

Json to_json(const Povm& povm) {
  Json elements = Json::array();
  for (const ComplexMatrix& a : povm.elements()) elements.push_back(matrix_to_json(a));
  return Json{{"dim", povm.dim()}, {"elements", std::move(elements)}};
}

Json to_json(const DiscriminationReport& r) {
  Json j{{"discriminable", r.discriminable},
         {"rank_sum", r.rank_sum},
         {"dim", r.dim},
         {"rank_bound_ok", r.rank_sum <= static_cast<std::size_t>(r.dim)},
         {"max_pairwise_overlap", r.max_pairwise_overlap}};
  if (r.povm) j["povm"] = to_json(*r.povm);
  return j;
}

std::string dump(const Json& j, int indent) {
  std::ostringstream out;
  emit(out, j, indent, 0);
  return out.str();
}

}  // namespace qgeom::io
