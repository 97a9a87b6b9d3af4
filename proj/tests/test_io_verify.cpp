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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <string>

#include "oracles.hpp"
#include "qgeom/io.hpp"
#include "qgeom/verify.hpp"
#include "test_support.hpp"

namespace qgeom {
namespace {

using testing::diag;

TEST(Io, StateRoundTripIsExact) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    Index d = 1 + static_cast<Index>(rng.index(6));
    DensityMatrix rho = validate_state(random_density(d, d, rng));
    io::Json j = io::parse(io::dump(io::state_to_json(rho)));
    DensityMatrix back = io::state_from_json(j);
    EXPECT_EQ(back.matrix(), rho.matrix());
  }
}

TEST(Io, MatrixFormat) {
  io::Json j = io::parse(R"({"dim": 2, "re": [[0.5, 0], [0, 0.5]]})");
  DensityMatrix rho = io::state_from_json(j);
  EXPECT_EQ(rho.dim(), 2);
  EXPECT_NEAR(rho.matrix()(1, 1).real(), 0.5, 0);

  io::Json with_im = io::parse(
      R"({"dim": 2, "re": [[0.5, 0], [0, 0.5]], "im": [[0, -0.5], [0.5, 0]]})");
  DensityMatrix y = io::state_from_json(with_im);
  EXPECT_NEAR(y.matrix()(0, 1).imag(), -0.5, 0);
  EXPECT_NEAR(y.spectrum()[0], 0.0, 1e-15);
}

TEST(Io, SeventeenDigits) {
  io::Json j = io::spectrum_to_json(Spectrum({0.1, 0.9}));
  std::string text = io::dump(j, -1);
  EXPECT_NE(text.find("0.10000000000000001"), std::string::npos) << text;
  EXPECT_EQ(io::spectrum_from_json(io::parse(text)), Spectrum({0.1, 0.9}));
}

TEST(Io, StateSets) {
  const char* arr = R"([{"dim": 1, "re": [[1]]}, {"dim": 1, "re": [[1]]}])";
  EXPECT_EQ(io::states_from_json(io::parse(arr)).size(), 2u);
  std::string wrapped = std::string(R"({"states": )") + arr + "}";
  EXPECT_EQ(io::states_from_json(io::parse(wrapped)).size(), 2u);
}

TEST(Io, ParseErrors) {
  EXPECT_QG_ERROR(io::parse("{not json"), ErrorCode::kParseError);
  EXPECT_QG_ERROR(io::state_from_json(io::parse(R"({"re": [[1]]})")),
                  ErrorCode::kParseError);
  EXPECT_QG_ERROR(io::state_from_json(io::parse(R"({"dim": 2, "re": [[1, 0]]})")),
                  ErrorCode::kParseError);
  EXPECT_QG_ERROR(io::state_from_json(io::parse(R"({"dim": 1, "re": [["x"]]})")),
                  ErrorCode::kParseError);
  EXPECT_QG_ERROR(io::spectrum_from_json(io::parse(R"({"q": [1]})")),
                  ErrorCode::kParseError);
}

TEST(Io, ValidationErrorsPassThrough) {
  EXPECT_QG_ERROR(io::state_from_json(io::parse(R"({"dim": 1, "re": [[2]]})")),
                  ErrorCode::kTraceNotOne);
  EXPECT_QG_ERROR(io::state_from_json(io::parse(R"({"dim": 2, "re": [[1.5, 0], [0, -0.5]]})")),
                  ErrorCode::kNotPsd);
  EXPECT_QG_ERROR(io::spectrum_from_json(io::parse(R"({"p": [0.5, 0.6]})")),
                  ErrorCode::kInvalidSpectrum);
}

TEST(Io, Files) {
  auto path = std::filesystem::temp_directory_path() / "qgeom_io_test.json";
  io::write_file(path, "[1, 2]");
  EXPECT_EQ(io::read_file(path), "[1, 2]");
  std::filesystem::remove(path);
  EXPECT_QG_ERROR(io::read_file(path), ErrorCode::kIoError);
}

TEST(Io, OrbitReportFields) {
  OrbitBoundsReport r = orbit_extremes(Spectrum({0.7, 0.3}), Spectrum({0.6, 0.4}),
                                       MetricKind::kTrace, 0, 5);
  io::Json j = io::to_json(r);
  EXPECT_EQ(j["metric"], "trace");
  EXPECT_NEAR(j["lower"].get<double>(), 0.1, 1e-12);
  EXPECT_EQ(j["argmax_perm"], io::Json::parse("[1, 0]"));
  EXPECT_EQ(j["seed"], 5);
}

verify::Config quick(std::size_t samples) {
  verify::Config c;
  c.samples = samples;
  c.dims = {2, 3};
  return c;
}

TEST(Verify, SmallRunPasses) {
  verify::Summary s = verify::run(quick(3));
  EXPECT_TRUE(s.all_pass());
  EXPECT_EQ(s.results.size(), verify::property_names().size() * 2);
  for (const auto& r : s.results) {
    EXPECT_EQ(r.samples, 3u) << r.property;
    EXPECT_FALSE(r.first_failure.has_value()) << r.property;
  }
}

TEST(Verify, SingleSampleRuns) {
  verify::Config c = quick(1);
  c.properties = {"metric_axioms", "diameter"};
  verify::Summary s = verify::run(c);
  ASSERT_EQ(s.results.size(), 4u);
  EXPECT_EQ(s.results[0].property, "metric_axioms");
  EXPECT_EQ(s.results[0].dim, 2);
  EXPECT_TRUE(s.all_pass());
}

TEST(Verify, DeterministicOutput) {
  verify::Config c = quick(5);
  c.properties = {"orbit_containment", "monotonicity", "discrimination"};
  std::string a = verify::to_csv(verify::run(c));
  std::string b = verify::to_csv(verify::run(c));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.substr(0, a.find('\n')),
            "property,dim,samples,passes,failures,worst_residual,seed");
  c.seed = 43;
  EXPECT_NE(verify::to_csv(verify::run(c)), a);
}

TEST(Verify, CorruptedMetricIsCaughtAndReplayable) {
  verify::Config c = quick(4);
  c.properties = {"diameter"};
  c.corrupt_metric = true;
  verify::Summary s = verify::run(c);
  EXPECT_FALSE(s.all_pass());
  ASSERT_TRUE(s.results[0].first_failure.has_value());
  const io::Json& f = *s.results[0].first_failure;
  EXPECT_EQ(f["property"], "diameter");
  EXPECT_TRUE(f.contains("inputs"));
  const auto seed = f["sample_seed"].get<std::uint64_t>();

  verify::Config replay = c;
  replay.dims = {f["dim"].get<Index>()};
  replay.replay_seed = seed;
  verify::Summary again = verify::run(replay);
  ASSERT_EQ(again.results.size(), 1u);
  EXPECT_EQ(again.results[0].samples, 1u);
  EXPECT_EQ(again.results[0].failures, 1u);
  EXPECT_EQ((*again.results[0].first_failure)["inputs"], f["inputs"]);

  replay.corrupt_metric = false;
  EXPECT_TRUE(verify::run(replay).all_pass());
}

TEST(Verify, JsonSummary) {
  verify::Config c = quick(1);
  c.properties = {"von_neumann"};
  verify::Summary s = verify::run(c);
  io::Json j = verify::to_json(s, c);
  EXPECT_EQ(j["all_pass"], true);
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["results"].size(), 2u);
  EXPECT_TRUE(j["failures"].empty());
}

TEST(Verify, ConfigErrors) {
  verify::Config c = quick(1);
  c.properties = {"nope"};
  EXPECT_QG_ERROR(verify::run(c), ErrorCode::kInvalidArgument);
  c = quick(1);
  c.dims.clear();
  EXPECT_QG_ERROR(verify::run(c), ErrorCode::kInvalidArgument);
  c = quick(1);
  c.dims = {1};
  EXPECT_QG_ERROR(verify::run(c), ErrorCode::kInvalidDimension);
  c = quick(0);
  EXPECT_QG_ERROR(verify::run(c), ErrorCode::kInvalidArgument);
}

}  // namespace
}  // namespace qgeom
