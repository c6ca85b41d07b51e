// Copyright 2026 the geokernel authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "geokernel/io.hpp"

#include <gtest/gtest.h>

namespace geokernel {
namespace {

using nlohmann::json;

TEST(Io, PointSetAcceptsObjectOrStringSpace) {
  const json a = json::parse(R"({"space": {"variant": "sphere", "n": 2}, "points": [[1, 0, 0], ["0", "1", "0"]]})");
  const json b = json::parse(R"({"space": "sphere:2", "points": [[1, 0, 0], [0, 1, 0]]})");
  const auto pa = point_set_from_json(a);
  const auto pb = point_set_from_json(b);
  EXPECT_EQ(pa.space, pb.space);
  EXPECT_EQ(pa.points(), pb.points());
  EXPECT_EQ(pa.coords[1][1], "1");
}

TEST(Io, PointSetRoundTrip) {
  const SpaceDescriptor s = Spd{2, SpdMetric::log_euclidean};
  const auto pts = sample_points(s, 3, 4);
  const auto back = point_set_from_json(json::parse(point_set_to_json(s, pts).dump()));
  EXPECT_EQ(back.space, s);
  EXPECT_EQ(back.points(), pts);
}

TEST(Io, DimensionMismatchNamesField) {
  const json bad = json::parse(R"({"space": "euclidean:3", "points": [[1, 2, 3], [1, 2]]})");
  try {
    point_set_from_json(bad);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_EQ(std::string(e.what()).rfind("points[1]: dimension mismatch", 0), 0u) << e.what();
  }
  EXPECT_THROW(point_set_from_json(json::parse(R"({"points": []})")), std::invalid_argument);
  EXPECT_THROW(parse_json_text("{\"space\": ", "pts.json"), std::invalid_argument);
}

TEST(Io, GramSerializations) {
  const SpaceDescriptor s = Euclidean{1};
  const std::vector<Point> pts{Point{{0.0}}, Point{{1.0}}};
  const auto k = gram(s, pts, KernelParam::from_lambda(1.0));
  const json j = gram_to_json(k);
  EXPECT_EQ(j.at("order"), 2);
  EXPECT_EQ(j.at("entries").size(), 3u);
  EXPECT_EQ(j.at("entries")[1].get<double>(), k.entries(1, 0));
  EXPECT_EQ(gram_to_csv(k.entries), "1," + format_double(k.entries(0, 1)) + "\n" + format_double(k.entries(0, 1)) + ",1\n");
}

TEST(Io, SpectrumStringsAtHighPrecision) {
  SpectrumReport r;
  r.eigenvalues = {-0.5, 1.5};
  r.eigenvalue_text = {"-5.0e-01", "1.5e+00"};
  r.min_eigenvalue = -0.5;
  r.min_eigenvalue_text = "-5.0e-01";
  r.method = SpectralMethod::circulant;
  r.index_map = {1, 0};
  r.precision_digits = 30;
  EXPECT_TRUE(spectrum_to_json(r).at("eigenvalues")[0].is_string());
  r.precision_digits = 17;
  EXPECT_TRUE(spectrum_to_json(r).at("eigenvalues")[0].is_number());
}

TEST(Io, CsvWriter) {
  CsvWriter w({"N", "value"});
  w.row({"4", "0.5"});
  EXPECT_EQ(w.str(), "N,value\n4,0.5\n");
  EXPECT_THROW(w.row({"1"}), std::logic_error);
}

TEST(Io, RunReportCarriesVersions) {
  const json r = run_report("theta", {{"mu", 1}}, {{"value", 2}}, 9);
  EXPECT_EQ(r.at("schema_version"), "1");
  EXPECT_EQ(r.at("seed"), 9);
  EXPECT_EQ(r.at("command"), "theta");
}

}  // namespace
}  // namespace geokernel
