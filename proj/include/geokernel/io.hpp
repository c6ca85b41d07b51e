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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geokernel/gram.hpp"
#include "geokernel/metric.hpp"
#include "geokernel/spectral.hpp"

namespace geokernel {

inline constexpr const char* kToolVersion = "0.1.0";

struct PointSet {
  SpaceDescriptor space;
  std::vector<std::vector<std::string>> coords;  // decimal text as read

  std::vector<Point> points() const;
};

/// {"space": {...} | "sphere:2", "points": [...]}. Errors name the field path.
PointSet point_set_from_json(const nlohmann::json& j);
nlohmann::json point_set_to_json(const SpaceDescriptor& space, const std::vector<Point>& points);

/// {order, lambda, space, entries}: entries is the row-major lower triangle.
nlohmann::json gram_to_json(const GramMatrix& k);

/// Dense, headerless, one row per line.
std::string gram_to_csv(const Matrix<double>& m);

/// Eigenvalues are decimal strings when precision_digits > 17.
nlohmann::json spectrum_to_json(const SpectrumReport& r);

nlohmann::json run_report(const std::string& command, nlohmann::json inputs, nlohmann::json outputs,
                          std::uint64_t seed = 0);

/// Throws std::runtime_error naming the path when the file cannot be read.
std::string read_text_file(const std::string& path);

/// Throws std::invalid_argument with the parser position on malformed JSON.
nlohmann::json parse_json_text(const std::string& text, const std::string& source);

/// Headered comma-separated text with LF line endings.
class CsvWriter {
 public:
  explicit CsvWriter(const std::vector<std::string>& header);
  void row(const std::vector<std::string>& cells);
  const std::string& str() const { return out_; }

 private:
  std::size_t columns_;
  std::string out_;
};

}  // namespace geokernel
