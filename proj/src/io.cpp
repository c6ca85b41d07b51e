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

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "geokernel/certificate.hpp"

namespace geokernel {

using nlohmann::json;

std::vector<Point> PointSet::points() const {
  std::vector<Point> out;
  out.reserve(coords.size());
  for (const auto& c : coords) {
    Point p;
    p.coords.reserve(c.size());
    for (const auto& s : c) p.coords.push_back(parse_double(s));
    out.push_back(std::move(p));
  }
  return out;
}

PointSet point_set_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("point set: expected a JSON object");
  if (!j.contains("space")) throw std::invalid_argument("space: missing field");
  if (!j.contains("points")) throw std::invalid_argument("points: missing field");
  PointSet set;
  const json& space = j.at("space");
  if (space.is_string()) {
    try {
      set.space = parse_space(space.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(std::string("space: ") + e.what());
    }
  } else {
    set.space = space_from_json(space);
  }
  const json& pts = j.at("points");
  if (!pts.is_array()) throw std::invalid_argument("points: expected an array");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    set.coords.push_back(point_from_json(set.space, pts.at(i), "points[" + std::to_string(i) + "]"));
  }
  return set;
}

json point_set_to_json(const SpaceDescriptor& space, const std::vector<Point>& points) {
  json arr = json::array();
  for (const Point& p : points) {
    std::vector<std::string> text;
    for (double x : p.coords) text.push_back(format_double(x));
    arr.push_back(point_to_json(space, text, false));
  }
  return {{"space", space_to_json(space)}, {"points", std::move(arr)}};
}

json gram_to_json(const GramMatrix& k) {
  json entries = json::array();
  for (std::size_t i = 0; i < k.order(); ++i)
    for (std::size_t j = 0; j <= i; ++j) entries.push_back(k.entries(i, j));
  return {{"order", k.order()},
          {"lambda", k.lambda},
          {"space", space_to_json(k.space)},
          {"point_ids", k.point_ids},
          {"entries", std::move(entries)}};
}

std::string gram_to_csv(const Matrix<double>& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j > 0) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

json spectrum_to_json(const SpectrumReport& r) {
  const bool strings = r.precision_digits > kDoubleDigits;
  json eig = json::array();
  for (std::size_t i = 0; i < r.eigenvalues.size(); ++i) {
    if (strings) eig.push_back(r.eigenvalue_text.at(i));
    else eig.push_back(r.eigenvalues[i]);
  }
  json j = {{"method", to_string(r.method)},
            {"precision_digits", r.precision_digits},
            {"eigenvalues", std::move(eig)}};
  if (strings) j["min_eigenvalue"] = r.min_eigenvalue_text;
  else j["min_eigenvalue"] = r.min_eigenvalue;
  if (r.method == SpectralMethod::circulant) {
    j["index_map"] = r.index_map;
  } else {
    j["sweeps"] = r.sweeps;
    j["offdiag_residual"] = r.offdiag_residual;
  }
  return j;
}

json run_report(const std::string& command, json inputs, json outputs, std::uint64_t seed) {
  return {{"command", command},
          {"inputs", std::move(inputs)},
          {"outputs", std::move(outputs)},
          {"seed", seed},
          {"tool_version", kToolVersion},
          {"schema_version", kSchemaVersion}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(source + ": malformed JSON at byte " + std::to_string(e.byte));
  }
}

CsvWriter::CsvWriter(const std::vector<std::string>& header) : columns_(header.size()) { row(header); }

void CsvWriter::row(const std::vector<std::string>& cells) {
  if (cells.size() != columns_) throw std::logic_error("csv row has the wrong number of cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) out_ += ',';
    out_ += cells[i];
  }
  out_ += '\n';
}

}  // namespace geokernel
