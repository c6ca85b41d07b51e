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

#include "geokernel/certificate.hpp"

#include <cmath>
#include <stdexcept>

#include "geokernel/gram.hpp"

namespace geokernel {
namespace {

using nlohmann::json;

template <class T>
T parse_as(const std::string& text) {
  if constexpr (std::is_same_v<T, double>) return parse_double(text);
  else return parse_high(text);
}

template <class T>
std::string format_as(const T& value, int digits) {
  if constexpr (std::is_same_v<T, double>) return format_double(value);
  else return format_high(value, digits);
}

template <class T>
std::vector<BasicPoint<T>> parse_points(const WitnessCertificate& cert) {
  std::vector<BasicPoint<T>> pts;
  pts.reserve(cert.points.size());
  for (std::size_t i = 0; i < cert.points.size(); ++i) {
    BasicPoint<T> p;
    for (const auto& c : cert.points[i]) p.coords.push_back(parse_as<T>(c));
    if (auto v = validate_point(cert.space, p)) {
      throw std::invalid_argument("points[" + std::to_string(i) + "]: " + *v);
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

template <class T>
T quad_form(const WitnessCertificate& cert) {
  const std::size_t n = cert.points.size();
  if (n == 0) throw std::invalid_argument("points: certificate has no points");
  if (cert.coefficients.size() != n) {
    throw std::invalid_argument("coefficients: expected " + std::to_string(n) + " entries, got " +
                                std::to_string(cert.coefficients.size()));
  }
  const T lambda = parse_as<T>(cert.lambda);
  if (!(lambda > T(0))) throw std::invalid_argument("lambda: must be positive");
  const auto pts = parse_points<T>(cert);
  std::vector<T> c;
  c.reserve(n);
  for (const auto& s : cert.coefficients) c.push_back(parse_as<T>(s));

  // Neumaier summation over the N^2 terms; exact enough in double and
  // harmless at MPFR precision.
  T sum(0), carry(0);
  auto add = [&](const T& v) {
    using std::abs;
    const T t = sum + v;
    if (abs(sum) >= abs(v)) carry += (sum - t) + v;
    else carry += (v - t) + sum;
    sum = t;
  };
  for (std::size_t i = 0; i < n; ++i) {
    add(c[i] * c[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      const T k = gaussian_kernel(lambda, distance(cert.space, pts[i], pts[j]));
      add(T(2) * c[i] * c[j] * k);
    }
  }
  return sum + carry;
}

template <class T>
VerifyResult verify_as(const WitnessCertificate& cert) {
  using std::abs;
  VerifyResult r;
  const T recomputed = quad_form<T>(cert);
  const T stored = parse_as<T>(cert.quad_form);
  r.recomputed = format_as(recomputed, cert.precision_digits);
  const bool match = abs(recomputed - stored) <= T(1e-12) * abs(stored);
  if (recomputed < T(0) && stored >= T(0)) {
    r.detail = "recomputed value negative, stored positive";
  } else if (!(recomputed < T(0))) {
    r.detail = "recomputed quadratic form is not negative";
  } else if (!match) {
    r.detail = "recomputation mismatch: stored " + cert.quad_form + ", recomputed " + r.recomputed;
  } else {
    r.ok = true;
    r.detail = "ok";
  }
  return r;
}

}  // namespace

double certificate_threshold(std::size_t order) { return 10.0 * psd_tolerance(order, 1.0); }

std::string evaluate_quad_form(const WitnessCertificate& cert) {
  check_precision_digits(cert.precision_digits);
  if (cert.precision_digits == kDoubleDigits) return format_double(quad_form<double>(cert));
  ScopedPrecision guard(cert.precision_digits);
  return format_high(quad_form<HighFloat>(cert), cert.precision_digits);
}

VerifyResult verify_certificate(const WitnessCertificate& cert) {
  if (cert.schema_version != kSchemaVersion) {
    throw std::invalid_argument("schema_version: unknown version '" + cert.schema_version + "'");
  }
  check_precision_digits(cert.precision_digits);
  if (cert.precision_digits == kDoubleDigits) return verify_as<double>(cert);
  ScopedPrecision guard(cert.precision_digits);
  return verify_as<HighFloat>(cert);
}

// ---------------------------------------------------------------------------
// JSON

std::string decimal_from_json(const json& j, const std::string& path) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      (void)parse_high(s, kDoubleDigits);
    } catch (const std::exception&) {
      throw std::invalid_argument(path + ": not a decimal number");
    }
    return s;
  }
  if (j.is_number()) return format_double(j.get<double>());
  throw std::invalid_argument(path + ": expected a number or decimal string");
}

namespace {

json number_or_string(const std::string& text, bool as_string) {
  if (as_string) return text;
  return parse_double(text);
}

int int_field(const json& j, const char* key, const std::string& path) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw std::invalid_argument(path + "." + key + ": expected an integer");
  }
  return j.at(key).get<int>();
}

}  // namespace

json space_to_json(const SpaceDescriptor& space) {
  return std::visit(
      [](const auto& s) -> json {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, Circle>) return {{"variant", "circle"}, {"scale", s.scale}};
        else if constexpr (std::is_same_v<S, Sphere>) return {{"variant", "sphere"}, {"n", s.n}};
        else if constexpr (std::is_same_v<S, Projective>) return {{"variant", "projective"}, {"n", s.n}};
        else if constexpr (std::is_same_v<S, Grassmannian>)
          return {{"variant", "grassmannian"},
                  {"k", s.k},
                  {"n", s.n},
                  {"metric", s.metric == GrassmannMetric::projection ? "projection" : "principal_angle"}};
        else if constexpr (std::is_same_v<S, Spd>)
          return {{"variant", "spd"},
                  {"n", s.n},
                  {"metric", s.metric == SpdMetric::frobenius       ? "frobenius"
                             : s.metric == SpdMetric::log_euclidean ? "log_euclidean"
                                                                    : "stein"}};
        else if constexpr (std::is_same_v<S, Euclidean>) return {{"variant", "euclidean"}, {"n", s.n}};
        else return {{"variant", "torus"}};
      },
      space);
}

SpaceDescriptor space_from_json(const json& j, const std::string& path) {
  if (!j.is_object()) throw std::invalid_argument(path + ": expected an object");
  if (!j.contains("variant") || !j.at("variant").is_string()) {
    throw std::invalid_argument(path + ".variant: expected a string");
  }
  const std::string variant = j.at("variant").get<std::string>();
  SpaceDescriptor out;
  if (variant == "circle") {
    double scale = 1.0;
    if (j.contains("scale")) scale = parse_double(decimal_from_json(j.at("scale"), path + ".scale"));
    out = Circle{scale};
  } else if (variant == "sphere") {
    out = Sphere{int_field(j, "n", path)};
  } else if (variant == "projective") {
    out = Projective{int_field(j, "n", path)};
  } else if (variant == "grassmannian") {
    Grassmannian g{int_field(j, "k", path), int_field(j, "n", path), GrassmannMetric::principal_angle};
    if (j.contains("metric")) {
      const std::string m = j.at("metric").get<std::string>();
      if (m == "projection") g.metric = GrassmannMetric::projection;
      else if (m != "principal_angle") throw std::invalid_argument(path + ".metric: unknown '" + m + "'");
    }
    out = g;
  } else if (variant == "spd") {
    Spd s{int_field(j, "n", path), SpdMetric::frobenius};
    if (j.contains("metric")) {
      const std::string m = j.at("metric").get<std::string>();
      if (m == "log_euclidean") s.metric = SpdMetric::log_euclidean;
      else if (m == "stein") s.metric = SpdMetric::stein;
      else if (m != "frobenius") throw std::invalid_argument(path + ".metric: unknown '" + m + "'");
    }
    out = s;
  } else if (variant == "euclidean") {
    out = Euclidean{int_field(j, "n", path)};
  } else if (variant == "torus") {
    out = FlatTorus{};
  } else {
    throw std::invalid_argument(path + ".variant: unknown '" + variant + "'");
  }
  try {
    validate_space(out);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  return out;
}

json point_to_json(const SpaceDescriptor& space, const std::vector<std::string>& coords, bool as_strings) {
  if (std::holds_alternative<Circle>(space)) return number_or_string(coords.at(0), as_strings);
  json arr = json::array();
  std::size_t cols = 0;
  if (const auto* g = std::get_if<Grassmannian>(&space)) cols = g->k;
  if (const auto* s = std::get_if<Spd>(&space)) cols = s->n;
  if (cols == 0) {
    for (const auto& c : coords) arr.push_back(number_or_string(c, as_strings));
    return arr;
  }
  for (std::size_t r = 0; r * cols < coords.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < cols; ++c) row.push_back(number_or_string(coords[r * cols + c], as_strings));
    arr.push_back(std::move(row));
  }
  return arr;
}

std::vector<std::string> point_from_json(const SpaceDescriptor& space, const json& j, const std::string& path) {
  std::vector<std::string> coords;
  if (std::holds_alternative<Circle>(space) && !j.is_array()) {
    coords.push_back(decimal_from_json(j, path));
  } else {
    if (!j.is_array()) throw std::invalid_argument(path + ": expected an array");
    for (std::size_t i = 0; i < j.size(); ++i) {
      const json& e = j.at(i);
      if (e.is_array()) {
        for (std::size_t c = 0; c < e.size(); ++c) {
          coords.push_back(decimal_from_json(e.at(c), path + "[" + std::to_string(i) + "][" + std::to_string(c) + "]"));
        }
      } else {
        coords.push_back(decimal_from_json(e, path + "[" + std::to_string(i) + "]"));
      }
    }
  }
  if (coords.size() != payload_size(space)) {
    throw std::invalid_argument(path + ": dimension mismatch, " + describe(space) + " expects " +
                                std::to_string(payload_size(space)) + " coordinates, got " +
                                std::to_string(coords.size()));
  }
  return coords;
}

json to_json(const WitnessCertificate& cert) {
  const bool strings = cert.precision_digits > kDoubleDigits;
  json j;
  j["schema_version"] = cert.schema_version;
  j["space"] = space_to_json(cert.space);
  j["lambda"] = number_or_string(cert.lambda, strings);
  json pts = json::array();
  for (const auto& p : cert.points) pts.push_back(point_to_json(cert.space, p, strings));
  j["points"] = std::move(pts);
  json coeffs = json::array();
  for (const auto& c : cert.coefficients) coeffs.push_back(number_or_string(c, strings));
  j["coefficients"] = std::move(coeffs);
  j["quad_form"] = number_or_string(cert.quad_form, strings);
  j["min_eigenvalue"] = number_or_string(cert.min_eigenvalue, strings);
  j["method"] = to_string(cert.method);
  j["precision_digits"] = cert.precision_digits;
  if (cert.unit_circle_lambda) j["unit_circle_lambda"] = number_or_string(*cert.unit_circle_lambda, strings);
  if (cert.source_space) j["source_space"] = *cert.source_space;
  if (cert.closure) {
    j["addition_closure"] = {{"probed_lambda", number_or_string(cert.closure->probed_lambda, strings)},
                             {"multiplier", cert.closure->multiplier}};
  }
  return j;
}

WitnessCertificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate: expected a JSON object");
  auto need = [&](const char* key) -> const json& {
    if (!j.contains(key)) throw std::invalid_argument(std::string(key) + ": missing field");
    return j.at(key);
  };
  WitnessCertificate cert;
  const json& version = need("schema_version");
  if (!version.is_string()) throw std::invalid_argument("schema_version: expected a string");
  cert.schema_version = version.get<std::string>();
  cert.space = space_from_json(need("space"));
  cert.lambda = decimal_from_json(need("lambda"), "lambda");
  const json& pts = need("points");
  if (!pts.is_array()) throw std::invalid_argument("points: expected an array");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    cert.points.push_back(point_from_json(cert.space, pts.at(i), "points[" + std::to_string(i) + "]"));
  }
  const json& coeffs = need("coefficients");
  if (!coeffs.is_array()) throw std::invalid_argument("coefficients: expected an array");
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    cert.coefficients.push_back(decimal_from_json(coeffs.at(i), "coefficients[" + std::to_string(i) + "]"));
  }
  cert.quad_form = decimal_from_json(need("quad_form"), "quad_form");
  cert.min_eigenvalue = decimal_from_json(need("min_eigenvalue"), "min_eigenvalue");
  const json& method = need("method");
  if (!method.is_string()) throw std::invalid_argument("method: expected a string");
  try {
    cert.method = parse_spectral_method(method.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("method: ") + e.what());
  }
  const json& prec = need("precision_digits");
  if (!prec.is_number_integer()) throw std::invalid_argument("precision_digits: expected an integer");
  cert.precision_digits = prec.get<int>();
  try {
    check_precision_digits(cert.precision_digits);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("precision_digits: ") + e.what());
  }
  if (j.contains("unit_circle_lambda")) {
    cert.unit_circle_lambda = decimal_from_json(j.at("unit_circle_lambda"), "unit_circle_lambda");
  }
  if (j.contains("source_space")) cert.source_space = j.at("source_space").get<std::string>();
  if (j.contains("addition_closure")) {
    const json& c = j.at("addition_closure");
    AdditionClosure closure;
    closure.probed_lambda = decimal_from_json(c.at("probed_lambda"), "addition_closure.probed_lambda");
    closure.multiplier = c.at("multiplier").get<int>();
    cert.closure = closure;
  }
  return cert;
}

}  // namespace geokernel
