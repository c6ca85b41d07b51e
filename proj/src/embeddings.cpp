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

#include "geokernel/embeddings.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace geokernel {
namespace {

constexpr double kOrthogonalityTolerance = 1e-12;
constexpr double kTransferTolerance = 1e-12;

template <class T>
std::string text_of(const T& v, int digits) {
  if constexpr (std::is_same_v<T, double>) return format_double(v);
  else return format_high(v, digits);
}

template <class T>
T parse_as(const std::string& text) {
  if constexpr (std::is_same_v<T, double>) return parse_double(text);
  else return parse_high(text);
}

template <class T>
std::vector<std::vector<std::string>> map_points(const WitnessCertificate& cert, const EmbeddingMap& map) {
  std::vector<std::vector<std::string>> out;
  out.reserve(cert.points.size());
  for (const auto& p : cert.points) {
    const BasicPoint<T> image = map.apply(parse_as<T>(p.at(0)));
    std::vector<std::string> coords;
    coords.reserve(image.coords.size());
    for (const T& x : image.coords) coords.push_back(text_of(x, cert.precision_digits));
    out.push_back(std::move(coords));
  }
  return out;
}

}  // namespace

template <class T>
BasicPoint<T> EmbeddingMap::apply(const T& theta) const {
  using std::cos;
  using std::sin;
  BasicPoint<T> p;
  switch (kind) {
    case EmbeddingKind::great_circle: {
      p.coords.assign(std::get<Sphere>(target).n + 1, T(0));
      p.coords[0] = cos(theta);
      p.coords[1] = sin(theta);
      break;
    }
    case EmbeddingKind::projective_line: {
      p.coords.assign(std::get<Projective>(target).n + 1, T(0));
      p.coords[0] = cos(theta / T(2));
      p.coords[1] = sin(theta / T(2));
      break;
    }
    case EmbeddingKind::grassmann_circle: {
      const auto& g = std::get<Grassmannian>(target);
      const T c = cos(theta / T(2));
      const T s = sin(theta / T(2));
      p.coords.assign(static_cast<std::size_t>(g.n) * g.k, T(0));
      for (int r = 0; r < g.n; ++r) {
        p.coords[r * g.k] = c * T(base(r, 0)) + s * T(direction[r]);
        for (int col = 1; col < g.k; ++col) p.coords[r * g.k + col] = T(base(r, col));
      }
      break;
    }
    case EmbeddingKind::flat_torus:
      p.coords = {theta, T(0)};
      break;
  }
  return p;
}

template BasicPoint<double> EmbeddingMap::apply<double>(const double&) const;
template BasicPoint<HighFloat> EmbeddingMap::apply<HighFloat>(const HighFloat&) const;

EmbeddingMap great_circle(int n) {
  if (n < 1) throw std::invalid_argument("great_circle requires n >= 1");
  EmbeddingMap m;
  m.kind = EmbeddingKind::great_circle;
  m.source = Circle{1.0};
  m.target = Sphere{n};
  return m;
}

EmbeddingMap projective_line(int n) {
  if (n < 1) throw std::invalid_argument("projective_line requires n >= 1");
  EmbeddingMap m;
  m.kind = EmbeddingKind::projective_line;
  m.source = Circle{0.5};
  m.target = Projective{n};
  return m;
}

EmbeddingMap grassmann_circle(int k, int n, const Matrix<double>& base, const std::vector<double>& direction) {
  if (k < 1 || k >= n) throw std::invalid_argument("grassmann_circle requires 1 <= k < n");
  if (base.rows() != static_cast<std::size_t>(n) || base.cols() != static_cast<std::size_t>(k)) {
    throw std::invalid_argument("grassmann_circle: base must be n x k");
  }
  if (direction.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("grassmann_circle: direction must have n entries");
  }
  const Matrix<double> gram_b = multiply_transposed_left(base, base);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (std::fabs(gram_b(i, j) - (i == j ? 1.0 : 0.0)) > 1e-10) {
        throw std::invalid_argument("grassmann_circle: base columns are not orthonormal");
      }
    }
  }
  double norm2 = 0.0;
  for (double x : direction) norm2 += x * x;
  if (std::fabs(std::sqrt(norm2) - 1.0) > kOrthogonalityTolerance) {
    throw std::invalid_argument("grassmann_circle: direction is not a unit vector");
  }
  for (int col = 0; col < k; ++col) {
    double ip = 0.0;
    for (int r = 0; r < n; ++r) ip += base(r, col) * direction[r];
    if (std::fabs(ip) > kOrthogonalityTolerance) {
      throw std::invalid_argument("grassmann_circle: direction is not orthogonal to base column " +
                                  std::to_string(col));
    }
  }
  EmbeddingMap m;
  m.kind = EmbeddingKind::grassmann_circle;
  m.source = Circle{0.5};
  m.target = Grassmannian{k, n, GrassmannMetric::principal_angle};
  m.base = base;
  m.direction = direction;
  return m;
}

EmbeddingMap grassmann_circle(int k, int n) {
  if (k < 1 || k >= n) throw std::invalid_argument("grassmann_circle requires 1 <= k < n");
  Matrix<double> base(n, k);
  for (int i = 0; i < k; ++i) base(i, i) = 1.0;
  std::vector<double> direction(n, 0.0);
  direction[k] = 1.0;
  return grassmann_circle(k, n, base, direction);
}

EmbeddingMap flat_torus() {
  EmbeddingMap m;
  m.kind = EmbeddingKind::flat_torus;
  m.source = Circle{1.0};
  m.target = FlatTorus{};
  return m;
}

EmbeddingMap embedding_for(const SpaceDescriptor& target) {
  if (const auto* s = std::get_if<Sphere>(&target)) return great_circle(s->n);
  if (const auto* p = std::get_if<Projective>(&target)) return projective_line(p->n);
  if (const auto* g = std::get_if<Grassmannian>(&target)) {
    if (g->metric != GrassmannMetric::principal_angle) {
      throw std::invalid_argument("circle embedding into a Grassmannian needs the principal_angle metric");
    }
    return grassmann_circle(g->k, g->n);
  }
  if (std::holds_alternative<FlatTorus>(target)) return flat_torus();
  throw std::invalid_argument("no circle embedding for target " + describe(target));
}

double verify_isometry(const EmbeddingMap& map, int pair_count, std::uint64_t seed) {
  if (pair_count < 1) throw std::invalid_argument("verify_isometry requires pair_count >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi_value<double>());
  const SpaceDescriptor source = map.source;
  double worst = 0.0;
  for (int i = 0; i < pair_count; ++i) {
    const double a = angle(rng);
    const double b = angle(rng);
    const double d_source = distance(source, Point{{a}}, Point{{b}});
    const double d_target = distance(map.target, map.apply(a), map.apply(b));
    worst = std::max(worst, std::fabs(d_target - d_source));
  }
  return worst;
}

WitnessCertificate transfer_witness(const WitnessCertificate& cert, const EmbeddingMap& map) {
  const auto* circle = std::get_if<Circle>(&cert.space);
  if (circle == nullptr) throw std::invalid_argument("transfer_witness: certificate is not on a circle");
  if (circle->scale != map.source.scale) {
    throw std::invalid_argument("transfer_witness: scale mismatch, certificate circle:" + format_double(circle->scale) +
                                " vs embedding source circle:" + format_double(map.source.scale));
  }

  WitnessCertificate out = cert;
  out.space = map.target;
  out.source_space = describe(cert.space);
  if (cert.precision_digits == kDoubleDigits) {
    out.points = map_points<double>(cert, map);
    out.unit_circle_lambda = format_double(parse_double(cert.lambda) * circle->scale * circle->scale);
  } else {
    ScopedPrecision guard(cert.precision_digits);
    out.points = map_points<HighFloat>(cert, map);
    const HighFloat s(circle->scale);
    out.unit_circle_lambda = format_high(parse_high(cert.lambda) * s * s, cert.precision_digits);
  }
  out.quad_form = evaluate_quad_form(out);

  const bool agree = [&] {
    if (cert.precision_digits == kDoubleDigits) {
      const double a = parse_double(cert.quad_form);
      const double b = parse_double(out.quad_form);
      return std::fabs(a - b) <= kTransferTolerance * std::fabs(a);
    }
    ScopedPrecision guard(cert.precision_digits);
    const HighFloat a = parse_high(cert.quad_form);
    const HighFloat b = parse_high(out.quad_form);
    return abs(a - b) <= HighFloat(kTransferTolerance) * abs(a);
  }();
  if (!agree) {
    throw std::runtime_error("transfer_witness: target quadratic form " + out.quad_form + " differs from source " +
                             cert.quad_form);
  }
  return out;
}

}  // namespace geokernel
