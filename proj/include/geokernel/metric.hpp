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

// Catalog of metric spaces: descriptors, point validation, exact distances,
// equispaced circle configurations and seeded sampling.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geokernel/linalg.hpp"
#include "geokernel/precision.hpp"

namespace geokernel {

/// Circle of circumference 2*pi*scale; points are angles in [0, 2*pi).
struct Circle {
  double scale = 1.0;
  bool operator==(const Circle&) const = default;
};
/// Unit sphere S^n in R^{n+1} with the great-circle metric.
struct Sphere {
  int n = 1;
  bool operator==(const Sphere&) const = default;
};
/// Real projective space RP^n: lines through unit vectors of R^{n+1}.
struct Projective {
  int n = 1;
  bool operator==(const Projective&) const = default;
};
enum class GrassmannMetric { principal_angle, projection };
/// Real Grassmannian Gr(k, n), points are n x k orthonormal representatives.
struct Grassmannian {
  int k = 1;
  int n = 2;
  GrassmannMetric metric = GrassmannMetric::principal_angle;
  bool operator==(const Grassmannian&) const = default;
};
enum class SpdMetric { frobenius, log_euclidean, stein };
/// Symmetric positive definite n x n matrices.
struct Spd {
  int n = 1;
  SpdMetric metric = SpdMetric::frobenius;
  bool operator==(const Spd&) const = default;
};
struct Euclidean {
  int n = 1;
  bool operator==(const Euclidean&) const = default;
};
/// Flat torus S^1 x S^1 with the product metric sqrt(d1^2 + d2^2).
struct FlatTorus {
  bool operator==(const FlatTorus&) const = default;
};

using SpaceDescriptor =
    std::variant<Circle, Sphere, Projective, Grassmannian, Spd, Euclidean, FlatTorus>;

/// Variant-matched coordinates, flattened row-major for matrix payloads.
template <class T>
struct BasicPoint {
  std::vector<T> coords;
  bool operator==(const BasicPoint&) const = default;
};
using Point = BasicPoint<double>;
using HighPoint = BasicPoint<HighFloat>;

/// Throws std::invalid_argument when the descriptor's own invariants fail
/// (scale <= 0, k >= n, n < 1).
void validate_space(const SpaceDescriptor& space);

/// Number of coordinates a point of `space` carries.
std::size_t payload_size(const SpaceDescriptor& space);

/// Human-readable name, e.g. "grassmannian:2,4:projection".
std::string describe(const SpaceDescriptor& space);

/// Parses the CLI form: circle[:scale] | sphere:n | projective:n |
/// grassmann:k,n[:projection|:principal_angle] | spd:n[:frobenius|:log_euclidean|:stein] |
/// euclidean:n | torus.
SpaceDescriptor parse_space(const std::string& text);

/// nullopt when the point satisfies the space's point invariants, otherwise a
/// description of the violated invariant. Throws std::invalid_argument on a
/// payload size mismatch.
template <class T>
std::optional<std::string> validate_point(const SpaceDescriptor& space, const BasicPoint<T>& p);

/// Metric distance between two valid points. Symmetric bit-for-bit.
/// Throws std::invalid_argument on invalid input.
template <class T>
T distance(const SpaceDescriptor& space, const BasicPoint<T>& p, const BasicPoint<T>& q);

/// Principal angles between the column spans of two orthonormal n x k
/// representatives, ascending, each in [0, pi/2].
template <class T>
std::vector<T> principal_angles(const Matrix<T>& a, const Matrix<T>& b);

/// Angles 2*pi*k/N for 0 <= k < N. Throws std::invalid_argument when N < 2.
template <class T>
std::vector<BasicPoint<T>> circle_equispaced(int n);

/// Deterministic seeded sample; every returned point passes validate_point.
std::vector<Point> sample_points(const SpaceDescriptor& space, std::uint64_t seed, int count);

/// Reinterprets a flattened payload as an n x k (Grassmannian) or n x n (Spd) matrix.
template <class T>
Matrix<T> as_matrix(const SpaceDescriptor& space, const BasicPoint<T>& p);

}  // namespace geokernel
