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

// Isometric embeddings of circles into spheres, projective spaces,
// Grassmannians and the flat torus, and the transfer of circle witness
// certificates along them.

#include <cstdint>
#include <vector>

#include "geokernel/certificate.hpp"
#include "geokernel/linalg.hpp"
#include "geokernel/metric.hpp"

namespace geokernel {

enum class EmbeddingKind { great_circle, projective_line, grassmann_circle, flat_torus };

struct EmbeddingMap {
  EmbeddingKind kind = EmbeddingKind::great_circle;
  Circle source;
  SpaceDescriptor target;
  Matrix<double> base;            // grassmann_circle: orthonormal n x k representative
  std::vector<double> direction;  // grassmann_circle: unit vector orthogonal to base

  /// Image of the circle point with angle theta in [0, 2 pi).
  template <class T>
  BasicPoint<T> apply(const T& theta) const;
};

/// theta -> (cos theta, sin theta, 0, ..., 0) in S^n, from Circle{1}.
EmbeddingMap great_circle(int n);

/// theta -> line through (cos theta/2, sin theta/2, 0, ..., 0) in RP^n, from
/// Circle{1/2}.
EmbeddingMap projective_line(int n);

/// theta -> span{cos(theta/2) u_1 + sin(theta/2) v, u_2, ..., u_k} from
/// Circle{1/2}. Throws std::invalid_argument when k >= n, the base is not
/// orthonormal, or the direction is not a unit vector orthogonal to it.
EmbeddingMap grassmann_circle(int k, int n, const Matrix<double>& base, const std::vector<double>& direction);

/// Base = first k standard basis vectors, direction = e_{k+1}.
EmbeddingMap grassmann_circle(int k, int n);

/// theta -> (theta, 0) in the flat torus, from Circle{1}.
EmbeddingMap flat_torus();

/// Largest |d_target(i(a), i(b)) - d_source(a, b)| over `pair_count` angle
/// pairs drawn from `seed`.
double verify_isometry(const EmbeddingMap& map, int pair_count, std::uint64_t seed);

/// Pushes a Circle{s} certificate through `map`: points are mapped, lambda and
/// the coefficients are kept, and quad_form is re-evaluated in the target.
/// Throws std::invalid_argument on a source scale mismatch and
/// std::runtime_error when the target quad_form differs from the source by
/// more than 1e-12 relative.
WitnessCertificate transfer_witness(const WitnessCertificate& cert, const EmbeddingMap& map);

/// Embedding for a target given as sphere:n, projective:n, grassmann:k,n or
/// torus.
EmbeddingMap embedding_for(const SpaceDescriptor& target);

}  // namespace geokernel
