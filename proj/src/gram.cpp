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

#include "geokernel/gram.hpp"

#include <set>
#include <stdexcept>

namespace geokernel {

KernelParam KernelParam::from_lambda(double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw std::invalid_argument("lambda must be positive and finite");
  }
  return KernelParam{lambda, mu_of_lambda(lambda)};
}

double gaussian_kernel(const KernelParam& param, double d) { return gaussian_kernel(param.lambda, d); }

GramMatrix gram(const SpaceDescriptor& space, std::span<const Point> points, const KernelParam& param,
                std::vector<std::string> point_ids) {
  const std::size_t n = points.size();
  if (n == 0) throw std::invalid_argument("gram: empty point set");
  if (point_ids.empty()) {
    point_ids.reserve(n);
    for (std::size_t i = 0; i < n; ++i) point_ids.push_back(std::to_string(i));
  } else if (point_ids.size() != n) {
    throw std::invalid_argument("gram: point id count does not match point count");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (auto v = validate_point(space, points[i])) {
      throw std::invalid_argument("point " + std::to_string(i) + ": " + *v);
    }
  }
  Matrix<double> k(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    k(i, i) = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = gaussian_kernel(param, distance(space, points[i], points[j]));
      k(i, j) = v;
      k(j, i) = v;
    }
  }
  return GramMatrix{space, param.lambda, std::move(point_ids), std::move(k)};
}

Matrix<double> hadamard(const Matrix<double>& a, const Matrix<double>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("hadamard: order mismatch");
  }
  Matrix<double> out(a.rows(), a.cols());
  simd::active().hadamard(a.data(), b.data(), out.data(), a.values().size());
  return out;
}

Matrix<double> hadamard(const GramMatrix& a, const GramMatrix& b) {
  if (a.order() != b.order()) throw std::invalid_argument("hadamard: order mismatch");
  if (a.point_ids != b.point_ids) throw std::invalid_argument("hadamard: Grams are over different point sets");
  return hadamard(a.entries, b.entries);
}

GramMatrix principal_submatrix(const GramMatrix& k, std::span<const std::size_t> indices) {
  std::set<std::size_t> seen;
  for (std::size_t i : indices) {
    if (i >= k.order()) throw std::invalid_argument("principal_submatrix: index " + std::to_string(i) + " out of range");
    if (!seen.insert(i).second) throw std::invalid_argument("principal_submatrix: duplicate index " + std::to_string(i));
  }
  const std::size_t m = indices.size();
  GramMatrix out{k.space, k.lambda, {}, Matrix<double>(m, m)};
  out.point_ids.reserve(m);
  for (std::size_t a = 0; a < m; ++a) {
    out.point_ids.push_back(k.point_ids[indices[a]]);
    for (std::size_t b = 0; b < m; ++b) out.entries(a, b) = k.entries(indices[a], indices[b]);
  }
  return out;
}

}  // namespace geokernel
