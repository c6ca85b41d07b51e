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

// Gaussian kernel exp(-lambda d^2) and Gram matrix assembly, with the
// entrywise (Schur) product and principal restriction used by the closure
// properties of positive definite kernels.

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "geokernel/linalg.hpp"
#include "geokernel/metric.hpp"
#include "geokernel/precision.hpp"

namespace geokernel {

/// Bandwidth lambda > 0 and the derived mu = 4 pi^2 lambda.
struct KernelParam {
  double lambda = 1.0;
  double mu = 4.0 * pi_value<double>() * pi_value<double>();

  /// Throws std::invalid_argument unless lambda > 0 and finite.
  static KernelParam from_lambda(double lambda);
};

template <class T>
T mu_of_lambda(const T& lambda) {
  if (!(lambda > T(0))) throw std::invalid_argument("mu_of_lambda: lambda must be positive");
  const T pi = pi_value<T>();
  return T(4) * pi * pi * lambda;
}

/// exp(-lambda d^2). Throws std::invalid_argument for negative d.
template <class T>
T gaussian_kernel(const T& lambda, const T& d) {
  using std::exp;
  if (d < T(0)) throw std::invalid_argument("gaussian_kernel: negative distance");
  return exp(-lambda * d * d);
}

double gaussian_kernel(const KernelParam& param, double d);

/// First row of the Gram matrix of N equispaced points on Circle{scale}:
/// row[k] = exp(-lambda (scale * 2 pi min(k, N-k) / N)^2).
template <class T>
std::vector<T> circle_first_row(const T& lambda, int n, const T& scale) {
  if (n < 2) throw std::invalid_argument("circle_first_row requires N >= 2");
  const T step = T(2) * pi_value<T>() * scale / T(n);
  std::vector<T> row(n);
  row[0] = T(1);
  for (int k = 1; k < n; ++k) row[k] = gaussian_kernel(lambda, step * T(std::min(k, n - k)));
  return row;
}

struct GramMatrix {
  SpaceDescriptor space;
  double lambda = 0.0;
  std::vector<std::string> point_ids;
  Matrix<double> entries;

  std::size_t order() const { return entries.rows(); }
};

/// Gram matrix of `points`. Diagonal entries are exactly 1 and each distance
/// is computed once per unordered pair and mirrored. Point identifiers default
/// to "0", "1", ... Throws std::invalid_argument on invalid points or N = 0.
GramMatrix gram(const SpaceDescriptor& space, std::span<const Point> points, const KernelParam& param,
                std::vector<std::string> point_ids = {});

/// Entrywise product. Throws std::invalid_argument on an order mismatch.
Matrix<double> hadamard(const Matrix<double>& a, const Matrix<double>& b);

/// Entrywise product of two Grams over the same identified point set.
Matrix<double> hadamard(const GramMatrix& a, const GramMatrix& b);

/// Restriction to the rows/columns in `indices` (distinct, in range).
GramMatrix principal_submatrix(const GramMatrix& k, std::span<const std::size_t> indices);

}  // namespace geokernel
