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

#include "geokernel/linalg.hpp"

#include <cmath>

namespace geokernel {

std::vector<double> lu_solve(Matrix<double> a, std::vector<double> b, double pivot_floor) {
  if (!a.square() || a.rows() != b.size()) throw std::invalid_argument("lu_solve: shape mismatch");
  const std::size_t n = a.rows();
  const auto& k = simd::active();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(a(r, col)) > std::fabs(a(pivot, col))) pivot = r;
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(pivot, j));
      std::swap(b[col], b[pivot]);
    }
    if (std::fabs(a(col, col)) < pivot_floor) a(col, col) = a(col, col) < 0.0 ? -pivot_floor : pivot_floor;
    const double inv = 1.0 / a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) * inv;
      if (f == 0.0) continue;
      k.axpy(-f, a.row(col).data() + col, a.row(r).data() + col, n - col);
      b[r] -= f * b[col];
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    const double s = k.dot(a.row(i).data() + i + 1, x.data() + i + 1, n - i - 1);
    x[i] = (b[i] - s) / a(i, i);
  }
  return x;
}

}  // namespace geokernel
