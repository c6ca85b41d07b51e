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

// Double-precision inner loops shared by the dense linear algebra, Gram
// assembly and quadratic-form code. Each kernel has a scalar reference
// version and vector versions; the active table is chosen once at runtime
// from CPU features, overridable with GEOKERNEL_SIMD=scalar|avx2|neon.
//
// Elementwise kernels (rotate, axpy, hadamard, max_abs) round identically in
// every variant. Reductions (dot) differ only in summation order.

#include <cstddef>
#include <optional>
#include <string_view>

namespace geokernel::simd {

enum class Isa { scalar, avx2, neon };

struct KernelTable {
  Isa isa;
  /// sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// Plane rotation: x <- c*x - s*y, y <- s*x + c*y.
  void (*rotate)(double* x, double* y, std::size_t n, double c, double s);
  /// y <- y + alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  /// out <- a .* b (out may alias a or b)
  void (*hadamard)(const double* a, const double* b, double* out, std::size_t n);
  /// max_i |x[i]|, 0 for n == 0
  double (*max_abs)(const double* x, std::size_t n);
};

std::string_view isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

/// True when the variant is compiled in and the running CPU supports it.
bool available(Isa isa);

/// Kernel table for a specific variant, or nullptr when unavailable.
const KernelTable* table_for(Isa isa);

/// Table selected for this process.
const KernelTable& active();

}  // namespace geokernel::simd
