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

#include <cstddef>

namespace geokernel::simd {

namespace scalar {
double dot(const double* x, const double* y, std::size_t n);
void rotate(double* x, double* y, std::size_t n, double c, double s);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void hadamard(const double* a, const double* b, double* out, std::size_t n);
double max_abs(const double* x, std::size_t n);
}  // namespace scalar

#if defined(GEOKERNEL_HAVE_AVX2)
namespace avx2 {
double dot(const double* x, const double* y, std::size_t n);
void rotate(double* x, double* y, std::size_t n, double c, double s);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void hadamard(const double* a, const double* b, double* out, std::size_t n);
double max_abs(const double* x, std::size_t n);
}  // namespace avx2
#endif

#if defined(GEOKERNEL_HAVE_NEON)
namespace neon {
double dot(const double* x, const double* y, std::size_t n);
void rotate(double* x, double* y, std::size_t n, double c, double s);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void hadamard(const double* a, const double* b, double* out, std::size_t n);
double max_abs(const double* x, std::size_t n);
}  // namespace neon
#endif

}  // namespace geokernel::simd
