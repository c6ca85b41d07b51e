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

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "geokernel/simd/kernels.hpp"
#include "kernels_impl.hpp"

namespace geokernel::simd {
namespace {

constexpr KernelTable kScalar{Isa::scalar, scalar::dot, scalar::rotate, scalar::axpy,
                              scalar::hadamard, scalar::max_abs};
#if defined(GEOKERNEL_HAVE_AVX2)
constexpr KernelTable kAvx2{Isa::avx2, avx2::dot, avx2::rotate, avx2::axpy, avx2::hadamard,
                            avx2::max_abs};
#endif
#if defined(GEOKERNEL_HAVE_NEON)
constexpr KernelTable kNeon{Isa::neon, neon::dot, neon::rotate, neon::axpy, neon::hadamard,
                            neon::max_abs};
#endif

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(GEOKERNEL_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Isa::neon:
#if defined(GEOKERNEL_HAVE_NEON)
      return true;  // mandatory on AArch64
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& select() {
  if (const char* env = std::getenv("GEOKERNEL_SIMD"); env != nullptr && *env != '\0') {
    const std::string_view name(env);
    if (name != "auto") {
      auto isa = parse_isa(name);
      if (!isa) throw std::invalid_argument("GEOKERNEL_SIMD: unknown variant '" + std::string(name) + "'");
      if (const KernelTable* t = table_for(*isa)) return *t;
      throw std::invalid_argument("GEOKERNEL_SIMD: variant '" + std::string(name) +
                                  "' is not available on this machine");
    }
  }
  for (Isa isa : {Isa::avx2, Isa::neon}) {
    if (const KernelTable* t = table_for(isa)) return *t;
  }
  return kScalar;
}

}  // namespace

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "neon") return Isa::neon;
  return std::nullopt;
}

bool available(Isa isa) { return table_for(isa) != nullptr; }

const KernelTable* table_for(Isa isa) {
  if (!cpu_has(isa)) return nullptr;
  switch (isa) {
    case Isa::scalar:
      return &kScalar;
    case Isa::avx2:
#if defined(GEOKERNEL_HAVE_AVX2)
      return &kAvx2;
#else
      return nullptr;
#endif
    case Isa::neon:
#if defined(GEOKERNEL_HAVE_NEON)
      return &kNeon;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace geokernel::simd
