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

// Positive-semidefiniteness decisions: a dense Jacobi eigensolver for
// arbitrary symmetric matrices and the exact DFT spectrum of symmetric
// circulants (equispaced circle configurations), plus eigenvector recovery
// for the violating direction.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "geokernel/linalg.hpp"
#include "geokernel/precision.hpp"

namespace geokernel {

enum class SpectralMethod { jacobi, circulant };

std::string to_string(SpectralMethod method);
SpectralMethod parse_spectral_method(const std::string& text);

struct SpectrumReport {
  std::vector<double> eigenvalues;           // ascending
  std::vector<std::string> eigenvalue_text;  // decimal text, filled when precision_digits > 17
  std::vector<int> index_map;                // circulant: DFT index j of each sorted eigenvalue
  double min_eigenvalue = 0.0;
  std::string min_eigenvalue_text;
  SpectralMethod method = SpectralMethod::jacobi;
  double offdiag_residual = 0.0;  // jacobi only
  int sweeps = 0;                 // jacobi only
  int precision_digits = kDoubleDigits;
};

enum class Verdict { positive_definite, positive_semidefinite, not_psd };
std::string to_string(Verdict verdict);

struct PdVerdict {
  Verdict verdict = Verdict::not_psd;
  double min_eigenvalue = 0.0;
  double tolerance = 0.0;
};

/// Jacobi did not reach its off-diagonal target within the sweep budget.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kJacobiRelativeTolerance = 1e-14;

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations. Throws
/// std::invalid_argument when ||M - M^T||_max > 1e-12 ||M||_max and
/// NonConvergence when 100 sweeps do not suffice.
SpectrumReport jacobi_eigenvalues(const Matrix<double>& m);

/// w_j = sum_k row[k] cos(2 pi j k / N) for every j, unsorted, at the current
/// working precision (the caller holds a ScopedPrecision).
template <class T>
std::vector<T> circulant_spectrum(const std::vector<T>& first_row);

/// Spectrum of the symmetric circulant with the given first row. For
/// precision_digits == 17 the sum runs in double with compensated summation;
/// above that it runs in MPFR arithmetic at the requested precision. Throws
/// std::invalid_argument when row[k] != row[N-k] beyond one ulp.
SpectrumReport circulant_eigenvalues(std::span<const double> first_row,
                                     int precision_digits = kDoubleDigits);

/// High-precision overload for rows computed in MPFR arithmetic.
SpectrumReport circulant_eigenvalues(const std::vector<HighFloat>& first_row, int precision_digits);

/// PSD tolerance 1e-10 * N * scale.
double psd_tolerance(std::size_t order, double scale);

/// scale is max |entry| of the tested matrix.
PdVerdict pd_verdict(const SpectrumReport& report, double scale);

struct EigenvectorResult {
  std::vector<double> vector;  // unit norm
  double residual = 0.0;       // ||M c - target c||
  int iterations = 0;
};

/// Unit eigenvector for `target` by shifted inverse iteration (at most 50
/// iterations). Throws NonConvergence when ||Mc - target c|| > 1e-8 ||M||_F.
EigenvectorResult min_eigenvector(const Matrix<double>& m, double target);

/// Normalized real Fourier mode c_k = cos(2 pi j k / N) / ||.||: an exact
/// eigenvector of every symmetric N x N circulant for eigenvalue w_j.
template <class T>
std::vector<T> fourier_mode(int n, int j);

/// Neumaier-compensated sum.
double compensated_sum(std::span<const double> values);

}  // namespace geokernel
