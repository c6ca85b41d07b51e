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

// Negative eigenvalues of Gaussian Gram matrices on equispaced circle points:
// the middle circulant eigenvalue, the search for a witness size N, the
// per-N critical bandwidth, and certificate construction.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "geokernel/certificate.hpp"
#include "geokernel/metric.hpp"
#include "geokernel/precision.hpp"

namespace geokernel {

/// w_{N/2} = -1 + 2 sum_{k<N/2} (-1)^k exp(-mu k^2/N^2) + exp(-mu/4).
/// Double arithmetic with compensated summation at 17 digits, MPFR above.
/// Throws std::invalid_argument unless N is a positive multiple of 4 and mu > 0.
HighFloat w_half(const HighFloat& mu, int n, int precision_digits);

struct WitnessSearch {
  bool found = false;
  int n = 0;
  HighFloat w;  // w_{N/2} at the returned N
  int precision_digits = kDoubleDigits;
  int scanned = 0;  // number of N values tried
};

/// Scans N = 4, 8, ... <= n_max for the first w_{N/2}(mu(lambda), N) below
/// -10^(-precision_digits + 5). Throws std::invalid_argument when n_max < 4.
WitnessSearch find_witness_n(const std::string& lambda, int n_max, int precision_digits);

/// All N circulant eigenvalues (DFT order) of the equispaced Circle{scale}
/// Gram at bandwidth lambda.
std::vector<HighFloat> circle_spectrum(const std::string& lambda, int n, double scale, int precision_digits);

struct CriticalLambda {
  int n = 0;
  double lambda_crit = 0.0;
  double min_eig_at_probe = 0.0;  // min_j w_j at lambda_crit
};

/// Largest lambda (to 1e-8) at which some circulant eigenvalue of the
/// equispaced N-point unit-circle Gram is negative. Throws std::runtime_error
/// when the predicate does not flip within 60 doublings from 1e-6.
CriticalLambda lambda_crit(int n, int precision_digits);

using LambdaProfile = std::vector<CriticalLambda>;
LambdaProfile lambda_profile(std::span<const int> n_list, int precision_digits);

/// Raised when a configuration is not a sufficiently strong violation to
/// certify.
class CertificateRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Generic certificate from a dense Jacobi spectrum: coefficients are the
/// inverse-iteration eigenvector of the minimum eigenvalue and quad_form is
/// re-evaluated from the serialized fields at `precision_digits`.
WitnessCertificate build_certificate(const SpaceDescriptor& space, double lambda, std::span<const Point> points,
                                     int precision_digits = kDoubleDigits);

/// Certificate for N equispaced points on Circle{scale} using the circulant
/// spectrum: coefficients are the Fourier mode of the most negative w_j.
WitnessCertificate build_circle_certificate(const std::string& lambda, int n, double scale,
                                            int precision_digits);

struct CircleWitnessReport {
  std::string lambda;
  WitnessSearch search;
  std::optional<WitnessCertificate> certificate;
  /// Set when only a multiple k * lambda produced a witness.
  std::optional<AdditionClosure> closure;
  std::string note;
};

/// Direct certificate for lambda when one exists within n_max; otherwise the
/// smallest k = 2^m (m <= max_doublings) such that k * lambda has one, which
/// excludes lambda by closure of the positive definite set under addition.
CircleWitnessReport circle_witness(const std::string& lambda, int n_max, int precision_digits,
                                   int max_doublings = 40);

}  // namespace geokernel
