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

// The alternating partial theta series
//
//   S_r(N) = sum_{k>=0} (-1)^k exp(-mu k^2 / N^2 - r k / N),   mu > 0, r >= 0,
//
// and the quantities built from it when bounding the middle circulant
// eigenvalue of an equispaced circle Gram: the tail re-indexing identity,
// the upper bound obtained by replacing S_{mu(1+4/N)} with S_0, and the
// leading 1/N^2 term of that bound.
//
// All values are HighFloat. Functions taking `precision_digits` install their
// own working precision (digits + guard digits) and return values at it.

#include "geokernel/precision.hpp"

namespace geokernel {

struct PartialThetaQuery {
  HighFloat mu;
  HighFloat r;
  int n = 1;
  int precision_digits = kDefaultPrecisionDigits;
};

struct PartialThetaResult {
  HighFloat value;
  long terms_used = 0;
  /// First omitted term: a rigorous bound on |S - value| for this
  /// alternating series with decreasing terms.
  HighFloat truncation_bound;
  int precision_digits = kDefaultPrecisionDigits;
};

/// Sums consecutive term pairs (2m, 2m+1) until the next unpaired term drops
/// below 10^-(precision_digits + 5). Throws std::invalid_argument when
/// precision_digits < 17 or the query violates mu > 0, r >= 0, N >= 1.
PartialThetaResult partial_theta(const PartialThetaQuery& query);

/// |LHS - RHS| of
///   S_0(N) = A + e^{-mu/4} - e^{-mu/4} e^{-mu/N^2 - mu/N}
///            + e^{-mu/4} e^{-4mu/N^2 - 2mu/N} S_{mu(1+4/N)}(N),
/// where A = sum_{k<N/2} (-1)^k e^{-mu k^2/N^2}. Requires N % 4 == 0.
HighFloat tail_decomposition_residual(const HighFloat& mu, int n, int precision_digits);

/// Upper bound for the middle circulant eigenvalue:
///   -1 + 2 S_0 + e^{-mu/4} (-1 + 2 e^{-mu/N^2 - mu/N} - 2 e^{-4mu/N^2 - 2mu/N} S_0).
/// Requires N % 4 == 0.
HighFloat bound_rhs(const HighFloat& mu, int n, int precision_digits);

/// exp(-mu/4) (2 mu - mu^2) / N^2, negative exactly when mu > 2.
template <class T>
T leading_term(const T& mu, int n) {
  using std::exp;
  if (n < 1) throw std::invalid_argument("leading_term requires N >= 1");
  const T nn = T(n);
  return exp(-mu / T(4)) * (T(2) * mu - mu * mu) / (nn * nn);
}

/// ((1/(2 pi i)) d/dz)^{2a} [1 / (1 - e^{2 pi i z})] at z = 1/2: 1/2 for a = 0
/// and 0 for a >= 1, because the function minus 1/2 is odd about z = 1/2.
double bringmann_coefficient(int a);

}  // namespace geokernel
