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

#include "geokernel/partial_theta.hpp"

#include <stdexcept>
#include <string>

namespace geokernel {
namespace {

void require_multiple_of_four(int n, const char* what) {
  if (n < 4 || n % 4 != 0) {
    throw std::invalid_argument(std::string(what) + ": N must be a positive multiple of 4, got " +
                                std::to_string(n));
  }
}

// sum_{k=0}^{count-1} (-1)^k exp(-mu k^2 / N^2)
HighFloat alternating_head(const HighFloat& mu, int n, int count) {
  const HighFloat nn = HighFloat(n) * HighFloat(n);
  HighFloat sum(0);
  for (int k = 0; k < count; ++k) {
    const HighFloat kk(k);
    const HighFloat term = exp(-mu * kk * kk / nn);
    if (k % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

}  // namespace

PartialThetaResult partial_theta(const PartialThetaQuery& q) {
  check_precision_digits(q.precision_digits);
  if (!(q.mu > 0)) throw std::invalid_argument("partial_theta: mu must be positive");
  if (q.r < 0) throw std::invalid_argument("partial_theta: r must be nonnegative");
  if (q.n < 1) throw std::invalid_argument("partial_theta: N must be positive");

  ScopedPrecision guard(q.precision_digits);
  const HighFloat mu = q.mu;
  const HighFloat r = q.r;
  const HighFloat nn(q.n);
  const HighFloat stop = pow10_neg<HighFloat>(q.precision_digits + 5);
  auto term = [&](long k) {
    const HighFloat kk(k);
    return exp(-mu * kk * kk / (nn * nn) - r * kk / nn);
  };

  PartialThetaResult out;
  out.precision_digits = q.precision_digits;
  HighFloat sum(0);
  long k = 0;
  HighFloat next = term(0);
  while (next >= stop) {
    const HighFloat odd = term(k + 1);
    sum += next - odd;
    k += 2;
    next = term(k);
  }
  out.value = sum;
  out.terms_used = k;
  out.truncation_bound = next;
  return out;
}

HighFloat tail_decomposition_residual(const HighFloat& mu_in, int n, int precision_digits) {
  require_multiple_of_four(n, "tail_decomposition_residual");
  check_precision_digits(precision_digits);
  ScopedPrecision guard(precision_digits);
  const HighFloat mu = mu_in;
  const HighFloat nn(n);

  const HighFloat lhs = partial_theta({mu, HighFloat(0), n, precision_digits}).value;
  const HighFloat shifted_r = mu * (HighFloat(1) + HighFloat(4) / nn);
  const HighFloat shifted = partial_theta({mu, shifted_r, n, precision_digits}).value;
  const HighFloat quarter = exp(-mu / 4);
  const HighFloat rhs = alternating_head(mu, n, n / 2) + quarter -
                        quarter * exp(-mu / (nn * nn) - mu / nn) +
                        quarter * exp(-HighFloat(4) * mu / (nn * nn) - HighFloat(2) * mu / nn) * shifted;
  return abs(lhs - rhs);
}

HighFloat bound_rhs(const HighFloat& mu_in, int n, int precision_digits) {
  require_multiple_of_four(n, "bound_rhs");
  check_precision_digits(precision_digits);
  ScopedPrecision guard(precision_digits);
  const HighFloat mu = mu_in;
  const HighFloat nn(n);
  const HighFloat s0 = partial_theta({mu, HighFloat(0), n, precision_digits}).value;
  const HighFloat quarter = exp(-mu / 4);
  return HighFloat(-1) + HighFloat(2) * s0 +
         quarter * (HighFloat(-1) + HighFloat(2) * exp(-mu / (nn * nn) - mu / nn) -
                    HighFloat(2) * exp(-HighFloat(4) * mu / (nn * nn) - HighFloat(2) * mu / nn) * s0);
}

double bringmann_coefficient(int a) {
  if (a < 0) throw std::invalid_argument("bringmann_coefficient: a must be nonnegative");
  return a == 0 ? 0.5 : 0.0;
}

}  // namespace geokernel
