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

#include <limits>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/mpfr.hpp>

namespace geokernel {

// Variable-precision binary float. Expression templates are disabled so that
// `auto` and generic code written against `double` behave the same way.
using HighFloat = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                                boost::multiprecision::et_off>;

/// Precision tag meaning "plain IEEE double arithmetic".
inline constexpr int kDoubleDigits = 17;
inline constexpr int kDefaultPrecisionDigits = 30;
inline constexpr int kMaxPrecisionDigits = 100;
/// Extra decimal digits carried internally beyond the requested precision.
inline constexpr int kGuardDigits = 10;

/// Default decimal precision for high-precision paths. Honors the
/// GEOKERNEL_PRECISION environment variable when it holds a valid value.
int default_precision_digits();

/// Throws std::invalid_argument unless kDoubleDigits <= digits <= kMaxPrecisionDigits.
void check_precision_digits(int digits);

/// Sets the working precision of newly created HighFloat values to
/// `digits + kGuardDigits` for the lifetime of the guard.
///
/// The working precision is a process-wide setting in the MPFR backend, so
/// high-precision evaluations must not run concurrently with different guards.
class ScopedPrecision {
 public:
  explicit ScopedPrecision(int digits);
  ~ScopedPrecision();
  ScopedPrecision(const ScopedPrecision&) = delete;
  ScopedPrecision& operator=(const ScopedPrecision&) = delete;

  int digits() const { return digits_; }

 private:
  int digits_;
  unsigned previous_;
};

/// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);

/// Scientific decimal text with `digits` significant digits.
std::string format_high(const HighFloat& value, int digits);

/// Parses a decimal string at the current working precision.
HighFloat parse_high(std::string_view text);

/// Parses a decimal string at `digits + kGuardDigits` working digits.
HighFloat parse_high(std::string_view text, int digits);

/// Parses a decimal string as the nearest double. Throws std::invalid_argument.
double parse_double(std::string_view text);

template <class T>
T pi_value() {
  using std::acos;
  return acos(T(-1));
}

/// 10^(-digits) in the arithmetic of T.
template <class T>
T pow10_neg(int digits) {
  using std::pow;
  return pow(T(10), T(-digits));
}

/// Relative rounding level of T at the current working precision.
template <class T>
T working_epsilon() {
  if constexpr (std::is_same_v<T, double>) {
    return std::numeric_limits<double>::epsilon();
  } else {
    return pow10_neg<T>(static_cast<int>(T::default_precision()));
  }
}

}  // namespace geokernel
