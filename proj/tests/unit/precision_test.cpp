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

#include "geokernel/precision.hpp"

#include <cstdlib>
#include <limits>

#include <gtest/gtest.h>

namespace geokernel {
namespace {

TEST(Precision, DoubleTextRoundTrips) {
  for (double v : {0.1, -0.18997962224145059, 1e-300, 6.02214076e23, 0.0}) {
    EXPECT_EQ(parse_double(format_double(v)), v);
  }
  EXPECT_EQ(format_double(0.1), "0.1");
}

TEST(Precision, RejectsMalformedNumbers) {
  EXPECT_THROW(parse_double("0.1x"), std::invalid_argument);
  EXPECT_THROW(parse_double(""), std::invalid_argument);
  EXPECT_THROW(parse_high("abc", 30), std::invalid_argument);
}

TEST(Precision, ScopedGuardRestoresWorkingDigits) {
  const unsigned before = HighFloat::default_precision();
  {
    ScopedPrecision outer(40);
    EXPECT_EQ(HighFloat::default_precision(), 50u);
    {
      ScopedPrecision inner(60);
      EXPECT_EQ(HighFloat::default_precision(), 70u);
    }
    EXPECT_EQ(HighFloat::default_precision(), 50u);
  }
  EXPECT_EQ(HighFloat::default_precision(), before);
}

TEST(Precision, HighTextCarriesRequestedDigits) {
  ScopedPrecision guard(40);
  const HighFloat third = HighFloat(1) / HighFloat(3);
  EXPECT_EQ(format_high(third, 40), "3.333333333333333333333333333333333333333e-01");
  const HighFloat back = parse_high(format_high(third, 40));
  EXPECT_LT(abs(back - third), HighFloat("1e-40"));
}

TEST(Precision, PiAgreesAcrossArithmetic) {
  ScopedPrecision guard(50);
  EXPECT_EQ(static_cast<double>(pi_value<HighFloat>()), pi_value<double>());
  EXPECT_EQ(format_high(pi_value<HighFloat>(), 30), "3.14159265358979323846264338328e+00");
}

TEST(Precision, DigitRangeIsEnforced) {
  EXPECT_NO_THROW(check_precision_digits(17));
  EXPECT_NO_THROW(check_precision_digits(100));
  EXPECT_THROW(check_precision_digits(16), std::invalid_argument);
  EXPECT_THROW(check_precision_digits(101), std::invalid_argument);
}

TEST(Precision, EnvironmentOverridesDefault) {
  ::setenv("GEOKERNEL_PRECISION", "45", 1);
  EXPECT_EQ(default_precision_digits(), 45);
  ::setenv("GEOKERNEL_PRECISION", "12", 1);
  EXPECT_THROW(default_precision_digits(), std::invalid_argument);
  ::setenv("GEOKERNEL_PRECISION", "forty", 1);
  EXPECT_THROW(default_precision_digits(), std::invalid_argument);
  ::unsetenv("GEOKERNEL_PRECISION");
  EXPECT_EQ(default_precision_digits(), kDefaultPrecisionDigits);
}

TEST(Precision, WorkingEpsilonTracksGuard) {
  EXPECT_EQ(working_epsilon<double>(), std::numeric_limits<double>::epsilon());
  ScopedPrecision guard(30);
  EXPECT_EQ(working_epsilon<HighFloat>(), pow10_neg<HighFloat>(40));
}

}  // namespace
}  // namespace geokernel
