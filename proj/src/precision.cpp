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

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <stdexcept>
#include <system_error>

namespace geokernel {

int default_precision_digits() {
  const char* env = std::getenv("GEOKERNEL_PRECISION");
  if (env == nullptr || *env == '\0') return kDefaultPrecisionDigits;
  int value = 0;
  const std::string_view text(env);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value < kDoubleDigits ||
      value > kMaxPrecisionDigits) {
    throw std::invalid_argument("GEOKERNEL_PRECISION must be an integer in [17, 100], got '" +
                                std::string(text) + "'");
  }
  return value;
}

void check_precision_digits(int digits) {
  if (digits < kDoubleDigits || digits > kMaxPrecisionDigits) {
    throw std::invalid_argument("precision_digits must lie in [17, 100], got " +
                                std::to_string(digits));
  }
}

ScopedPrecision::ScopedPrecision(int digits)
    : digits_(digits), previous_(HighFloat::default_precision()) {
  HighFloat::default_precision(static_cast<unsigned>(digits + kGuardDigits));
}

ScopedPrecision::~ScopedPrecision() { HighFloat::default_precision(previous_); }

std::string format_double(double value) {
  char buffer[64];
  auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) throw std::runtime_error("format_double: conversion failed");
  return std::string(buffer, ptr);
}

std::string format_high(const HighFloat& value, int digits) {
  return value.str(std::max(digits - 1, 0), std::ios_base::scientific);
}

HighFloat parse_high(std::string_view text) {
  try {
    return HighFloat(std::string(text));
  } catch (const std::exception&) {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  }
}

HighFloat parse_high(std::string_view text, int digits) {
  ScopedPrecision guard(digits);
  return parse_high(text);
}

double parse_double(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace geokernel
