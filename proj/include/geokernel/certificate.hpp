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

// Witness certificates: a self-contained record (space, lambda, points,
// coefficients c) whose quadratic form c^T K c is negative, together with the
// from-scratch evaluator and verifier. All numeric fields are kept as decimal
// text so that a certificate survives serialization exactly.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "geokernel/metric.hpp"
#include "geokernel/spectral.hpp"

namespace geokernel {

inline constexpr const char* kSchemaVersion = "1";

/// A witness at multiplier * lambda also excludes lambda from the set of
/// positive definite bandwidths, because that set is closed under addition.
struct AdditionClosure {
  std::string probed_lambda;
  int multiplier = 1;
};

struct WitnessCertificate {
  SpaceDescriptor space;
  std::string lambda;
  std::vector<std::vector<std::string>> points;  // coordinates as decimal text
  std::vector<std::string> coefficients;
  std::string quad_form;
  std::string min_eigenvalue;
  SpectralMethod method = SpectralMethod::jacobi;
  int precision_digits = kDoubleDigits;
  std::string schema_version = kSchemaVersion;

  /// lambda * scale^2 when the points came from (or were transferred from)
  /// Circle{scale}: the unit-circle bandwidth producing the same Gram.
  std::optional<std::string> unit_circle_lambda;
  /// Source space of a transferred certificate.
  std::optional<std::string> source_space;
  std::optional<AdditionClosure> closure;

  std::size_t order() const { return points.size(); }
};

/// Minimum violation magnitude: 10 x the PSD tolerance at scale 1.
double certificate_threshold(std::size_t order);

/// c^T K c recomputed from the certificate's raw text at its precision:
/// double arithmetic with compensated summation at 17 digits, MPFR above.
/// Returned as decimal text at the certificate precision.
std::string evaluate_quad_form(const WitnessCertificate& cert);

struct VerifyResult {
  bool ok = false;
  std::string recomputed;
  std::string detail;
};

/// Re-derives c^T K c from raw data only. ok iff the recomputed value is
/// negative and within 1e-12 relative of the stored value. Throws
/// std::invalid_argument for unknown schema versions or invalid points.
VerifyResult verify_certificate(const WitnessCertificate& cert);

nlohmann::json to_json(const WitnessCertificate& cert);
/// Throws std::invalid_argument naming the failing field path.
WitnessCertificate certificate_from_json(const nlohmann::json& j);

nlohmann::json space_to_json(const SpaceDescriptor& space);
SpaceDescriptor space_from_json(const nlohmann::json& j, const std::string& path = "space");

/// Variant-matched point encoding: a bare number for circle angles, a flat
/// array for vectors and torus angle pairs, nested rows for matrices. Values
/// are JSON numbers when `as_strings` is false, decimal strings otherwise.
nlohmann::json point_to_json(const SpaceDescriptor& space, const std::vector<std::string>& coords,
                             bool as_strings);
std::vector<std::string> point_from_json(const SpaceDescriptor& space, const nlohmann::json& j,
                                         const std::string& path);

/// Decimal text of a JSON number or string field.
std::string decimal_from_json(const nlohmann::json& j, const std::string& path);

}  // namespace geokernel
