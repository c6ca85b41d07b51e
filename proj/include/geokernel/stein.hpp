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

// Stein divergence on symmetric positive definite matrices and empirical
// probing of the bandwidth set on which exp(-lambda * S) is positive definite.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geokernel/certificate.hpp"
#include "geokernel/linalg.hpp"

namespace geokernel {

/// S(A, B) = log det((A + B) / 2) - (log det A + log det B) / 2, computed with
/// Cholesky log-determinants. Throws std::domain_error when an argument is not
/// positive definite.
template <class T>
T stein_divergence(const Matrix<T>& a, const Matrix<T>& b);

/// Bandwidths for which the Stein Gaussian kernel on n x n SPD matrices is
/// positive definite: {1/2, 1, ..., (n-2)/2} together with [(n-1)/2, inf).
struct LambdaPlusSet {
  int n = 1;
  std::vector<double> discrete;
  double continuous_from = 0.0;

  bool contains(double lambda) const;
};

/// Throws std::invalid_argument when n < 1.
LambdaPlusSet lambda_plus_set(int n);

struct SteinProbeOptions {
  int n = 3;
  double lambda = 1.0;
  int trials = 200;
  int points_per_trial = 10;
  std::uint64_t seed = 1;
};

struct SteinProbeReport {
  double lambda = 0.0;
  bool in_set = false;
  int trials_run = 0;
  double min_eig_seen = 0.0;
  /// Trial index and strategy of the most negative spectrum seen.
  int min_eig_trial = -1;
  std::string min_eig_strategy;
  std::optional<WitnessCertificate> witness;
};

/// Probing strategy used for a given trial index (round-robin).
std::string stein_strategy_name(int trial);

/// Sample the SPD configuration for one trial. Deterministic in (options.seed, trial).
std::vector<Point> stein_trial_points(const SteinProbeOptions& options, int trial);

/// Runs trials in index order and stops at the first configuration whose Gram
/// minimum eigenvalue is below -10x the PSD tolerance, packaging it as a
/// certificate. Otherwise reports the most negative eigenvalue observed.
SteinProbeReport stein_probe(const SteinProbeOptions& options);

}  // namespace geokernel
