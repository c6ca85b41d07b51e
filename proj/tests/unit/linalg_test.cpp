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

#include "geokernel/linalg.hpp"
#include "geokernel/precision.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

namespace geokernel {
namespace {

Matrix<double> random_symmetric(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix<double> a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) a(i, j) = a(j, i) = g(rng);
  return a;
}

TEST(Linalg, MultiplyAndTranspose) {
  const Matrix<double> a(2, 3, {1, 2, 3, 4, 5, 6});
  const Matrix<double> at = transpose(a);
  EXPECT_EQ(at, Matrix<double>(3, 2, {1, 4, 2, 5, 3, 6}));
  EXPECT_EQ(multiply(a, at), Matrix<double>(2, 2, {14, 32, 32, 77}));
  EXPECT_EQ(multiply_transposed_left(at, at), Matrix<double>(2, 2, {14, 32, 32, 77}));
  EXPECT_THROW(multiply(a, a), std::invalid_argument);
}

TEST(Linalg, CholeskyDetectsIndefinite) {
  EXPECT_TRUE(cholesky(Matrix<double>(2, 2, {4, 2, 2, 3})).has_value());
  EXPECT_FALSE(cholesky(Matrix<double>(2, 2, {1, 2, 2, 1})).has_value());
  EXPECT_NEAR(log_det_spd(Matrix<double>(2, 2, {4, 2, 2, 3})), std::log(8.0), 1e-15);
  EXPECT_THROW(log_det_spd(Matrix<double>(2, 2, {1, 2, 2, 1})), std::domain_error);
}

TEST(Linalg, JacobiDiagonalizesKnownMatrix) {
  // Eigenvalues of the path-graph Laplacian on 4 vertices: 2 - 2 cos(k pi / 4).
  const Matrix<double> l(4, 4, {1, -1, 0, 0, -1, 2, -1, 0, 0, -1, 2, -1, 0, 0, -1, 1});
  auto r = jacobi_eigen(l, true, 1e-14, 100);
  ASSERT_TRUE(r.converged);
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(r.eigenvalues[k], 2.0 - 2.0 * std::cos(k * M_PI / 4.0), 1e-13);
}

TEST(Linalg, JacobiVectorsAreOrthonormalEigenvectors) {
  const auto a = random_symmetric(12, 5);
  const auto r = jacobi_eigen(a, true, 1e-14, 100);
  ASSERT_TRUE(r.converged);
  const auto vvt = multiply(r.vectors, transpose(r.vectors));
  for (std::size_t i = 0; i < 12; ++i)
    for (std::size_t j = 0; j < 12; ++j) EXPECT_NEAR(vvt(i, j), i == j ? 1.0 : 0.0, 1e-13);
  for (std::size_t k = 0; k < 12; ++k) {
    for (std::size_t i = 0; i < 12; ++i) {
      double av = 0.0;
      for (std::size_t j = 0; j < 12; ++j) av += a(i, j) * r.vectors(k, j);
      EXPECT_NEAR(av, r.eigenvalues[k] * r.vectors(k, i), 1e-12);
    }
  }
}

TEST(Linalg, JacobiReportsExhaustedSweeps) {
  const auto r = jacobi_eigen(random_symmetric(10, 9), false, 1e-14, 1);
  EXPECT_FALSE(r.converged);
  EXPECT_EQ(r.sweeps, 1);
  EXPECT_GT(r.offdiag_residual, 0.0);
}

TEST(Linalg, JacobiHighPrecisionAgreesWithDouble) {
  const auto a = random_symmetric(6, 21);
  auto d = jacobi_eigen(a, false, 1e-14, 100).eigenvalues;
  ScopedPrecision guard(40);
  Matrix<HighFloat> h(6, 6);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) h(i, j) = a(i, j);
  auto e = jacobi_eigen(h, false, HighFloat("1e-38"), 100);
  ASSERT_TRUE(e.converged);
  std::sort(d.begin(), d.end());
  std::sort(e.eigenvalues.begin(), e.eigenvalues.end());
  for (std::size_t i = 0; i < 6; ++i) EXPECT_NEAR(static_cast<double>(e.eigenvalues[i]), d[i], 1e-13);
}

TEST(Linalg, SpdLogOfDiagonal) {
  const Matrix<double> a(2, 2, {std::exp(1.0), 0, 0, std::exp(-2.0)});
  const auto l = spd_log(a, 1e-15);
  EXPECT_NEAR(l(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(l(1, 1), -2.0, 1e-15);
  EXPECT_EQ(l(0, 1), 0.0);
}

TEST(Linalg, LuSolveWithPivoting) {
  const Matrix<double> a(3, 3, {0, 2, 1, 1, 1, 1, 2, 1, 0});
  const auto x = lu_solve(a, {7, 6, 4}, 1e-300);
  EXPECT_NEAR(x[0], 1.0, 1e-14);
  EXPECT_NEAR(x[1], 2.0, 1e-14);
  EXPECT_NEAR(x[2], 3.0, 1e-14);
}

TEST(Linalg, NormsAndTrace) {
  const Matrix<double> a(2, 2, {3, -4, 0, 1});
  EXPECT_DOUBLE_EQ(frobenius_norm(a), std::sqrt(26.0));
  EXPECT_EQ(max_abs_entry(a), 4.0);
  EXPECT_EQ(max_asymmetry(a), 4.0);
  EXPECT_EQ(trace(a), 4.0);
  EXPECT_DOUBLE_EQ(offdiag_frobenius(a), 4.0);
}

}  // namespace
}  // namespace geokernel
