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

#include "geokernel/spectral.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "geokernel/gram.hpp"

namespace geokernel {
namespace {

constexpr double kW2 = -0.18997962224145059;  // 1 - 2a + a^4, a = exp(-pi^2 / 40)

Matrix<double> random_orthogonal(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix<double> a(n, n);
  for (std::size_t i = 0; i < n * n; ++i) a.data()[i] = g(rng);
  a = multiply_transposed_left(a, a);
  auto eig = jacobi_eigen(a, true, 1e-15, 100);
  return eig.vectors;
}

TEST(Spectral, SmallExamples) {
  EXPECT_EQ(jacobi_eigenvalues(Matrix<double>(3, 3, {3, 0, 0, 0, 1, 0, 0, 0, 2})).eigenvalues,
            (std::vector<double>{1, 2, 3}));
  const auto flip = jacobi_eigenvalues(Matrix<double>(2, 2, {0, 1, 1, 0}));
  EXPECT_NEAR(flip.eigenvalues[0], -1.0, 1e-15);
  EXPECT_NEAR(flip.eigenvalues[1], 1.0, 1e-15);
  const auto ones = jacobi_eigenvalues(Matrix<double>(3, 3, 1.0));
  EXPECT_NEAR(ones.eigenvalues[0], 0.0, 1e-14);
  EXPECT_NEAR(ones.eigenvalues[1], 0.0, 1e-14);
  EXPECT_NEAR(ones.eigenvalues[2], 3.0, 1e-14);
  EXPECT_EQ(pd_verdict(ones, 1.0).verdict, Verdict::positive_semidefinite);
  EXPECT_EQ(pd_verdict(jacobi_eigenvalues(Matrix<double>::identity(4)), 1.0).verdict, Verdict::positive_definite);
}

TEST(Spectral, RejectsAsymmetricInput) {
  EXPECT_THROW(jacobi_eigenvalues(Matrix<double>(2, 2, {1, 2, 0, 1})), std::invalid_argument);
  EXPECT_THROW(circulant_eigenvalues(std::vector<double>{1.0, 0.5, 0.2}), std::invalid_argument);
}

TEST(Spectral, CirculantExamples) {
  for (double w : circulant_eigenvalues(std::vector<double>{1, 0, 0, 0}).eigenvalues) EXPECT_EQ(w, 1.0);
  const auto two = circulant_eigenvalues(std::vector<double>{1, 0.5});
  EXPECT_EQ(two.eigenvalues, (std::vector<double>{0.5, 1.5}));
  EXPECT_EQ(two.index_map, (std::vector<int>{1, 0}));
}

TEST(Spectral, FourPointCircleAtSmallBandwidth) {
  const auto row = circle_first_row(0.1, 4, 1.0);
  const auto circ = circulant_eigenvalues(row);
  EXPECT_NEAR(circ.min_eigenvalue, kW2, 1e-15);
  EXPECT_EQ(circ.index_map.front(), 2);
  const auto k = gram(Circle{1.0}, circle_equispaced<double>(4), KernelParam::from_lambda(0.1));
  const auto jac = jacobi_eigenvalues(k.entries);
  EXPECT_NEAR(jac.min_eigenvalue, kW2, 1e-15);
  EXPECT_EQ(pd_verdict(jac, 1.0).verdict, Verdict::not_psd);
  const std::vector<double> expected{kW2, 0.62729216114656211, 0.62729216114656211, 2.9353952999483264};
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(jac.eigenvalues[i], expected[i], 1e-13);
}

TEST(Spectral, JacobiAndCirculantAgreeOnCircles) {
  for (int n : {2, 3, 4, 7, 8, 16, 33, 64}) {
    for (double lambda : {0.01, 0.1, 1.0}) {
      const auto k = gram(Circle{1.0}, circle_equispaced<double>(n), KernelParam::from_lambda(lambda));
      const auto a = jacobi_eigenvalues(k.entries);
      const auto b = circulant_eigenvalues(circle_first_row(lambda, n, 1.0));
      for (int i = 0; i < n; ++i) EXPECT_NEAR(a.eigenvalues[i], b.eigenvalues[i], 1e-9) << n << " " << lambda;
    }
  }
}

TEST(Spectral, HighPrecisionCirculantText) {
  const auto r = circulant_eigenvalues(circle_first_row(0.1, 4, 1.0), 30);
  EXPECT_EQ(r.precision_digits, 30);
  ASSERT_EQ(r.eigenvalue_text.size(), 4u);
  // The double row limits accuracy to about 1e-16 even at 30 digits.
  EXPECT_EQ(r.min_eigenvalue_text.substr(0, 12), "-1.899796222");
  ScopedPrecision guard(40);
  const auto exact = circulant_eigenvalues(circle_first_row(HighFloat("0.1"), 4, HighFloat(1)), 40);
  EXPECT_EQ(exact.min_eigenvalue_text.substr(0, 22), "-1.8997962224145058658");
}

TEST(Spectral, TraceAndSimilarityInvariance) {
  const SpaceDescriptor s = Sphere{2};
  for (int n : {5, 9, 16}) {
    const auto k = gram(s, sample_points(s, n, n), KernelParam::from_lambda(2.0)).entries;
    const auto q = random_orthogonal(n, 100 + n);
    const auto rotated = multiply(transpose(q), multiply(k, q));
    Matrix<double> sym = rotated;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) sym(i, j) = sym(j, i) = 0.5 * (rotated(i, j) + rotated(j, i));
    const auto a = jacobi_eigenvalues(k);
    const auto b = jacobi_eigenvalues(sym);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(a.eigenvalues[i], b.eigenvalues[i], 1e-9);
    EXPECT_NEAR(compensated_sum(a.eigenvalues), trace(k), 1e-10 * n);
  }
}

TEST(Spectral, MinEigenvectorExamples) {
  const auto c = min_eigenvector(Matrix<double>(2, 2, {0, 1, 1, 0}), -1.0).vector;
  EXPECT_NEAR(std::fabs(c[0]), 1.0 / std::sqrt(2.0), 1e-8);
  EXPECT_NEAR(c[0], -c[1], 1e-8);

  const auto id = min_eigenvector(Matrix<double>::identity(3), 1.0);
  EXPECT_EQ(id.residual, 0.0);

  const auto k = gram(Circle{1.0}, circle_equispaced<double>(4), KernelParam::from_lambda(0.1));
  const auto w = min_eigenvector(k.entries, kW2).vector;
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(w[i], (i % 2 == 0 ? 0.5 : -0.5), 1e-10);
  const auto analytic = fourier_mode<double>(4, 2);
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(analytic[i], (i % 2 == 0 ? 0.5 : -0.5), 1e-15);
}

TEST(Spectral, RayleighQuotientMatchesEigenvalue) {
  const SpaceDescriptor s = Circle{1.0};
  const auto k = gram(s, sample_points(s, 4, 14), KernelParam::from_lambda(0.6)).entries;
  const auto r = jacobi_eigenvalues(k);
  for (double target : {r.eigenvalues.front(), r.eigenvalues[5], r.eigenvalues.back()}) {
    const auto c = min_eigenvector(k, target).vector;
    double q = 0.0;
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j) q += c[i] * k(i, j) * c[j];
    EXPECT_NEAR(q, target, 1e-8 * frobenius_norm(k));
  }
}

TEST(Spectral, VerdictBands) {
  SpectrumReport r;
  r.eigenvalues = {-2e-9, 1.0};
  r.min_eigenvalue = -2e-9;
  EXPECT_EQ(pd_verdict(r, 1.0).verdict, Verdict::not_psd);
  r.min_eigenvalue = -1e-10;
  EXPECT_EQ(pd_verdict(r, 1.0).verdict, Verdict::positive_semidefinite);
  r.min_eigenvalue = 1e-9;
  EXPECT_EQ(pd_verdict(r, 1.0).verdict, Verdict::positive_definite);
  EXPECT_DOUBLE_EQ(pd_verdict(r, 3.0).tolerance, 6e-10);
}

TEST(Spectral, MethodNames) {
  EXPECT_EQ(parse_spectral_method(to_string(SpectralMethod::circulant)), SpectralMethod::circulant);
  EXPECT_THROW(parse_spectral_method("qr"), std::invalid_argument);
}

}  // namespace
}  // namespace geokernel
