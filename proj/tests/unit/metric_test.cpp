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

#include "geokernel/metric.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

namespace geokernel {
namespace {

constexpr double kPi = 3.141592653589793;

std::vector<SpaceDescriptor> catalog() {
  return {Circle{1.0},
          Circle{0.5},
          Sphere{2},
          Sphere{5},
          Projective{1},
          Projective{3},
          Grassmannian{2, 4, GrassmannMetric::principal_angle},
          Grassmannian{2, 5, GrassmannMetric::projection},
          Spd{3, SpdMetric::frobenius},
          Spd{3, SpdMetric::log_euclidean},
          Spd{3, SpdMetric::stein},
          Euclidean{4},
          FlatTorus{}};
}

Point vec(std::initializer_list<double> v) { return Point{std::vector<double>(v)}; }

TEST(Metric, CircleAntipodes) {
  EXPECT_DOUBLE_EQ(distance(Circle{1.0}, vec({0.0}), vec({kPi})), kPi);
  EXPECT_NEAR(distance(Circle{1.0}, vec({0.1}), vec({2 * kPi - 0.1})), 0.2, 1e-15);
}

TEST(Metric, SphereOrthogonalVectors) {
  EXPECT_DOUBLE_EQ(distance(Sphere{2}, vec({1, 0, 0}), vec({0, 1, 0})), kPi / 2);
  EXPECT_DOUBLE_EQ(distance(Sphere{2}, vec({1, 0, 0}), vec({-1, 0, 0})), kPi);
}

TEST(Metric, ProjectiveLinesIgnoreSign) {
  const double t = 2 * kPi / 5;
  EXPECT_NEAR(distance(Projective{1}, vec({1, 0}), vec({std::cos(t), std::sin(t)})), 1.2566370614359172, 1e-15);
  EXPECT_NEAR(distance(Projective{2}, vec({1, 0, 0}), vec({-1, 0, 0})), 0.0, 1e-15);
  EXPECT_NEAR(distance(Projective{1}, vec({1, 0}), vec({std::cos(0.9 * kPi), std::sin(0.9 * kPi)})), 0.1 * kPi, 1e-15);
}

TEST(Metric, PrincipalAngles) {
  const Matrix<double> e12(4, 2, {1, 0, 0, 1, 0, 0, 0, 0});
  const Matrix<double> e34(4, 2, {0, 0, 0, 0, 1, 0, 0, 1});
  for (double a : principal_angles(e12, e12)) EXPECT_EQ(a, 0.0);
  for (double a : principal_angles(e12, e34)) EXPECT_NEAR(a, kPi / 2, 1e-15);
  const Matrix<double> u(2, 1, {1, 0});
  const Matrix<double> v(2, 1, {std::cos(0.3), std::sin(0.3)});
  EXPECT_NEAR(principal_angles(u, v).at(0), 0.3, 1e-15);
}

TEST(Metric, EquispacedCircle) {
  const auto four = circle_equispaced<double>(4);
  ASSERT_EQ(four.size(), 4u);
  EXPECT_DOUBLE_EQ(four[3].coords[0], 1.5 * kPi);
  EXPECT_DOUBLE_EQ(distance(Circle{1.0}, four[0], four[2]), kPi);
  const auto eight = circle_equispaced<double>(8);
  EXPECT_NEAR(distance(Circle{1.0}, eight[1], eight[6]), 0.75 * kPi, 1e-15);
  EXPECT_THROW(circle_equispaced<double>(1), std::invalid_argument);
}

TEST(Metric, SamplesAreValidAndDeterministic) {
  for (const auto& s : catalog()) {
    SCOPED_TRACE(describe(s));
    const auto a = sample_points(s, 7, 12);
    const auto b = sample_points(s, 7, 12);
    EXPECT_EQ(a, b);
    for (const auto& p : a) EXPECT_FALSE(validate_point(s, p).has_value());
  }
}

TEST(Metric, SymmetryIdentityAndTriangle) {
  for (const auto& s : catalog()) {
    SCOPED_TRACE(describe(s));
    const auto pts = sample_points(s, 42, 30);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      EXPECT_LE(distance(s, pts[i], pts[i]), 1e-12);
      for (std::size_t j = 0; j < pts.size(); ++j) {
        EXPECT_EQ(distance(s, pts[i], pts[j]), distance(s, pts[j], pts[i]));
      }
    }
    for (std::size_t t = 0; t + 2 < pts.size(); ++t) {
      const double pr = distance(s, pts[t], pts[t + 2]);
      const double pq = distance(s, pts[t], pts[t + 1]);
      const double qr = distance(s, pts[t + 1], pts[t + 2]);
      EXPECT_LE(pr, pq + qr + 1e-9);
    }
  }
}

TEST(Metric, CircleScaleIsExact) {
  const auto pts = sample_points(Circle{1.0}, 3, 20);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    EXPECT_EQ(distance(Circle{0.5}, pts[i], pts[i + 1]), 0.5 * distance(Circle{1.0}, pts[i], pts[i + 1]));
  }
}

TEST(Metric, GrassmannRepresentativeIndependence) {
  const Grassmannian g{2, 5, GrassmannMetric::principal_angle};
  const auto pts = sample_points(g, 9, 20);
  const double c = std::cos(0.7), s = std::sin(0.7);
  const Matrix<double> q(2, 2, {c, -s, s, c});
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Matrix<double> rotated = multiply(as_matrix(g, pts[i]), q);
    const Point p{rotated.values()};
    EXPECT_NEAR(distance(g, p, pts[i + 1]), distance(g, pts[i], pts[i + 1]), 1e-10);
  }
}

TEST(Metric, ProjectionMetricMatchesPrincipalAngles) {
  const Grassmannian g{2, 4, GrassmannMetric::projection};
  const auto pts = sample_points(g, 13, 20);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    double sum = 0.0;
    for (double th : principal_angles(as_matrix(g, pts[i]), as_matrix(g, pts[i + 1])))
      sum += std::sin(th) * std::sin(th);
    const double d = distance(g, pts[i], pts[i + 1]);
    EXPECT_NEAR(d * d, 2.0 * sum, 1e-9);
  }
}

TEST(Metric, ValidationReportsViolations) {
  EXPECT_TRUE(validate_point(Sphere{2}, vec({1, 1, 0})).has_value());
  EXPECT_TRUE(validate_point(Circle{1.0}, vec({7.0})).has_value());
  EXPECT_TRUE(validate_point(Spd{2}, vec({1, 2, 0, 1})).has_value());
  EXPECT_TRUE(validate_point(Spd{2}, vec({1, 2, 2, 1})).has_value());
  EXPECT_TRUE(validate_point(Grassmannian{1, 2}, vec({1, 1})).has_value());
  EXPECT_THROW(validate_point(Sphere{2}, vec({1, 0})), std::invalid_argument);
  EXPECT_THROW(validate_space(Grassmannian{3, 2}), std::invalid_argument);
  EXPECT_THROW(validate_space(Circle{-1.0}), std::invalid_argument);
}

TEST(Metric, ParseAndDescribeRoundTrip) {
  for (const auto& s : catalog()) EXPECT_EQ(parse_space(describe(s)), s) << describe(s);
  EXPECT_EQ(parse_space("grassmann:2,4"), (SpaceDescriptor{Grassmannian{2, 4, GrassmannMetric::principal_angle}}));
  EXPECT_EQ(parse_space("spd:3"), (SpaceDescriptor{Spd{3, SpdMetric::frobenius}}));
  EXPECT_THROW(parse_space("hyperbolic:2"), std::invalid_argument);
  EXPECT_THROW(parse_space("sphere:x"), std::invalid_argument);
}

TEST(Metric, HighPrecisionDistancesAgree) {
  ScopedPrecision guard(40);
  for (const auto& s : catalog()) {
    const auto pts = sample_points(s, 5, 4);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      HighPoint a, b;
      for (double x : pts[i].coords) a.coords.push_back(x);
      for (double x : pts[i + 1].coords) b.coords.push_back(x);
      EXPECT_NEAR(static_cast<double>(distance(s, a, b)), distance(s, pts[i], pts[i + 1]), 1e-9) << describe(s);
    }
  }
}

}  // namespace
}  // namespace geokernel
