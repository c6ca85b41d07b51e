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

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "geokernel/stein.hpp"

namespace geokernel {
namespace {

constexpr double kUnitNormTolerance = 1e-12;
constexpr double kOrthonormalTolerance = 1e-10;
constexpr double kSymmetryTolerance = 1e-12;
constexpr double kInnerProductExcess = 1e-8;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

template <class T>
T norm2(const std::vector<T>& v) {
  using std::sqrt;
  T s(0);
  for (const T& x : v) s += x * x;
  return sqrt(s);
}

template <class T>
std::optional<std::string> check_angle(const T& theta) {
  if (!(theta >= T(0)) || !(theta < T(2) * pi_value<T>())) return "angle outside [0, 2*pi)";
  return std::nullopt;
}

template <class T>
T circle_arc(const T& a, const T& b) {
  using std::abs;
  const T delta = abs(a - b);
  const T other = T(2) * pi_value<T>() - delta;
  return delta < other ? delta : other;
}

// Angle between unit vectors (or between lines when `unsigned_line`), computed
// as 2*atan2(|p-q|, |p+q|): equal to arccos(<p,q>) but accurate near 0 and pi.
template <class T>
T unit_vector_angle(const std::vector<T>& p, const std::vector<T>& q, bool unsigned_line) {
  using std::abs;
  using std::atan2;
  using std::sqrt;
  T ip(0), diff(0), sum(0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    ip += p[i] * q[i];
    diff += (p[i] - q[i]) * (p[i] - q[i]);
    sum += (p[i] + q[i]) * (p[i] + q[i]);
  }
  if (abs(ip) > T(1) + T(kInnerProductExcess)) {
    throw std::invalid_argument("inner product exceeds 1 by more than 1e-8: non-unit input");
  }
  T lo = sqrt(diff);
  T hi = sqrt(sum);
  if (unsigned_line && lo > hi) std::swap(lo, hi);
  return T(2) * atan2(lo, hi);
}

template <class T>
bool lexicographically_less(const BasicPoint<T>& a, const BasicPoint<T>& b) {
  return std::lexicographical_compare(a.coords.begin(), a.coords.end(), b.coords.begin(),
                                      b.coords.end());
}

void require_size(const SpaceDescriptor& space, std::size_t got) {
  const std::size_t want = payload_size(space);
  if (got != want) {
    throw std::invalid_argument("dimension mismatch: " + describe(space) + " expects " +
                                std::to_string(want) + " coordinates, got " + std::to_string(got));
  }
}

}  // namespace

void validate_space(const SpaceDescriptor& space) {
  std::visit(Overloaded{
                 [](const Circle& c) {
                   if (!(c.scale > 0.0) || !std::isfinite(c.scale))
                     throw std::invalid_argument("circle scale must be positive");
                 },
                 [](const Sphere& s) {
                   if (s.n < 1) throw std::invalid_argument("sphere requires n >= 1");
                 },
                 [](const Projective& s) {
                   if (s.n < 1) throw std::invalid_argument("projective space requires n >= 1");
                 },
                 [](const Grassmannian& g) {
                   if (g.k < 1 || g.k >= g.n)
                     throw std::invalid_argument("grassmannian requires 1 <= k < n");
                 },
                 [](const Spd& s) {
                   if (s.n < 1) throw std::invalid_argument("spd requires n >= 1");
                 },
                 [](const Euclidean& e) {
                   if (e.n < 1) throw std::invalid_argument("euclidean requires n >= 1");
                 },
                 [](const FlatTorus&) {},
             },
             space);
}

std::size_t payload_size(const SpaceDescriptor& space) {
  return std::visit(Overloaded{
                        [](const Circle&) -> std::size_t { return 1; },
                        [](const Sphere& s) -> std::size_t { return s.n + 1; },
                        [](const Projective& s) -> std::size_t { return s.n + 1; },
                        [](const Grassmannian& g) -> std::size_t { return g.n * g.k; },
                        [](const Spd& s) -> std::size_t { return s.n * s.n; },
                        [](const Euclidean& e) -> std::size_t { return e.n; },
                        [](const FlatTorus&) -> std::size_t { return 2; },
                    },
                    space);
}

std::string describe(const SpaceDescriptor& space) {
  return std::visit(
      Overloaded{
          [](const Circle& c) { return "circle:" + format_double(c.scale); },
          [](const Sphere& s) { return "sphere:" + std::to_string(s.n); },
          [](const Projective& s) { return "projective:" + std::to_string(s.n); },
          [](const Grassmannian& g) {
            return "grassmann:" + std::to_string(g.k) + "," + std::to_string(g.n) +
                   (g.metric == GrassmannMetric::projection ? ":projection" : ":principal_angle");
          },
          [](const Spd& s) {
            const char* m = s.metric == SpdMetric::frobenius       ? ":frobenius"
                            : s.metric == SpdMetric::log_euclidean ? ":log_euclidean"
                                                                   : ":stein";
            return "spd:" + std::to_string(s.n) + m;
          },
          [](const Euclidean& e) { return "euclidean:" + std::to_string(e.n); },
          [](const FlatTorus&) { return std::string("torus"); },
      },
      space);
}

SpaceDescriptor parse_space(const std::string& text) {
  std::vector<std::string> parts;
  {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
  }
  if (parts.empty()) throw std::invalid_argument("empty space descriptor");
  auto to_int = [&](const std::string& s) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw std::invalid_argument("bad integer '" + s + "' in space '" + text + "'");
    return v;
  };
  const std::string& kind = parts[0];
  SpaceDescriptor out;
  if (kind == "circle") {
    if (parts.size() > 2) throw std::invalid_argument("circle takes one optional scale: " + text);
    out = Circle{parts.size() == 2 ? parse_double(parts[1]) : 1.0};
  } else if (kind == "sphere" && parts.size() == 2) {
    out = Sphere{to_int(parts[1])};
  } else if (kind == "projective" && parts.size() == 2) {
    out = Projective{to_int(parts[1])};
  } else if ((kind == "grassmann" || kind == "grassmannian") && (parts.size() == 2 || parts.size() == 3)) {
    const auto comma = parts[1].find(',');
    if (comma == std::string::npos) throw std::invalid_argument("grassmann expects k,n: " + text);
    Grassmannian g{to_int(parts[1].substr(0, comma)), to_int(parts[1].substr(comma + 1)),
                   GrassmannMetric::principal_angle};
    if (parts.size() == 3) {
      if (parts[2] == "projection") g.metric = GrassmannMetric::projection;
      else if (parts[2] != "principal_angle") throw std::invalid_argument("unknown grassmann metric: " + parts[2]);
    }
    out = g;
  } else if (kind == "spd" && (parts.size() == 2 || parts.size() == 3)) {
    Spd s{to_int(parts[1]), SpdMetric::frobenius};
    if (parts.size() == 3) {
      if (parts[2] == "log_euclidean") s.metric = SpdMetric::log_euclidean;
      else if (parts[2] == "stein") s.metric = SpdMetric::stein;
      else if (parts[2] != "frobenius") throw std::invalid_argument("unknown spd metric: " + parts[2]);
    }
    out = s;
  } else if (kind == "euclidean" && parts.size() == 2) {
    out = Euclidean{to_int(parts[1])};
  } else if (kind == "torus" && parts.size() == 1) {
    out = FlatTorus{};
  } else {
    throw std::invalid_argument("unrecognized space descriptor '" + text + "'");
  }
  validate_space(out);
  return out;
}

template <class T>
Matrix<T> as_matrix(const SpaceDescriptor& space, const BasicPoint<T>& p) {
  require_size(space, p.coords.size());
  if (const auto* g = std::get_if<Grassmannian>(&space)) return Matrix<T>(g->n, g->k, p.coords);
  if (const auto* s = std::get_if<Spd>(&space)) return Matrix<T>(s->n, s->n, p.coords);
  throw std::invalid_argument("as_matrix: " + describe(space) + " points are not matrices");
}

template <class T>
std::optional<std::string> validate_point(const SpaceDescriptor& space, const BasicPoint<T>& p) {
  using std::abs;
  validate_space(space);
  require_size(space, p.coords.size());
  for (const T& x : p.coords) {
    if (!(abs(x) < T(1e300))) return std::string("non-finite coordinate");
  }
  return std::visit(
      Overloaded{
          [&](const Circle&) { return check_angle(p.coords[0]); },
          [&](const FlatTorus&) -> std::optional<std::string> {
            if (auto v = check_angle(p.coords[0])) return v;
            return check_angle(p.coords[1]);
          },
          [&](const Sphere&) -> std::optional<std::string> {
            if (abs(norm2(p.coords) - T(1)) > T(kUnitNormTolerance)) return "norm != 1";
            return std::nullopt;
          },
          [&](const Projective&) -> std::optional<std::string> {
            if (abs(norm2(p.coords) - T(1)) > T(kUnitNormTolerance)) return "norm != 1";
            return std::nullopt;
          },
          [&](const Grassmannian&) -> std::optional<std::string> {
            const Matrix<T> a = as_matrix(space, p);
            Matrix<T> gram = multiply_transposed_left(a, a);
            for (std::size_t i = 0; i < gram.rows(); ++i) gram(i, i) -= T(1);
            if (max_abs_entry(gram) > T(kOrthonormalTolerance)) return "columns not orthonormal";
            return std::nullopt;
          },
          [&](const Spd&) -> std::optional<std::string> {
            const Matrix<T> a = as_matrix(space, p);
            T scale(1);
            scale = std::max<T>(scale, max_abs_entry(a));
            if (max_asymmetry(a) > T(kSymmetryTolerance) * scale) return "not symmetric";
            if (!cholesky(a)) return "not positive definite";
            return std::nullopt;
          },
          [&](const Euclidean&) -> std::optional<std::string> { return std::nullopt; },
      },
      space);
}

template <class T>
std::vector<T> principal_angles(const Matrix<T>& a, const Matrix<T>& b) {
  using std::atan2;
  using std::sqrt;
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.cols() > a.rows()) {
    throw std::invalid_argument("principal_angles: representatives must both be n x k with k <= n");
  }
  const Matrix<T> cross = multiply_transposed_left(a, b);  // A^T B
  const Matrix<T> cos_gram = multiply_transposed_left(cross, cross);
  // Residual of B after projecting onto span(A); its Gram carries sin^2.
  Matrix<T> residual = b;
  const Matrix<T> projected = multiply(a, cross);
  for (std::size_t i = 0; i < residual.rows(); ++i)
    for (std::size_t j = 0; j < residual.cols(); ++j) residual(i, j) -= projected(i, j);
  const Matrix<T> sin_gram = multiply_transposed_left(residual, residual);

  const T tol = working_epsilon<T>();
  auto cos2 = jacobi_eigen(cos_gram, false, tol, 100).eigenvalues;
  auto sin2 = jacobi_eigen(sin_gram, false, tol, 100).eigenvalues;
  auto clamp01 = [](T v) { return v < T(0) ? T(0) : (v > T(1) ? T(1) : v); };
  for (T& v : cos2) v = clamp01(v);
  for (T& v : sin2) v = clamp01(v);
  std::sort(cos2.begin(), cos2.end(), [](const T& x, const T& y) { return x > y; });
  std::sort(sin2.begin(), sin2.end());
  std::vector<T> angles(cos2.size());
  for (std::size_t i = 0; i < angles.size(); ++i) angles[i] = atan2(sqrt(sin2[i]), sqrt(cos2[i]));
  std::sort(angles.begin(), angles.end());
  return angles;
}

template <class T>
T distance(const SpaceDescriptor& space, const BasicPoint<T>& p_in, const BasicPoint<T>& q_in) {
  using std::sqrt;
  for (const auto* pt : {&p_in, &q_in}) {
    if (auto violation = validate_point(space, *pt)) throw std::invalid_argument("invalid point: " + *violation);
  }
  // Canonical argument order makes the result symmetric bit-for-bit.
  const bool swap = lexicographically_less(q_in, p_in);
  const BasicPoint<T>& p = swap ? q_in : p_in;
  const BasicPoint<T>& q = swap ? p_in : q_in;

  return std::visit(
      Overloaded{
          [&](const Circle& c) { return T(c.scale) * circle_arc(p.coords[0], q.coords[0]); },
          [&](const FlatTorus&) {
            const T d1 = circle_arc(p.coords[0], q.coords[0]);
            const T d2 = circle_arc(p.coords[1], q.coords[1]);
            return sqrt(d1 * d1 + d2 * d2);
          },
          [&](const Sphere&) { return unit_vector_angle(p.coords, q.coords, false); },
          [&](const Projective&) { return unit_vector_angle(p.coords, q.coords, true); },
          [&](const Grassmannian& g) {
            const Matrix<T> a = as_matrix(space, p);
            const Matrix<T> b = as_matrix(space, q);
            if (g.metric == GrassmannMetric::principal_angle) {
              T s(0);
              for (const T& theta : principal_angles(a, b)) s += theta * theta;
              return sqrt(s);
            }
            const Matrix<T> pa = multiply(a, transpose(a));
            const Matrix<T> pb = multiply(b, transpose(b));
            T s(0);
            for (std::size_t i = 0; i < pa.values().size(); ++i) {
              const T d = pa.values()[i] - pb.values()[i];
              s += d * d;
            }
            return sqrt(s);
          },
          [&](const Spd& s) {
            const Matrix<T> a = as_matrix(space, p);
            const Matrix<T> b = as_matrix(space, q);
            switch (s.metric) {
              case SpdMetric::frobenius: {
                T acc(0);
                for (std::size_t i = 0; i < a.values().size(); ++i) {
                  const T d = a.values()[i] - b.values()[i];
                  acc += d * d;
                }
                return sqrt(acc);
              }
              case SpdMetric::log_euclidean: {
                const T tol = working_epsilon<T>();
                const Matrix<T> la = spd_log(a, tol);
                const Matrix<T> lb = spd_log(b, tol);
                T acc(0);
                for (std::size_t i = 0; i < la.values().size(); ++i) {
                  const T d = la.values()[i] - lb.values()[i];
                  acc += d * d;
                }
                return sqrt(acc);
              }
              case SpdMetric::stein: {
                const T div = stein_divergence(a, b);
                return div > T(0) ? sqrt(div) : T(0);
              }
            }
            throw std::logic_error("unhandled spd metric");
          },
          [&](const Euclidean&) {
            T acc(0);
            for (std::size_t i = 0; i < p.coords.size(); ++i) {
              const T d = p.coords[i] - q.coords[i];
              acc += d * d;
            }
            return sqrt(acc);
          },
      },
      space);
}

template <class T>
std::vector<BasicPoint<T>> circle_equispaced(int n) {
  if (n < 2) throw std::invalid_argument("circle_equispaced requires N >= 2");
  std::vector<BasicPoint<T>> out;
  out.reserve(n);
  const T step = T(2) * pi_value<T>() / T(n);
  for (int k = 0; k < n; ++k) out.push_back(BasicPoint<T>{{step * T(k)}});
  return out;
}

std::vector<Point> sample_points(const SpaceDescriptor& space, std::uint64_t seed, int count) {
  validate_space(space);
  if (count < 1) throw std::invalid_argument("sample_points requires count >= 1");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * pi_value<double>());
  auto unit_vector = [&](int dim) {
    std::vector<double> v;
    double norm = 0.0;
    do {
      v.assign(dim, 0.0);
      for (double& x : v) x = gauss(rng);
      norm = norm2(v);
    } while (norm < 1e-8);
    for (double& x : v) x /= norm;
    return v;
  };

  std::vector<Point> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    Point p = std::visit(
        Overloaded{
            [&](const Circle&) { return Point{{angle(rng)}}; },
            [&](const FlatTorus&) {
              const double a = angle(rng);
              return Point{{a, angle(rng)}};
            },
            [&](const Sphere& s) { return Point{unit_vector(s.n + 1)}; },
            [&](const Projective& s) { return Point{unit_vector(s.n + 1)}; },
            [&](const Grassmannian& g) {
              Matrix<double> a(g.n, g.k);
              for (;;) {
                for (std::size_t r = 0; r < a.rows(); ++r)
                  for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = gauss(rng);
                // Modified Gram-Schmidt, applied twice for orthogonality to rounding level.
                bool degenerate = false;
                for (int pass = 0; pass < 2 && !degenerate; ++pass) {
                  for (std::size_t c = 0; c < a.cols(); ++c) {
                    for (std::size_t prev = 0; prev < c; ++prev) {
                      double ip = 0.0;
                      for (std::size_t r = 0; r < a.rows(); ++r) ip += a(r, c) * a(r, prev);
                      for (std::size_t r = 0; r < a.rows(); ++r) a(r, c) -= ip * a(r, prev);
                    }
                    double nrm = 0.0;
                    for (std::size_t r = 0; r < a.rows(); ++r) nrm += a(r, c) * a(r, c);
                    nrm = std::sqrt(nrm);
                    if (nrm < 1e-8) {
                      degenerate = true;
                      break;
                    }
                    for (std::size_t r = 0; r < a.rows(); ++r) a(r, c) /= nrm;
                  }
                }
                if (!degenerate) break;
              }
              return Point{a.values()};
            },
            [&](const Spd& s) {
              Matrix<double> g(s.n, s.n);
              for (std::size_t r = 0; r < g.rows(); ++r)
                for (std::size_t c = 0; c < g.cols(); ++c) g(r, c) = gauss(rng);
              Matrix<double> a(s.n, s.n);
              for (int r = 0; r < s.n; ++r)
                for (int c = 0; c <= r; ++c) {
                  double v = 0.0;
                  for (int k = 0; k < s.n; ++k) v += g(r, k) * g(c, k);
                  if (r == c) v += 1e-6;
                  a(r, c) = v;
                  a(c, r) = v;
                }
              return Point{a.values()};
            },
            [&](const Euclidean& e) {
              std::vector<double> v(e.n);
              for (double& x : v) x = gauss(rng);
              return Point{v};
            },
        },
        space);
    out.push_back(std::move(p));
  }
  return out;
}

#define GEOKERNEL_INSTANTIATE_METRIC(T)                                                        \
  template std::optional<std::string> validate_point<T>(const SpaceDescriptor&,              \
                                                         const BasicPoint<T>&);               \
  template T distance<T>(const SpaceDescriptor&, const BasicPoint<T>&, const BasicPoint<T>&); \
  template std::vector<T> principal_angles<T>(const Matrix<T>&, const Matrix<T>&);            \
  template std::vector<BasicPoint<T>> circle_equispaced<T>(int);                              \
  template Matrix<T> as_matrix<T>(const SpaceDescriptor&, const BasicPoint<T>&);

GEOKERNEL_INSTANTIATE_METRIC(double)
GEOKERNEL_INSTANTIATE_METRIC(HighFloat)

#undef GEOKERNEL_INSTANTIATE_METRIC

}  // namespace geokernel
