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

#include <algorithm>
#include <cmath>
#include <numeric>

namespace geokernel {
namespace {

constexpr int kInverseIterationMax = 50;
constexpr double kEigenvectorResidual = 1e-8;

void check_trace(const SpectrumReport& r, double trace_value, double scale) {
  const double sum = compensated_sum(r.eigenvalues);
  const double allowed = 1e-10 * static_cast<double>(r.eigenvalues.size()) * std::max(1.0, scale);
  if (std::fabs(sum - trace_value) > allowed) {
    throw std::runtime_error("spectrum does not conserve the trace: sum " + format_double(sum) +
                             " vs trace " + format_double(trace_value));
  }
}

template <class T>
void check_symmetric_row(const std::vector<T>& row) {
  using std::abs;
  const std::size_t n = row.size();
  if (n == 0) throw std::invalid_argument("circulant: empty first row");
  for (std::size_t k = 1; k < n; ++k) {
    const T a = row[k];
    const T b = row[n - k];
    const T ulp = working_epsilon<T>() * std::max<T>(abs(a), abs(b));
    if (abs(a - b) > ulp) {
      throw std::invalid_argument("circulant: first row is not symmetric at k=" + std::to_string(k));
    }
  }
}

}  // namespace

std::string to_string(SpectralMethod method) {
  return method == SpectralMethod::jacobi ? "jacobi" : "circulant";
}

SpectralMethod parse_spectral_method(const std::string& text) {
  if (text == "jacobi") return SpectralMethod::jacobi;
  if (text == "circulant") return SpectralMethod::circulant;
  throw std::invalid_argument("unknown spectral method '" + text + "'");
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::positive_definite:
      return "positive_definite";
    case Verdict::positive_semidefinite:
      return "positive_semidefinite";
    case Verdict::not_psd:
      return "not_psd";
  }
  return "unknown";
}

double compensated_sum(std::span<const double> values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) carry += (sum - t) + v;
    else carry += (v - t) + sum;
    sum = t;
  }
  return sum + carry;
}

SpectrumReport jacobi_eigenvalues(const Matrix<double>& m) {
  if (!m.square()) throw std::invalid_argument("jacobi_eigenvalues: matrix is not square");
  const double scale = max_abs_entry(m);
  if (max_asymmetry(m) > 1e-12 * scale) throw std::invalid_argument("jacobi_eigenvalues: matrix is not symmetric");
  auto eig = jacobi_eigen(m, false, kJacobiRelativeTolerance, kJacobiMaxSweeps);
  if (!eig.converged) {
    throw NonConvergence("jacobi_eigenvalues: no convergence in 100 sweeps, off-diagonal residual " +
                             format_double(eig.offdiag_residual),
                         eig.offdiag_residual);
  }
  SpectrumReport r;
  r.eigenvalues = std::move(eig.eigenvalues);
  std::sort(r.eigenvalues.begin(), r.eigenvalues.end());
  r.min_eigenvalue = r.eigenvalues.empty() ? 0.0 : r.eigenvalues.front();
  r.min_eigenvalue_text = format_double(r.min_eigenvalue);
  r.method = SpectralMethod::jacobi;
  r.offdiag_residual = eig.offdiag_residual;
  r.sweeps = eig.sweeps;
  r.precision_digits = kDoubleDigits;
  check_trace(r, trace(m), scale);
  return r;
}

template <class T>
std::vector<T> circulant_spectrum(const std::vector<T>& row) {
  using std::cos;
  const int n = static_cast<int>(row.size());
  const T two_pi = T(2) * pi_value<T>();
  std::vector<T> cosines(n);
  for (int m = 0; m < n; ++m) cosines[m] = cos(two_pi * T(m) / T(n));
  std::vector<T> w(n);
  for (int j = 0; j < n; ++j) {
    if constexpr (std::is_same_v<T, double>) {
      std::vector<double> terms(n);
      for (int k = 0; k < n; ++k) terms[k] = row[k] * cosines[(static_cast<long>(j) * k) % n];
      w[j] = compensated_sum(terms);
    } else {
      T sum(0);
      for (int k = 0; k < n; ++k) sum += row[k] * cosines[(static_cast<long>(j) * k) % n];
      w[j] = sum;
    }
  }
  return w;
}

template std::vector<double> circulant_spectrum<double>(const std::vector<double>&);
template std::vector<HighFloat> circulant_spectrum<HighFloat>(const std::vector<HighFloat>&);

namespace {

template <class T>
SpectrumReport sorted_circulant_report(const std::vector<T>& w, int precision_digits) {
  const int n = static_cast<int>(w.size());
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return w[a] < w[b]; });
  SpectrumReport r;
  r.method = SpectralMethod::circulant;
  r.precision_digits = precision_digits;
  r.index_map = order;
  for (int idx : order) {
    r.eigenvalues.push_back(static_cast<double>(w[idx]));
    if constexpr (!std::is_same_v<T, double>) r.eigenvalue_text.push_back(format_high(w[idx], precision_digits));
  }
  r.min_eigenvalue = r.eigenvalues.front();
  if constexpr (std::is_same_v<T, double>) r.min_eigenvalue_text = format_double(r.min_eigenvalue);
  else r.min_eigenvalue_text = r.eigenvalue_text.front();
  return r;
}

}  // namespace

SpectrumReport circulant_eigenvalues(std::span<const double> first_row, int precision_digits) {
  check_precision_digits(precision_digits);
  std::vector<double> row(first_row.begin(), first_row.end());
  check_symmetric_row(row);
  if (precision_digits == kDoubleDigits) {
    auto r = sorted_circulant_report(circulant_spectrum(row), precision_digits);
    check_trace(r, static_cast<double>(row.size()) * row[0], std::fabs(row[0]));
    return r;
  }
  ScopedPrecision guard(precision_digits);
  std::vector<HighFloat> high(row.begin(), row.end());
  return sorted_circulant_report(circulant_spectrum(high), precision_digits);
}

SpectrumReport circulant_eigenvalues(const std::vector<HighFloat>& first_row, int precision_digits) {
  check_precision_digits(precision_digits);
  ScopedPrecision guard(precision_digits);
  check_symmetric_row(first_row);
  return sorted_circulant_report(circulant_spectrum(first_row), precision_digits);
}

double psd_tolerance(std::size_t order, double scale) { return 1e-10 * static_cast<double>(order) * scale; }

PdVerdict pd_verdict(const SpectrumReport& report, double scale) {
  PdVerdict v;
  v.min_eigenvalue = report.min_eigenvalue;
  v.tolerance = psd_tolerance(report.eigenvalues.size(), scale);
  if (v.min_eigenvalue < -v.tolerance) v.verdict = Verdict::not_psd;
  else if (v.min_eigenvalue > v.tolerance) v.verdict = Verdict::positive_definite;
  else v.verdict = Verdict::positive_semidefinite;
  return v;
}

EigenvectorResult min_eigenvector(const Matrix<double>& m, double target) {
  if (!m.square() || m.rows() == 0) throw std::invalid_argument("min_eigenvector: matrix must be square and non-empty");
  const std::size_t n = m.rows();
  const auto& k = simd::active();
  const double fro = frobenius_norm(m);
  const double allowed = kEigenvectorResidual * std::max(fro, 1e-300);

  Matrix<double> shifted = m;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= target;
  const double pivot_floor = 1e-14 * std::max(fro, 1.0);

  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = 1.0 + 0.1 * std::sin(1.0 + static_cast<double>(i));
  auto normalize = [&](std::vector<double>& v) {
    const double nrm = std::sqrt(k.dot(v.data(), v.data(), n));
    for (double& c : v) c /= nrm;
  };
  auto residual_of = [&](const std::vector<double>& v) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = k.dot(m.row(i).data(), v.data(), n) - target * v[i];
      acc += r * r;
    }
    return std::sqrt(acc);
  };
  normalize(x);

  EigenvectorResult out;
  double res = residual_of(x);
  int it = 0;
  while (res > allowed && it < kInverseIterationMax) {
    x = lu_solve(shifted, x, pivot_floor);
    normalize(x);
    res = residual_of(x);
    ++it;
  }
  if (res > allowed) {
    throw NonConvergence("min_eigenvector: inverse iteration residual " + format_double(res), res);
  }
  // Deterministic sign: largest-magnitude component positive.
  std::size_t big = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::fabs(x[i]) > std::fabs(x[big])) big = i;
  if (x[big] < 0.0)
    for (double& c : x) c = -c;
  out.vector = std::move(x);
  out.residual = res;
  out.iterations = it;
  return out;
}

template <class T>
std::vector<T> fourier_mode(int n, int j) {
  using std::cos;
  using std::sqrt;
  if (n < 1 || j < 0 || j >= n) throw std::invalid_argument("fourier_mode: index out of range");
  const T two_pi = T(2) * pi_value<T>();
  std::vector<T> c(n);
  T norm2(0);
  for (int k = 0; k < n; ++k) {
    c[k] = cos(two_pi * T((static_cast<long>(j) * k) % n) / T(n));
    norm2 += c[k] * c[k];
  }
  const T norm = sqrt(norm2);
  for (T& v : c) v /= norm;
  return c;
}

template std::vector<double> fourier_mode<double>(int, int);
template std::vector<HighFloat> fourier_mode<HighFloat>(int, int);

}  // namespace geokernel
