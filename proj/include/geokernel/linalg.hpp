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

// Small dense linear algebra written against a generic real type so the same
// routines serve double-precision Gram work and high-precision certificate
// re-verification. Double-precision row operations go through the SIMD
// kernel table.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geokernel/simd/kernels.hpp"

namespace geokernel {

/// Row-major dense matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) throw std::invalid_argument("Matrix: payload size mismatch");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  T* data() { return data_.data(); }
  const T* data() const { return data_.data(); }
  const std::vector<T>& values() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: inner dimension mismatch");
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

/// a^T b without forming the transpose.
template <class T>
Matrix<T> multiply_transposed_left(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("multiply: row count mismatch");
  Matrix<T> c(a.cols(), b.cols());
  for (std::size_t k = 0; k < a.rows(); ++k)
    for (std::size_t i = 0; i < a.cols(); ++i) {
      const T aki = a(k, i);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aki * b(k, j);
    }
  return c;
}

template <class T>
T frobenius_norm(const Matrix<T>& a) {
  using std::sqrt;
  T sum(0);
  for (const T& v : a.values()) sum += v * v;
  return sqrt(sum);
}

template <class T>
T max_abs_entry(const Matrix<T>& a) {
  using std::abs;
  T m(0);
  for (const T& v : a.values()) m = std::max<T>(m, abs(v));
  return m;
}

inline double max_abs_entry(const Matrix<double>& a) {
  return simd::active().max_abs(a.data(), a.values().size());
}

/// Frobenius norm of the strictly off-diagonal part of a square matrix.
template <class T>
T offdiag_frobenius(const Matrix<T>& a) {
  using std::sqrt;
  T sum(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) sum += a(i, j) * a(i, j);
  return sqrt(sum);
}

template <class T>
T max_asymmetry(const Matrix<T>& a) {
  using std::abs;
  T m(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) m = std::max<T>(m, abs(a(i, j) - a(j, i)));
  return m;
}

template <class T>
T trace(const Matrix<T>& a) {
  T t(0);
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

/// Lower Cholesky factor, or nullopt when the matrix is not positive definite.
template <class T>
std::optional<Matrix<T>> cholesky(const Matrix<T>& a) {
  using std::sqrt;
  if (!a.square()) throw std::invalid_argument("cholesky: matrix is not square");
  const std::size_t n = a.rows();
  Matrix<T> l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    T diag = a(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (!(diag > T(0))) return std::nullopt;
    l(j, j) = sqrt(diag);
    for (std::size_t i = j + 1; i < n; ++i) {
      T v = a(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / l(j, j);
    }
  }
  return l;
}

/// log det of a symmetric positive definite matrix via Cholesky.
/// Throws std::domain_error when the factorization fails.
template <class T>
T log_det_spd(const Matrix<T>& a) {
  using std::log;
  auto l = cholesky(a);
  if (!l) throw std::domain_error("log_det_spd: matrix is not positive definite");
  T sum(0);
  for (std::size_t i = 0; i < a.rows(); ++i) sum += log((*l)(i, i));
  return T(2) * sum;
}

template <class T>
struct JacobiResult {
  std::vector<T> eigenvalues;  // diagonal order, unsorted
  Matrix<T> vectors;           // row i is the unit eigenvector of eigenvalues[i]
  int sweeps = 0;
  T offdiag_residual = T(0);
  bool converged = false;
};

namespace detail {

inline void rotate_rows(double* x, double* y, std::size_t n, double c, double s) {
  simd::active().rotate(x, y, n, c, s);
}

template <class T>
void rotate_rows(T* x, T* y, std::size_t n, const T& c, const T& s) {
  for (std::size_t i = 0; i < n; ++i) {
    const T xi = x[i];
    const T yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

}  // namespace detail

/// Cyclic Jacobi eigensolver for a symmetric matrix. Sweeps until the
/// off-diagonal Frobenius norm is at most `relative_tolerance * ||a||_F` or
/// `max_sweeps` is exhausted; `converged` reports which happened.
template <class T>
JacobiResult<T> jacobi_eigen(Matrix<T> a, bool want_vectors, const T& relative_tolerance,
                             int max_sweeps) {
  using std::abs;
  using std::sqrt;
  if (!a.square()) throw std::invalid_argument("jacobi_eigen: matrix is not square");
  const std::size_t n = a.rows();
  JacobiResult<T> result;
  if (want_vectors) result.vectors = Matrix<T>::identity(n);

  const T norm = frobenius_norm(a);
  const T target = relative_tolerance * norm;
  T off = offdiag_frobenius(a);
  int sweep = 0;
  while (off > target && sweep < max_sweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const T apq = a(p, q);
        if (apq == T(0)) continue;
        const T app = a(p, p);
        const T aqq = a(q, q);
        const T theta = (aqq - app) / (T(2) * apq);
        T t = T(1) / (abs(theta) + sqrt(theta * theta + T(1)));
        if (theta < T(0)) t = -t;
        const T c = T(1) / sqrt(t * t + T(1));
        const T s = t * c;

        detail::rotate_rows(a.row(p).data(), a.row(q).data(), n, c, s);
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          a(k, p) = a(p, k);
          a(k, q) = a(q, k);
        }
        a(p, p) = app - t * apq;
        a(q, q) = aqq + t * apq;
        a(p, q) = T(0);
        a(q, p) = T(0);
        if (want_vectors) {
          detail::rotate_rows(result.vectors.row(p).data(), result.vectors.row(q).data(), n, c, s);
        }
      }
    }
    ++sweep;
    off = offdiag_frobenius(a);
  }

  result.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.eigenvalues[i] = a(i, i);
  result.sweeps = sweep;
  result.offdiag_residual = off;
  result.converged = off <= target;
  return result;
}

/// Matrix logarithm of a symmetric positive definite matrix, V diag(log w) V^T.
template <class T>
Matrix<T> spd_log(const Matrix<T>& a, const T& relative_tolerance) {
  using std::log;
  auto eig = jacobi_eigen(a, true, relative_tolerance, 100);
  if (!eig.converged) throw std::runtime_error("spd_log: eigensolver did not converge");
  const std::size_t n = a.rows();
  Matrix<T> out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    if (!(eig.eigenvalues[k] > T(0))) throw std::domain_error("spd_log: matrix is not positive definite");
    const T lw = log(eig.eigenvalues[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const T vi = eig.vectors(k, i) * lw;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vi * eig.vectors(k, j);
    }
  }
  // Symmetrize: the accumulation is symmetric in exact arithmetic.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const T v = (out(i, j) + out(j, i)) / T(2);
      out(i, j) = v;
      out(j, i) = v;
    }
  return out;
}

/// Solves a x = b by LU with partial pivoting. Zero pivots are replaced by
/// `pivot_floor` so that nearly singular shifted systems (inverse iteration)
/// still produce a usable direction.
std::vector<double> lu_solve(Matrix<double> a, std::vector<double> b, double pivot_floor);

}  // namespace geokernel
