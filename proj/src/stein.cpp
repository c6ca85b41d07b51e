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

#include "geokernel/stein.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "geokernel/circle_witness.hpp"
#include "geokernel/gram.hpp"
#include "geokernel/spectral.hpp"

namespace geokernel {

template <class T>
T stein_divergence(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.square() || a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("stein_divergence: arguments must be square and of equal order");
  }
  Matrix<T> mid = a;
  for (std::size_t i = 0; i < mid.values().size(); ++i) {
    mid.data()[i] = (a.data()[i] + b.data()[i]) / T(2);
  }
  return log_det_spd(mid) - (log_det_spd(a) + log_det_spd(b)) / T(2);
}

template double stein_divergence<double>(const Matrix<double>&, const Matrix<double>&);
template HighFloat stein_divergence<HighFloat>(const Matrix<HighFloat>&, const Matrix<HighFloat>&);

bool LambdaPlusSet::contains(double lambda) const {
  if (lambda >= continuous_from) return true;
  for (double d : discrete)
    if (lambda == d) return true;
  return false;
}

LambdaPlusSet lambda_plus_set(int n) {
  if (n < 1) throw std::invalid_argument("lambda_plus_set requires n >= 1");
  LambdaPlusSet s;
  s.n = n;
  for (int j = 1; j <= n - 2; ++j) s.discrete.push_back(0.5 * j);
  s.continuous_from = 0.5 * (n - 1);
  return s;
}

namespace {

constexpr int kStrategyCount = 4;

Matrix<double> random_orthogonal(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix<double> q(n, n);
  for (;;) {
    for (std::size_t i = 0; i < q.values().size(); ++i) q.data()[i] = gauss(rng);
    bool ok = true;
    for (int pass = 0; pass < 2 && ok; ++pass) {
      for (int c = 0; c < n && ok; ++c) {
        for (int prev = 0; prev < c; ++prev) {
          double ip = 0.0;
          for (int r = 0; r < n; ++r) ip += q(r, c) * q(r, prev);
          for (int r = 0; r < n; ++r) q(r, c) -= ip * q(r, prev);
        }
        double nrm = 0.0;
        for (int r = 0; r < n; ++r) nrm += q(r, c) * q(r, c);
        nrm = std::sqrt(nrm);
        if (nrm < 1e-8) ok = false;
        else
          for (int r = 0; r < n; ++r) q(r, c) /= nrm;
      }
    }
    if (ok) return q;
  }
}

// Q diag(d) Q^T, symmetrized exactly.
Matrix<double> from_spectrum(const Matrix<double>& q, const std::vector<double>& d) {
  const int n = static_cast<int>(d.size());
  Matrix<double> a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= r; ++c) {
      double v = 0.0;
      for (int k = 0; k < n; ++k) v += q(r, k) * d[k] * q(c, k);
      a(r, c) = v;
      a(c, r) = v;
    }
  return a;
}

Matrix<double> wishart(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int dof = n + 1;
  Matrix<double> g(n, dof);
  for (std::size_t i = 0; i < g.values().size(); ++i) g.data()[i] = gauss(rng);
  Matrix<double> a(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c <= r; ++c) {
      double v = 0.0;
      for (int k = 0; k < dof; ++k) v += g(r, k) * g(c, k);
      v /= dof;
      if (r == c) v += 1e-3;
      a(r, c) = v;
      a(c, r) = v;
    }
  return a;
}

// Points clustered around the identity along a few random symmetric
// directions, where the kernel is closest to its second-order expansion.
std::vector<Matrix<double>> stencil(int n, int count, std::mt19937_64& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double h = std::pow(10.0, -2.0 + 1.5 * unit(rng));
  std::vector<Matrix<double>> out;
  out.push_back(Matrix<double>::identity(n));
  while (static_cast<int>(out.size()) < count) {
    Matrix<double> s(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c <= r; ++c) {
        const double v = gauss(rng);
        s(r, c) = v;
        s(c, r) = v;
      }
    const double scale = h / std::max(frobenius_norm(s), 1e-12);
    for (int sign : {1, -1}) {
      if (static_cast<int>(out.size()) == count) break;
      Matrix<double> a = Matrix<double>::identity(n);
      for (std::size_t i = 0; i < a.values().size(); ++i) a.data()[i] += sign * scale * s.data()[i];
      out.push_back(std::move(a));
    }
  }
  return out;
}

}  // namespace

std::string stein_strategy_name(int trial) {
  switch (((trial % kStrategyCount) + kStrategyCount) % kStrategyCount) {
    case 0:
      return "wishart";
    case 1:
      return "diagonal";
    case 2:
      return "ill_conditioned";
    default:
      return "identity_stencil";
  }
}

std::vector<Point> stein_trial_points(const SteinProbeOptions& opt, int trial) {
  if (opt.n < 1) throw std::invalid_argument("stein probe requires n >= 1");
  if (opt.points_per_trial < 2) throw std::invalid_argument("stein probe requires points_per_trial >= 2");
  std::seed_seq seq{static_cast<std::uint64_t>(opt.seed), static_cast<std::uint64_t>(trial)};
  std::mt19937_64 rng(seq);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<Matrix<double>> mats;
  const std::string strategy = stein_strategy_name(trial);
  if (strategy == "identity_stencil") {
    mats = stencil(opt.n, opt.points_per_trial, rng);
  } else {
    const double spread = 0.25 + 2.0 * unit(rng);
    const Matrix<double> shared = random_orthogonal(opt.n, rng);
    for (int i = 0; i < opt.points_per_trial; ++i) {
      if (strategy == "wishart") {
        mats.push_back(wishart(opt.n, rng));
      } else if (strategy == "diagonal") {
        std::vector<double> d(opt.n);
        for (double& x : d) x = std::exp(spread * gauss(rng));
        mats.push_back(from_spectrum(Matrix<double>::identity(opt.n), d));
      } else {
        // Condition numbers up to 1e8, with half the points sharing an
        // eigenbasis so that pairs straddle extreme ratios along one axis.
        std::vector<double> d(opt.n);
        for (double& x : d) x = std::pow(10.0, -4.0 + 8.0 * unit(rng));
        const Matrix<double> q = (i % 2 == 0) ? shared : random_orthogonal(opt.n, rng);
        mats.push_back(from_spectrum(q, d));
      }
    }
  }
  std::vector<Point> pts;
  pts.reserve(mats.size());
  for (auto& m : mats) pts.push_back(Point{m.values()});
  return pts;
}

SteinProbeReport stein_probe(const SteinProbeOptions& opt) {
  if (opt.trials < 1) throw std::invalid_argument("stein probe requires trials >= 1");
  if (!(opt.lambda > 0.0)) throw std::invalid_argument("stein probe requires lambda > 0");
  const SpaceDescriptor space = Spd{opt.n, SpdMetric::stein};
  const KernelParam param = KernelParam::from_lambda(opt.lambda);
  const double threshold = certificate_threshold(static_cast<std::size_t>(opt.points_per_trial));

  SteinProbeReport report;
  report.lambda = opt.lambda;
  report.in_set = lambda_plus_set(opt.n).contains(opt.lambda);
  report.min_eig_seen = std::numeric_limits<double>::infinity();
  for (int t = 0; t < opt.trials; ++t) {
    const auto pts = stein_trial_points(opt, t);
    const GramMatrix k = gram(space, pts, param);
    const SpectrumReport spectrum = jacobi_eigenvalues(k.entries);
    report.trials_run = t + 1;
    if (spectrum.min_eigenvalue < report.min_eig_seen) {
      report.min_eig_seen = spectrum.min_eigenvalue;
      report.min_eig_trial = t;
      report.min_eig_strategy = stein_strategy_name(t);
    }
    if (spectrum.min_eigenvalue < -threshold) {
      report.witness = build_certificate(space, opt.lambda, pts);
      break;
    }
  }
  return report;
}

}  // namespace geokernel
