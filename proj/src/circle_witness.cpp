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

#include "geokernel/circle_witness.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "geokernel/gram.hpp"
#include "geokernel/spectral.hpp"

namespace geokernel {
namespace {

constexpr double kLambdaStart = 1e-6;
constexpr int kMaxDoublings = 60;
constexpr double kBisectionTolerance = 1e-8;

void require_multiple_of_four(int n) {
  if (n < 4 || n % 4 != 0) {
    throw std::invalid_argument("N must be a positive multiple of 4, got " + std::to_string(n));
  }
}

template <class T>
T w_half_impl(const T& mu, int n) {
  using std::exp;
  const T nn = T(n) * T(n);
  std::vector<T> terms;
  terms.reserve(n / 2 + 2);
  terms.push_back(T(-1));
  for (int k = 0; k < n / 2; ++k) {
    const T kk(k);
    const T t = T(2) * exp(-mu * kk * kk / nn);
    terms.push_back(k % 2 == 0 ? t : -t);
  }
  terms.push_back(exp(-mu / T(4)));
  if constexpr (std::is_same_v<T, double>) {
    return compensated_sum(terms);
  } else {
    T sum(0);
    for (const T& t : terms) sum += t;
    return sum;
  }
}

// min_j w_j for the unit circle, at the current working precision.
HighFloat min_circulant(const HighFloat& lambda, int n) {
  const auto w = circulant_spectrum(circle_first_row(lambda, n, HighFloat(1)));
  return *std::min_element(w.begin(), w.end());
}

std::string text_of(const HighFloat& v, int digits) {
  return digits == kDoubleDigits ? format_double(static_cast<double>(v)) : format_high(v, digits);
}

void finish_certificate(WitnessCertificate& cert) {
  cert.quad_form = evaluate_quad_form(cert);
  const double threshold = certificate_threshold(cert.order());
  const double q = parse_double(cert.quad_form);
  if (!(q < -threshold)) {
    throw CertificateRefused("quadratic form " + cert.quad_form + " is not below -" + format_double(threshold));
  }
}

}  // namespace

HighFloat w_half(const HighFloat& mu, int n, int precision_digits) {
  require_multiple_of_four(n);
  check_precision_digits(precision_digits);
  if (!(mu > 0)) throw std::invalid_argument("w_half: mu must be positive");
  if (precision_digits == kDoubleDigits) {
    return HighFloat(w_half_impl(static_cast<double>(mu), n));
  }
  ScopedPrecision guard(precision_digits);
  return w_half_impl(HighFloat(mu), n);
}

WitnessSearch find_witness_n(const std::string& lambda_text, int n_max, int precision_digits) {
  if (n_max < 4) throw std::invalid_argument("find_witness_n: n_max must be at least 4");
  check_precision_digits(precision_digits);
  ScopedPrecision guard(precision_digits);
  const HighFloat lambda = parse_high(lambda_text, precision_digits);
  const HighFloat mu = mu_of_lambda(lambda);
  const HighFloat threshold = -pow10_neg<HighFloat>(precision_digits - 5);

  WitnessSearch out;
  out.precision_digits = precision_digits;
  for (int n = 4; n <= n_max; n += 4) {
    ++out.scanned;
    const HighFloat w = w_half(mu, n, precision_digits);
    if (w < threshold) {
      out.found = true;
      out.n = n;
      out.w = w;
      return out;
    }
  }
  return out;
}

std::vector<HighFloat> circle_spectrum(const std::string& lambda_text, int n, double scale, int precision_digits) {
  check_precision_digits(precision_digits);
  if (!(scale > 0.0)) throw std::invalid_argument("circle scale must be positive");
  if (precision_digits == kDoubleDigits) {
    const double lambda = parse_double(lambda_text);
    if (!(lambda > 0.0)) throw std::invalid_argument("lambda must be positive");
    const auto w = circulant_spectrum(circle_first_row(lambda, n, scale));
    return {w.begin(), w.end()};
  }
  ScopedPrecision guard(precision_digits);
  const HighFloat lambda = parse_high(lambda_text, precision_digits);
  if (!(lambda > 0)) throw std::invalid_argument("lambda must be positive");
  return circulant_spectrum(circle_first_row(lambda, n, HighFloat(scale)));
}

CriticalLambda lambda_crit(int n, int precision_digits) {
  require_multiple_of_four(n);
  check_precision_digits(precision_digits);
  ScopedPrecision guard(precision_digits);
  auto not_psd = [&](double lambda) { return min_circulant(HighFloat(lambda), n) < 0; };

  double hi = kLambdaStart;
  if (!not_psd(hi)) {
    throw std::runtime_error("lambda_crit: Gram is already PSD at lambda = 1e-6 for N = " + std::to_string(n));
  }
  int doublings = 0;
  while (not_psd(hi)) {
    if (doublings == kMaxDoublings) {
      throw std::runtime_error("lambda_crit: predicate still true after 60 doublings for N = " + std::to_string(n));
    }
    hi *= 2.0;
    ++doublings;
  }
  double lo = hi / 2.0;
  while (hi - lo > kBisectionTolerance) {
    const double mid = 0.5 * (lo + hi);
    if (not_psd(mid)) lo = mid;
    else hi = mid;
  }
  return {n, lo, static_cast<double>(min_circulant(HighFloat(lo), n))};
}

LambdaProfile lambda_profile(std::span<const int> n_list, int precision_digits) {
  LambdaProfile out;
  out.reserve(n_list.size());
  for (int n : n_list) out.push_back(lambda_crit(n, precision_digits));
  return out;
}

WitnessCertificate build_certificate(const SpaceDescriptor& space, double lambda, std::span<const Point> points,
                                     int precision_digits) {
  check_precision_digits(precision_digits);
  const GramMatrix k = gram(space, points, KernelParam::from_lambda(lambda));
  const SpectrumReport spectrum = jacobi_eigenvalues(k.entries);
  const double threshold = certificate_threshold(k.order());
  if (!(spectrum.min_eigenvalue < -threshold)) {
    throw CertificateRefused("minimum eigenvalue " + spectrum.min_eigenvalue_text + " is not below -" +
                             format_double(threshold));
  }
  const auto vec = min_eigenvector(k.entries, spectrum.min_eigenvalue);

  WitnessCertificate cert;
  cert.space = space;
  cert.lambda = format_double(lambda);
  for (const Point& p : points) {
    std::vector<std::string> coords;
    for (double x : p.coords) coords.push_back(format_double(x));
    cert.points.push_back(std::move(coords));
  }
  for (double c : vec.vector) cert.coefficients.push_back(format_double(c));
  cert.min_eigenvalue = spectrum.min_eigenvalue_text;
  cert.method = SpectralMethod::jacobi;
  cert.precision_digits = precision_digits;
  if (const auto* circle = std::get_if<Circle>(&space)) {
    cert.unit_circle_lambda = format_double(lambda * circle->scale * circle->scale);
  }
  finish_certificate(cert);
  return cert;
}

WitnessCertificate build_circle_certificate(const std::string& lambda_text, int n, double scale,
                                            int precision_digits) {
  check_precision_digits(precision_digits);
  const auto w = circle_spectrum(lambda_text, n, scale, precision_digits);
  const int j = static_cast<int>(std::min_element(w.begin(), w.end()) - w.begin());

  WitnessCertificate cert;
  cert.space = Circle{scale};
  cert.method = SpectralMethod::circulant;
  cert.precision_digits = precision_digits;
  if (precision_digits == kDoubleDigits) {
    const double lambda = parse_double(lambda_text);
    cert.lambda = format_double(lambda);
    for (const auto& p : circle_equispaced<double>(n)) cert.points.push_back({format_double(p.coords[0])});
    for (double c : fourier_mode<double>(n, j)) cert.coefficients.push_back(format_double(c));
    cert.min_eigenvalue = format_double(static_cast<double>(w[j]));
    cert.unit_circle_lambda = format_double(lambda * scale * scale);
  } else {
    ScopedPrecision guard(precision_digits);
    const HighFloat lambda = parse_high(lambda_text, precision_digits);
    cert.lambda = lambda_text;
    for (const auto& p : circle_equispaced<HighFloat>(n)) {
      cert.points.push_back({format_high(p.coords[0], precision_digits)});
    }
    for (const auto& c : fourier_mode<HighFloat>(n, j)) cert.coefficients.push_back(format_high(c, precision_digits));
    cert.min_eigenvalue = format_high(w[j], precision_digits);
    cert.unit_circle_lambda = format_high(lambda * HighFloat(scale) * HighFloat(scale), precision_digits);
  }
  finish_certificate(cert);
  return cert;
}

CircleWitnessReport circle_witness(const std::string& lambda_text, int n_max, int precision_digits,
                                   int max_doublings) {
  CircleWitnessReport report;
  report.lambda = lambda_text;
  std::string refusal;
  for (int m = 0; m <= max_doublings; ++m) {
    const long long k = 1LL << m;
    std::string scaled = lambda_text;
    if (m > 0) {
      ScopedPrecision guard(std::max(precision_digits, kDefaultPrecisionDigits));
      scaled = text_of(parse_high(lambda_text, precision_digits) * HighFloat(k), precision_digits);
    }
    const WitnessSearch s = find_witness_n(scaled, n_max, precision_digits);
    if (m == 0) report.search = s;
    if (!s.found) continue;
    try {
      WitnessCertificate cert = build_circle_certificate(scaled, s.n, 1.0, precision_digits);
      report.search = s;
      if (m > 0) {
        const AdditionClosure closure{lambda_text, static_cast<int>(k)};
        cert.closure = closure;
        report.closure = closure;
        report.note = "witness at " + std::to_string(k) + " x lambda excludes lambda by addition closure";
      } else {
        report.note = "direct witness";
      }
      report.certificate = std::move(cert);
      return report;
    } catch (const CertificateRefused& e) {
      if (refusal.empty()) refusal = e.what();
    }
  }
  report.note = refusal.empty() ? "no witness within budget"
                                : "no witness within budget; smallest violation below certification threshold: " + refusal;
  return report;
}

}  // namespace geokernel
