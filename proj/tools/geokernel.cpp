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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "geokernel/certificate.hpp"
#include "geokernel/circle_witness.hpp"
#include "geokernel/embeddings.hpp"
#include "geokernel/gram.hpp"
#include "geokernel/io.hpp"
#include "geokernel/partial_theta.hpp"
#include "geokernel/spectral.hpp"
#include "geokernel/stein.hpp"

namespace gk = geokernel;
using nlohmann::json;

namespace {

enum Exit : int { kOk = 0, kError = 1, kNotPsd = 2, kExhausted = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw UsageError("not an integer list: '" + text + "'");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

std::string text_of(const gk::HighFloat& v, int digits) {
  return digits == gk::kDoubleDigits ? gk::format_double(static_cast<double>(v)) : gk::format_high(v, digits);
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file '" + output + "'");
  out << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void require_positive_lambda(const std::string& lambda) {
  if (!(gk::parse_double(lambda) > 0.0)) throw UsageError("--lambda must be positive");
}

// Gaussian terms of size exp(-pi^2 lambda) vanish below double resolution
// once lambda exceeds about 3.
void require_precision_for(const std::string& lambda, int precision) {
  if (precision == gk::kDoubleDigits && gk::parse_double(lambda) > 3.0) {
    throw UsageError("lambda > 3 requires --precision above 17");
  }
}

struct Options {
  std::string space, points_file, lambda = "1", target, output, certificate_file, n_list = "4,8,16,32", mu = "20", r = "0";
  int n = 4, max_n = 64, precision = 0, dim = 3, trials = 200, points = 10, pairs = 1000;
  double scale = 1.0;
  std::uint64_t seed = 1;
};

int cmd_pd_check(const Options& o) {
  const gk::PointSet set = gk::point_set_from_json(gk::parse_json_text(gk::read_text_file(o.points_file), o.points_file));
  gk::SpaceDescriptor space = set.space;
  if (!o.space.empty()) {
    space = gk::parse_space(o.space);
    if (!(space == set.space)) {
      throw std::invalid_argument("space: --space " + gk::describe(space) + " does not match file space " +
                                  gk::describe(set.space));
    }
  }
  const double lambda = gk::parse_double(o.lambda);
  const auto pts = set.points();
  const gk::GramMatrix k = gk::gram(space, pts, gk::KernelParam::from_lambda(lambda));
  const gk::SpectrumReport spectrum = gk::jacobi_eigenvalues(k.entries);
  const gk::PdVerdict v = gk::pd_verdict(spectrum, 1.0);
  const json inputs = {{"space", gk::describe(space)}, {"lambda", lambda}, {"points", o.points_file}, {"order", k.order()}};
  const json outputs = {{"verdict", gk::to_string(v.verdict)},
                        {"min_eigenvalue", v.min_eigenvalue},
                        {"tolerance", v.tolerance},
                        {"spectrum", gk::spectrum_to_json(spectrum)}};
  emit(dump(gk::run_report("pd-check", inputs, outputs)), o.output);
  return v.verdict == gk::Verdict::not_psd ? kNotPsd : kOk;
}

int cmd_circle_spectrum(const Options& o) {
  require_positive_lambda(o.lambda);
  require_precision_for(o.lambda, o.precision);
  const auto w = gk::circle_spectrum(o.lambda, o.n, o.scale, o.precision);
  gk::CsvWriter csv({"j", "w_j"});
  for (std::size_t j = 0; j < w.size(); ++j) csv.row({std::to_string(j), text_of(w[j], o.precision)});
  emit(csv.str(), o.output);
  return kOk;
}

int cmd_witness_circle(const Options& o) {
  require_positive_lambda(o.lambda);
  require_precision_for(o.lambda, o.precision);
  const gk::CircleWitnessReport report = gk::circle_witness(o.lambda, o.max_n, o.precision);
  if (!report.certificate) {
    std::cerr << "no certificate for lambda " << o.lambda << " with N <= " << o.max_n << ": " << report.note << "\n";
    return kExhausted;
  }
  emit(dump(gk::to_json(*report.certificate)), o.output);
  return kOk;
}

int cmd_witness_space(const Options& o) {
  require_positive_lambda(o.lambda);
  const gk::SpaceDescriptor target = gk::parse_space(o.target);
  const gk::EmbeddingMap map = gk::embedding_for(target);
  const double s = map.source.scale;

  // The witness search runs on the unit circle at lambda * s^2, which yields
  // the same Gram as lambda on Circle{s}.
  std::string unit_lambda;
  {
    gk::ScopedPrecision guard(std::max(o.precision, gk::kDefaultPrecisionDigits));
    const gk::HighFloat v = gk::parse_high(o.lambda, o.precision) * gk::HighFloat(s) * gk::HighFloat(s);
    unit_lambda = text_of(v, o.precision);
  }
  require_precision_for(unit_lambda, o.precision);
  const gk::WitnessSearch search = gk::find_witness_n(unit_lambda, o.max_n, o.precision);
  if (!search.found) {
    std::cerr << "no circle witness for unit-circle lambda " << unit_lambda << " with N <= " << o.max_n << "\n";
    return kExhausted;
  }
  gk::WitnessCertificate source;
  try {
    source = gk::build_circle_certificate(o.lambda, search.n, s, o.precision);
  } catch (const gk::CertificateRefused& e) {
    std::cerr << "witness below certification threshold: " << e.what() << "\n";
    return kExhausted;
  }
  emit(dump(gk::to_json(gk::transfer_witness(source, map))), o.output);
  return kOk;
}

int cmd_lambda_profile(const Options& o) {
  const auto ns = parse_int_list(o.n_list);
  const gk::LambdaProfile profile = gk::lambda_profile(ns, o.precision);
  gk::CsvWriter csv({"N", "lambda_crit", "min_eig_at_probe"});
  for (const auto& row : profile) {
    csv.row({std::to_string(row.n), gk::format_double(row.lambda_crit), gk::format_double(row.min_eig_at_probe)});
  }
  emit(csv.str(), o.output);
  return kOk;
}

int cmd_theta(const Options& o) {
  gk::ScopedPrecision guard(o.precision);
  const gk::PartialThetaQuery q{gk::parse_high(o.mu, o.precision), gk::parse_high(o.r, o.precision), o.n, o.precision};
  const gk::PartialThetaResult res = gk::partial_theta(q);
  gk::CsvWriter csv({"mu", "r", "N", "value", "truncation_bound", "precision"});
  csv.row({o.mu, o.r, std::to_string(o.n), gk::format_high(res.value, o.precision),
           gk::format_high(res.truncation_bound, 3), std::to_string(o.precision)});
  emit(csv.str(), o.output);
  return kOk;
}

int cmd_bound_check(const Options& o) {
  const auto ns = parse_int_list(o.n_list);
  gk::ScopedPrecision guard(o.precision);
  const gk::HighFloat mu = gk::parse_high(o.mu, o.precision);
  gk::CsvWriter csv({"mu", "N", "w_half", "bound_rhs", "leading_term", "holds"});
  bool all = true;
  for (int n : ns) {
    const gk::HighFloat w = gk::w_half(mu, n, o.precision);
    const gk::HighFloat b = gk::bound_rhs(mu, n, o.precision);
    const gk::HighFloat lead = gk::leading_term(mu, n);
    const bool holds = w <= b;
    all = all && holds;
    csv.row({o.mu, std::to_string(n), text_of(w, o.precision), text_of(b, o.precision), text_of(lead, o.precision),
             holds ? "true" : "false"});
  }
  emit(csv.str(), o.output);
  return all ? kOk : kError;
}

int cmd_stein_scan(const Options& o) {
  gk::SteinProbeOptions opt;
  opt.n = o.dim;
  opt.lambda = gk::parse_double(o.lambda);
  opt.trials = o.trials;
  opt.points_per_trial = o.points;
  opt.seed = o.seed;
  const gk::SteinProbeReport r = gk::stein_probe(opt);
  json outputs = {{"lambda", r.lambda},
                  {"in_set", r.in_set},
                  {"trials_run", r.trials_run},
                  {"min_eig_seen", r.min_eig_seen},
                  {"min_eig_trial", r.min_eig_trial},
                  {"min_eig_strategy", r.min_eig_strategy},
                  {"result", r.witness ? "witness" : "no witness within budget"}};
  if (r.witness) outputs["witness"] = gk::to_json(*r.witness);
  const json inputs = {{"dim", o.dim}, {"lambda", opt.lambda}, {"trials", o.trials}, {"points", o.points}};
  emit(dump(gk::run_report("stein-scan", inputs, outputs, o.seed)), o.output);
  return r.witness ? kOk : kExhausted;
}

int cmd_embed_verify(const Options& o) {
  const gk::EmbeddingMap map = gk::embedding_for(gk::parse_space(o.target));
  const double dev = gk::verify_isometry(map, o.pairs, o.seed);
  emit("max_deviation " + gk::format_double(dev) + "\n", o.output);
  return dev <= 1e-10 ? kOk : kError;
}

int cmd_verify(const Options& o) {
  const json j = gk::parse_json_text(gk::read_text_file(o.certificate_file), o.certificate_file);
  const gk::WitnessCertificate cert = gk::certificate_from_json(j);
  const gk::VerifyResult r = gk::verify_certificate(cert);
  const json outputs = {{"ok", r.ok}, {"recomputed", r.recomputed}, {"stored", cert.quad_form}, {"detail", r.detail}};
  emit(dump(gk::run_report("verify-certificate", {{"file", o.certificate_file}}, outputs)), o.output);
  if (!r.ok) std::cerr << "verification failed: " << r.detail << "\n";
  return r.ok ? kOk : kError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gaussian kernel positive definiteness on metric spaces"};
  app.require_subcommand(1);
  Options o;
  try {
    o.precision = gk::default_precision_digits();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }

  auto add_output = [&](CLI::App* c) { c->add_option("-o,--output", o.output, "Write to FILE instead of stdout"); };
  auto add_precision = [&](CLI::App* c) {
    c->add_option("--precision", o.precision, "Decimal digits (17 = IEEE double)")->check(CLI::Range(17, 100));
  };

  auto* pd = app.add_subcommand("pd-check", "Gram spectrum and PD verdict for a point set");
  pd->add_option("--space", o.space, "Space descriptor, e.g. euclidean:3");
  pd->add_option("--points", o.points_file, "Point-set JSON file")->required();
  pd->add_option("--lambda", o.lambda, "Bandwidth")->required();
  add_output(pd);

  auto* cs = app.add_subcommand("circle-spectrum", "All circulant eigenvalues of an equispaced circle Gram");
  cs->add_option("--lambda", o.lambda)->required();
  cs->add_option("--n", o.n, "Number of points")->required()->check(CLI::Range(2, 1 << 16));
  cs->add_option("--scale", o.scale, "Circle scale");
  add_precision(cs);
  add_output(cs);

  auto* wit = app.add_subcommand("witness", "Non-PD witness certificates");
  wit->require_subcommand(1);
  auto* wc = wit->add_subcommand("circle", "Witness on the unit circle");
  wc->add_option("--lambda", o.lambda)->required();
  wc->add_option("--max-n", o.max_n, "Largest N to scan")->check(CLI::Range(4, 1 << 16));
  add_precision(wc);
  add_output(wc);
  auto* ws = wit->add_subcommand("space", "Circle witness transferred through an isometric embedding");
  ws->add_option("--target", o.target, "sphere:n, projective:n, grassmann:k,n or torus")->required();
  ws->add_option("--lambda", o.lambda)->required();
  ws->add_option("--max-n", o.max_n)->check(CLI::Range(4, 1 << 16));
  add_precision(ws);
  add_output(ws);

  auto* lp = app.add_subcommand("lambda-profile", "Critical bandwidth per N");
  lp->add_option("--n-list", o.n_list, "Comma-separated N values, each a multiple of 4");
  add_precision(lp);
  add_output(lp);

  auto* th = app.add_subcommand("theta", "Partial theta sum S_r(N)");
  th->add_option("--mu", o.mu)->required();
  th->add_option("--r", o.r);
  th->add_option("--n", o.n)->required();
  add_precision(th);
  add_output(th);

  auto* bc = app.add_subcommand("bound-check", "Middle eigenvalue against its upper bound and leading term");
  bc->add_option("--mu", o.mu)->required();
  bc->add_option("--n-list", o.n_list)->required();
  add_precision(bc);
  add_output(bc);

  auto* st = app.add_subcommand("stein-scan", "Search for Stein-kernel violations on SPD matrices");
  st->add_option("--dim", o.dim)->check(CLI::Range(1, 64));
  st->add_option("--lambda", o.lambda)->required();
  st->add_option("--trials", o.trials)->check(CLI::PositiveNumber);
  st->add_option("--points", o.points)->check(CLI::Range(2, 4096));
  st->add_option("--seed", o.seed);
  add_output(st);

  auto* ev = app.add_subcommand("embed-verify", "Maximum isometry deviation of a circle embedding");
  ev->add_option("--target", o.target)->required();
  ev->add_option("--pairs", o.pairs)->check(CLI::PositiveNumber);
  ev->add_option("--seed", o.seed);
  add_output(ev);

  auto* vc = app.add_subcommand("verify-certificate", "Recompute a certificate's quadratic form from its raw data");
  vc->add_option("file", o.certificate_file, "Certificate JSON")->required();
  add_output(vc);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (*pd) return cmd_pd_check(o);
    if (*cs) return cmd_circle_spectrum(o);
    if (*wc) return cmd_witness_circle(o);
    if (*ws) return cmd_witness_space(o);
    if (*lp) return cmd_lambda_profile(o);
    if (*th) return cmd_theta(o);
    if (*bc) return cmd_bound_check(o);
    if (*st) return cmd_stein_scan(o);
    if (*ev) return cmd_embed_verify(o);
    if (*vc) return cmd_verify(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
