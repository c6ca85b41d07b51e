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

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " '" GEOKERNEL_CLI_PATH "' " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

double num(const json& j) { return j.is_string() ? std::stod(j.get<std::string>()) : j.get<double>(); }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("geokernel_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string witness_file() {
    const Result w = run("witness circle --lambda 0.1");
    EXPECT_EQ(w.code, 0);
    return write("cert.json", w.out);
  }

  fs::path dir_;
};

TEST_F(Cli, PdCheckVerdicts) {
  const auto pos = write("e.json", R"({"space": "euclidean:3", "points": [[0,0,0],[1,0,0],[0,2,1]]})");
  Result r = run("pd-check --space euclidean:3 --lambda 0.5 --points " + pos);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out).at("outputs").at("verdict"), "positive_definite");

  const auto circ = write("c.json", R"({"space": "circle:1", "points": [0, 1.5707963267948966, 3.141592653589793, 4.71238898038469]})");
  r = run("pd-check --lambda 0.1 --points " + circ);
  ASSERT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out).at("outputs").at("verdict"), "not_psd");

  EXPECT_EQ(run("pd-check --space sphere:2 --lambda 0.1 --points " + circ).code, 1);
}

TEST_F(Cli, WitnessRoundTripsThroughVerifier) {
  const Result w = run("witness circle --lambda 0.1");
  ASSERT_EQ(w.code, 0);
  const json cert = json::parse(w.out);
  EXPECT_EQ(cert.at("points").size(), 4u);
  EXPECT_NEAR(num(cert.at("quad_form")), -0.18997962224145059, 1e-12);
  EXPECT_EQ(cert.at("schema_version"), "1");

  const Result v = run("verify-certificate " + write("cert.json", w.out));
  ASSERT_EQ(v.code, 0);
  EXPECT_TRUE(json::parse(v.out).at("outputs").at("ok").get<bool>());
}

TEST_F(Cli, TamperedCertificatesFail) {
  const json cert = json::parse(std::ifstream(witness_file()));

  json t = cert;
  t["coefficients"][0] = num(t["coefficients"][0]) * 1.001;
  Result r = run("verify-certificate " + write("t1.json", t.dump()));
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(json::parse(r.out).at("outputs").at("detail").get<std::string>().find("mismatch"), std::string::npos);

  t = cert;
  t["quad_form"] = -num(t["quad_form"]);
  r = run("verify-certificate " + write("t2.json", t.dump()));
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(json::parse(r.out).at("outputs").at("detail"), "recomputed value negative, stored positive");

  t = cert;
  t["lambda"] = "0.01";
  EXPECT_EQ(run("verify-certificate " + write("t3.json", t.dump())).code, 1);

  t = cert;
  t["points"][2] = "not a number";
  EXPECT_EQ(run("verify-certificate " + write("t4.json", t.dump())).code, 1);
  EXPECT_EQ(run("verify-certificate " + write("t5.json", "{\"space\": ")).code, 1);
}

TEST_F(Cli, SearchExhaustedExitCode) {
  EXPECT_EQ(run("witness circle --lambda 1 --max-n 12 --precision 40").code, 3);
  EXPECT_EQ(run("witness circle --lambda 1 --max-n 40 --precision 40").code, 0);
}

TEST_F(Cli, CsvOutputs) {
  const Result b = run("bound-check --mu 39.47841760435743 --n-list 20,24");
  ASSERT_EQ(b.code, 0);
  EXPECT_EQ(b.out.rfind("mu,N,w_half,bound_rhs,leading_term,holds\n", 0), 0u);
  EXPECT_EQ(b.out.find('\r'), std::string::npos);
  EXPECT_EQ(std::count(b.out.begin(), b.out.end(), '\n'), 3);

  const Result p = run("lambda-profile --n-list 4,8");
  ASSERT_EQ(p.code, 0);
  EXPECT_EQ(p.out.find('\r'), std::string::npos);
}

TEST_F(Cli, DeterministicOutput) {
  EXPECT_EQ(run("stein-scan --dim 2 --lambda 0.5 --trials 20 --seed 7").out,
            run("stein-scan --dim 2 --lambda 0.5 --trials 20 --seed 7").out);
  EXPECT_EQ(run("witness space --target sphere:2 --lambda 0.1").out,
            run("witness space --target sphere:2 --lambda 0.1").out);
}

TEST_F(Cli, PrecisionEnvironment) {
  const Result lo = run("circle-spectrum --lambda 0.1 --n 4");
  const Result hi = run("circle-spectrum --lambda 0.1 --n 4", "GEOKERNEL_PRECISION=40");
  ASSERT_EQ(lo.code, 0);
  ASSERT_EQ(hi.code, 0);
  EXPECT_EQ(hi.out.rfind("j,w_j\n", 0), 0u);
  EXPECT_NE(hi.out.find("2,-1.899796222414505865858068002042299458"), std::string::npos);
  EXPECT_EQ(lo.out.find("2,-1.899796222414505865858068002042299458"), std::string::npos);
  EXPECT_EQ(run("circle-spectrum --lambda 0.1 --n 4", "GEOKERNEL_PRECISION=abc").code, 1);
  EXPECT_EQ(run("circle-spectrum --lambda 0.1 --n 4 --precision 5").code, 1);
}

TEST_F(Cli, EmbedVerifyAndHelp) {
  const Result e = run("embed-verify --target grassmann:2,4 --pairs 200");
  ASSERT_EQ(e.code, 0);
  EXPECT_EQ(e.out.rfind("max_deviation ", 0), 0u);
  EXPECT_EQ(run("--help").code, 0);
  EXPECT_EQ(run("no-such-command").code, 1);
}

}  // namespace
