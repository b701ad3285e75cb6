// Copyright 2026 The qsym Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "golden.hpp"
#include "qsym/serialize.hpp"

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using namespace qsym;
using qsym::testing::entry;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(QSYM_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

json run_json(const std::string& args) {
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << args;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, EmitQTranspositionExact) {
  const auto j = run_json("emit qtransposition --n 2 --i 1 --exact");
  EXPECT_EQ(j.at("object"), "qtransposition");
  EXPECT_EQ(j.at("backend"), "exact");
  EXPECT_TRUE(j.at("q").is_null());
  EXPECT_EQ(j.at("n_sites"), 2);
  EXPECT_EQ(operator_from_json<QScalar>(j), q_transposition(1, 2, ExactBackend{}));
  EXPECT_EQ(operator_from_json<QScalar>(j).at(1, 2), entry("q^-1/2"));
}

TEST(Cli, EmitQDickeExact) {
  const auto j = run_json("emit qdicke --n 3 --m 1 --exact");
  const auto s = state_from_json<QScalar>(j);
  EXPECT_EQ(s.amplitudes, qsym::testing::vec({"0", "0", "0", "q^-1/2", "0", "1", "q^1/2", "0"}));
  EXPECT_EQ(s.norm_sq, q_number(3));
}

TEST(Cli, EmitProjectorAtQ1IsSymmetrizer) {
  const auto j = run_json("emit projector --n 3 --q 1.0");
  const auto p = operator_from_json<double>(j);
  EXPECT_LT(residual(p, p.transpose()), 1e-15);
  EXPECT_LT(residual(p, projector(3, NumericBackend(1.0))), 1e-15);
}

TEST(Cli, EmitOtherObjects) {
  EXPECT_EQ(operator_from_json<QScalar>(run_json("emit qperm --n 3 --perm 2,3,1 --exact")),
            q_perm_rep(Permutation({2, 3, 1}), ExactBackend{}));
  const auto tau = run_json("emit qperm --n 3 --exact");
  EXPECT_EQ(tau.at("permutation"), json({3, 2, 1}));
  EXPECT_EQ(tau.at("diagram").at("m_counts"), json({-2, 0, 2}));
  EXPECT_EQ(operator_from_json<QScalar>(run_json("emit rmatrix --n 2 --i 1 --exact")),
            r_matrix_fundamental(ExactBackend{}));
  EXPECT_EQ(operator_from_json<QScalar>(run_json("emit hecke --n 3 --i 2 --exact")),
            hecke_generator(2, 3, ExactBackend{}));
  EXPECT_EQ(metric_from_json<QScalar>(run_json("emit metric --n 3 --exact")).diagonal,
            metric_matrix(3, ExactBackend{}).diagonal);
  EXPECT_EQ(operator_from_json<QScalar>(run_json("emit ctau --n 3 --exact")), c_tau(3, ExactBackend{}));
}

TEST(Cli, RationalQ) {
  const auto j = run_json("emit qtransposition --n 2 --i 1 --q 1/4");
  EXPECT_EQ(j.at("q"), 0.25);
  EXPECT_NEAR(operator_from_json<double>(j).at(1, 2), 2.0, 1e-15);
}

TEST(Cli, VerifyPasses) {
  for (const char* args : {"verify all --n 3 --exact", "verify hecke --n 4 --q 2", "verify metric --n 2 --q 1"}) {
    const auto r = run(args);
    EXPECT_EQ(r.code, 0) << args;
    const auto j = json::parse(r.out);
    EXPECT_TRUE(j.at("pass").get<bool>()) << args;
    EXPECT_TRUE(j.at("checks").is_array());
    EXPECT_FALSE(j.at("checks").empty());
    for (const auto& c : j.at("checks")) {
      EXPECT_TRUE(c.contains("identity_name"));
      EXPECT_TRUE(c.contains("q_values"));
      EXPECT_TRUE(c.contains("max_residual"));
    }
  }
}

TEST(Cli, Spectrum) {
  auto mult = [](const json& j) {
    std::map<int, int> out;
    for (const auto& s : j.at("sectors")) out[s.at("two_j").get<int>()] = s.at("multiplicity").get<int>();
    return out;
  };
  EXPECT_EQ(mult(run_json("spectrum --n 2 --q 1")), (std::map<int, int>{{2, 1}, {0, 1}}));
  EXPECT_EQ(mult(run_json("spectrum --n 4 --q 2")), (std::map<int, int>{{4, 1}, {2, 3}, {0, 2}}));
  EXPECT_EQ(mult(run_json("spectrum --n 1 --q 3")), (std::map<int, int>{{1, 1}}));
}

TEST(Cli, OtherFormats) {
  const auto csv = run("emit qtransposition --n 2 --i 1 --exact --format csv");
  EXPECT_EQ(csv.code, 0);
  EXPECT_NE(csv.out.find("1/1*s^-2"), std::string::npos);
  EXPECT_EQ(run("spectrum --n 3 --q 2 --format pretty").code, 0);
  EXPECT_EQ(run("verify dicke --n 3 --q 2 --format csv").code, 0);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run("emit banana --n 2").code, 2);
  EXPECT_EQ(run("emit qtransposition --n 2 --i 1 --q -1").code, 2);
  EXPECT_EQ(run("emit qtransposition --n 2 --i 1 --q abc").code, 2);
  EXPECT_EQ(run("emit qtransposition --n 2 --i 1 --format xml").code, 2);
  EXPECT_EQ(run("emit qtransposition --n 3 --i 3").code, 2);
  EXPECT_EQ(run("emit qdicke --n 3 --m 5").code, 2);
  EXPECT_EQ(run("verify nosuch --n 2").code, 2);
  EXPECT_EQ(run("emit qperm --n 3 --perm 1,1,2").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("emit metric").code, 2);
}

TEST(Cli, ResourceCapsExitThree) {
  EXPECT_EQ(run("emit projector --n 6 --exact --max-n 8").code, 3);
  EXPECT_EQ(run("emit projector --n 9 --q 2 --max-n 12").code, 3);
  EXPECT_EQ(run("emit metric --n 11 --q 2").code, 3);
  EXPECT_EQ(run("emit metric --n 4 --q 2 --max-n 3").code, 3);
  EXPECT_EQ(run("spectrum --n 11 --q 2 --max-n 12").code, 3);
}

TEST(Cli, Deterministic) {
  for (const char* args : {"emit projector --n 4 --exact", "verify all --n 4 --q 2", "spectrum --n 5 --q 0.5"}) {
    const auto a = run(args);
    const auto b = run(args);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << args;
  }
}

TEST(Cli, WritesOutFile) {
  const auto dir = std::filesystem::temp_directory_path() / "qsym_cli_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "metric.json";
  std::filesystem::remove(path);
  EXPECT_EQ(run("emit metric --n 2 --exact --out " + path.string()).code, 0);
  std::ifstream in(path);
  const auto j = json::parse(in);
  EXPECT_EQ(metric_from_json<QScalar>(j).diagonal, qsym::testing::vec({"1", "q^1/2", "q^-1/2", "1"}));
}
