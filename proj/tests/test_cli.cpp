// Copyright 2026 The hoq Authors
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

#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <random>
#include <sstream>

#include "hoq/io.hpp"
#include "hoq/processes.hpp"
#include "test_support.hpp"

namespace hoq {
namespace {

namespace fs = std::filesystem;

struct CliResult {
  int rc = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv("HOQ_CONFIG");
    std::random_device rd;
    dir_ = fs::temp_directory_path() / ("hoq_cli_" + std::to_string(rd()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name) const { return (dir_ / name).string(); }

  // Arguments are passed through the shell verbatim; quote them at the call site.
  CliResult run(const std::string& args, bool merge_stderr = false) const {
    std::string cmd = std::string(HOQ_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    CliResult r;
    FILE* p = popen(cmd.c_str(), "r");
    if (p == nullptr) return r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, got);
    const int status = pclose(p);
    r.rc = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  static std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string l;
    while (std::getline(in, l)) out.push_back(l);
    return out;
  }

  fs::path dir_;
};

double max_abs(const CMatrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST_F(Cli, LambdaOfBistochasticChannel) {
  CliResult r = run("--registry A=2,B=2 lambda '(^A -> ^B)'");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out, "1/2\n");
}

TEST_F(Cli, DeltaPatterns) {
  CliResult r = run("--registry A=2,B=2 delta '(^A -> ^B)'");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(lines(r.out), (std::vector<std::string>{"A:T B:T"}));
  r = run("--registry A=2,B=2 delta '((^A -> ^B) -> I)'");
  EXPECT_EQ(r.rc, 0);
  auto got = lines(r.out);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<std::string>{"A:I B:T", "A:T B:I"}));
}

TEST_F(Cli, DeltaJson) {
  CliResult r = run("--json --registry A=2,B=3 delta '(A -> B)' --hierarchy standard");
  ASSERT_EQ(r.rc, 0);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["lambda"], "1/3");
  EXPECT_EQ(j["systems"].size(), 2u);
}

TEST_F(Cli, ParseAndValidationErrorsExitTwo) {
  CliResult r = run("--registry A=2,B=2 lambda '(A -> B'", true);
  EXPECT_EQ(r.rc, 2);
  EXPECT_NE(r.out.find("error"), std::string::npos) << r.out;
  EXPECT_EQ(run("--registry A=2 lambda '(A -> Z)'").rc, 2);
  EXPECT_EQ(run("--registry A=2,B=3 lambda '(^A -> ^B)'").rc, 2);
  EXPECT_EQ(run("--registry A=2,B=2 --hierarchy standard lambda '(^A -> ^B)'").rc, 2);
  EXPECT_EQ(run("frobnicate").rc, 2);
}

TEST_F(Cli, ConfigFromEnvironment) {
  const std::string cfg = file("hoq.conf");
  write_file(cfg, "registry.A = 3\nregistry.B = 3\n");
  CliResult r = run("lambda '(^A -> ^B)'");
  EXPECT_EQ(r.rc, 2);
  r = run("--config " + cfg + " lambda '(^A -> ^B)'");
  EXPECT_EQ(r.out, "1/3\n");
  setenv("HOQ_CONFIG", cfg.c_str(), 1);
  r = run("lambda '(^A -> ^B)'");
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(r.out, "1/3\n");
  write_file(cfg, "registry.A = 3\nnonsense = 1\n");
  EXPECT_EQ(run("lambda '(^A -> ^A)'").rc, 2);
}

TEST_F(Cli, TimeFlipCheck) {
  const std::string tf = file("tf.json");
  ASSERT_EQ(run("make time-flip --d 2 -o " + tf).rc, 0);
  EXPECT_EQ(run("check " + tf).rc, 0);
  EXPECT_EQ(run("--registry A=2,B=2,P=4,F=4 check '((^A -> ^B) -> (P -> F))' " + tf).rc, 0);

  CliResult r = run("--json --registry A=2,B=2,P=4,F=4 --hierarchy standard check '((A -> B) -> (P -> F))' " +
              tf);
  EXPECT_EQ(r.rc, 1);
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["verdict"], "FAIL");
  ASSERT_FALSE(j["residual_components"].empty());
  for (const auto& c : j["residual_components"]) {
    const std::string p = c["pattern"];
    EXPECT_TRUE(p == "A:I B:T P:T F:I" || p == "A:I B:T P:I F:I") << p;
  }
}

TEST_F(Cli, CheckIoErrorsExitTwo) {
  write_file(file("empty.json"), "");
  EXPECT_EQ(run("--registry A=2 check A " + file("empty.json")).rc, 2);
  EXPECT_EQ(run("--registry A=2 check A " + file("missing.json")).rc, 2);
  write_file(file("wrong.json"), R"({"factors": [["A", 2]], "matrix": [[1]]})");
  EXPECT_EQ(run("--registry A=2 check A " + file("wrong.json")).rc, 2);
  write_file(file("notype.json"), R"({"factors": [["A", 2]], "matrix": [[0.5, 0], [0, 0.5]]})");
  EXPECT_EQ(run("check " + file("notype.json")).rc, 2);
  EXPECT_EQ(run("--registry A=2 check A " + file("notype.json")).rc, 0);
}

TEST_F(Cli, CheckAdmissible) {
  write_file(file("zero.json"), R"({"factors": [["A", 2], ["B", 2]], "matrix": [[0,0,0,0],[0,0,0,0],[0,0,0,0],[0,0,0,0]]})");
  EXPECT_EQ(run("--registry A=2,B=2 check --admissible '(A -> B)' " + file("zero.json")).rc, 0);
  write_file(file("neg.json"), R"({"factors": [["A", 2]], "matrix": [[-0.5, 0], [0, 0.5]]})");
  EXPECT_EQ(run("--registry A=2 check --admissible A " + file("neg.json")).rc, 1);
}

TEST_F(Cli, Lc23ClassifiesAsBistochOnly) {
  const std::string r2 = file("r2.json");
  ASSERT_EQ(run("make lc23 --n 2 -o " + r2).rc, 0);
  OperatorFile f = read_operator(r2);
  EXPECT_EQ(f.op.dim(), 16);
  EXPECT_NEAR(f.op.trace().real(), 4.0, 1e-12);
  EXPECT_EQ(max_abs(CMatrix(f.op.matrix().diagonal().asDiagonal()) - f.op.matrix()), 0.0);

  CliResult r = run("classify bsp2 " + r2);
  EXPECT_EQ(r.rc, 0);
  ASSERT_FALSE(r.out.empty());
  EXPECT_EQ(lines(r.out)[0], "BISTOCH_ONLY");
  EXPECT_NE(r.out.find("A1:T B1:T A2:I B2:T"), std::string::npos) << r.out;

  r = run("classify lc " + r2);
  EXPECT_EQ(r.rc, 0);
  EXPECT_EQ(lines(r.out)[0], "BISTOCH_ONLY");
}

TEST_F(Cli, ClassifyNeitherExitsOne) {
  write_operator(file("id.json"), LabeledOperator::identity({{"A1", 2}, {"B1", 2}, {"A2", 2}, {"B2", 2}}));
  CliResult r = run("--json classify lc " + file("id.json"));
  EXPECT_EQ(r.rc, 1);
  EXPECT_EQ(Json::parse(r.out)["verdict"], "NEITHER");
}

TEST_F(Cli, MakeIsDeterministicGivenSeed) {
  CliResult a = run("--seed 5 make random-bistoch --d 3 --k 2");
  CliResult b = run("--seed 5 make random-bistoch --d 3 --k 2");
  CliResult c = run("--seed 6 make random-bistoch --d 3 --k 2");
  EXPECT_EQ(a.rc, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, c.out);
  Json j = Json::parse(a.out);
  EXPECT_EQ(j["type"], "(^A -> ^B)");
  write_file(file("c.json"), a.out);
  EXPECT_EQ(run("check " + file("c.json")).rc, 0);
}

TEST_F(Cli, MakeEveryProcessPassesItsType) {
  for (const char* args : {"time-flip --d 2", "flip-switch --d 2", "lc23 --n 3", "lc22 --d 3 --x 0 --y 2",
                           "random-bistoch --d 2 --tail-in 2 --tail-out 3"}) {
    const std::string out = file("p.json");
    ASSERT_EQ(run(std::string("make ") + args + " -o " + out).rc, 0) << args;
    EXPECT_EQ(run("check " + out).rc, 0) << args;
  }
  EXPECT_EQ(run("make lc22 --d 2 --x 1 --y 1").rc, 2);
  EXPECT_EQ(run("make n-time-flip --n 3 --d 2").rc, 2);
}

TEST_F(Cli, NTimeFlipAsNetwork) {
  const std::string f = file("ntf.json");
  ASSERT_EQ(run("make n-time-flip --n 2 --d 2 -o " + f).rc, 0);
  const std::string spec =
      R"x('{"slot_types":["((^A1 -> ^B1) -> I)","((^A2 -> ^B2) -> I)"],"memories":[["P",8],"I",["F",8]]}')x";
  EXPECT_EQ(run("--registry A1=2,B1=2,A2=2,B2=2 check " + f + " --network-spec " + spec).rc, 0);
  const std::string bitooth =
      R"x('{"slot_types":["(^A1 -> ^B1)","(^A2 -> ^B2)"],"memories":[["P",8],"I",["F",8]]}')x";
  EXPECT_EQ(run("--registry A1=2,B1=2,A2=2,B2=2 check " + f + " --network-spec " + bitooth).rc, 1);
}

TEST_F(Cli, ComposeDecomposeRoundTrip) {
  int done = 0;
  for (int seed = 0; done < 3 && seed < 100; ++seed) {
    auto net = testing::random_network(seed);
    if (net.spec.slot_types.size() != 2) continue;
    ++done;
    write_file(file("bundle.json"), bundle_to_json({net.blocks, net.spec}).dump());
    write_file(file("spec.json"), spec_to_json(net.spec).dump());
    std::string reg;
    for (const auto& [l, d] : net.reg.entries()) {
      if (l == "I") continue;
      reg += (reg.empty() ? "" : ",") + l + "=" + std::to_string(d);
    }
    ASSERT_EQ(run("--registry " + reg + " compose " + file("bundle.json") + " -o " + file("r.json")).rc, 0);
    CliResult again = run("--registry " + reg + " compose " + file("bundle.json"));
    EXPECT_EQ(again.out, read_file(file("r.json")));
    ASSERT_EQ(run("--registry " + reg + " decompose " + file("r.json") + " --network-spec " +
                  file("spec.json") + " -o " + file("blocks.json.gz"))
                  .rc,
              0);
    ASSERT_EQ(run("--registry " + reg + " compose " + file("blocks.json.gz") + " -o " + file("r2.json")).rc,
              0);
    LabeledOperator r = read_operator(file("r.json")).op;
    LabeledOperator r2 = read_operator(file("r2.json")).op;
    EXPECT_EQ(r.factors(), r2.factors());
    EXPECT_LT(max_abs(r.matrix() - r2.matrix()), 1e-8) << "seed " << seed;
  }
  EXPECT_EQ(done, 3);
}

TEST_F(Cli, ComposeRejectsBadBlock) {
  auto net = testing::random_network(2);
  net.blocks[0] = net.blocks[0] * cd(3.0);
  write_file(file("bundle.json"), bundle_to_json({net.blocks, net.spec}).dump());
  std::string reg;
  for (const auto& [l, d] : net.reg.entries()) {
    if (l != "I") reg += (reg.empty() ? "" : ",") + l + "=" + std::to_string(d);
  }
  CliResult r = run("--registry " + reg + " compose " + file("bundle.json"), true);
  EXPECT_EQ(r.rc, 2);
  EXPECT_NE(r.out.find("block 1"), std::string::npos) << r.out;
}

TEST_F(Cli, ApplyFlip) {
  write_operator(file("id.json"), projector(max_entangled(2), {{"X", 2}, {"Y", 2}}));
  CMatrix rho(2, 2), omega(2, 2);
  rho << 0.7, cd(0.1, 0.2), cd(0.1, -0.2), 0.3;
  omega << 0.25, 0.0, 0.0, 0.75;
  write_operator(file("rho.json"), LabeledOperator({{"S", 2}}, rho));
  write_operator(file("omega.json"), LabeledOperator({{"C", 2}}, omega));
  ASSERT_EQ(run("apply-flip " + file("id.json") + " " + file("rho.json") + " " + file("omega.json") +
                " -o " + file("out.json"))
                .rc,
            0);
  LabeledOperator out = read_operator(file("out.json")).op;
  LabeledOperator expected =
      tensor_op(LabeledOperator({{"Ft", 2}}, rho), LabeledOperator({{"Fc", 2}}, omega));
  EXPECT_EQ(out.factors(), expected.factors());
  EXPECT_LT(max_abs(out.matrix() - expected.matrix()), 1e-12);
}

}  // namespace
}  // namespace hoq
