// Copyright 2026 The pdakit Authors
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

#include "pdakit/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "pdakit/pda_io.hpp"

namespace pdakit {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("pdakit_cli_" + std::string(::testing::UnitTest::GetInstance()
                                            ->current_test_info()
                                            ->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  int run(const std::vector<std::string>& args) {
    out_.str("");
    err_.str("");
    return cli::run(args, out_, err_);
  }

  void write(const std::string& name, const std::string& text) {
    std::ofstream(path(name)) << text;
  }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

TEST_F(CliTest, ValidateAndParams) {
  write_pda_file(path("ex1.pda"), testing::reference_pda());
  EXPECT_EQ(run({"validate", path("ex1.pda")}), cli::kOk);
  EXPECT_EQ(out_.str(), "valid\n");
  EXPECT_EQ(run({"params", path("ex1.pda")}), cli::kOk);
  EXPECT_EQ(out_.str(), "K=4 F=4 Z=2 S=4 g=2 M/N=1/2 R=1/1\n");
}

TEST_F(CliTest, ValidateReportsWitness) {
  write("broken.pda", "pda v1\nK=2 F=2 Z=2 S=1\n* 1\n* 1\n");
  EXPECT_EQ(run({"validate", path("broken.pda")}), cli::kFailed);
  EXPECT_NE(out_.str().find("B: (1,2) (2,2)"), std::string::npos) << out_.str();
  EXPECT_EQ(run({"params", path("broken.pda")}), cli::kFailed);
}

TEST_F(CliTest, ParseErrorIsAFailure) {
  write("bad.pda", "pda v1\nK=2 F=2 Z=1 S=1\n* 1\n1 x\n");
  EXPECT_EQ(run({"validate", path("bad.pda")}), cli::kFailed);
  EXPECT_NE(err_.str().find("line 4, column 3"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}), cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}), cli::kUsage);
  EXPECT_EQ(run({"combine", "--mode", "bogus", "x", "-o", "y"}), cli::kUsage);
  EXPECT_EQ(run({"validate", path("missing.pda")}), cli::kUsage);
  EXPECT_EQ(run({"build", "--family", "disjoint-union", "--n", "3", "--a", "2",
                 "--b", "2", "-o", path("x.pda")}),
            cli::kUsage);
  EXPECT_EQ(run({"--help"}), cli::kOk);
}

TEST_F(CliTest, BuildWritesValidFiles) {
  EXPECT_EQ(run({"build", "--family", "restricted-combined", "--n", "4", "--a",
                 "1", "--b", "2", "--t", "1", "-o", path("rc.pda")}),
            cli::kOk);
  EXPECT_EQ(run({"params", path("rc.pda")}), cli::kOk);
  EXPECT_EQ(out_.str(), "K=12 F=4 Z=2 S=12 g=2 M/N=1/2 R=3/1\n");
  EXPECT_EQ(run({"build", "--family", "trivial", "-o", path("t.pda")}), cli::kOk);
  EXPECT_EQ(run({"build", "--family", "star", "--m", "3", "-o", path("s.pda")}),
            cli::kOk);
  EXPECT_EQ(run({"validate", path("s.pda")}), cli::kOk);
}

TEST_F(CliTest, CombineCycleOfTrivial) {
  ASSERT_EQ(run({"build", "--family", "trivial", "-o", path("trivial.pda")}), cli::kOk);
  ASSERT_EQ(run({"combine", "--mode", "cycle", "--m", "3", path("trivial.pda"),
                 "-o", path("out.pda")}),
            cli::kOk);
  EXPECT_EQ(run({"params", path("out.pda")}), cli::kOk);
  EXPECT_EQ(out_.str(), "K=6 F=6 Z=3 S=9 g=3 M/N=1/2 R=3/2\n");
}

TEST_F(CliTest, CombineOtherModes) {
  write_pda_file(path("half.pda"), testing::half_pda());
  write_pda_file(path("ex1.pda"), testing::reference_pda());
  ASSERT_EQ(run({"combine", "--mode", "same-colors", path("half.pda"),
                 path("half.pda"), "-o", path("same.pda")}),
            cli::kOk);
  EXPECT_EQ(run({"equiv", path("same.pda"), path("ex1.pda")}), cli::kOk);
  EXPECT_EQ(out_.str(), "equivalent\n");

  ASSERT_EQ(run({"combine", "--mode", "star", path("ex1.pda"), path("half.pda"),
                 "-o", path("star.pda")}),
            cli::kOk);
  EXPECT_EQ(run({"params", path("star.pda")}), cli::kOk);
  EXPECT_EQ(out_.str(), "K=16 F=8 Z=6 S=8 g=2 M/N=3/4 R=1/1\n");

  ASSERT_EQ(run({"build", "--family", "trivial", "-o", path("t.pda")}), cli::kOk);
  EXPECT_EQ(run({"combine", "--mode", "tensor", path("t.pda"), path("t.pda"),
                 "-o", path("tensor.pda")}),
            cli::kOk)
      << err_.str();
  EXPECT_EQ(run({"validate", path("tensor.pda")}), cli::kOk);
}

TEST_F(CliTest, Equiv) {
  write_pda_file(path("ex1.pda"), testing::reference_pda());
  write_pda_file(path("half.pda"), testing::half_pda());
  EXPECT_EQ(run({"equiv", path("ex1.pda"), path("half.pda")}), cli::kFailed);
  EXPECT_EQ(out_.str(), "inequivalent\n");
}

TEST_F(CliTest, SimulateExhaustive) {
  write_pda_file(path("ex1.pda"), testing::reference_pda());
  EXPECT_EQ(run({"simulate", path("ex1.pda"), "--files", "2", "--exhaustive"}),
            cli::kOk);
  const std::string text = out_.str();
  EXPECT_NE(text.find("(1,2,2,1) pass broadcasts=4"), std::string::npos);
  EXPECT_NE(text.find("16/16 demand vectors decoded"), std::string::npos);
}

TEST_F(CliTest, SimulateSingleDemandAndInvalid) {
  write_pda_file(path("ex1.pda"), testing::reference_pda());
  EXPECT_EQ(run({"simulate", path("ex1.pda"), "--files", "3", "--seed", "5",
                 "--demand", "3,1,2,3"}),
            cli::kOk);
  EXPECT_NE(out_.str().find("1/1 demand vectors"), std::string::npos);
  EXPECT_EQ(run({"simulate", path("ex1.pda"), "--files", "2", "--demand", "1,2"}),
            cli::kUsage);
  write("broken.pda", "pda v1\nK=2 F=2 Z=0 S=2\n1 2\n2 1\n");
  EXPECT_EQ(run({"simulate", path("broken.pda"), "--files", "2"}), cli::kFailed);
}

TEST_F(CliTest, Table) {
  EXPECT_EQ(run({"table", "VIII"}), cli::kOk);
  EXPECT_EQ(out_.str().substr(0, out_.str().find('\n')),
            "label,K,one_minus_MN,F,R,paper_value,divergence");
  EXPECT_EQ(out_.str().find('.'), std::string::npos);  // no floats by default
  EXPECT_EQ(run({"table", "V", "--estimate"}), cli::kOk);
  EXPECT_NE(out_.str().find("F_estimate"), std::string::npos);
  EXPECT_EQ(run({"table", "XI"}), cli::kUsage);
}

TEST_F(CliTest, RealBinary) {
  write_pda_file(path("ex1.pda"), testing::reference_pda());
  const std::string cmd = std::string(PDAKIT_CLI_PATH) + " validate " +
                          path("ex1.pda") + " > " + path("out.txt");
  const int status = std::system(cmd.c_str());
  EXPECT_EQ(WEXITSTATUS(status), 0);
  std::ifstream in(path("out.txt"));
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "valid");
}

}  // namespace
}  // namespace pdakit
