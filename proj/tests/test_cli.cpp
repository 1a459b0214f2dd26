// Copyright 2026 The tensorperm Authors
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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "cli_table.hpp"
#include "tensorperm/matrix_io.hpp"

namespace tensorperm {
namespace {

using testing::run_cli;

std::string join(const std::vector<std::string>& args) {
  std::string s;
  for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
  return s;
}

std::filesystem::path temp_file(const std::string& name,
                                const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << contents;
  return path;
}

TEST(Cli, GenPerm) {
  const auto r = run_cli({"gen", "--dims", "3,2", "--sigma", "2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6\n1 3 5 2 4 6\n");
  EXPECT_EQ(run_cli({"gen", "--dims", "2,2,2", "--sigma", "3,2,1"}).out,
            "8\n1 5 3 7 2 6 4 8\n");
}

TEST(Cli, GenMatrixMarketReparses) {
  const auto r =
      run_cli({"gen", "--dims", "3,5", "--sigma", "2,1", "--format", "mm"});
  ASSERT_EQ(r.code, 0);
  std::istringstream in(r.out);
  EXPECT_EQ(read_matrix_market(in),
            build_delta(TensorPermSpec::commutation(3, 5)));
}

TEST(Cli, GenToFile) {
  const auto path = std::filesystem::temp_directory_path() / "tpm_gen.txt";
  const auto r = run_cli({"gen", "--dims", "3,2", "--sigma", "2,1",
                          "--format", "dense", "--output", path.string()});
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
  EXPECT_EQ(text.substr(0, 12), "1 0 0 0 0 0\n");
  std::filesystem::remove(path);
}

TEST(Cli, VerifyPasses) {
  for (const auto& [dims, sigma] :
       std::vector<std::pair<std::string, std::string>>{
           {"3,2", "2,1"}, {"2,2,2", "3,2,1"}, {"2,3,4", "2,3,1"},
           {"5,1", "1,2"}, {"7", "1"}}) {
    const auto r = run_cli({"verify", "--dims", dims, "--sigma", sigma});
    EXPECT_EQ(r.code, 0) << dims << " " << sigma << "\n" << r.out;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("PASS transpose duality"), std::string::npos);
  }
}

TEST(Cli, VerifySkipsLargeConjugation) {
  const auto r = run_cli({"verify", "--dims", "40,40", "--sigma", "2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("SKIP matrix conjugation"), std::string::npos);
}

TEST(Cli, ClassifyOrderTwelve) {
  const auto r = run_cli({"classify", "--order", "12"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "order=12\n"
            "1⊗12 identity\n"
            "12⊗1 identity (= 1⊗12)\n"
            "2⊗6\n6⊗2\n3⊗4\n4⊗3\n");
}

TEST(Cli, ClassifyPrimeAndUnitOrders) {
  EXPECT_EQ(run_cli({"classify", "--order", "7"}).out,
            "order=7\n1⊗7 identity\n7⊗1 identity (= 1⊗7)\n");
  EXPECT_EQ(run_cli({"classify", "--order", "1"}).out,
            "order=1\n1⊗1 identity\n");
}

TEST(Cli, ClassifyInputFile) {
  std::ostringstream mm;
  write_matrix_market(mm, build_delta(TensorPermSpec::commutation(3, 4)));
  const auto path = temp_file("tpm_classify.mtx", mm.str());
  const auto r = run_cli({"classify", "--input", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3⊗4\n");

  std::ostringstream other;
  write_matrix_market(
      other, matmul(build_delta(TensorPermSpec::commutation(2, 6)),
                    build_delta(TensorPermSpec::commutation(4, 3))));
  const auto path2 = temp_file("tpm_classify2.mtx", other.str());
  EXPECT_EQ(run_cli({"classify", "--input", path2.string()}).out,
            "not a tensor commutation matrix\n");
  std::filesystem::remove(path);
  std::filesystem::remove(path2);
}

TEST(Cli, DecomposePauli) {
  const auto r = run_cli({"decompose", "--n", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "n=2\nc00=0.5\nterms=3\n"
            "1 1 0.5 0\n2 2 0.5 0\n3 3 0.5 0\n");
}

TEST(Cli, DecomposeGellMann) {
  const auto r = run_cli({"decompose", "--n", "3"});
  EXPECT_EQ(r.code, 0);
  std::string expect = "n=3\nc00=0.3333333333\nterms=8\n";
  for (int a = 1; a <= 8; ++a) {
    expect += std::to_string(a) + " " + std::to_string(a) + " 0.5 0\n";
  }
  EXPECT_EQ(r.out, expect);
}

TEST(Cli, DecomposeFour) {
  const auto r = run_cli({"decompose", "--n", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("c00=0.25\nterms=15\n"), std::string::npos);
}

TEST(Cli, ApplyFromFile) {
  const auto path = temp_file("tpm_apply.txt", "1 2 3\n4 5 6\n");
  const auto r = run_cli({"apply", "--dims", "3,2", "--sigma", "2,1",
                          "--input", path.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1\n3\n5\n2\n4\n6\n");

  const auto floats = temp_file("tpm_apply2.txt", "0.5 -1e3 2.25 7\n");
  EXPECT_EQ(run_cli({"apply", "--dims", "2,2", "--sigma", "2,1", "--input",
                     floats.string()})
                .out,
            "0.5\n2.25\n-1e3\n7\n");

  const auto bad = temp_file("tpm_apply3.txt", "1 2 three 4\n");
  EXPECT_EQ(run_cli({"apply", "--dims", "2,2", "--sigma", "2,1", "--input",
                     bad.string()})
                .code,
            tpm::exit_code::kUsage);
  const auto wrong_len = temp_file("tpm_apply4.txt", "1 2 3\n");
  EXPECT_EQ(run_cli({"apply", "--dims", "2,2", "--sigma", "2,1", "--input",
                     wrong_len.string()})
                .code,
            tpm::exit_code::kUsage);
  for (const auto& p : {path, floats, bad, wrong_len}) {
    std::filesystem::remove(p);
  }
}

TEST(Cli, BenchReportsBothTimings) {
  const auto r = run_cli({"bench", "--dims", "16,16", "--reps", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("speedup: "), std::string::npos);
  EXPECT_NE(r.out.find("bench dims=16,16 implicit_ns="), std::string::npos);
}

TEST(Cli, BenchSkipsDenseAboveBound) {
  const auto r = run_cli({"bench", "--dims", "512,512", "--reps", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("dense matvec: skipped: exceeds dense bound "
                       "(262144 > 4096)"),
            std::string::npos);
  EXPECT_NE(r.out.find("dense_ns=skipped"), std::string::npos);
}

TEST(Cli, ExitCodeTable) {
  for (const auto& c : testing::exit_code_table()) {
    const auto r = run_cli(c.args);
    EXPECT_EQ(r.code, c.expected) << join(c.args) << "\n" << r.err;
  }
}

TEST(Cli, ErrorsGoToStderr) {
  const auto r = run_cli({"gen", "--dims", "3,2", "--sigma", "1,1"});
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("sigma is not a permutation"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  const std::vector<std::vector<std::string>> cmds{
      {"gen", "--dims", "2,3,2", "--sigma", "3,1,2", "--format", "mm"},
      {"verify", "--dims", "3,3", "--sigma", "2,1"},
      {"decompose", "--n", "4"},
  };
  for (const auto& args : cmds) {
    EXPECT_EQ(run_cli(args).out, run_cli(args).out) << join(args);
  }
}

}  // namespace
}  // namespace tensorperm
