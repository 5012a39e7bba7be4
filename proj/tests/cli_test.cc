// Copyright 2026 The dpvo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "dpvo/image.h"
#include "test_util.h"

namespace dpvo {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("dpvo_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
    std::mt19937_64 rng(1);
    WritePgmFile(testing::SmoothImage(120, 60, rng), Path("cover.pgm"));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  // Runs the tool; stdout goes to `out_`.
  int Run(const std::string& args) {
    const std::string log = Path("stdout.txt");
    const std::string cmd = std::string(DPVO_CLI_PATH) + " " + args + " > " +
                            log + " 2> " + Path("stderr.txt");
    const int status = std::system(cmd.c_str());
    std::ifstream in(log);
    std::stringstream ss;
    ss << in.rdbuf();
    out_ = ss.str();
    return WEXITSTATUS(status);
  }

  std::string Slurp(const std::string& name) const {
    std::ifstream in(Path(name), std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  std::string out_;
};

TEST_F(CliTest, EmbedExtractRoundTripsBytes) {
  {
    std::ofstream p(Path("msg.bin"), std::ios::binary);
    p << "hello, reversible world";
  }
  ASSERT_EQ(Run("embed --in " + Path("cover.pgm") + " --out " + Path("stego.pgm") +
                " --payload " + Path("msg.bin")),
            0);
  EXPECT_NE(out_.find("gross_bits=184\n"), std::string::npos);
  EXPECT_NE(out_.find("psnr_db="), std::string::npos);
  ASSERT_EQ(Run("extract --in " + Path("stego.pgm") + " --out " + Path("back.pgm") +
                " --payload " + Path("got.bin")),
            0);
  EXPECT_EQ(Slurp("back.pgm"), Slurp("cover.pgm"));
  EXPECT_EQ(Slurp("got.bin"), Slurp("msg.bin"));
}

TEST_F(CliTest, ZeroBitsAndDeterminism) {
  const std::string embed = "embed --in " + Path("cover.pgm") + " --random-bits 0";
  ASSERT_EQ(Run(embed + " --out " + Path("a.pgm")), 0);
  EXPECT_NE(out_.find("gross_bits=0\n"), std::string::npos);
  const std::string first = out_;
  ASSERT_EQ(Run(embed + " --out " + Path("b.pgm")), 0);
  EXPECT_EQ(out_, first);
  EXPECT_EQ(Slurp("a.pgm"), Slurp("b.pgm"));
}

TEST_F(CliTest, CapacityExceededWritesNothing) {
  EXPECT_EQ(Run("embed --in " + Path("cover.pgm") + " --out " + Path("s.pgm") +
                " --random-bits 1000000 --seed 1"),
            2);
  EXPECT_FALSE(fs::exists(Path("s.pgm")));
}

TEST_F(CliTest, ErrorExitCodes) {
  EXPECT_EQ(Run("extract --in " + Path("cover.pgm") + " --out " + Path("x.pgm")), 4);
  EXPECT_EQ(Run("extract --in " + Path("missing.pgm") + " --out " + Path("x.pgm")), 3);
  {
    std::ofstream bad(Path("bad.pgm"));
    bad << "P2\n1 1\n255\n0\n";
  }
  EXPECT_EQ(Run("embed --in " + Path("bad.pgm") + " --out " + Path("x.pgm") +
                " --random-bits 1"),
            3);
}

TEST_F(CliTest, ForwardOnlyContainer) {
  ASSERT_EQ(Run("embed --scheme forward-only --in " + Path("cover.pgm") + " --out " +
                Path("f.pgm") + " --random-bits 100 --seed 2"),
            0);
  EXPECT_NE(out_.find("bwd_bits=0\n"), std::string::npos);
  ASSERT_EQ(Run("extract --scheme forward-only --in " + Path("f.pgm") + " --out " +
                Path("f_back.pgm")),
            0);
  EXPECT_EQ(Slurp("f_back.pgm"), Slurp("cover.pgm"));
  ASSERT_EQ(Run("extract --in " + Path("f.pgm") + " --out " + Path("f_back2.pgm")), 0);
}

TEST_F(CliTest, VerifyCapacityStatsBench) {
  for (int seed = 1; seed <= 3; ++seed) {
    EXPECT_EQ(Run("verify --in " + Path("cover.pgm") + " --random-bits 200 --seed " +
                  std::to_string(seed)),
              0);
    EXPECT_NE(out_.find("verified=1"), std::string::npos);
  }
  ASSERT_EQ(Run("capacity --in " + Path("cover.pgm")), 0);
  EXPECT_NE(out_.find("overall_bits="), std::string::npos);
  EXPECT_NE(out_.find("net_max_bits="), std::string::npos);
  ASSERT_EQ(Run("stats --in " + Path("cover.pgm") + " --csv " + Path("s.csv")), 0);
  EXPECT_EQ(Slurp("s.csv").rfind("image,phase,region_pixels", 0), 0u);
  ASSERT_EQ(Run("bench --in " + Path("cover.pgm") + " --sizes 0,100,200"), 0);
  EXPECT_EQ(out_.rfind("image,bits,gross,net,psnr_fwd,psnr_two_phase\ncover,0,0,0,inf,inf\n", 0),
            0u);
  EXPECT_EQ(std::count(out_.begin(), out_.end(), '\n'), 4);
}

TEST_F(CliTest, LiScheme) {
  ASSERT_EQ(Run("embed --scheme li --in " + Path("cover.pgm") + " --out " +
                Path("li.pgm") + " --random-bits 50"),
            0);
  EXPECT_NE(out_.find("scheme=li"), std::string::npos);
  EXPECT_EQ(Run("extract --scheme li --in " + Path("li.pgm") + " --out " + Path("x.pgm")), 3);
  EXPECT_EQ(Run("verify --scheme li --in " + Path("cover.pgm") + " --random-bits 50"), 0);
  EXPECT_EQ(Run("capacity --scheme li --in " + Path("cover.pgm")), 0);
}

}  // namespace
}  // namespace dpvo
