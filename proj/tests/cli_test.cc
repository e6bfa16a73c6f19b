// Copyright 2026 The SpecAug Toolkit Authors
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


#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "specaug/fixtures.h"
#include "specaug/formats.h"
#include "test_util.h"

namespace specaug::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = Run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / ("specaug_cli_" + std::string(info->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string WriteRandomSgram(const std::string& name, int tau, int nu, unsigned seed) {
    std::mt19937_64 gen(seed);
    WriteFileBytes(Path(name), WriteSgram(specaug::testing::RandomSpectrogram(tau, nu, gen)));
    return Path(name);
  }

  fs::path dir_;
};

TEST_F(CliTest, PolicyShowLibrispeechDouble) {
  const Result r = RunCli({"policy", "show", "librispeech-double"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out,
            "# librispeech-double: W=80 F=27 m_F=2 time=fixed m_T=2 T=100 fill=constant(0)\n"
            "warp_param=80\n"
            "freq_mask_param=27\n"
            "freq_mask_count=2\n"
            "time_mode=fixed\n"
            "time_mask_param=100\n"
            "time_mask_count=2\n"
            "multiplicity_ratio=0\n"
            "size_ratio=0\n"
            "multiplicity_cap=20\n"
            "fill_mode=constant\n"
            "fill_constant=0\n"
            "fill_sigma=0\n");
}

TEST_F(CliTest, PolicyFileAccepted) {
  WriteFileBytes(Path("p.txt"), std::vector<std::uint8_t>{'w', 'a', 'r', 'p', '_', 'p', 'a',
                                                          'r', 'a', 'm', '=', '5', '\n'});
  const Result r = RunCli({"policy", "show", Path("p.txt")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("W=5 F=0"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  const std::string in = WriteRandomSgram("a.sgram", 30, 128, 1);
  EXPECT_EQ(RunCli({"augment", in, "--policy", "nope", "--seed", "7", "--id", "u1", "-o",
                    Path("b.sgram")})
                .code,
            kExitUsage);
  EXPECT_EQ(RunCli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(RunCli({"render", in, "-o", Path("x.pgm"), "--bogus"}).code, kExitUsage);
  EXPECT_EQ(RunCli({}).code, kExitUsage);
  EXPECT_EQ(RunCli({"augment", in}).code, kExitUsage);
  EXPECT_EQ(RunCli({"--help"}).code, kExitOk);
  const Result bad = RunCli({"policy", "show", "nope"});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("librispeech-double"), std::string::npos);
}

TEST_F(CliTest, DataErrorsExitOne) {
  WriteFileBytes(Path("junk.sgram"), std::vector<std::uint8_t>{'X', 'X', 'X', 'X'});
  const Result r = RunCli({"render", Path("junk.sgram"), "-o", Path("x.pgm")});
  EXPECT_EQ(r.code, kExitDataError);
  EXPECT_NE(r.err.find("bad-magic"), std::string::npos) << r.err;
  EXPECT_EQ(RunCli({"render", Path("missing.sgram"), "-o", Path("x.pgm")}).code,
            kExitDataError);
}

TEST_F(CliTest, AugmentIsDeterministic) {
  const std::string in = WriteRandomSgram("a.sgram", 300, 128, 2);
  for (const char* out : {"b1.sgram", "b2.sgram"}) {
    ASSERT_EQ(RunCli({"augment", in, "--policy", "specaug-basic", "--seed", "7", "--id", "u1",
                      "-o", Path(out)})
                  .code,
              kExitOk);
  }
  EXPECT_EQ(ReadFileBytes(Path("b1.sgram")), ReadFileBytes(Path("b2.sgram")));
  EXPECT_NE(ReadFileBytes(Path("b1.sgram")), ReadFileBytes(in));
  ASSERT_EQ(RunCli({"augment", in, "--policy", "specaug-basic", "--seed", "7", "--id", "u2",
                    "-o", Path("b3.sgram")})
                .code,
            kExitOk);
  EXPECT_NE(ReadFileBytes(Path("b1.sgram")), ReadFileBytes(Path("b3.sgram")));
}

TEST_F(CliTest, StackUnstackRoundTrip) {
  const std::string in = WriteRandomSgram("a.sgram", 31, 128, 3);
  ASSERT_EQ(RunCli({"stack", in, "-o", Path("s.sgram")}).code, kExitOk);
  EXPECT_EQ(ReadSgram(ReadFileBytes(Path("s.sgram"))).tau(), 11);
  ASSERT_EQ(RunCli({"unstack", Path("s.sgram"), "--tau", "31", "--strict", "-o",
                    Path("u.sgram")})
                .code,
            kExitOk);
  EXPECT_EQ(ReadFileBytes(Path("u.sgram")), ReadFileBytes(in));
  EXPECT_EQ(RunCli({"unstack", Path("s.sgram"), "--tau", "40", "-o", Path("v.sgram")}).code,
            kExitDataError);
}

TEST_F(CliTest, CsvConversionRoundTrip) {
  const std::string in = WriteRandomSgram("a.sgram", 5, 6, 4);
  ASSERT_EQ(RunCli({"convert", in, "-o", Path("a.csv")}).code, kExitOk);
  ASSERT_EQ(RunCli({"convert", Path("a.csv"), "-o", Path("b.sgram")}).code, kExitOk);
  EXPECT_EQ(ReadFileBytes(Path("b.sgram")), ReadFileBytes(in));
}

TEST_F(CliTest, GenFixturesMatchesLibrary) {
  ASSERT_EQ(RunCli({"gen-fixtures", "-o", Path("fx")}).code, kExitOk);
  for (const auto& [name, bytes] : GenerateFixtures()) {
    EXPECT_EQ(ReadFileBytes(Path("fx/" + name)), bytes) << name;
  }
}

TEST_F(CliTest, MixWritesOutputsAndRecordsFailures) {
  std::string manifest;
  for (int i = 0; i < 4; ++i) {
    const std::string id = "u" + std::to_string(i);
    WriteRandomSgram(id + "c.sgram", 60, 128, 10 + i);
    WriteRandomSgram(id + "m.sgram", 60, 128, 20 + i);
    manifest += "{\"id\":\"" + id + "\",\"path\":\"" + id + "c.sgram\",\"source\":\"clean\"}\n";
    manifest += "{\"id\":\"" + id + "\",\"path\":\"" + id + "m.sgram\",\"source\":\"mtr\"}\n";
  }
  WriteFileBytes(Path("u2c.sgram"), std::vector<std::uint8_t>{1, 2, 3});
  WriteFileBytes(Path("u2m.sgram"), std::vector<std::uint8_t>{1, 2, 3});
  WriteFileBytes(Path("m.jsonl"), std::vector<std::uint8_t>(manifest.begin(), manifest.end()));
  const Result r = RunCli({"-q", "mix", "--manifest", Path("m.jsonl"), "--clean-fraction",
                           "0.8", "--policy", "specaug-basic", "--seed", "5", "--out-dir",
                           Path("out"), "--stack"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("entries=4 written=3"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("failures=1"), std::string::npos) << r.out;
  const auto lines = ReadFileBytes(Path("out/manifest.jsonl"));
  EXPECT_EQ(std::count(lines.begin(), lines.end(), '\n'), 3);

  const Result again = RunCli({"-q", "mix", "--manifest", Path("m.jsonl"), "--policy",
                               "specaug-basic", "--seed", "5", "--out-dir", Path("out2"),
                               "--stack"});
  ASSERT_EQ(again.code, kExitOk);
  for (const auto& e : fs::directory_iterator(Path("out"))) {
    EXPECT_EQ(ReadFileBytes(e.path().string()),
              ReadFileBytes(Path("out2/" + e.path().filename().string())));
  }
}

}  // namespace
}  // namespace specaug::cli
