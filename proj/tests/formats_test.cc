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


#include "specaug/formats.h"

#include <gtest/gtest.h>

#include <cstring>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "specaug/errors.h"
#include "test_util.h"

namespace specaug {
namespace {

ErrorCode ReadError(const std::vector<std::uint8_t>& bytes) {
  try {
    ReadSgram(bytes);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "read succeeded";
  return ErrorCode::kIo;
}

std::vector<std::uint8_t> PgmPixels(const std::vector<std::uint8_t>& pgm, int tau, int nu) {
  const std::string header = "P5\n" + std::to_string(tau) + " " + std::to_string(nu) + "\n255\n";
  EXPECT_EQ(std::string(pgm.begin(), pgm.begin() + header.size()), header);
  EXPECT_EQ(pgm.size(), header.size() + static_cast<std::size_t>(tau) * nu);
  return {pgm.begin() + header.size(), pgm.end()};
}

TEST(SgramTest, MinimalFileLayout) {
  const Spectrogram s(1, 1, {0.0f});
  const auto bytes = WriteSgram(s);
  const std::vector<std::uint8_t> expected = {'S', 'G', 'R', 'M', 1, 0, 0, 0, 1, 0,
                                              0,   0,   1,   0,   0, 0, 0, 0, 0, 0};
  EXPECT_EQ(bytes, expected);
  EXPECT_TRUE(ReadSgram(bytes).BitwiseEquals(s));
}

TEST(SgramTest, LittleEndianPayload) {
  const auto bytes = WriteSgram(Spectrogram(1, 2, {1.0f, -2.0f}));
  const std::vector<std::uint8_t> payload(bytes.begin() + 16, bytes.end());
  EXPECT_EQ(payload, (std::vector<std::uint8_t>{0, 0, 0x80, 0x3f, 0, 0, 0, 0xc0}));
}

TEST(SgramTest, RandomRoundTrip) {
  std::mt19937_64 gen(1);
  const Spectrogram s = testing::RandomSpectrogram(37, 128, gen);
  const auto bytes = WriteSgram(s);
  EXPECT_EQ(bytes.size(), 16u + 4u * 37 * 128);
  EXPECT_TRUE(ReadSgram(bytes).BitwiseEquals(s));
  EXPECT_EQ(WriteSgram(ReadSgram(bytes)), bytes);
}

TEST(SgramTest, ZeroFramesRoundTrip) {
  const Spectrogram s(0, 5);
  const auto bytes = WriteSgram(s);
  EXPECT_EQ(bytes.size(), 16u);
  EXPECT_EQ(ReadSgram(bytes).nu(), 5);
}

TEST(SgramTest, ErrorPaths) {
  const auto good = WriteSgram(Spectrogram(2, 3));
  auto magic = good;
  std::memcpy(magic.data(), "XXXX", 4);
  EXPECT_EQ(ReadError(magic), ErrorCode::kBadMagic);
  auto version = good;
  version[4] = 2;
  EXPECT_EQ(ReadError(version), ErrorCode::kUnsupportedVersion);
  auto shorter = good;
  shorter.pop_back();
  EXPECT_EQ(ReadError(shorter), ErrorCode::kSizeMismatch);
  auto longer = good;
  longer.push_back(0);
  EXPECT_EQ(ReadError(longer), ErrorCode::kSizeMismatch);
  auto huge = good;
  for (int i = 8; i < 16; ++i) huge[i] = 0xff;
  EXPECT_EQ(ReadError(huge), ErrorCode::kSizeMismatch);
  auto nan = good;
  nan[18] = 0xc0;
  nan[19] = 0x7f;
  EXPECT_EQ(ReadError(nan), ErrorCode::kNonFinite);
  EXPECT_EQ(ReadError({'S', 'G'}), ErrorCode::kBadMagic);
  EXPECT_EQ(ReadError({'S', 'G', 'R', 'M', 1, 0}), ErrorCode::kSizeMismatch);
}

TEST(PgmTest, TwoByTwoLinearMap) {
  const Spectrogram s(2, 2, {0, 1, 2, 3});
  const auto px = PgmPixels(RenderPgm(s), 2, 2);
  // Row 0 is channel 1: frames (0, 1) -> values (1, 3).
  EXPECT_EQ(px, (std::vector<std::uint8_t>{85, 255, 0, 170}));
}

TEST(PgmTest, ConstantMapsToMidGray) {
  Spectrogram s(5, 3);
  for (float& v : s.mutable_values()) v = -4.0f;
  for (auto p : PgmPixels(RenderPgm(s), 5, 3)) EXPECT_EQ(p, 128);
}

TEST(PgmTest, MaskedFrameRendersBlackColumn) {
  std::mt19937_64 gen(2);
  Spectrogram s = testing::RandomSpectrogram(20, 16, gen, 0.0f, 5.0f);
  for (int t = 6; t < 9; ++t) {
    for (int f = 0; f < 16; ++f) s.at(t, f) = -1.0f;
  }
  const auto px = PgmPixels(RenderPgm(s), 20, 16);
  for (int row = 0; row < 16; ++row) {
    for (int t = 6; t < 9; ++t) EXPECT_EQ(px[row * 20 + t], 0);
    EXPECT_GT(px[row * 20 + 5], 0);
  }
}

TEST(PgmTest, EmptyInputRejected) { EXPECT_THROW(RenderPgm(Spectrogram(0, 4)), Error); }

TEST(CsvTest, RoundTripBitExact) {
  std::mt19937_64 gen(3);
  const Spectrogram s = testing::RandomSpectrogram(9, 7, gen);
  const std::string csv = WriteCsv(s);
  EXPECT_EQ(csv.substr(0, 4), "9,7\n");
  EXPECT_TRUE(ReadCsv(csv).BitwiseEquals(s));
}

TEST(CsvTest, RejectsMalformedText) {
  EXPECT_THROW(ReadCsv("2,2\n1,2\n"), Error);
  EXPECT_THROW(ReadCsv("1,2\n1,x\n"), Error);
  EXPECT_THROW(ReadCsv("1,2\n1,2,3\n"), Error);
  EXPECT_THROW(ReadCsv("1,1\nnan\n"), Error);
}

}  // namespace
}  // namespace specaug
