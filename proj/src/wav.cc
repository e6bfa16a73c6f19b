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

#include "specaug/wav.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <string_view>

#include "specaug/errors.h"

namespace specaug {
namespace {

std::uint32_t ReadU32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) |
         (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

std::uint16_t ReadU16(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

bool TagIs(std::span<const std::uint8_t> b, std::size_t at,
           std::string_view tag) {
  return std::equal(tag.begin(), tag.end(), b.begin() + at,
                    [](char c, std::uint8_t u) {
                      return static_cast<std::uint8_t>(c) == u;
                    });
}

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

void PutU16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void PutTag(std::vector<std::uint8_t>& out, std::string_view tag) {
  out.insert(out.end(), tag.begin(), tag.end());
}

}  // namespace

AudioBuffer DecodeWav(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 12 || !TagIs(bytes, 0, "RIFF") || !TagIs(bytes, 8, "WAVE")) {
    throw Error(ErrorCode::kMalformedHeader, "not a RIFF/WAVE file");
  }
  bool have_fmt = false;
  AudioBuffer audio;
  std::size_t pos = 12;
  while (pos + 8 <= bytes.size()) {
    const std::uint32_t chunk_size = ReadU32(bytes, pos + 4);
    const std::size_t body = pos + 8;
    if (TagIs(bytes, pos, "fmt ")) {
      if (chunk_size < 16 || body + 16 > bytes.size()) {
        throw Error(ErrorCode::kMalformedHeader, "fmt chunk too short");
      }
      const std::uint16_t format = ReadU16(bytes, body);
      const std::uint16_t channels = ReadU16(bytes, body + 2);
      const std::uint32_t rate = ReadU32(bytes, body + 4);
      const std::uint16_t bits = ReadU16(bytes, body + 14);
      if (format != 1) {
        throw Error(ErrorCode::kUnsupportedFormat,
                    "unsupported WAV codec " + std::to_string(format) +
                        " (only PCM is supported)");
      }
      if (channels != 1) {
        throw Error(ErrorCode::kUnsupportedFormat,
                    "unsupported channel count " + std::to_string(channels) +
                        " (only mono is supported)");
      }
      if (bits != 16) {
        throw Error(ErrorCode::kUnsupportedFormat,
                    "unsupported bit depth " + std::to_string(bits) +
                        " (only 16-bit is supported)");
      }
      if (rate == 0 || rate > 0x7fffffffU) {
        throw Error(ErrorCode::kMalformedHeader, "invalid sample rate");
      }
      audio.sample_rate = static_cast<int>(rate);
      have_fmt = true;
    } else if (TagIs(bytes, pos, "data")) {
      if (!have_fmt) {
        throw Error(ErrorCode::kMalformedHeader, "data chunk before fmt chunk");
      }
      if (body + chunk_size > bytes.size()) {
        throw Error(ErrorCode::kTruncated,
                    "data chunk claims " + std::to_string(chunk_size) +
                        " bytes but only " +
                        std::to_string(bytes.size() - body) + " remain");
      }
      if (chunk_size % 2 != 0) {
        throw Error(ErrorCode::kMalformedHeader, "odd-sized PCM16 data chunk");
      }
      const std::size_t n = chunk_size / 2;
      audio.samples.resize(n);
      for (std::size_t i = 0; i < n; ++i) {
        const auto raw = static_cast<std::int16_t>(ReadU16(bytes, body + 2 * i));
        audio.samples[i] = raw / 32768.0;
      }
      return audio;
    }
    // Chunks are padded to even length.
    pos = body + chunk_size + (chunk_size & 1U);
  }
  throw Error(have_fmt ? ErrorCode::kTruncated : ErrorCode::kMalformedHeader,
              have_fmt ? "missing data chunk" : "missing fmt chunk");
}

std::vector<std::uint8_t> EncodeWav(const AudioBuffer& audio) {
  const auto n = static_cast<std::uint32_t>(audio.samples.size());
  const auto rate = static_cast<std::uint32_t>(audio.sample_rate);
  std::vector<std::uint8_t> out;
  out.reserve(44 + 2 * static_cast<std::size_t>(n));
  PutTag(out, "RIFF");
  PutU32(out, 36 + 2 * n);
  PutTag(out, "WAVE");
  PutTag(out, "fmt ");
  PutU32(out, 16);
  PutU16(out, 1);         // PCM
  PutU16(out, 1);         // mono
  PutU32(out, rate);
  PutU32(out, rate * 2);  // byte rate
  PutU16(out, 2);         // block align
  PutU16(out, 16);
  PutTag(out, "data");
  PutU32(out, 2 * n);
  for (double s : audio.samples) {
    const double scaled = std::clamp(s, -1.0, 1.0) * 32767.0;
    const auto q = static_cast<std::int16_t>(std::lround(scaled));
    PutU16(out, static_cast<std::uint16_t>(q));
  }
  return out;
}

}  // namespace specaug
