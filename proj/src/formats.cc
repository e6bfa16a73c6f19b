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

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "specaug/errors.h"

namespace specaug {
namespace {

constexpr std::size_t kSgramHeader = 16;

std::uint32_t GetU32(std::span<const std::uint8_t> b, std::size_t at) {
  return static_cast<std::uint32_t>(b[at]) |
         (static_cast<std::uint32_t>(b[at + 1]) << 8) |
         (static_cast<std::uint32_t>(b[at + 2]) << 16) |
         (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

void PutU32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
}

[[noreturn]] void CsvError(const std::string& what) {
  throw Error(ErrorCode::kSizeMismatch, "csv: " + what);
}

}  // namespace

Spectrogram ReadSgram(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || !std::equal(bytes.begin(), bytes.begin() + 4, "SGRM")) {
    throw Error(ErrorCode::kBadMagic, "not an sgram file (bad magic)");
  }
  if (bytes.size() < kSgramHeader) {
    throw Error(ErrorCode::kSizeMismatch, "sgram header truncated");
  }
  const std::uint32_t version = GetU32(bytes, 4);
  if (version != kSgramVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "unsupported sgram version " + std::to_string(version));
  }
  const std::uint32_t tau = GetU32(bytes, 8);
  const std::uint32_t nu = GetU32(bytes, 12);
  const unsigned __int128 expected =
      kSgramHeader + static_cast<unsigned __int128>(4) * tau * nu;
  if (bytes.size() != expected) {
    throw Error(ErrorCode::kSizeMismatch,
                "sgram of shape " + std::to_string(tau) + "x" +
                    std::to_string(nu) + " must be " +
                    std::to_string(static_cast<unsigned long long>(expected)) +
                    " bytes, got " + std::to_string(bytes.size()));
  }
  if (nu == 0 || tau > 0x7fffffffU || nu > 0x7fffffffU) {
    throw Error(ErrorCode::kSizeMismatch, "sgram shape out of range");
  }
  std::vector<float> values(static_cast<std::size_t>(tau) * nu);
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::bit_cast<float>(GetU32(bytes, kSgramHeader + 4 * i));
  }
  return Spectrogram(static_cast<int>(tau), static_cast<int>(nu), std::move(values));
}

std::vector<std::uint8_t> WriteSgram(const Spectrogram& spec) {
  std::vector<std::uint8_t> out = {'S', 'G', 'R', 'M'};
  out.reserve(kSgramHeader + 4 * spec.values().size());
  PutU32(out, kSgramVersion);
  PutU32(out, static_cast<std::uint32_t>(spec.tau()));
  PutU32(out, static_cast<std::uint32_t>(spec.nu()));
  for (float v : spec.values()) PutU32(out, std::bit_cast<std::uint32_t>(v));
  return out;
}

std::vector<std::uint8_t> RenderPgm(const Spectrogram& spec) {
  if (spec.tau() < 1) {
    throw Error(ErrorCode::kEmptyInput, "cannot render an empty spectrogram");
  }
  const auto [lo_it, hi_it] = std::minmax_element(spec.values().begin(),
                                                  spec.values().end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  const std::string header = "P5\n" + std::to_string(spec.tau()) + " " +
                             std::to_string(spec.nu()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.reserve(header.size() + spec.values().size());
  for (int row = 0; row < spec.nu(); ++row) {
    const int channel = spec.nu() - 1 - row;
    for (int t = 0; t < spec.tau(); ++t) {
      std::uint8_t pixel = 128;
      if (hi > lo) {
        const double scaled = (spec.at(t, channel) - lo) / (hi - lo) * 255.0;
        pixel = static_cast<std::uint8_t>(
            std::clamp(std::floor(scaled + 0.5), 0.0, 255.0));
      }
      out.push_back(pixel);
    }
  }
  return out;
}

std::string WriteCsv(const Spectrogram& spec) {
  std::string out = std::to_string(spec.tau()) + "," + std::to_string(spec.nu()) + "\n";
  char buf[32];
  for (int t = 0; t < spec.tau(); ++t) {
    for (int f = 0; f < spec.nu(); ++f) {
      if (f > 0) out += ',';
      const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), spec.at(t, f));
      out.append(buf, ptr);
    }
    out += '\n';
  }
  return out;
}

Spectrogram ReadCsv(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) lines.push_back(line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  if (lines.empty()) CsvError("missing 'tau,nu' header");

  auto parse_row = [](std::string_view line, auto parse_one) {
    std::size_t count = 0;
    while (true) {
      const auto comma = line.find(',');
      parse_one(line.substr(0, comma));
      ++count;
      if (comma == std::string_view::npos) break;
      line.remove_prefix(comma + 1);
    }
    return count;
  };

  std::vector<long long> header;
  parse_row(lines[0], [&](std::string_view cell) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
    if (ec != std::errc() || ptr != cell.data() + cell.size()) {
      CsvError("bad header field '" + std::string(cell) + "'");
    }
    header.push_back(v);
  });
  if (header.size() != 2 || header[0] < 0 || header[1] < 1 ||
      header[0] > 0x7fffffff || header[1] > 0x7fffffff) {
    CsvError("header must be 'tau,nu' with tau >= 0 and nu >= 1");
  }
  const auto tau = static_cast<int>(header[0]);
  const auto nu = static_cast<int>(header[1]);
  if (static_cast<long long>(lines.size()) - 1 != tau) {
    CsvError("expected " + std::to_string(tau) + " rows, got " +
             std::to_string(lines.size() - 1));
  }
  std::vector<float> values;
  values.reserve(static_cast<std::size_t>(tau) * nu);
  for (int t = 0; t < tau; ++t) {
    const std::size_t n = parse_row(lines[t + 1], [&](std::string_view cell) {
      float v = 0.0f;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc() || ptr != cell.data() + cell.size()) {
        CsvError("bad value '" + std::string(cell) + "' in row " + std::to_string(t));
      }
      values.push_back(v);
    });
    if (n != static_cast<std::size_t>(nu)) {
      CsvError("row " + std::to_string(t) + " has " + std::to_string(n) +
               " values, expected " + std::to_string(nu));
    }
  }
  return Spectrogram(tau, nu, std::move(values));
}

std::vector<std::uint8_t> ReadFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIo, "error reading '" + path + "'");
  return bytes;
}

void WriteFileBytes(const std::string& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIo, "cannot open '" + path + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "error writing '" + path + "'");
}

}  // namespace specaug
