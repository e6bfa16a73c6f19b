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

// On-disk formats.
//
// sgram (all little-endian):
//   offset 0   "SGRM"
//   offset 4   u32 version = 1
//   offset 8   u32 tau
//   offset 12  u32 nu
//   offset 16  tau * nu IEEE-754 binary32 values, time-major
// The file is exactly 16 + 4 * tau * nu bytes.
//
// PGM: binary P5, header "P5\n<tau> <nu>\n255\n", one byte per pixel.
// Column = frame, row 0 = highest channel. Values map linearly from
// [min, max] to [0, 255] rounding half up; a constant input maps to 128.
//
// CSV: first line "tau,nu", then one line per frame with nu values printed
// in shortest round-trip form.

#ifndef SPECAUG_FORMATS_H_
#define SPECAUG_FORMATS_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "specaug/spectrogram.h"

namespace specaug {

inline constexpr std::uint32_t kSgramVersion = 1;

// Throws Error with kBadMagic, kUnsupportedVersion, kSizeMismatch or
// kNonFinite.
Spectrogram ReadSgram(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> WriteSgram(const Spectrogram& spec);

// Throws Error(kEmptyInput) for tau == 0.
std::vector<std::uint8_t> RenderPgm(const Spectrogram& spec);

std::string WriteCsv(const Spectrogram& spec);
// Throws Error(kSizeMismatch) on malformed text.
Spectrogram ReadCsv(std::string_view text);

// Whole-file helpers. Throw Error(kIo) on failure.
std::vector<std::uint8_t> ReadFileBytes(const std::string& path);
void WriteFileBytes(const std::string& path, std::span<const std::uint8_t> bytes);

}  // namespace specaug

#endif  // SPECAUG_FORMATS_H_
