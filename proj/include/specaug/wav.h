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

#ifndef SPECAUG_WAV_H_
#define SPECAUG_WAV_H_

#include <cstdint>
#include <span>
#include <vector>

namespace specaug {

struct AudioBuffer {
  int sample_rate = 16000;
  std::vector<double> samples;  // in [-1, 1]
};

// Decodes RIFF/WAVE with a PCM (format tag 1), 16-bit, mono "fmt " chunk.
// Unknown chunks are skipped. Samples are scaled by 1/32768.
// Throws Error with kMalformedHeader, kUnsupportedFormat or kTruncated.
AudioBuffer DecodeWav(std::span<const std::uint8_t> bytes);

// Canonical 44-byte-header PCM16 mono WAV. Samples are clamped to [-1, 1],
// scaled by 32767 and rounded half away from zero.
std::vector<std::uint8_t> EncodeWav(const AudioBuffer& audio);

}  // namespace specaug

#endif  // SPECAUG_WAV_H_
