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

#include "specaug/fixtures.h"

#include "specaug/formats.h"
#include "specaug/portable_math.h"
#include "specaug/spectrogram.h"
#include "specaug/wav.h"

namespace specaug {
namespace {

// sin(2 pi f n / rate) with the phase reduced exactly in integers.
double Tone(long long freq, long long n, long long rate) {
  const long long cycle = (freq * n) % rate;
  return pmath::Sin(2.0 * pmath::kPi * static_cast<double>(cycle) / rate);
}

}  // namespace

std::map<std::string, std::vector<std::uint8_t>> GenerateFixtures() {
  std::map<std::string, std::vector<std::uint8_t>> files;

  AudioBuffer audio;
  audio.sample_rate = 16000;
  audio.samples.resize(32000);
  for (long long n = 0; n < 32000; ++n) {
    double v = 0.0;
    if (n < 9600) {
      v = 0.5 * Tone(440, n, 16000);
    } else if (n >= 12800) {
      v = 0.3 * Tone(440, n, 16000) + 0.2 * Tone(1000, n, 16000) +
          0.1 * Tone(3000, n, 16000);
    }
    audio.samples[n] = v;
  }
  files["tone.wav"] = EncodeWav(audio);

  Spectrogram ramp(20, 8);
  for (int t = 0; t < 20; ++t) {
    for (int f = 0; f < 8; ++f) ramp.at(t, f) = static_cast<float>(8 * t + f);
  }
  files["ramp.sgram"] = WriteSgram(ramp);

  Spectrogram constant(10, 4, std::vector<float>(40, 1.5f));
  files["constant.sgram"] = WriteSgram(constant);
  return files;
}

}  // namespace specaug
