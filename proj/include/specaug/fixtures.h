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

#ifndef SPECAUG_FIXTURES_H_
#define SPECAUG_FIXTURES_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace specaug {

// The golden test inputs, keyed by file name. Generated with integer phase
// arithmetic and portable math only, so the bytes are the same everywhere:
//   tone.wav       2 s, 16 kHz: 440 Hz, a gap of silence, then a
//                  440/1000/3000 Hz chord
//   ramp.sgram     20 x 8, cell (t, f) = 8t + f
//   constant.sgram 10 x 4 of 1.5
std::map<std::string, std::vector<std::uint8_t>> GenerateFixtures();

}  // namespace specaug

#endif  // SPECAUG_FIXTURES_H_
