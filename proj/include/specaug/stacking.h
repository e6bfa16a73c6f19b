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

#ifndef SPECAUG_STACKING_H_
#define SPECAUG_STACKING_H_

#include "specaug/spectrogram.h"

namespace specaug {

// Frame stacking geometry. The default is 4 frames of 128 channels (a
// 512-wide stacked frame) advancing by 3 frames.
struct StackConfig {
  int frame_dim = 128;
  int height = 4;
  int stride = 3;

  int stacked_dim() const { return frame_dim * height; }
  // Throws Error(kDimension) unless all fields are >= 1 and
  // stride <= height.
  void Validate() const;
};

// Number of stacked frames for `tau` input frames: ceil(tau / stride).
int StackedLength(int tau, const StackConfig& cfg);

// Window k starts at frame k * stride and concatenates `height` frames,
// clamping indices past the end to the last frame. Requires nu == frame_dim
// and tau >= 1 (Error(kDimension) otherwise).
Spectrogram Stack(const Spectrogram& spec, const StackConfig& cfg = {});

enum class UnstackCheck {
  kTrusting,  // read each frame from its first window only
  kStrict,    // also verify every overlapping copy matches bit-for-bit
};

// Inverse of Stack: frame i comes from window i / stride at offset
// i % stride. Throws Error(kDimension) when the shape disagrees with
// original_tau, or under kStrict when overlapping copies differ.
Spectrogram Unstack(const Spectrogram& stacked, int original_tau,
                    const StackConfig& cfg = {},
                    UnstackCheck check = UnstackCheck::kTrusting);

}  // namespace specaug

#endif  // SPECAUG_STACKING_H_
