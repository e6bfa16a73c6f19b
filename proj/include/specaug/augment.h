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

// Time warping, frequency masking and time masking on a Spectrogram.
//
// Every random draw comes from the SeededRng passed in, in this order:
//   TimeWarp:  w in [-W, W], then w0 in [W, tau-W-1], then w again while
//              w0 + w falls outside [1, tau-2] (at most 100 redraws; if
//              none succeeds the input is returned unchanged). No draws
//              when warping is disabled or tau <= 2W or tau < 3.
//   FreqMask:  per mask, f in [0, min(F, nu)] then f0 in [0, nu-f], then
//              (Gaussian fill only) one normal per masked cell, frame-major.
//   TimeMask:  per mask, t in [0, min(T, tau)] then t0 in [0, tau-t], then
//              Gaussian fill normals as above.
// All ranges are inclusive.

#ifndef SPECAUG_AUGMENT_H_
#define SPECAUG_AUGMENT_H_

#include <optional>
#include <vector>

#include "specaug/policy.h"
#include "specaug/rng.h"
#include "specaug/spectrogram.h"

namespace specaug {

// Start point w0 and displacement w of a time warp.
struct WarpSample {
  int w0 = 0;
  int w = 0;

  bool operator==(const WarpSample&) const = default;
};

// A contiguous run [start, start + size) of frames or channels.
struct MaskBand {
  int start = 0;
  int size = 0;

  bool operator==(const MaskBand&) const = default;
};

// What an augmentation call actually did. Optional output for tests,
// visualisation and debugging.
struct AugmentTrace {
  std::optional<WarpSample> warp;
  std::vector<MaskBand> freq_masks;
  std::vector<MaskBand> time_masks;
};

// The piecewise-linear warp: w0 maps to w0 + w, 0 and tau-1 stay fixed.
// Requires tau >= 3, 1 <= w0 <= tau-2 and 1 <= w0 + w <= tau-2; violations
// throw ContractError.
double WarpFunction(double t, int w0, int w, int tau);
// Inverse of WarpFunction under the same preconditions.
double InverseWarpFunction(double s, int w0, int w, int tau);

// Resamples every channel so that output frame s is the input linearly
// interpolated at InverseWarpFunction(s).
Spectrogram ApplyWarp(const Spectrogram& spec, const WarpSample& sample);

// Draws a warp for a spectrogram of `tau` frames, or nullopt when warping
// is a no-op (see the draw order above).
std::optional<WarpSample> DrawWarpSample(int tau, int warp_param,
                                         SeededRng& rng);

Spectrogram TimeWarp(const Spectrogram& spec, int warp_param, SeededRng& rng,
                     AugmentTrace* trace = nullptr);

// Masking with the fill's "utterance mean" taken from `spec`.
Spectrogram FreqMask(const Spectrogram& spec, int freq_mask_param, int count,
                     const MaskFill& fill, SeededRng& rng,
                     AugmentTrace* trace = nullptr);
Spectrogram TimeMask(const Spectrogram& spec, const ResolvedMaskPlan& plan,
                     const MaskFill& fill, SeededRng& rng,
                     AugmentTrace* trace = nullptr);

// Writes the fill into channels [f0, f0 + f) of every frame, or frames
// [t0, t0 + t) across every channel. `utterance_mean` feeds the mean and
// Gaussian modes. Gaussian fill draws one normal per cell from `rng`.
// Bands must lie inside the spectrogram (ContractError otherwise).
void FillFrequencyBand(Spectrogram& spec, MaskBand band, const MaskFill& fill,
                       double utterance_mean, SeededRng& rng);
void FillTimeBand(Spectrogram& spec, MaskBand band, const MaskFill& fill,
                  double utterance_mean, SeededRng& rng);

// Warp (if W > 0), then m_F frequency masks, then time masks resolved for
// the warped length. The utterance mean used by the fill is that of the
// input before any augmentation.
Spectrogram ApplyPolicy(const Spectrogram& spec, const AugmentPolicy& policy,
                        SeededRng& rng, AugmentTrace* trace = nullptr);

}  // namespace specaug

#endif  // SPECAUG_AUGMENT_H_
