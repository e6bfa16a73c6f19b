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

#ifndef SPECAUG_POLICY_H_
#define SPECAUG_POLICY_H_

#include <string>
#include <string_view>
#include <vector>

namespace specaug {

// Value written into masked cells.
struct MaskFill {
  enum class Mode { kConstant, kUtteranceMean, kGaussian };

  Mode mode = Mode::kConstant;
  double constant = 0.0;  // kConstant only
  double sigma = 0.0;     // kGaussian only; >= 0

  static MaskFill Constant(double c) { return {Mode::kConstant, c, 0.0}; }
  static MaskFill UtteranceMean() { return {Mode::kUtteranceMean, 0.0, 0.0}; }
  // Per-cell N(utterance mean, sigma^2).
  static MaskFill Gaussian(double sigma) { return {Mode::kGaussian, 0.0, sigma}; }

  bool operator==(const MaskFill&) const = default;
};

// How the time-mask count and size are chosen for an utterance.
enum class TimeMode {
  kFixed,                 // count = time_mask_count, size = time_mask_param
  kAdaptiveSize,          // count fixed, size = floor(p_S * tau)
  kAdaptiveMultiplicity,  // count = min(cap, floor(p_M * tau)), size fixed
  kAdaptiveBoth,
};

std::string_view TimeModeName(TimeMode mode);

// One augmentation recipe. Only the fields that time_mode consults are read.
struct AugmentPolicy {
  int warp_param = 0;  // W, frames; 0 disables warping
  int freq_mask_param = 0;  // F, channels
  int freq_mask_count = 0;
  TimeMode time_mode = TimeMode::kFixed;
  int time_mask_param = 0;  // T, frames
  int time_mask_count = 0;
  double multiplicity_ratio = 0.0;  // p_M
  double size_ratio = 0.0;          // p_S
  int multiplicity_cap = 20;
  MaskFill fill;

  bool operator==(const AugmentPolicy&) const = default;
};

// Concrete mask counts and sizes for one utterance.
struct ResolvedMaskPlan {
  int n_time_masks = 0;
  int time_mask_param = 0;
  int n_freq_masks = 0;
  int freq_mask_param = 0;

  bool operator==(const ResolvedMaskPlan&) const = default;
};

// Evaluates the adaptive formulas for an utterance of `tau` frames:
//   adaptive multiplicity: n_time_masks = min(cap, floor(p_M * tau))
//   adaptive size:         time_mask_param = floor(p_S * tau)
// Requires tau >= 0.
ResolvedMaskPlan ResolvePolicy(const AugmentPolicy& policy, int tau);

// Named presets:
//   librispeech-double  W=80 F=27 m_F=2, fixed T=100 m_T=2
//   libri-full-adapt    W=80 F=27 m_F=2, adaptive both p_M=p_S=0.04 cap 20
//   specaug-basic       no warp, F=27 m_F=2, fixed T=50 m_T=2
//   freq-only           no warp, F=27 m_F=2, no time masks
// Throws Error(kUnknownPreset) listing the valid names.
AugmentPolicy Preset(std::string_view name);
const std::vector<std::string>& PresetNames();

// Policy text format: UTF-8, one `key=value` per line, `#` starts a comment,
// blank lines ignored. Keys: warp_param freq_mask_param freq_mask_count
// time_mode time_mask_param time_mask_count multiplicity_ratio size_ratio
// multiplicity_cap fill_mode fill_constant fill_sigma. Keys not present take
// the AugmentPolicy defaults. Unknown or repeated keys and out-of-range
// values throw Error(kPolicySyntax).
std::string SerializePolicy(const AugmentPolicy& policy);
AugmentPolicy ParsePolicy(std::string_view text);

// One-line human summary listing only the fields the policy consults, e.g.
// "W=80 F=27 m_F=2 time=fixed T=100 m_T=2 fill=constant(0)".
std::string DescribePolicy(const AugmentPolicy& policy);

// Shortest decimal text that parses back to exactly `value`.
std::string FormatDouble(double value);

}  // namespace specaug

#endif  // SPECAUG_POLICY_H_
