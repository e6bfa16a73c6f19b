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

#include "specaug/augment.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "specaug/errors.h"

namespace specaug {
namespace {

constexpr int kMaxWarpRedraws = 100;

void CheckWarpArgs(const char* fn, int w0, int w, int tau) {
  if (tau < 3 || w0 < 1 || w0 > tau - 2 || w0 + w < 1 || w0 + w > tau - 2) {
    throw ContractError(std::string(fn) + ": invalid warp (w0=" +
                        std::to_string(w0) + ", w=" + std::to_string(w) +
                        ", tau=" + std::to_string(tau) + ")");
  }
}

float FillValue(const MaskFill& fill, double utterance_mean, SeededRng& rng) {
  double v = 0.0;
  switch (fill.mode) {
    case MaskFill::Mode::kConstant:
      v = fill.constant;
      break;
    case MaskFill::Mode::kUtteranceMean:
      v = utterance_mean;
      break;
    case MaskFill::Mode::kGaussian:
      v = utterance_mean + fill.sigma * rng.StandardNormal();
      break;
  }
  const auto out = static_cast<float>(v);
  if (!std::isfinite(out)) {
    throw Error(ErrorCode::kNonFinite, "mask fill value is not representable");
  }
  return out;
}

Spectrogram FreqMaskWithMean(const Spectrogram& spec, int freq_mask_param,
                             int count, const MaskFill& fill, double mean,
                             SeededRng& rng, AugmentTrace* trace) {
  Spectrogram out = spec;
  const int nu = spec.nu();
  const int max_size = std::min(freq_mask_param, nu);
  for (int i = 0; i < count; ++i) {
    const auto f = static_cast<int>(rng.UniformInt(0, max_size));
    const auto f0 = static_cast<int>(rng.UniformInt(0, nu - f));
    FillFrequencyBand(out, {f0, f}, fill, mean, rng);
    if (trace != nullptr) trace->freq_masks.push_back({f0, f});
  }
  return out;
}

Spectrogram TimeMaskWithMean(const Spectrogram& spec,
                             const ResolvedMaskPlan& plan, const MaskFill& fill,
                             double mean, SeededRng& rng, AugmentTrace* trace) {
  Spectrogram out = spec;
  const int tau = spec.tau();
  const int max_size = std::min(plan.time_mask_param, tau);
  for (int i = 0; i < plan.n_time_masks; ++i) {
    const auto t = static_cast<int>(rng.UniformInt(0, max_size));
    const auto t0 = static_cast<int>(rng.UniformInt(0, tau - t));
    FillTimeBand(out, {t0, t}, fill, mean, rng);
    if (trace != nullptr) trace->time_masks.push_back({t0, t});
  }
  return out;
}

}  // namespace

double WarpFunction(double t, int w0, int w, int tau) {
  CheckWarpArgs("WarpFunction", w0, w, tau);
  const double last = tau - 1;
  if (!(t >= 0.0 && t <= last)) {
    throw ContractError("WarpFunction: t outside [0, tau-1]");
  }
  if (t <= w0) {
    return (w0 + w) * t / w0;
  }
  return ((last - w0 - w) * t + last * w) / (last - w0);
}

double InverseWarpFunction(double s, int w0, int w, int tau) {
  CheckWarpArgs("InverseWarpFunction", w0, w, tau);
  const double last = tau - 1;
  if (!(s >= 0.0 && s <= last)) {
    throw ContractError("InverseWarpFunction: s outside [0, tau-1]");
  }
  const int anchor = w0 + w;
  if (s <= anchor) {
    return s * w0 / anchor;
  }
  return ((last - w0) * s - last * w) / (last - anchor);
}

Spectrogram ApplyWarp(const Spectrogram& spec, const WarpSample& sample) {
  const int tau = spec.tau();
  CheckWarpArgs("ApplyWarp", sample.w0, sample.w, tau);
  Spectrogram out(tau, spec.nu());
  for (int s = 0; s < tau; ++s) {
    double t = InverseWarpFunction(s, sample.w0, sample.w, tau);
    t = std::clamp(t, 0.0, static_cast<double>(tau - 1));
    const int i = std::min(static_cast<int>(std::floor(t)), tau - 1);
    const double a = t - i;
    auto dst = out.mutable_frame(s);
    const auto lo = spec.frame(i);
    if (a == 0.0 || i == tau - 1) {
      std::copy(lo.begin(), lo.end(), dst.begin());
      continue;
    }
    const auto hi = spec.frame(i + 1);
    for (int f = 0; f < spec.nu(); ++f) {
      const double x0 = lo[f];
      const double x1 = hi[f];
      dst[f] = static_cast<float>(x0 + a * (x1 - x0));
    }
  }
  return out;
}

std::optional<WarpSample> DrawWarpSample(int tau, int warp_param,
                                         SeededRng& rng) {
  if (warp_param <= 0 || tau <= 2 * warp_param || tau < 3) return std::nullopt;
  WarpSample sample;
  sample.w = static_cast<int>(rng.UniformInt(-warp_param, warp_param));
  sample.w0 = static_cast<int>(rng.UniformInt(warp_param, tau - warp_param - 1));
  for (int redraw = 0;; ++redraw) {
    const int anchor = sample.w0 + sample.w;
    if (anchor >= 1 && anchor <= tau - 2) return sample;
    if (redraw == kMaxWarpRedraws) return std::nullopt;
    sample.w = static_cast<int>(rng.UniformInt(-warp_param, warp_param));
  }
}

Spectrogram TimeWarp(const Spectrogram& spec, int warp_param, SeededRng& rng,
                     AugmentTrace* trace) {
  const auto sample = DrawWarpSample(spec.tau(), warp_param, rng);
  if (!sample) return spec;
  if (trace != nullptr) trace->warp = sample;
  return ApplyWarp(spec, *sample);
}

Spectrogram FreqMask(const Spectrogram& spec, int freq_mask_param, int count,
                     const MaskFill& fill, SeededRng& rng,
                     AugmentTrace* trace) {
  return FreqMaskWithMean(spec, freq_mask_param, count, fill, spec.Mean(), rng,
                          trace);
}

Spectrogram TimeMask(const Spectrogram& spec, const ResolvedMaskPlan& plan,
                     const MaskFill& fill, SeededRng& rng,
                     AugmentTrace* trace) {
  return TimeMaskWithMean(spec, plan, fill, spec.Mean(), rng, trace);
}

void FillFrequencyBand(Spectrogram& spec, MaskBand band, const MaskFill& fill,
                       double utterance_mean, SeededRng& rng) {
  if (band.start < 0 || band.size < 0 || band.start + band.size > spec.nu()) {
    throw ContractError("FillFrequencyBand: band outside spectrogram");
  }
  for (int t = 0; t < spec.tau(); ++t) {
    for (int f = band.start; f < band.start + band.size; ++f) {
      spec.at(t, f) = FillValue(fill, utterance_mean, rng);
    }
  }
}

void FillTimeBand(Spectrogram& spec, MaskBand band, const MaskFill& fill,
                  double utterance_mean, SeededRng& rng) {
  if (band.start < 0 || band.size < 0 || band.start + band.size > spec.tau()) {
    throw ContractError("FillTimeBand: band outside spectrogram");
  }
  for (int t = band.start; t < band.start + band.size; ++t) {
    for (int f = 0; f < spec.nu(); ++f) {
      spec.at(t, f) = FillValue(fill, utterance_mean, rng);
    }
  }
}

Spectrogram ApplyPolicy(const Spectrogram& spec, const AugmentPolicy& policy,
                        SeededRng& rng, AugmentTrace* trace) {
  const double mean = spec.Mean();
  Spectrogram out = TimeWarp(spec, policy.warp_param, rng, trace);
  out = FreqMaskWithMean(out, policy.freq_mask_param, policy.freq_mask_count,
                         policy.fill, mean, rng, trace);
  const ResolvedMaskPlan plan = ResolvePolicy(policy, out.tau());
  return TimeMaskWithMean(out, plan, policy.fill, mean, rng, trace);
}

}  // namespace specaug
