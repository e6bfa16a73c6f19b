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

#include "specaug/stacking.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "specaug/errors.h"

namespace specaug {

void StackConfig::Validate() const {
  if (frame_dim < 1 || height < 1 || stride < 1 || stride > height) {
    throw Error(ErrorCode::kDimension,
                "invalid stack config (frame_dim=" + std::to_string(frame_dim) +
                    ", height=" + std::to_string(height) +
                    ", stride=" + std::to_string(stride) +
                    "); need all >= 1 and stride <= height");
  }
}

int StackedLength(int tau, const StackConfig& cfg) {
  return (tau + cfg.stride - 1) / cfg.stride;
}

Spectrogram Stack(const Spectrogram& spec, const StackConfig& cfg) {
  cfg.Validate();
  if (spec.nu() != cfg.frame_dim) {
    throw Error(ErrorCode::kDimension,
                "cannot stack " + std::to_string(spec.nu()) +
                    "-channel frames with frame_dim " +
                    std::to_string(cfg.frame_dim));
  }
  if (spec.tau() < 1) {
    throw Error(ErrorCode::kDimension, "cannot stack an empty spectrogram");
  }
  const int n_windows = StackedLength(spec.tau(), cfg);
  Spectrogram out(n_windows, cfg.stacked_dim());
  for (int k = 0; k < n_windows; ++k) {
    auto dst = out.mutable_frame(k);
    for (int j = 0; j < cfg.height; ++j) {
      const int src = std::min(k * cfg.stride + j, spec.tau() - 1);
      const auto frame = spec.frame(src);
      std::copy(frame.begin(), frame.end(), dst.begin() + j * cfg.frame_dim);
    }
  }
  return out;
}

Spectrogram Unstack(const Spectrogram& stacked, int original_tau,
                    const StackConfig& cfg, UnstackCheck check) {
  cfg.Validate();
  if (stacked.nu() != cfg.stacked_dim()) {
    throw Error(ErrorCode::kDimension,
                "stacked frames have " + std::to_string(stacked.nu()) +
                    " channels, expected " + std::to_string(cfg.stacked_dim()));
  }
  if (original_tau < 1 || stacked.tau() != StackedLength(original_tau, cfg)) {
    throw Error(ErrorCode::kDimension,
                std::to_string(stacked.tau()) +
                    " stacked frames are inconsistent with original length " +
                    std::to_string(original_tau));
  }
  Spectrogram out(original_tau, cfg.frame_dim);
  for (int i = 0; i < original_tau; ++i) {
    const auto window = stacked.frame(i / cfg.stride);
    const auto src = window.subspan((i % cfg.stride) * cfg.frame_dim, cfg.frame_dim);
    auto dst = out.mutable_frame(i);
    std::copy(src.begin(), src.end(), dst.begin());
  }
  if (check == UnstackCheck::kStrict) {
    for (int k = 0; k < stacked.tau(); ++k) {
      for (int j = 0; j < cfg.height; ++j) {
        const int src = std::min(k * cfg.stride + j, original_tau - 1);
        const auto copy = stacked.frame(k).subspan(j * cfg.frame_dim, cfg.frame_dim);
        const auto ref = out.frame(src);
        if (std::memcmp(copy.data(), ref.data(), copy.size_bytes()) != 0) {
          throw Error(ErrorCode::kDimension,
                      "stacked window " + std::to_string(k) + " slot " +
                          std::to_string(j) + " disagrees with frame " +
                          std::to_string(src));
        }
      }
    }
  }
  return out;
}

}  // namespace specaug
