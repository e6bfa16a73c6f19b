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

#include "specaug/spectrogram.h"

#include <cmath>
#include <cstring>
#include <string>
#include <utility>

#include "specaug/errors.h"

namespace specaug {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kBadMagic: return "bad-magic";
    case ErrorCode::kUnsupportedVersion: return "unsupported-version";
    case ErrorCode::kSizeMismatch: return "size-mismatch";
    case ErrorCode::kNonFinite: return "non-finite";
    case ErrorCode::kMalformedHeader: return "malformed-header";
    case ErrorCode::kUnsupportedFormat: return "unsupported-format";
    case ErrorCode::kTruncated: return "truncated";
    case ErrorCode::kEmptyInput: return "empty-input";
    case ErrorCode::kDimension: return "dimension";
    case ErrorCode::kUnknownPreset: return "unknown-preset";
    case ErrorCode::kPolicySyntax: return "policy-syntax";
    case ErrorCode::kPairing: return "pairing";
    case ErrorCode::kManifest: return "manifest";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

Spectrogram::Spectrogram(int tau, int nu) : tau_(tau), nu_(nu) {
  if (tau < 0 || nu < 1) {
    throw Error(ErrorCode::kDimension,
                "spectrogram shape must have tau >= 0 and nu >= 1, got " +
                    std::to_string(tau) + "x" + std::to_string(nu));
  }
  values_.assign(static_cast<std::size_t>(tau) * static_cast<std::size_t>(nu),
                 0.0f);
}

Spectrogram::Spectrogram(int tau, int nu, std::vector<float> values)
    : tau_(tau), nu_(nu), values_(std::move(values)) {
  if (tau < 0 || nu < 1) {
    throw Error(ErrorCode::kDimension,
                "spectrogram shape must have tau >= 0 and nu >= 1, got " +
                    std::to_string(tau) + "x" + std::to_string(nu));
  }
  if (values_.size() !=
      static_cast<std::size_t>(tau) * static_cast<std::size_t>(nu)) {
    throw Error(ErrorCode::kDimension,
                "spectrogram of shape " + std::to_string(tau) + "x" +
                    std::to_string(nu) + " needs " +
                    std::to_string(static_cast<std::size_t>(tau) * nu) +
                    " values, got " + std::to_string(values_.size()));
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      throw Error(ErrorCode::kNonFinite,
                  "non-finite spectrogram value at index " + std::to_string(i));
    }
  }
}

double Spectrogram::Mean() const {
  if (values_.empty()) return 0.0;
  double sum = 0.0;
  for (float v : values_) sum += v;
  return sum / static_cast<double>(values_.size());
}

bool Spectrogram::BitwiseEquals(const Spectrogram& other) const {
  return tau_ == other.tau_ && nu_ == other.nu_ &&
         (values_.empty() ||
          std::memcmp(values_.data(), other.values_.data(),
                      values_.size() * sizeof(float)) == 0);
}

}  // namespace specaug
