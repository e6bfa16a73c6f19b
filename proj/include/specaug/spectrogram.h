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

#ifndef SPECAUG_SPECTROGRAM_H_
#define SPECAUG_SPECTROGRAM_H_

#include <cstddef>
#include <span>
#include <vector>

namespace specaug {

// A tau x nu matrix of log-mel values stored time-major: frame 0 channels
// 0..nu-1, then frame 1, and so on. The shape is fixed at construction.
//
// Values must be finite. The constructor that takes values checks this;
// mutable accessors trust the caller to keep it that way.
class Spectrogram {
 public:
  // All-zero spectrogram. Requires tau >= 0 and nu >= 1.
  Spectrogram(int tau, int nu);
  // Requires values.size() == tau * nu and every value finite; throws
  // Error(kDimension / kNonFinite) otherwise.
  Spectrogram(int tau, int nu, std::vector<float> values);

  int tau() const { return tau_; }
  int nu() const { return nu_; }
  bool empty() const { return tau_ == 0; }

  std::span<const float> values() const { return values_; }
  std::span<float> mutable_values() { return values_; }

  std::span<const float> frame(int t) const {
    return std::span<const float>(values_).subspan(Offset(t, 0), nu_);
  }
  std::span<float> mutable_frame(int t) {
    return std::span<float>(values_).subspan(Offset(t, 0), nu_);
  }

  float at(int t, int f) const { return values_[Offset(t, f)]; }
  float& at(int t, int f) { return values_[Offset(t, f)]; }

  // Arithmetic mean over all cells, accumulated in double in storage order.
  // Zero for an empty spectrogram.
  double Mean() const;

  // Cell-wise bit equality (so -0.0 != 0.0).
  bool BitwiseEquals(const Spectrogram& other) const;

 private:
  std::size_t Offset(int t, int f) const {
    return static_cast<std::size_t>(t) * static_cast<std::size_t>(nu_) +
           static_cast<std::size_t>(f);
  }

  int tau_;
  int nu_;
  std::vector<float> values_;
};

}  // namespace specaug

#endif  // SPECAUG_SPECTROGRAM_H_
