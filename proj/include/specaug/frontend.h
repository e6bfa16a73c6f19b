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

// Log-mel frontend: framing, periodic Hann window, radix-2 FFT power
// spectrum, triangular mel filterbank, natural log with a floor.
//
// Filterbank: n_mels + 2 points equally spaced on the mel scale
// mel(f) = 2595 log10(1 + f / 700) between fmin and fmax. Filter k rises
// linearly in mel from point k to point k+1 (weight 1) and falls to zero
// at point k+2. Filters are not area-normalized, so between the first and
// last centers the weights of overlapping filters sum to exactly 1.

#ifndef SPECAUG_FRONTEND_H_
#define SPECAUG_FRONTEND_H_

#include <complex>
#include <span>
#include <vector>

#include "specaug/spectrogram.h"
#include "specaug/wav.h"

namespace specaug {

struct MelConfig {
  int sample_rate = 16000;
  double window_ms = 32.0;
  double hop_ms = 10.0;
  int n_mels = 128;
  int fft_size = 512;
  double fmin = 125.0;
  double fmax = 7600.0;
  double log_floor = 1e-10;

  int window_samples() const;
  int hop_samples() const;
  // Throws Error(kDimension) when the config is inconsistent.
  void Validate() const;
};

double HzToMel(double hz);
double MelToHz(double mel);

// In-place iterative radix-2 decimation-in-time FFT of a fixed size.
class Fft {
 public:
  // n must be a power of two >= 2.
  explicit Fft(int n);

  int size() const { return n_; }
  void Forward(std::span<std::complex<double>> data) const;
  // One-sided power spectrum |X_k|^2, k = 0..n/2, of a real frame of
  // length <= n (zero-padded).
  std::vector<double> PowerSpectrum(std::span<const double> frame) const;

 private:
  int n_;
  std::vector<std::complex<double>> twiddles_;  // exp(-2 pi i k / n)
  std::vector<int> bit_reverse_;
};

class MelFilterbank {
 public:
  explicit MelFilterbank(const MelConfig& cfg);

  int num_filters() const { return static_cast<int>(filters_.size()); }
  int num_bins() const { return num_bins_; }
  // Center frequency of filter k in Hz.
  double center_hz(int k) const { return centers_hz_[k]; }
  double weight(int filter, int bin) const;
  // Filter energies of a one-sided power spectrum.
  std::vector<double> Apply(std::span<const double> power) const;

 private:
  struct Filter {
    int first_bin = 0;
    std::vector<double> weights;
  };
  int num_bins_;
  std::vector<Filter> filters_;
  std::vector<double> centers_hz_;
};

// Periodic Hann window: 0.5 - 0.5 cos(2 pi n / N).
std::vector<double> HannWindow(int n);

// tau = 1 + floor((N - window) / hop); nu = n_mels. Throws
// Error(kEmptyInput) when the audio is shorter than one window, and
// Error(kDimension) for a sample-rate mismatch or bad config.
Spectrogram LogMel(const AudioBuffer& audio, const MelConfig& cfg = {});

}  // namespace specaug

#endif  // SPECAUG_FRONTEND_H_
