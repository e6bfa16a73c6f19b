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

#include "specaug/frontend.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "specaug/errors.h"
#include "specaug/portable_math.h"

namespace specaug {
namespace {

bool IsPowerOfTwo(int n) { return n >= 2 && (n & (n - 1)) == 0; }

[[noreturn]] void BadConfig(const std::string& what) {
  throw Error(ErrorCode::kDimension, "invalid mel config: " + what);
}

}  // namespace

int MelConfig::window_samples() const {
  return static_cast<int>(std::lround(window_ms * sample_rate / 1000.0));
}

int MelConfig::hop_samples() const {
  return static_cast<int>(std::lround(hop_ms * sample_rate / 1000.0));
}

void MelConfig::Validate() const {
  if (sample_rate <= 0) BadConfig("sample_rate must be positive");
  if (window_samples() < 1) BadConfig("window shorter than one sample");
  if (hop_samples() < 1) BadConfig("hop shorter than one sample");
  if (n_mels < 1) BadConfig("n_mels must be >= 1");
  if (!IsPowerOfTwo(fft_size)) BadConfig("fft_size must be a power of two");
  if (fft_size < window_samples()) BadConfig("fft_size smaller than window");
  if (!(fmin >= 0.0 && fmin < fmax && fmax <= sample_rate / 2.0)) {
    BadConfig("need 0 <= fmin < fmax <= sample_rate / 2");
  }
  if (!(log_floor > 0.0) || !std::isfinite(log_floor)) {
    BadConfig("log_floor must be positive");
  }
}

double HzToMel(double hz) { return 2595.0 * pmath::Log10(1.0 + hz / 700.0); }

double MelToHz(double mel) {
  return 700.0 * (pmath::Exp(mel / 2595.0 * pmath::kLn10) - 1.0);
}

Fft::Fft(int n) : n_(n) {
  if (!IsPowerOfTwo(n)) {
    throw ContractError("Fft: size must be a power of two >= 2");
  }
  twiddles_.resize(n / 2);
  for (int k = 0; k < n / 2; ++k) {
    const double angle = 2.0 * pmath::kPi * k / n;
    twiddles_[k] = {pmath::Cos(angle), -pmath::Sin(angle)};
  }
  int bits = 0;
  while ((1 << bits) < n) ++bits;
  bit_reverse_.resize(n);
  for (int i = 0; i < n; ++i) {
    int r = 0;
    for (int b = 0; b < bits; ++b) r |= ((i >> b) & 1) << (bits - 1 - b);
    bit_reverse_[i] = r;
  }
}

void Fft::Forward(std::span<std::complex<double>> data) const {
  if (static_cast<int>(data.size()) != n_) {
    throw ContractError("Fft::Forward: wrong buffer size");
  }
  for (int i = 0; i < n_; ++i) {
    if (i < bit_reverse_[i]) std::swap(data[i], data[bit_reverse_[i]]);
  }
  for (int len = 2; len <= n_; len <<= 1) {
    const int half = len / 2;
    const int step = n_ / len;
    for (int start = 0; start < n_; start += len) {
      for (int j = 0; j < half; ++j) {
        const auto& w = twiddles_[j * step];
        const auto& b = data[start + j + half];
        // Explicit product; std::complex operator* adds NaN recovery paths.
        const double re = b.real() * w.real() - b.imag() * w.imag();
        const double im = b.real() * w.imag() + b.imag() * w.real();
        const auto a = data[start + j];
        data[start + j] = {a.real() + re, a.imag() + im};
        data[start + j + half] = {a.real() - re, a.imag() - im};
      }
    }
  }
}

std::vector<double> Fft::PowerSpectrum(std::span<const double> frame) const {
  if (static_cast<int>(frame.size()) > n_) {
    throw ContractError("Fft::PowerSpectrum: frame longer than FFT");
  }
  std::vector<std::complex<double>> buf(n_);
  for (std::size_t i = 0; i < frame.size(); ++i) buf[i] = {frame[i], 0.0};
  Forward(buf);
  std::vector<double> power(n_ / 2 + 1);
  for (int k = 0; k <= n_ / 2; ++k) {
    power[k] = buf[k].real() * buf[k].real() + buf[k].imag() * buf[k].imag();
  }
  return power;
}

MelFilterbank::MelFilterbank(const MelConfig& cfg)
    : num_bins_(cfg.fft_size / 2 + 1) {
  cfg.Validate();
  const double mel_lo = HzToMel(cfg.fmin);
  const double mel_hi = HzToMel(cfg.fmax);
  const int n_points = cfg.n_mels + 2;
  std::vector<double> points(n_points);
  for (int i = 0; i < n_points; ++i) {
    points[i] = mel_lo + i * (mel_hi - mel_lo) / (n_points - 1);
  }
  std::vector<double> bin_mel(num_bins_);
  for (int j = 0; j < num_bins_; ++j) {
    bin_mel[j] = HzToMel(static_cast<double>(j) * cfg.sample_rate / cfg.fft_size);
  }
  filters_.resize(cfg.n_mels);
  centers_hz_.resize(cfg.n_mels);
  for (int k = 0; k < cfg.n_mels; ++k) {
    const double left = points[k];
    const double center = points[k + 1];
    const double right = points[k + 2];
    centers_hz_[k] = MelToHz(center);
    Filter& filter = filters_[k];
    filter.first_bin = num_bins_;
    std::vector<double> dense(num_bins_, 0.0);
    int last_bin = -1;
    for (int j = 0; j < num_bins_; ++j) {
      const double m = bin_mel[j];
      double w = 0.0;
      if (m > left && m < center) {
        w = (m - left) / (center - left);
      } else if (m >= center && m < right) {
        w = (right - m) / (right - center);
      }
      if (w > 0.0) {
        filter.first_bin = std::min(filter.first_bin, j);
        last_bin = j;
        dense[j] = w;
      }
    }
    if (last_bin >= 0) {
      filter.weights.assign(dense.begin() + filter.first_bin,
                            dense.begin() + last_bin + 1);
    } else {
      filter.first_bin = 0;
    }
  }
}

double MelFilterbank::weight(int filter, int bin) const {
  const Filter& f = filters_.at(filter);
  const int offset = bin - f.first_bin;
  if (offset < 0 || offset >= static_cast<int>(f.weights.size())) return 0.0;
  return f.weights[offset];
}

std::vector<double> MelFilterbank::Apply(std::span<const double> power) const {
  if (static_cast<int>(power.size()) != num_bins_) {
    throw ContractError("MelFilterbank::Apply: wrong spectrum length");
  }
  std::vector<double> energies(filters_.size(), 0.0);
  for (std::size_t k = 0; k < filters_.size(); ++k) {
    const Filter& f = filters_[k];
    double sum = 0.0;
    for (std::size_t i = 0; i < f.weights.size(); ++i) {
      sum += f.weights[i] * power[f.first_bin + i];
    }
    energies[k] = sum;
  }
  return energies;
}

std::vector<double> HannWindow(int n) {
  std::vector<double> w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = 0.5 - 0.5 * pmath::Cos(2.0 * pmath::kPi * i / n);
  }
  return w;
}

Spectrogram LogMel(const AudioBuffer& audio, const MelConfig& cfg) {
  cfg.Validate();
  if (audio.sample_rate != cfg.sample_rate) {
    throw Error(ErrorCode::kUnsupportedFormat,
                "audio sample rate " + std::to_string(audio.sample_rate) +
                    " Hz does not match frontend rate " +
                    std::to_string(cfg.sample_rate) + " Hz");
  }
  const int window = cfg.window_samples();
  const int hop = cfg.hop_samples();
  const auto n = static_cast<long long>(audio.samples.size());
  if (n < window) {
    throw Error(ErrorCode::kEmptyInput,
                "audio has " + std::to_string(n) +
                    " samples, fewer than one window of " +
                    std::to_string(window));
  }
  for (double s : audio.samples) {
    if (!std::isfinite(s)) {
      throw Error(ErrorCode::kNonFinite, "non-finite audio sample");
    }
  }
  const auto tau = static_cast<int>(1 + (n - window) / hop);
  const Fft fft(cfg.fft_size);
  const MelFilterbank bank(cfg);
  const std::vector<double> hann = HannWindow(window);
  Spectrogram out(tau, cfg.n_mels);
  std::vector<double> frame(window);
  for (int t = 0; t < tau; ++t) {
    const std::size_t start = static_cast<std::size_t>(t) * hop;
    for (int i = 0; i < window; ++i) {
      frame[i] = audio.samples[start + i] * hann[i];
    }
    const std::vector<double> energies = bank.Apply(fft.PowerSpectrum(frame));
    auto dst = out.mutable_frame(t);
    for (int k = 0; k < cfg.n_mels; ++k) {
      dst[k] = static_cast<float>(pmath::Log(std::max(energies[k], cfg.log_floor)));
    }
  }
  return out;
}

}  // namespace specaug
