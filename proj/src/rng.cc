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

#include "specaug/rng.h"

#include <cmath>
#include <string>

#include "specaug/errors.h"
#include "specaug/portable_math.h"

namespace specaug {
namespace {

constexpr std::uint64_t kMultiplier = 6364136223846793005ULL;

}  // namespace

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

SeededRng::SeededRng(std::uint64_t seed, std::uint64_t stream_id)
    : seed_(seed), stream_id_(stream_id), increment_((stream_id << 1) | 1U) {
  NextU32();
  state_ += seed;
  NextU32();
  words_ = 0;
}

std::uint32_t SeededRng::NextU32() {
  const std::uint64_t old = state_;
  state_ = old * kMultiplier + increment_;
  const auto xorshifted =
      static_cast<std::uint32_t>(((old >> 18U) ^ old) >> 27U);
  const auto rot = static_cast<std::uint32_t>(old >> 59U);
  ++words_;
  return (xorshifted >> rot) | (xorshifted << ((-rot) & 31U));
}

std::int64_t SeededRng::UniformInt(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) {
    throw ContractError("UniformInt: empty range [" + std::to_string(lo) +
                        ", " + std::to_string(hi) + "]");
  }
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span > 0xffffffffULL) {
    throw ContractError("UniformInt: range wider than 2^32");
  }
  if (span == 0xffffffffULL) {
    return lo + static_cast<std::int64_t>(NextU32());
  }
  const auto bound = static_cast<std::uint32_t>(span + 1);
  const std::uint32_t threshold = (0U - bound) % bound;
  for (;;) {
    const std::uint32_t r = NextU32();
    if (r >= threshold) return lo + static_cast<std::int64_t>(r % bound);
  }
}

double SeededRng::Uniform01() {
  const std::uint64_t a = NextU32();
  const std::uint64_t b = NextU32();
  return static_cast<double>(((a << 32U) | b) >> 11U) * 0x1.0p-53;
}

bool SeededRng::Bernoulli(double p) { return Uniform01() < p; }

double SeededRng::StandardNormal() {
  for (;;) {
    const double u = 2.0 * Uniform01() - 1.0;
    const double v = 2.0 * Uniform01() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) {
      return u * std::sqrt(-2.0 * pmath::Log(s) / s);
    }
  }
}

SeededRng DeriveStream(std::uint64_t seed, std::string_view utterance_id) {
  return SeededRng(seed, Fnv1a64(utterance_id));
}

}  // namespace specaug
