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

// Deterministic random streams.
//
// Generator: PCG32, the "pcg_setseq_64_xsh_rr_32" member of the PCG family
// (M. E. O'Neill, 2014): a 64-bit LCG with multiplier 6364136223846793005
// and odd increment (2 * stream_id + 1), output permuted by XSH-RR. Seeding
// follows pcg32_srandom_r: state = 0, step, state += seed, step.
// Reference vector (seed 42, stream 54), first six outputs:
//   0xa15c02b7 0x7b47f409 0xba1d3330 0x83d2f293 0xbfa4784b 0xcbed606e
//
// Derived primitives, all frozen:
//   UniformInt(lo, hi)  inclusive on both ends. bound = hi - lo + 1;
//                       reject r < (2^32 - bound) mod bound, return
//                       lo + r mod bound (pcg32_boundedrand_r). One or more
//                       32-bit words per call. Requires hi - lo < 2^32.
//   Uniform01()         two words a, b; ((a << 32 | b) >> 11) * 2^-53.
//   Bernoulli(p)        Uniform01() < p.
//   StandardNormal()    Marsaglia polar method: u = 2 Uniform01() - 1,
//                       v = 2 Uniform01() - 1, retry while s = u^2 + v^2 is
//                       0 or >= 1, return u * sqrt(-2 ln(s) / s). The
//                       second variate is discarded. ln is pmath::Log.
//
// Stream derivation: stream_id = FNV-1a 64 of the utterance id's bytes
// (offset basis 0xcbf29ce484222325, prime 0x100000001b3; xor then
// multiply per byte).

#ifndef SPECAUG_RNG_H_
#define SPECAUG_RNG_H_

#include <cstdint>
#include <string_view>

namespace specaug {

std::uint64_t Fnv1a64(std::string_view bytes);

class SeededRng {
 public:
  SeededRng(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  // Number of 32-bit words consumed so far.
  std::uint64_t words_consumed() const { return words_; }

  std::uint32_t NextU32();
  std::int64_t UniformInt(std::int64_t lo, std::int64_t hi);
  double Uniform01();
  bool Bernoulli(double p);
  double StandardNormal();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::uint64_t state_ = 0;
  std::uint64_t increment_;
  std::uint64_t words_ = 0;
};

SeededRng DeriveStream(std::uint64_t seed, std::string_view utterance_id);

}  // namespace specaug

#endif  // SPECAUG_RNG_H_
