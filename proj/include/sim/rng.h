// Copyright 2026 The topics-qif Authors
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

#ifndef TOPICSQIF_SIM_RNG_H_
#define TOPICSQIF_SIM_RNG_H_

#include <cstdint>

namespace sim {

// Counter-based splitmix64 stream. The same seed yields the same sequence on
// every platform; no library distributions are involved anywhere, so draws
// are reproducible bit for bit.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t NextUint64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // 53-bit mantissa uniform in [0, 1).
  double NextDouble() {
    return static_cast<double>(NextUint64() >> 11) * 0x1.0p-53;
  }

  // Uniform in [0, n) by multiply-shift; rejection-free, bias below 2^-64.
  std::uint64_t NextBelow(std::uint64_t n) {
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(NextUint64()) * n;
    return static_cast<std::uint64_t>(wide >> 64);
  }

  bool NextBernoulli(double p) { return NextDouble() < p; }

  // Independently seeded stream for partitioned work; merging partition
  // results by summation is order-independent.
  Rng Substream(std::uint64_t index) const {
    Rng mixer(state_ ^ (0xD1B54A32D192ED03ull * (index + 1)));
    return Rng(mixer.NextUint64());
  }

 private:
  std::uint64_t state_;
};

}  // namespace sim

#endif  // TOPICSQIF_SIM_RNG_H_
