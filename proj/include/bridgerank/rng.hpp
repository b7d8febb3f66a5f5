// Copyright 2026 The bridgerank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BRIDGERANK_RNG_HPP
#define BRIDGERANK_RNG_HPP

#include <cstdint>
#include <limits>
#include <random>

namespace bridgerank {

// All randomness in the library flows through this wrapper. std::mt19937_64
// output is fully specified by the standard, and the [0,1) mapping below uses
// only exact floating-point operations, so every stream is bit-reproducible
// across platforms. The std::uniform_* distributions are implementation
// defined and must not be used anywhere results are persisted.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  /// Uniform double in [lo, hi). Degenerate intervals return lo.
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform01();
  }

  /// Unbiased uniform integer in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t rem = (kMax % n + 1) % n;  // 2^64 mod n
    std::uint64_t x = engine_();
    while (rem != 0 && x > kMax - rem) {
      x = engine_();
    }
    return x % n;
  }

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer, used to derive independent substream seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Derives the seed for substream `index` of the stream family `tag`.
/// Distinct (tag, index) pairs yield statistically independent streams,
/// which lets one experiment seed drive every stage deterministically.
constexpr std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t tag,
                                       std::uint64_t index) {
  return mix64(seed ^ mix64(tag) ^ mix64(mix64(index) + tag));
}

namespace stream_tag {
inline constexpr std::uint64_t kSimulate = 0x53494D00;  // vote generation
inline constexpr std::uint64_t kAttack = 0x41545400;    // sybil injection
}  // namespace stream_tag

}  // namespace bridgerank

#endif  // BRIDGERANK_RNG_HPP
