// Copyright 2026 The Authors.
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

#ifndef PROPHET_RANDOM_H_
#define PROPHET_RANDOM_H_

#include <cstdint>
#include <limits>

namespace prophet {

// Counter-based random stream. Stream (seed, id) is a pure function of its
// two keys, so trial i can be replayed without touching trials 0..i-1.
// Output k is splitmix64(key + (k + 1) * golden); key mixes seed and id.
class RandomStream {
 public:
  using result_type = std::uint64_t;

  RandomStream(std::uint64_t seed, std::uint64_t stream_id)
      : key_(mix(mix(seed) ^ (stream_id * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() {
    counter_ += 0x9E3779B97F4A7C15ULL;
    return mix(key_ + counter_);
  }

  // Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Stream ids at or above this tag are reserved for estimator panels and
// offline Monte Carlo, keeping them disjoint from trial-indexed streams.
inline constexpr std::uint64_t kAuxStreamBase = 1ULL << 63;
inline constexpr std::uint64_t kOptStream = kAuxStreamBase + 1;
inline constexpr std::uint64_t kPriceStream = kAuxStreamBase + 2;
inline constexpr std::uint64_t kPolicyStream = kAuxStreamBase + 3;

}  // namespace prophet

#endif  // PROPHET_RANDOM_H_
