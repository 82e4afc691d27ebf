// Copyright 2026 The Fockrail Authors
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

#ifndef FOCKRAIL_RNG_HPP_
#define FOCKRAIL_RNG_HPP_

#include <cstdint>

namespace fockrail {

/// Counter-based SplitMix64 stream.
///
/// Stream split rule: shot k of a run seeded with S draws from the stream
/// whose initial state is mix(S) ^ mix(k + 0x9E3779B97F4A7C15). Draw j within
/// that stream is mix(state + (j + 1) * 0x9E3779B97F4A7C15). A shot's draws
/// depend only on (S, k), never on thread scheduling.
class CounterRng {
 public:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

  CounterRng(std::uint64_t seed, std::uint64_t stream) : state_(mix(seed) ^ mix(stream + kGolden)) {}

  std::uint64_t next() {
    state_ += kGolden;
    return mix(state_);
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace fockrail

#endif  // FOCKRAIL_RNG_HPP_
