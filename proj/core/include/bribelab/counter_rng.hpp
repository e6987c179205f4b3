// Copyright 2026 The bribelab Authors
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

#ifndef BRIBELAB_COUNTER_RNG_HPP_
#define BRIBELAB_COUNTER_RNG_HPP_

#include <cstdint>

namespace bribelab {

// Stateless generator: every draw is a hash of (master seed, trial, step), so
// a draw never depends on how many other draws happened before it or on
// which thread made them. The mixing function is the SplitMix64 finalizer.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t master_seed) noexcept : key_(mix(master_seed ^ 0x6a09e667f3bcc909ULL)) {}

  constexpr std::uint64_t bits(std::uint64_t trial, std::uint64_t step) const noexcept {
    const std::uint64_t trial_key = mix(key_ + trial * kGolden);
    return mix(trial_key ^ mix(step + kStepOffset));
  }

  // Uniform on [0, 1) with 53 random bits.
  constexpr double uniform(std::uint64_t trial, std::uint64_t step) const noexcept {
    return static_cast<double>(bits(trial, step) >> 11) * 0x1.0p-53;
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kStepOffset = 0x3c6ef372fe94f82bULL;

  std::uint64_t key_;
};

}  // namespace bribelab

#endif  // BRIBELAB_COUNTER_RNG_HPP_
