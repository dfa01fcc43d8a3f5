// Copyright 2026 The defunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEFUNC_RNG_H_
#define DEFUNC_RNG_H_

#include <cstdint>

namespace defunc {

// SplitMix64 finalizer. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator: the n-th output depends only on (key, n), so a
// stream can be split by deriving child keys without any shared state.
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key) : key_(mix64(key)) {}

  constexpr std::uint64_t next() {
    return mix64(key_ + 0x9e3779b97f4a7c15ULL * ++counter_);
  }

  // Uniform in [lo, hi] (inclusive). Modulo bias is below 2^-32 for the
  // ranges used here and is irrelevant for fuzzing.
  constexpr std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    const std::uint64_t raw = next();
    const std::uint64_t offset = span == 0 ? raw : raw % span;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + offset);
  }

  // True with probability numerator / denominator.
  constexpr bool chance(std::uint64_t numerator, std::uint64_t denominator) {
    return next() % denominator < numerator;
  }

  // Independent child stream, e.g. one per fuzz case.
  constexpr CounterRng split(std::uint64_t index) const {
    return CounterRng(key_ ^ mix64(index + 0x632be59bd9b4e019ULL));
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Seed of the `index`-th case of a run seeded with `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return mix64(mix64(seed) ^ mix64(index * 0xd1b54a32d192ed03ULL + 1));
}

}  // namespace defunc

#endif  // DEFUNC_RNG_H_
