// Copyright 2026 The adjprobe Authors.
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

#ifndef ADJPROBE_HASHING_H_
#define ADJPROBE_HASHING_H_

#include <cstdint>
#include <string>
#include <string_view>

namespace adjprobe {

inline constexpr std::uint64_t kFnv64Offset = 0xcbf29ce484222325ULL;
inline constexpr std::uint64_t kFnv64Prime = 0x100000001b3ULL;

// 64-bit FNV-1a over the raw bytes of `data`, continuing from `state`.
constexpr std::uint64_t Fnv1a64(std::string_view data,
                                std::uint64_t state = kFnv64Offset) {
  for (char c : data) {
    state ^= static_cast<std::uint8_t>(c);
    state *= kFnv64Prime;
  }
  return state;
}

// SplitMix64 finalizer (Steele, Lea & Flood), constants as published.
constexpr std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based stream: the i-th draw for `key` is SplitMix64(key + i * gamma).
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  explicit constexpr CounterRng(std::uint64_t key) : key_(key) {}

  constexpr std::uint64_t At(std::uint64_t counter) const {
    return SplitMix64(key_ + counter * kGamma);
  }
  constexpr std::uint64_t Next() { return At(counter_++); }

  // Uniform double in [0, 1) built from the top 53 bits.
  double NextUnit() { return static_cast<double>(Next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound), bound > 0. Rejection keeps it unbiased.
  std::uint64_t NextBelow(std::uint64_t bound);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Lower-case 16-digit hexadecimal rendering of a 64-bit digest.
std::string HexDigest(std::uint64_t digest);

}  // namespace adjprobe

#endif  // ADJPROBE_HASHING_H_
