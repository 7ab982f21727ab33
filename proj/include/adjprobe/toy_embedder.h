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

#ifndef ADJPROBE_TOY_EMBEDDER_H_
#define ADJPROBE_TOY_EMBEDDER_H_

#include <cstdint>
#include <string>
#include <string_view>

#include "adjprobe/geometry.h"
#include "adjprobe/provider.h"

namespace adjprobe {

// Deterministic stand-in for a static word-vector model.
//
// Word vector for `word` under (seed, dim), bit-exact on any IEEE-754 host:
//   key = FNV-1a-64(word bytes) XOR SplitMix64(seed)
//   r_i = SplitMix64(key + i * 0x9e3779b97f4a7c15), i = 0 .. dim-1
//   x_i = 2 * ((r_i >> 11) * 2^-53) - 1
//   w   = x / sqrt(sum_i x_i^2)      (sum accumulated for i ascending)
// FNV-1a-64 uses offset 0xcbf29ce484222325 and prime 0x100000001b3. The
// SplitMix64 finalizer is z += 0x9e3779b97f4a7c15;
// z = (z ^ z>>30) * 0xbf58476d1ce4e5b9; z = (z ^ z>>27) * 0x94d049bb133111eb;
// z ^ z>>31. The build disables floating-point contraction.
//
// A text is split on spaces and its vector is the running mean of the word
// vectors in order (see MeanPool); the result is not renormalized.
EmbeddingVector ToyWordVector(std::uint64_t seed, Eigen::Index dim,
                              std::string_view word);

// Throws ContractError if dim < 2 or the text has no words.
EmbeddingVector ToyEmbed(std::uint64_t seed, Eigen::Index dim,
                         std::string_view text);

class ToyProvider : public EmbeddingProvider {
 public:
  ToyProvider(std::uint64_t seed, Eigen::Index dim);

  const std::string& model_id() const override { return model_id_; }
  std::vector<EmbeddingVector> Embed(
      std::span<const std::string> texts) override;

  std::uint64_t seed() const { return seed_; }
  Eigen::Index dim() const { return dim_; }

 private:
  std::uint64_t seed_;
  Eigen::Index dim_;
  std::string model_id_;
};

}  // namespace adjprobe

#endif  // ADJPROBE_TOY_EMBEDDER_H_
