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

#include "adjprobe/toy_embedder.h"

#include <vector>

#include "adjprobe/errors.h"
#include "adjprobe/hashing.h"

namespace adjprobe {

EmbeddingVector ToyWordVector(std::uint64_t seed, Eigen::Index dim,
                              std::string_view word) {
  if (dim < 2) throw ContractError("toy embedding dimension must be >= 2");
  if (word.empty()) throw ContractError("toy embedding of an empty word");
  const CounterRng rng(Fnv1a64(word) ^ SplitMix64(seed));
  EmbeddingVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double unit =
        static_cast<double>(rng.At(static_cast<std::uint64_t>(i)) >> 11) *
        0x1.0p-53;
    v(i) = 2.0 * unit - 1.0;
  }
  return L2Normalize(v);
}

EmbeddingVector ToyEmbed(std::uint64_t seed, Eigen::Index dim,
                         std::string_view text) {
  std::vector<EmbeddingVector> words;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(' ', pos);
    if (end == std::string_view::npos) end = text.size();
    if (end > pos) words.push_back(ToyWordVector(seed, dim, text.substr(pos, end - pos)));
    pos = end + 1;
  }
  if (words.empty()) throw ContractError("toy embedding of an empty text");
  return MeanPool<double>(words);
}

ToyProvider::ToyProvider(std::uint64_t seed, Eigen::Index dim)
    : seed_(seed),
      dim_(dim),
      model_id_("toy:" + std::to_string(seed) + ":" + std::to_string(dim)) {
  if (dim < 2) throw ContractError("toy embedding dimension must be >= 2");
}

std::vector<EmbeddingVector> ToyProvider::Embed(
    std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const std::string& text : texts) out.push_back(ToyEmbed(seed_, dim_, text));
  return out;
}

}  // namespace adjprobe
