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

#include "adjprobe/providers.h"

namespace adjprobe {

FileProvider::FileProvider(EmbeddingStore store) : store_(std::move(store)) {}

std::unique_ptr<FileProvider> FileProvider::Open(
    const std::filesystem::path& path) {
  return std::make_unique<FileProvider>(LoadStore(path));
}

std::vector<EmbeddingVector> FileProvider::Embed(
    std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const std::string& text : texts) out.push_back(store_.At(text));
  return out;
}

}  // namespace adjprobe
