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

#ifndef ADJPROBE_EMBEDDING_STORE_H_
#define ADJPROBE_EMBEDDING_STORE_H_

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "adjprobe/geometry.h"

namespace adjprobe {

// Text -> vector map for one model, all vectors of one dimension. Keeps
// insertion order so saved files are deterministic.
class EmbeddingStore {
 public:
  using Entry = std::pair<std::string, EmbeddingVector>;

  explicit EmbeddingStore(std::string model_id = "",
                          std::optional<Eigen::Index> dimension = std::nullopt);

  const std::string& model_id() const { return model_id_; }
  // Unset until the first insert unless given at construction.
  std::optional<Eigen::Index> dimension() const { return dimension_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  // Returns false (and keeps the existing vector) if the text is present.
  // Throws DataError on a dimension clash or a non-finite component.
  bool Insert(std::string text, EmbeddingVector vector);

  const EmbeddingVector* Find(std::string_view text) const;
  bool Contains(std::string_view text) const { return Find(text) != nullptr; }
  // Throws MissingEmbeddingError naming the text.
  const EmbeddingVector& At(std::string_view text) const;

  friend bool operator==(const EmbeddingStore& a, const EmbeddingStore& b);

 private:
  std::string model_id_;
  std::optional<Eigen::Index> dimension_;
  std::vector<Entry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Line-delimited JSON. First line {"model": ..., "dim": ...} (dim 0 when
// unset), then one {"text": ..., "vector": [...]} per entry. Numbers are
// written in shortest round-trip form.
void WriteStore(const EmbeddingStore& store, std::ostream& out);
void WriteStoreRecord(const std::string& text, const EmbeddingVector& vector,
                      std::ostream& out);
std::string StoreHeaderLine(const std::string& model_id,
                            std::optional<Eigen::Index> dimension);

// An empty document yields an empty store. Malformed records raise
// FormatError with the line number; dimension clashes raise DataError.
EmbeddingStore ReadStore(std::istream& in);

void SaveStore(const EmbeddingStore& store, const std::filesystem::path& path);
EmbeddingStore LoadStore(const std::filesystem::path& path);

}  // namespace adjprobe

#endif  // ADJPROBE_EMBEDDING_STORE_H_
