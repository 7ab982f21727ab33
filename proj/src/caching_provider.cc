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

#include <mutex>
#include <unordered_set>

#include "adjprobe/errors.h"
#include "adjprobe/providers.h"

namespace adjprobe {

CachingProvider::CachingProvider(std::unique_ptr<EmbeddingProvider> inner,
                                 std::filesystem::path cache_file)
    : inner_(std::move(inner)), cache_file_(std::move(cache_file)) {
  if (!inner_) throw ContractError("caching provider needs an inner provider");
  const bool exists = std::filesystem::exists(cache_file_) &&
                      std::filesystem::file_size(cache_file_) > 0;
  if (exists) {
    store_ = LoadStore(cache_file_);
    if (store_.model_id() != inner_->model_id()) {
      throw DataError("cache file " + cache_file_.string() + " holds model '" +
                      store_.model_id() + "', expected '" +
                      inner_->model_id() + "'");
    }
  } else {
    store_ = EmbeddingStore(inner_->model_id());
    if (cache_file_.has_parent_path()) {
      std::filesystem::create_directories(cache_file_.parent_path());
    }
  }
  appender_.open(cache_file_, std::ios::binary | std::ios::app);
  if (!appender_) throw Error("cannot open cache file " + cache_file_.string());
  if (!exists) {
    // The dimension is unknown until the first vector arrives; readers accept
    // dim 0 in the header and take it from the records.
    appender_ << StoreHeaderLine(store_.model_id(), std::nullopt) << '\n';
    appender_.flush();
  }
}

std::vector<EmbeddingVector> CachingProvider::Embed(
    std::span<const std::string> texts) {
  std::vector<std::string> missing;
  {
    std::shared_lock lock(mutex_);
    std::unordered_set<std::string_view> queued;
    for (const std::string& text : texts) {
      if (!store_.Contains(text) && queued.insert(text).second) {
        missing.push_back(text);
      }
    }
  }
  if (!missing.empty()) {
    std::vector<EmbeddingVector> fetched = inner_->Embed(missing);
    if (fetched.size() != missing.size()) {
      throw ProtocolError("inner provider returned " +
                          std::to_string(fetched.size()) + " vectors for " +
                          std::to_string(missing.size()) + " texts");
    }
    std::unique_lock lock(mutex_);
    for (std::size_t i = 0; i < missing.size(); ++i) {
      if (store_.Insert(missing[i], fetched[i])) {
        WriteStoreRecord(missing[i], fetched[i], appender_);
        ++fetched_;
      }
    }
    appender_.flush();
    if (!appender_) throw Error("write failed for cache " + cache_file_.string());
  }
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  std::shared_lock lock(mutex_);
  for (const std::string& text : texts) out.push_back(store_.At(text));
  return out;
}

std::size_t CachingProvider::cached_count() const {
  std::shared_lock lock(mutex_);
  return store_.size();
}

std::filesystem::path CachingProvider::CacheFileFor(
    const std::filesystem::path& dir, const std::string& model_id) {
  std::string name;
  for (char c : model_id) {
    const bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    name += safe ? c : '_';
  }
  return dir / (name + ".jsonl");
}

}  // namespace adjprobe
