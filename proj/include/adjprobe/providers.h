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

#ifndef ADJPROBE_PROVIDERS_H_
#define ADJPROBE_PROVIDERS_H_

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <memory>
#include <shared_mutex>
#include <span>
#include <string>
#include <vector>

#include "adjprobe/embedding_store.h"
#include "adjprobe/provider.h"

namespace adjprobe {

// Serves vectors from a preloaded store. Unknown texts raise
// MissingEmbeddingError naming the text.
class FileProvider : public EmbeddingProvider {
 public:
  explicit FileProvider(EmbeddingStore store);
  static std::unique_ptr<FileProvider> Open(const std::filesystem::path& path);

  const std::string& model_id() const override { return store_.model_id(); }
  std::vector<EmbeddingVector> Embed(
      std::span<const std::string> texts) override;

 private:
  EmbeddingStore store_;
};

struct RemoteOptions {
  std::size_t batch_size = 64;
  int max_attempts = 4;
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::milliseconds max_backoff{5000};
  std::chrono::seconds timeout{120};
};

struct RemoteModel {
  std::string id;
  Eigen::Index dim = 0;
};

// Splits an http://host[:port][/prefix] URL. The scheme may be omitted.
struct Endpoint {
  std::string scheme_host_port;
  std::string path_prefix;
};
Endpoint ParseEndpoint(const std::string& url);

// Number of POST /embed requests needed for `count` texts.
std::size_t BatchCount(std::size_t count, std::size_t batch_size);

// POST <endpoint>/embed in batches of options.batch_size, order preserved.
// Transient failures (no response, 429, 5xx) are retried with exponential
// backoff up to max_attempts per batch. Raises TransportError when a batch
// still fails, ProtocolError on a malformed or misaligned response, DataError
// on non-finite components or inconsistent dimensions.
std::vector<EmbeddingVector> FetchRemote(const std::string& endpoint,
                                         const std::string& model_id,
                                         std::span<const std::string> texts,
                                         const RemoteOptions& options = {});

// GET <endpoint>/models.
std::vector<RemoteModel> ListRemoteModels(const std::string& endpoint,
                                          const RemoteOptions& options = {});

class RemoteProvider : public EmbeddingProvider {
 public:
  RemoteProvider(std::string endpoint, std::string model_id,
                 RemoteOptions options = {});

  const std::string& model_id() const override { return model_id_; }
  std::vector<EmbeddingVector> Embed(
      std::span<const std::string> texts) override;

 private:
  std::string endpoint_;
  std::string model_id_;
  RemoteOptions options_;
};

// Persistent (model id, text) -> vector cache in front of another provider.
// The cache file uses the vector file format and is appended as new vectors
// arrive, so an interrupted run keeps its progress. Writers are serialized;
// readers see either no entry or the complete vector.
class CachingProvider : public EmbeddingProvider {
 public:
  CachingProvider(std::unique_ptr<EmbeddingProvider> inner,
                  std::filesystem::path cache_file);

  const std::string& model_id() const override { return inner_->model_id(); }
  std::vector<EmbeddingVector> Embed(
      std::span<const std::string> texts) override;

  std::size_t cached_count() const;
  std::size_t fetched_count() const { return fetched_; }

  // File name used for a model's cache inside a cache directory.
  static std::filesystem::path CacheFileFor(const std::filesystem::path& dir,
                                            const std::string& model_id);

 private:
  std::unique_ptr<EmbeddingProvider> inner_;
  std::filesystem::path cache_file_;
  mutable std::shared_mutex mutex_;
  EmbeddingStore store_;
  std::ofstream appender_;
  std::size_t fetched_ = 0;
};

}  // namespace adjprobe

#endif  // ADJPROBE_PROVIDERS_H_
