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

#ifndef ADJPROBE_PROVIDER_H_
#define ADJPROBE_PROVIDER_H_

#include <span>
#include <string>
#include <vector>

#include "adjprobe/geometry.h"

namespace adjprobe {

// Source of text embeddings for one model. Implementations return one vector
// per input text, in input order, all of one dimension; the same text always
// maps to the same vector. Embed may be called from several threads.
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;

  virtual const std::string& model_id() const = 0;
  virtual std::vector<EmbeddingVector> Embed(
      std::span<const std::string> texts) = 0;
};

}  // namespace adjprobe

#endif  // ADJPROBE_PROVIDER_H_
