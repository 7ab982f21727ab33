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

#ifndef ADJPROBE_RELATIONS_H_
#define ADJPROBE_RELATIONS_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adjprobe/embedding_store.h"
#include "adjprobe/lexicon.h"
#include "adjprobe/phrasegen.h"

namespace adjprobe {

enum class RelationId {
  // Phrase sits closer to each of its terms than any two terms sit to each
  // other (non-strict).
  kIntersectivity,
  // Swapping the noun under a1 moves the phrase less than under a2 (strict).
  kPairIntersectivity,
  // Phrase sits at least as close to its adjective as to its noun.
  kNonSubsectivity,
};

std::string_view RelationName(RelationId id);
std::optional<RelationId> ParseRelationName(std::string_view name);

// Margins with magnitude at or below this are floating-point ties and are
// recorded as exactly 0. Cosine distances live in [0, 2], so this is far
// below any meaningful geometric difference.
inline constexpr double kTieEpsilon = 1e-12;

struct RelationOutcome {
  RelationId relation;
  std::string input_key;
  // Adjective types left to right for phrases; (type(a1), type(a2)) for
  // quadruples.
  std::vector<AdjectiveType> type_tags;
  bool satisfied = false;
  // Right-hand side minus left-hand side at the binding comparison.
  double margin = 0.0;

  friend bool operator==(const RelationOutcome&,
                         const RelationOutcome&) = default;
};

std::string QuadrupleKey(const PairQuadruple& q);

// All evaluators raise MissingEmbeddingError when a required text has no
// vector in `embeddings`.
RelationOutcome EvalIntersectivity(const Phrase& phrase,
                                   const EmbeddingStore& embeddings);
RelationOutcome EvalPairIntersectivity(const PairQuadruple& q,
                                       const EmbeddingStore& embeddings);
// Throws ContractError unless the phrase has exactly one adjective.
RelationOutcome EvalNonSubsectivity(const Phrase& phrase,
                                    const EmbeddingStore& embeddings);

// Batch forms; output order matches input order for any worker count.
// workers == 0 picks the hardware concurrency.
std::vector<RelationOutcome> EvaluateIntersectivity(
    std::span<const Phrase> phrases, const EmbeddingStore& embeddings,
    std::size_t workers = 0);
std::vector<RelationOutcome> EvaluatePairIntersectivity(
    std::span<const PairQuadruple> quadruples,
    const EmbeddingStore& embeddings, std::size_t workers = 0);
std::vector<RelationOutcome> EvaluateNonSubsectivity(
    std::span<const Phrase> phrases, const EmbeddingStore& embeddings,
    std::size_t workers = 0);

enum class Grouping { kByType, kByOrderedTypePair };

// A single type, or an ordered (first, second) type pair.
struct GroupKey {
  AdjectiveType first;
  std::optional<AdjectiveType> second;

  // "S-I" or "(S-I, S-NI)".
  std::string Label() const;
  friend auto operator<=>(const GroupKey&, const GroupKey&) = default;
};

std::optional<GroupKey> ParseGroupLabel(std::string_view label);

struct ConsistencyCell {
  GroupKey key;
  std::size_t satisfied = 0;
  std::size_t total = 0;
  std::size_t ties = 0;

  double rate() const {
    return total == 0 ? 0.0 : static_cast<double>(satisfied) /
                                  static_cast<double>(total);
  }
  friend bool operator==(const ConsistencyCell&,
                         const ConsistencyCell&) = default;
};

// Groups outcomes by their type tags and counts satisfactions. kByType needs
// exactly one tag per outcome, kByOrderedTypePair exactly two (ContractError
// otherwise). Cells come out in key order; empty groups are omitted.
std::vector<ConsistencyCell> Aggregate(std::span<const RelationOutcome> outcomes,
                                       Grouping grouping);

struct GlobalRate {
  std::size_t satisfied = 0;
  std::size_t total = 0;
  std::size_t ties = 0;
  double rate() const {
    return total == 0 ? 0.0 : static_cast<double>(satisfied) /
                                  static_cast<double>(total);
  }
};
GlobalRate Summarize(std::span<const RelationOutcome> outcomes);

// One JSON object per line: relation, input, types, satisfied, margin.
void WriteOutcomeRecord(const RelationOutcome& outcome, std::ostream& out);

}  // namespace adjprobe

#endif  // ADJPROBE_RELATIONS_H_
