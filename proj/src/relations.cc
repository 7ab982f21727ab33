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

#include "adjprobe/relations.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>

#include "adjprobe/errors.h"
#include "adjprobe/geometry.h"
#include "adjprobe/parallel.h"
#include "json.hpp"

namespace adjprobe {
namespace {

constexpr std::array<std::string_view, 3> kRelationNames = {
    "intersectivity", "pair-intersectivity", "non-subsectivity"};

double SnapTie(double margin) {
  return std::abs(margin) <= kTieEpsilon ? 0.0 : margin;
}

template <typename Fn>
std::vector<RelationOutcome> EvaluateAll(std::size_t count,
                                         std::size_t workers, Fn&& eval) {
  std::vector<RelationOutcome> out(count);
  ParallelFor(count, workers, [&](std::size_t i) { out[i] = eval(i); });
  return out;
}

}  // namespace

std::string_view RelationName(RelationId id) {
  return kRelationNames[static_cast<std::size_t>(id)];
}

std::optional<RelationId> ParseRelationName(std::string_view name) {
  for (std::size_t i = 0; i < kRelationNames.size(); ++i) {
    if (kRelationNames[i] == name) return static_cast<RelationId>(i);
  }
  return std::nullopt;
}

std::string QuadrupleKey(const PairQuadruple& q) {
  return q.text_a1n1() + " | " + q.text_a1n2() + " | " + q.text_a2n1() +
         " | " + q.text_a2n2();
}

RelationOutcome EvalIntersectivity(const Phrase& phrase,
                                   const EmbeddingStore& embeddings) {
  const EmbeddingVector& p = embeddings.At(phrase.text());
  std::vector<const EmbeddingVector*> terms;
  terms.reserve(phrase.terms().size());
  for (const Term& term : phrase.terms()) {
    terms.push_back(&embeddings.At(term.surface));
  }
  double farthest_term = 0.0;
  for (const EmbeddingVector* t : terms) {
    farthest_term = std::max(farthest_term, CosineDistance(p, *t));
  }
  double closest_pair = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < terms.size(); ++j) {
    for (std::size_t k = j + 1; k < terms.size(); ++k) {
      closest_pair = std::min(closest_pair, CosineDistance(*terms[j], *terms[k]));
    }
  }
  const double margin = SnapTie(closest_pair - farthest_term);
  return {RelationId::kIntersectivity, phrase.text(), phrase.adjective_types(),
          margin >= 0.0, margin};
}

RelationOutcome EvalPairIntersectivity(const PairQuadruple& q,
                                       const EmbeddingStore& embeddings) {
  const double lhs = CosineDistance(embeddings.At(q.text_a1n1()),
                                    embeddings.At(q.text_a1n2()));
  const double rhs = CosineDistance(embeddings.At(q.text_a2n1()),
                                    embeddings.At(q.text_a2n2()));
  const double margin = SnapTie(rhs - lhs);
  return {RelationId::kPairIntersectivity, QuadrupleKey(q),
          {q.a1.type, q.a2.type}, margin > 0.0, margin};
}

RelationOutcome EvalNonSubsectivity(const Phrase& phrase,
                                    const EmbeddingStore& embeddings) {
  if (phrase.adjective_count() != 1) {
    throw ContractError("non-subsectivity needs a single-adjective phrase, got '" +
                        phrase.text() + "'");
  }
  const EmbeddingVector& p = embeddings.At(phrase.text());
  const double to_adjective =
      CosineDistance(p, embeddings.At(phrase.terms()[0].surface));
  const double to_noun = CosineDistance(p, embeddings.At(phrase.noun().surface));
  const double margin = SnapTie(to_noun - to_adjective);
  return {RelationId::kNonSubsectivity, phrase.text(), phrase.adjective_types(),
          margin >= 0.0, margin};
}

std::vector<RelationOutcome> EvaluateIntersectivity(
    std::span<const Phrase> phrases, const EmbeddingStore& embeddings,
    std::size_t workers) {
  return EvaluateAll(phrases.size(), workers, [&](std::size_t i) {
    return EvalIntersectivity(phrases[i], embeddings);
  });
}

std::vector<RelationOutcome> EvaluatePairIntersectivity(
    std::span<const PairQuadruple> quadruples,
    const EmbeddingStore& embeddings, std::size_t workers) {
  return EvaluateAll(quadruples.size(), workers, [&](std::size_t i) {
    return EvalPairIntersectivity(quadruples[i], embeddings);
  });
}

std::vector<RelationOutcome> EvaluateNonSubsectivity(
    std::span<const Phrase> phrases, const EmbeddingStore& embeddings,
    std::size_t workers) {
  return EvaluateAll(phrases.size(), workers, [&](std::size_t i) {
    return EvalNonSubsectivity(phrases[i], embeddings);
  });
}

std::string GroupKey::Label() const {
  if (!second) return std::string(ShortName(first));
  return "(" + std::string(ShortName(first)) + ", " +
         std::string(ShortName(*second)) + ")";
}

std::optional<GroupKey> ParseGroupLabel(std::string_view label) {
  if (auto single = ParseShortName(label)) return GroupKey{*single, std::nullopt};
  if (label.size() < 2 || label.front() != '(' || label.back() != ')') {
    return std::nullopt;
  }
  label = label.substr(1, label.size() - 2);
  const auto comma = label.find(',');
  if (comma == std::string_view::npos) return std::nullopt;
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  auto first = ParseShortName(trim(label.substr(0, comma)));
  auto second = ParseShortName(trim(label.substr(comma + 1)));
  if (!first || !second) return std::nullopt;
  return GroupKey{*first, *second};
}

std::vector<ConsistencyCell> Aggregate(std::span<const RelationOutcome> outcomes,
                                       Grouping grouping) {
  const std::size_t arity = grouping == Grouping::kByType ? 1 : 2;
  std::map<GroupKey, ConsistencyCell> cells;
  for (const RelationOutcome& outcome : outcomes) {
    if (outcome.type_tags.size() != arity) {
      throw ContractError("outcome '" + outcome.input_key + "' has " +
                          std::to_string(outcome.type_tags.size()) +
                          " type tags, grouping needs " + std::to_string(arity));
    }
    GroupKey key{outcome.type_tags[0],
                 arity == 2 ? std::optional(outcome.type_tags[1]) : std::nullopt};
    ConsistencyCell& cell = cells.try_emplace(key, ConsistencyCell{key}).first->second;
    ++cell.total;
    if (outcome.satisfied) ++cell.satisfied;
    if (outcome.margin == 0.0) ++cell.ties;
  }
  std::vector<ConsistencyCell> out;
  out.reserve(cells.size());
  for (auto& [key, cell] : cells) out.push_back(cell);
  return out;
}

GlobalRate Summarize(std::span<const RelationOutcome> outcomes) {
  GlobalRate global;
  for (const RelationOutcome& outcome : outcomes) {
    ++global.total;
    if (outcome.satisfied) ++global.satisfied;
    if (outcome.margin == 0.0) ++global.ties;
  }
  return global;
}

void WriteOutcomeRecord(const RelationOutcome& outcome, std::ostream& out) {
  nlohmann::ordered_json record;
  record["relation"] = RelationName(outcome.relation);
  record["input"] = outcome.input_key;
  nlohmann::ordered_json types = nlohmann::ordered_json::array();
  for (AdjectiveType t : outcome.type_tags) types.push_back(ShortName(t));
  record["types"] = std::move(types);
  record["satisfied"] = outcome.satisfied;
  record["margin"] = outcome.margin;
  out << record.dump() << '\n';
}

}  // namespace adjprobe
