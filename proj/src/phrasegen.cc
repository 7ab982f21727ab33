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

#include "adjprobe/phrasegen.h"

#include <unordered_set>
#include <utility>

#include "adjprobe/errors.h"

namespace adjprobe {

Phrase::Phrase(std::vector<AdjectiveEntry> adjectives, std::string noun) {
  if (adjectives.empty()) {
    throw ContractError("phrase needs at least one adjective");
  }
  if (noun.empty()) throw ContractError("phrase needs a noun");
  terms_.reserve(adjectives.size() + 1);
  for (AdjectiveEntry& adjective : adjectives) {
    for (const Term& seen : terms_) {
      if (seen.surface == adjective.surface) {
        throw ContractError("repeated adjective '" + adjective.surface +
                            "' in phrase");
      }
    }
    text_ += adjective.surface;
    text_ += ' ';
    terms_.push_back({std::move(adjective.surface), adjective.type});
  }
  text_ += noun;
  terms_.push_back({std::move(noun), std::nullopt});
}

std::vector<AdjectiveType> Phrase::adjective_types() const {
  std::vector<AdjectiveType> types;
  types.reserve(adjective_count());
  for (std::size_t i = 0; i + 1 < terms_.size(); ++i) {
    types.push_back(*terms_[i].adjective_type);
  }
  return types;
}

namespace {

void ExtendPhrases(const Lexicon& lexicon, std::size_t length,
                   std::vector<std::size_t>& chosen,
                   std::vector<bool>& used, std::vector<Phrase>& out) {
  const auto& adjectives = lexicon.adjectives();
  if (chosen.size() == length) {
    for (const std::string& noun : lexicon.nouns()) {
      std::vector<AdjectiveEntry> entries;
      entries.reserve(length);
      for (std::size_t index : chosen) entries.push_back(adjectives[index]);
      out.emplace_back(std::move(entries), noun);
    }
    return;
  }
  for (std::size_t i = 0; i < adjectives.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    chosen.push_back(i);
    ExtendPhrases(lexicon, length, chosen, used, out);
    chosen.pop_back();
    used[i] = false;
  }
}

}  // namespace

std::vector<Phrase> GeneratePhrases(const Lexicon& lexicon,
                                    std::size_t max_adjectives) {
  if (max_adjectives == 0) {
    throw ContractError("max_adjectives must be at least 1");
  }
  std::vector<Phrase> out;
  if (lexicon.adjectives().empty() || lexicon.nouns().empty()) return out;
  out.reserve(PhraseCount(lexicon.adjectives().size(), lexicon.nouns().size(),
                          max_adjectives));
  std::vector<std::size_t> chosen;
  std::vector<bool> used(lexicon.adjectives().size(), false);
  for (std::size_t length = 1; length <= max_adjectives; ++length) {
    ExtendPhrases(lexicon, length, chosen, used, out);
  }
  return out;
}

std::size_t PhraseCount(std::size_t num_adjectives, std::size_t num_nouns,
                        std::size_t max_adjectives) {
  std::size_t total = 0;
  std::size_t arrangements = 1;
  for (std::size_t k = 1; k <= max_adjectives && k <= num_adjectives; ++k) {
    arrangements *= num_adjectives - k + 1;
    total += arrangements * num_nouns;
  }
  return total;
}

void ForEachPairQuadruple(const Lexicon& lexicon,
                          const std::function<void(const PairQuadruple&)>& fn) {
  const auto& adjectives = lexicon.adjectives();
  const auto& nouns = lexicon.nouns();
  if (adjectives.size() < 2 || nouns.size() < 2) return;
  for (std::size_t i = 0; i < adjectives.size(); ++i) {
    for (std::size_t j = 0; j < adjectives.size(); ++j) {
      if (i == j) continue;
      for (std::size_t k = 0; k < nouns.size(); ++k) {
        for (std::size_t l = k + 1; l < nouns.size(); ++l) {
          fn(PairQuadruple{adjectives[i], adjectives[j], nouns[k], nouns[l]});
        }
      }
    }
  }
}

std::vector<PairQuadruple> GeneratePairQuadruples(const Lexicon& lexicon) {
  std::vector<PairQuadruple> out;
  out.reserve(PairQuadrupleCount(lexicon.adjectives().size(),
                                 lexicon.nouns().size()));
  ForEachPairQuadruple(lexicon,
                       [&out](const PairQuadruple& q) { out.push_back(q); });
  return out;
}

std::size_t PairQuadrupleCount(std::size_t num_adjectives,
                               std::size_t num_nouns) {
  if (num_adjectives < 2 || num_nouns < 2) return 0;
  return num_adjectives * (num_adjectives - 1) * num_nouns * (num_nouns - 1) /
         2;
}

std::vector<std::string> PhraseTextsNeeded(
    std::span<const Phrase> phrases, std::span<const PairQuadruple> quadruples) {
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  auto add = [&](const std::string& text) {
    if (seen.insert(text).second) out.push_back(text);
  };
  for (const Phrase& phrase : phrases) add(phrase.text());
  for (const PairQuadruple& q : quadruples) {
    add(q.text_a1n1());
    add(q.text_a1n2());
    add(q.text_a2n1());
    add(q.text_a2n2());
  }
  for (const Phrase& phrase : phrases) {
    for (const Term& term : phrase.terms()) add(term.surface);
  }
  for (const PairQuadruple& q : quadruples) {
    add(q.a1.surface);
    add(q.a2.surface);
    add(q.n1);
    add(q.n2);
  }
  return out;
}

std::vector<std::size_t> CountByLength(std::span<const Phrase> phrases) {
  std::vector<std::size_t> counts(1, 0);
  for (const Phrase& phrase : phrases) {
    const std::size_t length = phrase.adjective_count();
    if (counts.size() <= length) counts.resize(length + 1, 0);
    ++counts[length];
  }
  return counts;
}

void WriteCorpus(std::span<const Phrase> phrases, std::ostream& out) {
  for (const Phrase& phrase : phrases) out << phrase.text() << '\n';
}

}  // namespace adjprobe
