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

#ifndef ADJPROBE_PHRASEGEN_H_
#define ADJPROBE_PHRASEGEN_H_

#include <cstddef>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "adjprobe/lexicon.h"

namespace adjprobe {

struct Term {
  std::string surface;
  // Set for adjectives, empty for the noun.
  std::optional<AdjectiveType> adjective_type;

  bool is_noun() const { return !adjective_type.has_value(); }
  friend bool operator==(const Term&, const Term&) = default;
};

// One word of the language (adj )+noun: one or more distinct adjectives
// followed by exactly one noun.
class Phrase {
 public:
  // Throws ContractError when the shape invariants do not hold.
  Phrase(std::vector<AdjectiveEntry> adjectives, std::string noun);

  const std::vector<Term>& terms() const { return terms_; }
  const std::string& text() const { return text_; }
  std::size_t adjective_count() const { return terms_.size() - 1; }
  const Term& noun() const { return terms_.back(); }
  std::vector<AdjectiveType> adjective_types() const;

  friend bool operator==(const Phrase& a, const Phrase& b) {
    return a.terms_ == b.terms_;
  }

 private:
  std::vector<Term> terms_;
  std::string text_;
};

// Two distinct adjectives crossed with two distinct nouns. The four phrases
// a1 n1, a1 n2, a2 n1, a2 n2 feed the pairwise relation.
struct PairQuadruple {
  AdjectiveEntry a1;
  AdjectiveEntry a2;
  std::string n1;
  std::string n2;

  std::string text_a1n1() const { return a1.surface + ' ' + n1; }
  std::string text_a1n2() const { return a1.surface + ' ' + n2; }
  std::string text_a2n1() const { return a2.surface + ' ' + n1; }
  std::string text_a2n2() const { return a2.surface + ' ' + n2; }

  friend bool operator==(const PairQuadruple&, const PairQuadruple&) = default;
};

// Every phrase with 1..max_adjectives ordered, repetition-free adjectives and
// one noun. Shorter phrases come first; within a length, adjective slots vary
// in source order (leftmost slowest) and the noun varies fastest.
// Throws ContractError if max_adjectives == 0.
std::vector<Phrase> GeneratePhrases(const Lexicon& lexicon,
                                    std::size_t max_adjectives);

// Closed-form corpus size: sum over k of A!/(A-k)! * N.
std::size_t PhraseCount(std::size_t num_adjectives, std::size_t num_nouns,
                        std::size_t max_adjectives);

// Visits every ordered adjective pair (a1 != a2) with every unordered noun
// pair {n1, n2}, n1 before n2 in source order. Visits nothing if the lexicon
// has fewer than two adjectives or nouns.
void ForEachPairQuadruple(const Lexicon& lexicon,
                          const std::function<void(const PairQuadruple&)>& fn);
std::vector<PairQuadruple> GeneratePairQuadruples(const Lexicon& lexicon);
std::size_t PairQuadrupleCount(std::size_t num_adjectives,
                               std::size_t num_nouns);

// De-duplicated texts to embed: phrase texts in order, then quadruple phrase
// texts, then every single term in first-appearance order.
std::vector<std::string> PhraseTextsNeeded(
    std::span<const Phrase> phrases, std::span<const PairQuadruple> quadruples);

// Number of phrases per adjective count; index 0 is unused.
std::vector<std::size_t> CountByLength(std::span<const Phrase> phrases);

// One phrase text per line, in the given order.
void WriteCorpus(std::span<const Phrase> phrases, std::ostream& out);

}  // namespace adjprobe

#endif  // ADJPROBE_PHRASEGEN_H_
