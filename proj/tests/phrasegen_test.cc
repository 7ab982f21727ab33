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

#include <random>
#include <set>
#include <sstream>

#include "adjprobe/errors.h"
#include "gtest/gtest.h"

namespace adjprobe {
namespace {

Lexicon SmallLexicon(std::size_t num_adj, std::size_t num_nouns) {
  std::vector<AdjectiveEntry> adjectives;
  for (std::size_t i = 0; i < num_adj; ++i) {
    adjectives.push_back({"adj" + std::to_string(i),
                          kAllAdjectiveTypes[i % kNumAdjectiveTypes]});
  }
  std::vector<std::string> nouns;
  for (std::size_t i = 0; i < num_nouns; ++i) {
    nouns.push_back("noun" + std::to_string(i));
  }
  return Lexicon::Create(adjectives, nouns);
}

// Independent enumeration: every word over the alphabet of length k+1 whose
// first k symbols are distinct adjectives and whose last is a noun.
std::set<std::string> BruteForceTexts(const Lexicon& lex, std::size_t max_adj) {
  std::set<std::string> out;
  std::vector<std::string> symbols;
  for (const auto& a : lex.adjectives()) symbols.push_back(a.surface);
  for (const auto& n : lex.nouns()) symbols.push_back(n);
  for (std::size_t k = 1; k <= max_adj; ++k) {
    std::vector<std::size_t> idx(k + 1, 0);
    for (;;) {
      bool ok = lex.IsNoun(symbols[idx[k]]);
      std::set<std::size_t> seen;
      for (std::size_t i = 0; i < k && ok; ++i) {
        ok = !lex.IsNoun(symbols[idx[i]]) && seen.insert(idx[i]).second;
      }
      if (ok) {
        std::string text;
        for (std::size_t i = 0; i <= k; ++i) {
          if (i) text += ' ';
          text += symbols[idx[i]];
        }
        out.insert(text);
      }
      std::size_t pos = 0;
      while (pos <= k && ++idx[pos] == symbols.size()) idx[pos++] = 0;
      if (pos > k) break;
    }
  }
  return out;
}

TEST(PhrasegenTest, DefaultLexiconCorpusSize) {
  const auto phrases = GeneratePhrases(DefaultLexicon(), 2);
  EXPECT_EQ(phrases.size(), 44652u);
  const auto by_length = CountByLength(phrases);
  ASSERT_EQ(by_length.size(), 3u);
  EXPECT_EQ(by_length[1], 732u);
  EXPECT_EQ(by_length[2], 43920u);
  EXPECT_EQ(GeneratePhrases(DefaultLexicon(), 1).size(), 732u);
}

TEST(PhrasegenTest, SingleAdjectiveSingleNoun) {
  const Lexicon lex = Lexicon::Create(
      {{"fake", AdjectiveType::kNonSubsectivePrivative}}, {"gun"});
  const auto phrases = GeneratePhrases(lex, 2);
  ASSERT_EQ(phrases.size(), 1u);
  EXPECT_EQ(phrases[0].text(), "fake gun");
  EXPECT_EQ(PairQuadrupleCount(1, 1), 0u);
  EXPECT_TRUE(GeneratePairQuadruples(lex).empty());
}

TEST(PhrasegenTest, ZeroMaxAdjectivesRejected) {
  EXPECT_THROW(GeneratePhrases(DefaultLexicon(), 0), ContractError);
}

TEST(PhrasegenTest, OrderShortFirstNounFastest) {
  const Lexicon lex = SmallLexicon(2, 2);
  std::vector<std::string> texts;
  for (const auto& p : GeneratePhrases(lex, 2)) texts.push_back(p.text());
  EXPECT_EQ(texts, (std::vector<std::string>{
                       "adj0 noun0", "adj0 noun1", "adj1 noun0", "adj1 noun1",
                       "adj0 adj1 noun0", "adj0 adj1 noun1",
                       "adj1 adj0 noun0", "adj1 adj0 noun1"}));
}

TEST(PhrasegenTest, MatchesBruteForceEnumeration) {
  for (std::size_t a = 1; a <= 4; ++a) {
    for (std::size_t n = 1; n <= 3; ++n) {
      for (std::size_t k = 1; k <= 3; ++k) {
        const Lexicon lex = SmallLexicon(a, n);
        const auto phrases = GeneratePhrases(lex, k);
        std::set<std::string> generated;
        for (const auto& p : phrases) generated.insert(p.text());
        EXPECT_EQ(generated.size(), phrases.size());
        EXPECT_EQ(generated, BruteForceTexts(lex, k))
            << a << " adjectives, " << n << " nouns, max " << k;
        EXPECT_EQ(PhraseCount(a, n, k), phrases.size());
      }
    }
  }
}

TEST(PhrasegenTest, PhraseShapeContract) {
  const AdjectiveEntry red{"red", AdjectiveType::kSubsectiveIntersective};
  EXPECT_THROW(Phrase({}, "dog"), ContractError);
  EXPECT_THROW(Phrase({red, red}, "dog"), ContractError);
  const Phrase p({red, {"fake", AdjectiveType::kNonSubsectivePrivative}}, "dog");
  EXPECT_EQ(p.text(), "red fake dog");
  EXPECT_EQ(p.adjective_count(), 2u);
  EXPECT_TRUE(p.noun().is_noun());
  EXPECT_EQ(p.noun().surface, "dog");
  EXPECT_EQ(p.adjective_types(),
            (std::vector<AdjectiveType>{
                AdjectiveType::kSubsectiveIntersective,
                AdjectiveType::kNonSubsectivePrivative}));
}

TEST(PhrasegenTest, QuadrupleCounts) {
  EXPECT_EQ(GeneratePairQuadruples(DefaultLexicon()).size(), 241560u);
  EXPECT_EQ(PairQuadrupleCount(61, 12), 241560u);
  const auto two = GeneratePairQuadruples(SmallLexicon(2, 2));
  ASSERT_EQ(two.size(), 2u);
  EXPECT_EQ(two[0].text_a1n1(), "adj0 noun0");
  EXPECT_EQ(two[0].text_a2n2(), "adj1 noun1");
  EXPECT_EQ(two[1].a1.surface, "adj1");
  EXPECT_TRUE(GeneratePairQuadruples(SmallLexicon(3, 1)).empty());
}

TEST(PhrasegenTest, TextsNeeded) {
  const auto phrases = GeneratePhrases(DefaultLexicon(), 2);
  const auto quads = GeneratePairQuadruples(DefaultLexicon());
  // 44652 phrases plus 61 adjectives and 12 nouns as single terms; quadruple
  // texts are all AN phrases already.
  EXPECT_EQ(PhraseTextsNeeded(phrases, quads).size(), 44725u);

  const Lexicon one = Lexicon::Create(
      {{"fake", AdjectiveType::kNonSubsectivePrivative}}, {"gun"});
  const auto small = GeneratePhrases(one, 2);
  EXPECT_EQ(PhraseTextsNeeded(small, {}),
            (std::vector<std::string>{"fake gun", "fake", "gun"}));
  EXPECT_TRUE(PhraseTextsNeeded({}, {}).empty());
}

TEST(PhrasegenTest, WriteCorpusOneLinePerPhrase) {
  const auto phrases = GeneratePhrases(SmallLexicon(2, 1), 2);
  std::ostringstream out;
  WriteCorpus(phrases, out);
  EXPECT_EQ(out.str(), "adj0 noun0\nadj1 noun0\nadj0 adj1 noun0\nadj1 adj0 noun0\n");
}

// For random lexicon sizes the corpus obeys the closed-form count law, is
// duplicate free, is deterministic, and every text splits back into its terms.
TEST(PhrasegenPropertyTest, CountLawAndRoundTrip) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t a = 1 + rng() % 7;
    const std::size_t n = 1 + rng() % 5;
    const std::size_t k = 1 + rng() % 3;
    const Lexicon lex = SmallLexicon(a, n);
    const auto phrases = GeneratePhrases(lex, k);
    std::size_t expected = 0;
    for (std::size_t len = 1; len <= std::min(k, a); ++len) {
      std::size_t perms = 1;
      for (std::size_t i = 0; i < len; ++i) perms *= a - i;
      expected += perms * n;
    }
    ASSERT_EQ(phrases.size(), expected);
    ASSERT_EQ(phrases, GeneratePhrases(lex, k));
    std::set<std::string> unique;
    for (const Phrase& p : phrases) {
      ASSERT_TRUE(unique.insert(p.text()).second);
      std::istringstream words(p.text());
      std::string word;
      std::size_t i = 0;
      while (words >> word) {
        ASSERT_LT(i, p.terms().size());
        ASSERT_EQ(word, p.terms()[i].surface);
        ASSERT_EQ(lex.TypeOf(word), p.terms()[i].adjective_type);
        ++i;
      }
      ASSERT_EQ(i, p.terms().size());
    }
    ASSERT_EQ(GeneratePairQuadruples(lex).size(), a * (a - 1) * n * (n - 1) / 2);
  }
}

}  // namespace
}  // namespace adjprobe
