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

#ifndef ADJPROBE_LEXICON_H_
#define ADJPROBE_LEXICON_H_

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adjprobe {

// Semantic category of an adjective, following the subsective/intersective
// and non-subsective plain/privative split plus an ambiguous bucket.
enum class AdjectiveType {
  kSubsectiveIntersective = 0,
  kSubsectiveNonIntersective = 1,
  kNonSubsectivePlain = 2,
  kNonSubsectivePrivative = 3,
  kAmbiguous = 4,
};

inline constexpr std::size_t kNumAdjectiveTypes = 5;

inline constexpr std::array<AdjectiveType, kNumAdjectiveTypes>
    kAllAdjectiveTypes = {
        AdjectiveType::kSubsectiveIntersective,
        AdjectiveType::kSubsectiveNonIntersective,
        AdjectiveType::kNonSubsectivePlain,
        AdjectiveType::kNonSubsectivePrivative,
        AdjectiveType::kAmbiguous,
};

constexpr std::size_t Index(AdjectiveType type) {
  return static_cast<std::size_t>(type);
}

// Table shorthand: S-I, S-NI, NS-Pl, NS-Pr, A.
std::string_view ShortName(AdjectiveType type);
std::optional<AdjectiveType> ParseShortName(std::string_view name);

// Lexicon-file category code: S-I, S-NI, NS-PL, NS-PR, AMB.
std::string_view FileCode(AdjectiveType type);
std::optional<AdjectiveType> ParseFileCode(std::string_view code);

struct AdjectiveEntry {
  std::string surface;
  AdjectiveType type;

  friend bool operator==(const AdjectiveEntry&, const AdjectiveEntry&) = default;
};

// Immutable, validated adjective and noun inventory. Surfaces keep their
// source capitalization and order; matching is exact-string.
class Lexicon {
 public:
  Lexicon() = default;

  // Throws ValidationError on duplicate surfaces, adjective/noun overlap, or
  // surfaces that are empty or contain whitespace.
  static Lexicon Create(std::vector<AdjectiveEntry> adjectives,
                        std::vector<std::string> nouns);

  const std::vector<AdjectiveEntry>& adjectives() const { return adjectives_; }
  const std::vector<std::string>& nouns() const { return nouns_; }

  std::optional<AdjectiveType> TypeOf(std::string_view surface) const;
  bool IsNoun(std::string_view surface) const;

  friend bool operator==(const Lexicon&, const Lexicon&) = default;

 private:
  std::vector<AdjectiveEntry> adjectives_;
  std::vector<std::string> nouns_;
};

// Parses the tab-separated lexicon format. Also rejects documents with no
// adjectives or no nouns, since they yield an empty phrase language.
Lexicon LoadLexicon(std::string_view document);
Lexicon LoadLexiconFile(const std::filesystem::path& path);

// Inverse of LoadLexicon for every valid, non-empty lexicon.
std::string SerializeLexicon(const Lexicon& lexicon);

// The bundled 61-adjective, 12-noun dataset.
const Lexicon& DefaultLexicon();
std::string_view DefaultLexiconDocument();

std::array<std::size_t, kNumAdjectiveTypes> CountByType(const Lexicon& lexicon);

std::vector<std::string> AdjectivesOfType(const Lexicon& lexicon,
                                          AdjectiveType type);

// Content digest of the serialized lexicon, for run metadata.
std::string LexiconDigest(const Lexicon& lexicon);

}  // namespace adjprobe

#endif  // ADJPROBE_LEXICON_H_
