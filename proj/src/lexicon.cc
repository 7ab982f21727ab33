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

#include "adjprobe/lexicon.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_set>
#include <utility>

#include "adjprobe/errors.h"
#include "adjprobe/hashing.h"

namespace adjprobe {
namespace internal {
extern const std::string_view kDefaultLexiconDocument;
}  // namespace internal

namespace {

constexpr std::array<std::string_view, kNumAdjectiveTypes> kShortNames = {
    "S-I", "S-NI", "NS-Pl", "NS-Pr", "A"};
constexpr std::array<std::string_view, kNumAdjectiveTypes> kFileCodes = {
    "S-I", "S-NI", "NS-PL", "NS-PR", "AMB"};
constexpr std::string_view kNounCode = "NOUN";

bool IsValidSurface(std::string_view surface) {
  if (surface.empty()) return false;
  return std::none_of(surface.begin(), surface.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' ||
           c == '\f';
  });
}

std::string_view TrimTrailingCr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

}  // namespace

std::string_view ShortName(AdjectiveType type) {
  return kShortNames[Index(type)];
}

std::optional<AdjectiveType> ParseShortName(std::string_view name) {
  for (AdjectiveType type : kAllAdjectiveTypes) {
    if (ShortName(type) == name) return type;
  }
  return std::nullopt;
}

std::string_view FileCode(AdjectiveType type) {
  return kFileCodes[Index(type)];
}

std::optional<AdjectiveType> ParseFileCode(std::string_view code) {
  for (AdjectiveType type : kAllAdjectiveTypes) {
    if (FileCode(type) == code) return type;
  }
  return std::nullopt;
}

Lexicon Lexicon::Create(std::vector<AdjectiveEntry> adjectives,
                        std::vector<std::string> nouns) {
  std::unordered_set<std::string_view> adjective_surfaces;
  for (const AdjectiveEntry& entry : adjectives) {
    if (!IsValidSurface(entry.surface)) {
      throw ValidationError(entry.surface, "adjective is not a single token");
    }
    if (!adjective_surfaces.insert(entry.surface).second) {
      throw ValidationError(entry.surface, "duplicate adjective");
    }
  }
  std::unordered_set<std::string_view> noun_surfaces;
  for (const std::string& noun : nouns) {
    if (!IsValidSurface(noun)) {
      throw ValidationError(noun, "noun is not a single token");
    }
    if (!noun_surfaces.insert(noun).second) {
      throw ValidationError(noun, "duplicate noun");
    }
    if (adjective_surfaces.contains(noun)) {
      throw ValidationError(noun, "surface listed as both adjective and noun");
    }
  }
  Lexicon lexicon;
  lexicon.adjectives_ = std::move(adjectives);
  lexicon.nouns_ = std::move(nouns);
  return lexicon;
}

std::optional<AdjectiveType> Lexicon::TypeOf(std::string_view surface) const {
  for (const AdjectiveEntry& entry : adjectives_) {
    if (entry.surface == surface) return entry.type;
  }
  return std::nullopt;
}

bool Lexicon::IsNoun(std::string_view surface) const {
  return std::find(nouns_.begin(), nouns_.end(), surface) != nouns_.end();
}

Lexicon LoadLexicon(std::string_view document) {
  std::vector<AdjectiveEntry> adjectives;
  std::vector<std::string> nouns;
  std::size_t line_number = 0;
  std::size_t pos = 0;
  while (pos < document.size()) {
    const std::size_t end = static_cast<std::size_t>(
        std::find(document.begin() + pos, document.end(), '\n') -
        document.begin());
    std::string_view line = TrimTrailingCr(document.substr(pos, end - pos));
    pos = end + 1;
    ++line_number;

    if (line.empty() || line.front() == '#') continue;
    const auto tab_it = std::find(line.begin(), line.end(), '\t');
    if (tab_it == line.end()) {
      throw FormatError(line_number, "record", "expected surface<TAB>category");
    }
    const auto tab = static_cast<std::size_t>(tab_it - line.begin());
    std::string_view surface = line.substr(0, tab);
    std::string_view category = line.substr(tab + 1);
    if (surface.empty()) {
      throw FormatError(line_number, "surface", "empty surface");
    }
    if (std::find(category.begin(), category.end(), '\t') != category.end()) {
      throw FormatError(line_number, "category", "too many fields");
    }
    if (category == kNounCode) {
      nouns.emplace_back(surface);
    } else if (auto type = ParseFileCode(category)) {
      adjectives.push_back({std::string(surface), *type});
    } else {
      throw FormatError(line_number, "category",
                        "unknown category '" + std::string(category) + "'");
    }
  }
  Lexicon lexicon = Lexicon::Create(std::move(adjectives), std::move(nouns));
  if (lexicon.adjectives().empty()) {
    throw ValidationError("", "lexicon has no adjectives (empty alphabet)");
  }
  if (lexicon.nouns().empty()) {
    throw ValidationError("", "lexicon has no nouns (empty alphabet)");
  }
  return lexicon;
}

Lexicon LoadLexiconFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open lexicon file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return LoadLexicon(buffer.str());
}

std::string SerializeLexicon(const Lexicon& lexicon) {
  std::string out;
  for (const AdjectiveEntry& entry : lexicon.adjectives()) {
    out += entry.surface;
    out += '\t';
    out += FileCode(entry.type);
    out += '\n';
  }
  for (const std::string& noun : lexicon.nouns()) {
    out += noun;
    out += '\t';
    out += kNounCode;
    out += '\n';
  }
  return out;
}

std::string_view DefaultLexiconDocument() {
  return internal::kDefaultLexiconDocument;
}

const Lexicon& DefaultLexicon() {
  static const Lexicon lexicon = LoadLexicon(DefaultLexiconDocument());
  return lexicon;
}

std::array<std::size_t, kNumAdjectiveTypes> CountByType(
    const Lexicon& lexicon) {
  std::array<std::size_t, kNumAdjectiveTypes> counts{};
  for (const AdjectiveEntry& entry : lexicon.adjectives()) {
    ++counts[Index(entry.type)];
  }
  return counts;
}

std::vector<std::string> AdjectivesOfType(const Lexicon& lexicon,
                                          AdjectiveType type) {
  std::vector<std::string> out;
  for (const AdjectiveEntry& entry : lexicon.adjectives()) {
    if (entry.type == type) out.push_back(entry.surface);
  }
  return out;
}

std::string LexiconDigest(const Lexicon& lexicon) {
  return HexDigest(Fnv1a64(SerializeLexicon(lexicon)));
}

}  // namespace adjprobe
