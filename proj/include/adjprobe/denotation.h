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

#ifndef ADJPROBE_DENOTATION_H_
#define ADJPROBE_DENOTATION_H_

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adjprobe {

inline constexpr int kMaxUniverseSize = 64;

// Subset of the individuals {0, ..., 63}, stored as a bit mask.
class IndividualSet {
 public:
  constexpr IndividualSet() = default;
  static constexpr IndividualSet FromBits(std::uint64_t bits) {
    IndividualSet s;
    s.bits_ = bits;
    return s;
  }
  static IndividualSet Of(std::initializer_list<int> members);
  // {0, ..., size-1}.
  static IndividualSet Universe(int size);

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int individual) const {
    return (bits_ >> individual) & 1U;
  }
  constexpr bool IsSubsetOf(IndividualSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr IndividualSet Minus(IndividualSet other) const {
    return FromBits(bits_ & ~other.bits_);
  }

  friend constexpr IndividualSet operator&(IndividualSet a, IndividualSet b) {
    return FromBits(a.bits_ & b.bits_);
  }
  friend constexpr IndividualSet operator|(IndividualSet a, IndividualSet b) {
    return FromBits(a.bits_ | b.bits_);
  }
  friend constexpr bool operator==(IndividualSet, IndividualSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// 1 - |x & y| / |x | y|, with d(empty, empty) = 0.
double JaccardDistance(IndividualSet x, IndividualSet y);

// Set-level relations, usable without a universe.
// Both conjuncts d(P,W) <= d(W,C) and d(P,C) <= d(W,C).
bool IntersectivityHolds(IndividualSet phrase, IndividualSet noun, IndividualSet adjective);
// max_i d(P, T_i) <= min_{j<k} d(T_j, T_k) over the phrase's term sets.
bool MultiTermIntersectivityHolds(IndividualSet phrase, std::span<const IndividualSet> terms);
// d(P, A) <= d(P, N).
bool NonSubsectivityHolds(IndividualSet phrase, IndividualSet adjective, IndividualSet noun);

enum class OperatorKind { kSubsective, kPrivative, kPlain };
std::string_view OperatorKindName(OperatorKind kind);

// Set-to-set adjective meaning. Contract by kind: subsective output is a
// subset of the input, privative output is disjoint from it, plain is
// unconstrained.
struct SetOperator {
  OperatorKind kind;
  std::function<IndividualSet(IndividualSet)> apply;
};

// Input intersected with a fixed mask.
SetOperator MakeSubsective(IndividualSet mask);
// Fixed mask restricted to the complement of the input.
SetOperator MakePrivative(IndividualSet mask, IndividualSet universe);
// Keeps `keep` of the input and adds `add` from outside it.
SetOperator MakePlain(IndividualSet keep, IndividualSet add,
                      IndividualSet universe);

// Extensional model: named noun sets, intersective adjective sets, and
// operator adjectives, all over {0, ..., size-1}.
class DenotationUniverse {
 public:
  // Throws ContractError unless 1 <= size <= kMaxUniverseSize.
  explicit DenotationUniverse(int size);

  int size() const { return size_; }
  IndividualSet all() const { return all_; }

  // Each throws ContractError if the set leaves the universe or the name is
  // already taken. AddOperator also checks the kind's contract on every noun
  // set present and on a fixed sample of inputs (all subsets when size <= 10).
  void AddNoun(const std::string& name, IndividualSet set);
  void AddIntersective(const std::string& name, IndividualSet set);
  void AddOperator(const std::string& name, SetOperator op);

  bool IsIntersective(const std::string& adjective) const;
  IndividualSet NounSet(const std::string& noun) const;

  // Intersection for intersective adjectives, operator image otherwise.
  // Unknown names raise ContractError.
  IndividualSet Compose(const std::string& adjective,
                        const std::string& noun) const;
  // Adjectives left to right; the rightmost applies first.
  IndividualSet ComposeMany(std::span<const std::string> adjectives,
                            const std::string& noun) const;

  // The adjective's own set if intersective. Otherwise a modelling device:
  // the union of the operator's images of every noun set in the universe.
  IndividualSet ProxySet(const std::string& adjective) const;

 private:
  IndividualSet Apply(const std::string& adjective, IndividualSet input) const;
  void CheckFresh(const std::string& name) const;
  void CheckInside(const std::string& name, IndividualSet set) const;

  int size_;
  IndividualSet all_;
  std::map<std::string, IndividualSet, std::less<>> nouns_;
  std::map<std::string, IndividualSet, std::less<>> intersective_;
  std::map<std::string, SetOperator, std::less<>> operators_;
};

bool CheckIntersectivity(const DenotationUniverse& universe, const std::string& adjective,
              const std::string& noun);
bool CheckMultiTermIntersectivity(const DenotationUniverse& universe,
              std::span<const std::string> adjectives, const std::string& noun);
bool CheckNonSubsectivity(const DenotationUniverse& universe, const std::string& adjective,
             const std::string& noun);

struct ExhaustiveCount {
  std::size_t checked = 0;
  std::size_t satisfied = 0;
};

// Every universe size 1..max_size and every nonempty C, W: the intersectivity relation for P = C & W.
ExhaustiveCount ExhaustiveIntersectionCheck(int max_size);

enum class Category { kIntersective, kSubsective, kPrivative, kPlain };
inline constexpr std::array<Category, 4> kAllCategories = {
    Category::kIntersective, Category::kSubsective, Category::kPrivative,
    Category::kPlain};
std::string_view CategoryName(Category category);

// Relative trial weights per category. A weight of 0 skips the category.
struct CategoryMix {
  std::array<std::size_t, 4> weights = {1, 1, 1, 1};
};

struct RelationTally {
  std::size_t satisfied = 0;
  std::size_t total = 0;
  std::optional<double> rate() const {
    if (total == 0) return std::nullopt;
    return static_cast<double>(satisfied) / static_cast<double>(total);
  }
  friend bool operator==(const RelationTally&, const RelationTally&) = default;
};

struct CategoryReport {
  std::size_t trials = 0;
  RelationTally intersectivity;
  RelationTally multi_term;
  RelationTally non_subsectivity;
  // Trials whose composed set was nonempty, and among them those with
  // d(P, N) == 1.
  RelationTally noun_distance_one;
  bool uses_proxy_set = false;
  friend bool operator==(const CategoryReport&, const CategoryReport&) = default;
};

struct SetRelationReport {
  std::uint64_t seed = 0;
  int universe_size = 0;
  std::size_t trials = 0;
  CategoryMix mix;
  // Absent for categories that received no trials.
  std::array<std::optional<CategoryReport>, 4> categories;

  const std::optional<CategoryReport>& operator[](Category c) const {
    return categories[static_cast<std::size_t>(c)];
  }
  friend bool operator==(const SetRelationReport& a,
                         const SetRelationReport& b) {
    return a.seed == b.seed && a.universe_size == b.universe_size &&
           a.trials == b.trials && a.mix.weights == b.mix.weights &&
           a.categories == b.categories;
  }
};

// Random universes, sets, and operators, one fresh universe per trial. Trial
// t draws from a stream keyed by (seed, t), so the report does not depend on
// the worker count. Throws ContractError if trials == 0 or all weights are 0.
SetRelationReport RunSimulation(std::uint64_t seed, int universe_size,
                                std::size_t trials, const CategoryMix& mix = {},
                                std::size_t workers = 0);

// Header line then one record per category, line-delimited JSON.
void WriteSimulationReport(const SetRelationReport& report,
                           const std::string& config_digest, std::ostream& out);
// Category x relation rate table for terminals.
std::string FormatSimulationTable(const SetRelationReport& report);

}  // namespace adjprobe

#endif  // ADJPROBE_DENOTATION_H_
