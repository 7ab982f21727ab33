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

#include "adjprobe/denotation.h"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

#include "adjprobe/errors.h"
#include "adjprobe/format.h"
#include "adjprobe/hashing.h"
#include "adjprobe/parallel.h"
#include "json.hpp"

namespace adjprobe {

IndividualSet IndividualSet::Of(std::initializer_list<int> members) {
  std::uint64_t bits = 0;
  for (int m : members) {
    if (m < 0 || m >= kMaxUniverseSize) {
      throw ContractError("individual " + std::to_string(m) + " out of range");
    }
    bits |= std::uint64_t{1} << m;
  }
  return FromBits(bits);
}

IndividualSet IndividualSet::Universe(int size) {
  if (size < 0 || size > kMaxUniverseSize) {
    throw ContractError("universe size out of range");
  }
  if (size == kMaxUniverseSize) return FromBits(~std::uint64_t{0});
  return FromBits((std::uint64_t{1} << size) - 1);
}

double JaccardDistance(IndividualSet x, IndividualSet y) {
  const int union_size = (x | y).size();
  if (union_size == 0) return 0.0;
  return 1.0 - static_cast<double>((x & y).size()) /
                   static_cast<double>(union_size);
}

bool IntersectivityHolds(IndividualSet phrase, IndividualSet noun,
              IndividualSet adjective) {
  const double bound = JaccardDistance(noun, adjective);
  return JaccardDistance(phrase, noun) <= bound &&
         JaccardDistance(phrase, adjective) <= bound;
}

bool MultiTermIntersectivityHolds(IndividualSet phrase, std::span<const IndividualSet> terms) {
  double farthest = 0.0;
  for (IndividualSet t : terms) {
    farthest = std::max(farthest, JaccardDistance(phrase, t));
  }
  double closest = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < terms.size(); ++j) {
    for (std::size_t k = j + 1; k < terms.size(); ++k) {
      closest = std::min(closest, JaccardDistance(terms[j], terms[k]));
    }
  }
  return farthest <= closest;
}

bool NonSubsectivityHolds(IndividualSet phrase, IndividualSet adjective,
             IndividualSet noun) {
  return JaccardDistance(phrase, adjective) <= JaccardDistance(phrase, noun);
}

std::string_view OperatorKindName(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::kSubsective: return "subsective";
    case OperatorKind::kPrivative: return "privative";
    case OperatorKind::kPlain: return "plain";
  }
  return "?";
}

SetOperator MakeSubsective(IndividualSet mask) {
  return {OperatorKind::kSubsective,
          [mask](IndividualSet input) { return input & mask; }};
}

SetOperator MakePrivative(IndividualSet mask, IndividualSet universe) {
  return {OperatorKind::kPrivative, [mask, universe](IndividualSet input) {
            return (universe & mask).Minus(input);
          }};
}

SetOperator MakePlain(IndividualSet keep, IndividualSet add,
                      IndividualSet universe) {
  return {OperatorKind::kPlain, [keep, add, universe](IndividualSet input) {
            return (input & keep) | (universe & add).Minus(input);
          }};
}

DenotationUniverse::DenotationUniverse(int size) : size_(size) {
  if (size < 1 || size > kMaxUniverseSize) {
    throw ContractError("universe size must be in [1, " +
                        std::to_string(kMaxUniverseSize) + "]");
  }
  all_ = IndividualSet::Universe(size);
}

void DenotationUniverse::CheckFresh(const std::string& name) const {
  if (nouns_.contains(name) || intersective_.contains(name) ||
      operators_.contains(name)) {
    throw ContractError("name already defined: '" + name + "'");
  }
}

void DenotationUniverse::CheckInside(const std::string& name,
                                     IndividualSet set) const {
  if (!set.IsSubsetOf(all_)) {
    throw ContractError("set for '" + name + "' leaves the universe");
  }
}

void DenotationUniverse::AddNoun(const std::string& name, IndividualSet set) {
  CheckFresh(name);
  CheckInside(name, set);
  nouns_.emplace(name, set);
}

void DenotationUniverse::AddIntersective(const std::string& name,
                                         IndividualSet set) {
  CheckFresh(name);
  CheckInside(name, set);
  intersective_.emplace(name, set);
}

void DenotationUniverse::AddOperator(const std::string& name, SetOperator op) {
  CheckFresh(name);
  if (!op.apply) throw ContractError("operator '" + name + "' has no function");
  std::vector<IndividualSet> samples;
  for (const auto& [noun, set] : nouns_) samples.push_back(set);
  if (size_ <= 10) {
    for (std::uint64_t bits = 0; bits <= all_.bits(); ++bits) {
      samples.push_back(IndividualSet::FromBits(bits));
    }
  } else {
    CounterRng rng(Fnv1a64(name));
    for (int i = 0; i < 256; ++i) {
      samples.push_back(IndividualSet::FromBits(rng.Next()) & all_);
    }
  }
  for (IndividualSet input : samples) {
    const IndividualSet output = op.apply(input);
    CheckInside(name, output);
    if (op.kind == OperatorKind::kSubsective && !output.IsSubsetOf(input)) {
      throw ContractError("subsective operator '" + name +
                          "' produced a set outside its input");
    }
    if (op.kind == OperatorKind::kPrivative && !(output & input).empty()) {
      throw ContractError("privative operator '" + name +
                          "' produced a set overlapping its input");
    }
  }
  operators_.emplace(name, std::move(op));
}

bool DenotationUniverse::IsIntersective(const std::string& adjective) const {
  return intersective_.contains(adjective);
}

IndividualSet DenotationUniverse::NounSet(const std::string& noun) const {
  auto it = nouns_.find(noun);
  if (it == nouns_.end()) throw ContractError("unknown noun '" + noun + "'");
  return it->second;
}

IndividualSet DenotationUniverse::Apply(const std::string& adjective,
                                        IndividualSet input) const {
  if (auto it = intersective_.find(adjective); it != intersective_.end()) {
    return input & it->second;
  }
  if (auto it = operators_.find(adjective); it != operators_.end()) {
    return it->second.apply(input);
  }
  throw ContractError("unknown adjective '" + adjective + "'");
}

IndividualSet DenotationUniverse::Compose(const std::string& adjective,
                                          const std::string& noun) const {
  return Apply(adjective, NounSet(noun));
}

IndividualSet DenotationUniverse::ComposeMany(
    std::span<const std::string> adjectives, const std::string& noun) const {
  IndividualSet set = NounSet(noun);
  for (auto it = adjectives.rbegin(); it != adjectives.rend(); ++it) {
    set = Apply(*it, set);
  }
  return set;
}

IndividualSet DenotationUniverse::ProxySet(const std::string& adjective) const {
  if (auto it = intersective_.find(adjective); it != intersective_.end()) {
    return it->second;
  }
  auto op = operators_.find(adjective);
  if (op == operators_.end()) {
    throw ContractError("unknown adjective '" + adjective + "'");
  }
  IndividualSet proxy;
  for (const auto& [noun, set] : nouns_) proxy = proxy | op->second.apply(set);
  return proxy;
}

bool CheckIntersectivity(const DenotationUniverse& universe, const std::string& adjective,
              const std::string& noun) {
  return IntersectivityHolds(universe.Compose(adjective, noun), universe.NounSet(noun),
                  universe.ProxySet(adjective));
}

bool CheckMultiTermIntersectivity(const DenotationUniverse& universe,
              std::span<const std::string> adjectives,
              const std::string& noun) {
  std::vector<IndividualSet> terms;
  terms.reserve(adjectives.size() + 1);
  for (const std::string& adjective : adjectives) {
    terms.push_back(universe.ProxySet(adjective));
  }
  terms.push_back(universe.NounSet(noun));
  return MultiTermIntersectivityHolds(universe.ComposeMany(adjectives, noun), terms);
}

bool CheckNonSubsectivity(const DenotationUniverse& universe, const std::string& adjective,
             const std::string& noun) {
  return NonSubsectivityHolds(universe.Compose(adjective, noun), universe.ProxySet(adjective),
                 universe.NounSet(noun));
}

ExhaustiveCount ExhaustiveIntersectionCheck(int max_size) {
  ExhaustiveCount count;
  for (int size = 1; size <= max_size; ++size) {
    const std::uint64_t limit = IndividualSet::Universe(size).bits();
    for (std::uint64_t c = 1; c <= limit; ++c) {
      for (std::uint64_t w = 1; w <= limit; ++w) {
        const auto adjective = IndividualSet::FromBits(c);
        const auto noun = IndividualSet::FromBits(w);
        ++count.checked;
        if (IntersectivityHolds(adjective & noun, noun, adjective)) ++count.satisfied;
      }
    }
  }
  return count;
}

std::string_view CategoryName(Category category) {
  switch (category) {
    case Category::kIntersective: return "intersective";
    case Category::kSubsective: return "subsective";
    case Category::kPrivative: return "privative";
    case Category::kPlain: return "plain";
  }
  return "?";
}

namespace {

struct TrialResult {
  Category category;
  bool intersectivity;
  bool multi_term;
  bool non_subsectivity;
  bool nonempty;
  bool noun_distance_one;
};

IndividualSet DrawNonempty(CounterRng& rng, IndividualSet universe) {
  for (;;) {
    const IndividualSet s = IndividualSet::FromBits(rng.Next()) & universe;
    if (!s.empty()) return s;
  }
}

TrialResult RunTrial(std::uint64_t seed, std::size_t trial, int universe_size,
                     Category category) {
  CounterRng rng(SplitMix64(seed) ^ SplitMix64(static_cast<std::uint64_t>(trial)));
  DenotationUniverse universe(universe_size);
  const IndividualSet all = universe.all();
  universe.AddNoun("noun", DrawNonempty(rng, all));
  // Extra nouns only widen the sample the operator proxy set is built from.
  universe.AddNoun("noun-2", DrawNonempty(rng, all));
  universe.AddNoun("noun-3", DrawNonempty(rng, all));
  universe.AddIntersective("other", DrawNonempty(rng, all));
  switch (category) {
    case Category::kIntersective:
      universe.AddIntersective("adj", DrawNonempty(rng, all));
      break;
    case Category::kSubsective:
      universe.AddOperator("adj", MakeSubsective(DrawNonempty(rng, all)));
      break;
    case Category::kPrivative:
      universe.AddOperator("adj", MakePrivative(DrawNonempty(rng, all), all));
      break;
    case Category::kPlain: {
      const IndividualSet keep = DrawNonempty(rng, all);
      universe.AddOperator("adj", MakePlain(keep, DrawNonempty(rng, all), all));
      break;
    }
  }
  const std::string adjective = "adj";
  const std::string noun = "noun";
  const std::array<std::string, 2> pair = {"adj", "other"};
  const IndividualSet phrase = universe.Compose(adjective, noun);
  TrialResult result{category,
                     CheckIntersectivity(universe, adjective, noun),
                     CheckMultiTermIntersectivity(universe, pair, noun),
                     CheckNonSubsectivity(universe, adjective, noun),
                     !phrase.empty(),
                     JaccardDistance(phrase, universe.NounSet(noun)) == 1.0};
  return result;
}

void Tally(RelationTally& tally, bool satisfied) {
  ++tally.total;
  if (satisfied) ++tally.satisfied;
}

}  // namespace

SetRelationReport RunSimulation(std::uint64_t seed, int universe_size,
                                std::size_t trials, const CategoryMix& mix,
                                std::size_t workers) {
  if (trials == 0) throw ContractError("simulation needs at least one trial");
  std::vector<Category> schedule;
  for (Category c : kAllCategories) {
    schedule.insert(schedule.end(), mix.weights[static_cast<std::size_t>(c)], c);
  }
  if (schedule.empty()) throw ContractError("category mix has no weight");
  DenotationUniverse probe(universe_size);  // validates the size up front

  std::vector<TrialResult> results(trials);
  ParallelFor(trials, workers, [&](std::size_t t) {
    results[t] = RunTrial(seed, t, universe_size, schedule[t % schedule.size()]);
  });

  SetRelationReport report;
  report.seed = seed;
  report.universe_size = universe_size;
  report.trials = trials;
  report.mix = mix;
  for (const TrialResult& r : results) {
    auto& slot = report.categories[static_cast<std::size_t>(r.category)];
    if (!slot) {
      slot.emplace();
      slot->uses_proxy_set = r.category != Category::kIntersective;
    }
    ++slot->trials;
    Tally(slot->intersectivity, r.intersectivity);
    Tally(slot->multi_term, r.multi_term);
    Tally(slot->non_subsectivity, r.non_subsectivity);
    if (r.nonempty) Tally(slot->noun_distance_one, r.noun_distance_one);
  }
  return report;
}

namespace {

nlohmann::ordered_json RateJson(const RelationTally& tally) {
  nlohmann::ordered_json value;
  value["satisfied"] = tally.satisfied;
  value["total"] = tally.total;
  if (auto rate = tally.rate()) {
    value["rate"] = *rate;
  } else {
    value["rate"] = nullptr;
  }
  return value;
}

}  // namespace

void WriteSimulationReport(const SetRelationReport& report,
                           const std::string& config_digest,
                           std::ostream& out) {
  nlohmann::ordered_json header;
  header["record"] = "simulation";
  header["config_digest"] = config_digest;
  header["seed"] = report.seed;
  header["universe_size"] = report.universe_size;
  header["trials"] = report.trials;
  header["mix"] = report.mix.weights;
  out << header.dump() << '\n';
  for (Category c : kAllCategories) {
    nlohmann::ordered_json record;
    record["record"] = "category";
    record["category"] = CategoryName(c);
    const auto& slot = report[c];
    if (!slot) {
      record["present"] = false;
      out << record.dump() << '\n';
      continue;
    }
    record["present"] = true;
    record["trials"] = slot->trials;
    record["adjective_set"] = slot->uses_proxy_set
                                  ? "proxy: union of operator images"
                                  : "own set";
    record["intersectivity"] = RateJson(slot->intersectivity);
    record["multi_term_intersectivity"] = RateJson(slot->multi_term);
    record["non_subsectivity"] = RateJson(slot->non_subsectivity);
    record["noun_distance_one"] = RateJson(slot->noun_distance_one);
    out << record.dump() << '\n';
  }
}

std::string FormatSimulationTable(const SetRelationReport& report) {
  std::ostringstream out;
  auto cell = [](const RelationTally& tally) {
    auto rate = tally.rate();
    return rate ? FormatFixed(*rate, 4) : std::string("n/a");
  };
  out << "seed " << report.seed << ", universe size " << report.universe_size
      << ", " << report.trials << " trials\n";
  out << "category       trials  isect   multi   nonsub  d(P,N)=1\n";
  for (Category c : kAllCategories) {
    std::string name(CategoryName(c));
    const auto& slot = report[c];
    if (slot && slot->uses_proxy_set) name += '*';
    name.resize(14, ' ');
    out << name << ' ';
    if (!slot) {
      out << "absent\n";
      continue;
    }
    std::string trials = std::to_string(slot->trials);
    trials.resize(7, ' ');
    out << trials << ' ' << cell(slot->intersectivity) << "  " << cell(slot->multi_term) << "  "
        << cell(slot->non_subsectivity) << "  " << cell(slot->noun_distance_one) << '\n';
  }
  out << "* adjective set is a proxy (union of operator images), not a "
         "denotation\n";
  return out.str();
}

}  // namespace adjprobe
