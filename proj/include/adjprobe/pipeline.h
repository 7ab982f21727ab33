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

#ifndef ADJPROBE_PIPELINE_H_
#define ADJPROBE_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "adjprobe/denotation.h"
#include "adjprobe/lexicon.h"
#include "adjprobe/provider.h"
#include "adjprobe/relations.h"
#include "adjprobe/report.h"

namespace adjprobe {

// Parsed --provider value: toy:SEED:DIM | file:PATH | http:URL:MODEL.
struct ProviderSpec {
  enum class Kind { kToy, kFile, kHttp };
  Kind kind = Kind::kToy;
  std::uint64_t toy_seed = 0;
  Eigen::Index toy_dim = 64;
  std::filesystem::path file;
  std::string url;
  std::string model;

  std::string ToString() const;
};

// Throws ContractError on anything that is not one of the three forms. For
// http the model is the text after the last ':'; a URL without a scheme gets
// http://.
ProviderSpec ParseProviderSpec(const std::string& text);

struct RunConfig {
  std::optional<std::filesystem::path> lexicon_path;  // empty: bundled
  std::size_t max_adjectives = 2;
  std::optional<ProviderSpec> provider;
  std::vector<RelationId> relations = {RelationId::kIntersectivity,
                                       RelationId::kPairIntersectivity,
                                       RelationId::kNonSubsectivity};
  std::filesystem::path out_dir = "adjprobe-out";
  std::uint64_t seed = 0;
  std::size_t batch_size = 64;
  std::size_t workers = 0;
  // Regression mode.
  std::optional<std::filesystem::path> reference;
  double tolerance = 0.05;
  std::optional<std::string> reference_row;
  // Embedding cache for remote providers; defaults to <out_dir>/cache.
  std::optional<std::filesystem::path> cache_dir;
  bool use_cache = true;
  // Set-world simulation.
  std::size_t trials = 10000;
  int universe_size = 12;
  CategoryMix mix;
};

// "all" or a comma-separated list of relation names.
std::vector<RelationId> ParseRelationList(const std::string& text);

Lexicon ResolveLexicon(const RunConfig& config);

// Digest over every field that can change an artifact's bytes (not the output
// directory, worker count, batch size, or cache location).
std::string ConfigDigest(const RunConfig& config, const Lexicon& lexicon);

std::unique_ptr<EmbeddingProvider> MakeProvider(const RunConfig& config);

struct GenerateSummary {
  std::vector<std::size_t> counts_by_length;  // index = adjective count
  std::size_t total = 0;
  std::filesystem::path corpus_path;
  std::string counts_line;  // e.g. "AN: 732, AAN: 43920, total: 44652"
};

// Writes <out_dir>/corpus.txt and prints the counts line to `log`.
GenerateSummary CmdGenerate(const RunConfig& config, std::ostream& log);

struct EvaluateSummary {
  ResultsBundle bundle;
  std::vector<std::filesystem::path> artifacts;
  std::vector<Deviation> deviations;
};

// Embeds the corpus, runs the selected relations and writes
// <out_dir>/outcomes.jsonl, <out_dir>/run.json, <out_dir>/tables/<kind>.{csv,
// md,jsonl} and, in regression mode, <out_dir>/deviations.jsonl.
EvaluateSummary CmdEvaluate(const RunConfig& config, std::ostream& log);

struct OracleSummary {
  SetRelationReport report;
  std::filesystem::path report_path;
};

// Writes <out_dir>/oracle_report.jsonl and prints the rate table.
OracleSummary CmdOracle(const RunConfig& config, std::ostream& log);

}  // namespace adjprobe

#endif  // ADJPROBE_PIPELINE_H_
