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

// Command-line entry point: generate, evaluate, oracle.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "adjprobe/errors.h"
#include "adjprobe/pipeline.h"

namespace {

struct Flags {
  std::string lexicon;
  std::size_t max_adjectives = 2;
  std::string provider;
  std::string relations = "all";
  std::string out = "adjprobe-out";
  std::uint64_t seed = 0;
  std::size_t batch_size = 64;
  std::size_t workers = 0;
  std::string reference;
  double tolerance = 0.05;
  std::string reference_row;
  std::string cache_dir;
  bool no_cache = false;
  std::size_t trials = 10000;
  int universe_size = 12;
  std::vector<std::size_t> mix;
};

void AddCommonFlags(CLI::App& app, Flags& flags) {
  app.add_option("--lexicon", flags.lexicon,
                 "Lexicon file (surface<TAB>category); default: bundled");
  app.add_option("--out", flags.out, "Output directory")->capture_default_str();
  app.add_option("--seed", flags.seed, "Run seed")->capture_default_str();
  app.add_option("--workers", flags.workers, "Worker threads (0 = all cores)")
      ->capture_default_str();
}

adjprobe::RunConfig ToConfig(const Flags& flags) {
  adjprobe::RunConfig config;
  if (!flags.lexicon.empty()) config.lexicon_path = flags.lexicon;
  config.max_adjectives = flags.max_adjectives;
  if (!flags.provider.empty()) {
    config.provider = adjprobe::ParseProviderSpec(flags.provider);
  }
  config.relations = adjprobe::ParseRelationList(flags.relations);
  config.out_dir = flags.out;
  config.seed = flags.seed;
  config.batch_size = flags.batch_size;
  config.workers = flags.workers;
  if (!flags.reference.empty()) config.reference = flags.reference;
  config.tolerance = flags.tolerance;
  if (!flags.reference_row.empty()) config.reference_row = flags.reference_row;
  if (!flags.cache_dir.empty()) config.cache_dir = flags.cache_dir;
  config.use_cache = !flags.no_cache;
  config.trials = flags.trials;
  config.universe_size = flags.universe_size;
  if (!flags.mix.empty()) {
    if (flags.mix.size() != 4) {
      throw adjprobe::ContractError(
          "--mix takes four weights: intersective subsective privative plain");
    }
    for (std::size_t i = 0; i < 4; ++i) config.mix.weights[i] = flags.mix[i];
  }
  return config;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metamorphic adjective-noun composition tests for embedding models"};
  app.require_subcommand(1);
  Flags flags;

  CLI::App* generate = app.add_subcommand("generate", "Write the phrase corpus");
  AddCommonFlags(*generate, flags);
  generate->add_option("--max-adjectives", flags.max_adjectives,
                       "Adjectives per phrase, at most")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  CLI::App* evaluate =
      app.add_subcommand("evaluate", "Embed the corpus and run the relations");
  AddCommonFlags(*evaluate, flags);
  evaluate->add_option("--max-adjectives", flags.max_adjectives,
                       "Adjectives per phrase, at most")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  evaluate
      ->add_option("--provider", flags.provider,
                   "toy:SEED:DIM | file:PATH | http:URL:MODEL")
      ->required();
  evaluate
      ->add_option("--relations", flags.relations,
                   "all, or a comma list of intersectivity, "
                   "pair-intersectivity, non-subsectivity")
      ->capture_default_str();
  evaluate->add_option("--batch-size", flags.batch_size, "Texts per HTTP request")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  evaluate->add_option("--reference", flags.reference,
                       "Reference table CSV for regression mode");
  evaluate->add_option("--tolerance", flags.tolerance,
                       "Per-cell tolerance in regression mode")
      ->capture_default_str();
  evaluate->add_option("--reference-row", flags.reference_row,
                       "Reference row to compare against");
  evaluate->add_option("--cache-dir", flags.cache_dir,
                       "Embedding cache directory (default: OUT/cache)");
  evaluate->add_flag("--no-cache", flags.no_cache, "Disable the embedding cache");

  CLI::App* oracle =
      app.add_subcommand("oracle", "Run the set-world denotation simulation");
  AddCommonFlags(*oracle, flags);
  oracle->add_option("--trials", flags.trials, "Number of trials")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  oracle->add_option("--universe-size", flags.universe_size,
                     "Individuals per universe (1-64)")
      ->capture_default_str()
      ->check(CLI::Range(1, 64));
  oracle->add_option("--mix", flags.mix,
                     "Trial weights: intersective subsective privative plain")
      ->expected(4);

  CLI11_PARSE(app, argc, argv);

  try {
    const adjprobe::RunConfig config = ToConfig(flags);
    if (generate->parsed()) {
      adjprobe::CmdGenerate(config, std::cout);
    } else if (evaluate->parsed()) {
      adjprobe::CmdEvaluate(config, std::cout);
    } else if (oracle->parsed()) {
      adjprobe::CmdOracle(config, std::cout);
    }
  } catch (const adjprobe::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
