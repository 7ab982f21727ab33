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

#include "adjprobe/pipeline.h"

#include <charconv>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "adjprobe/embedding_store.h"
#include "adjprobe/errors.h"
#include "adjprobe/format.h"
#include "adjprobe/hashing.h"
#include "adjprobe/parallel.h"
#include "adjprobe/phrasegen.h"
#include "adjprobe/providers.h"
#include "adjprobe/toy_embedder.h"
#include "json.hpp"

namespace adjprobe {

using ordered_json = nlohmann::ordered_json;

namespace {

template <typename Int>
Int ParseInteger(std::string_view text, const std::string& what) {
  Int value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw ContractError("invalid " + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::ofstream OpenOutput(const std::filesystem::path& path) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw Error("cannot create directory " + path.parent_path().string() +
                  ": " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write " + path.string());
  return out;
}

void CloseOutput(std::ofstream& out, const std::filesystem::path& path) {
  out.close();
  if (!out) throw Error("write failed for " + path.string());
}

std::string FileDigest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return HexDigest(Fnv1a64(buffer.str()));
}

std::string PhraseShape(std::size_t adjectives) {
  return std::string(adjectives, 'A') + "N";
}

class Stopwatch {
 public:
  double Seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

ordered_json RateJson(const GlobalRate& rate) {
  ordered_json value;
  value["satisfied"] = rate.satisfied;
  value["total"] = rate.total;
  value["ties"] = rate.ties;
  value["rate"] = rate.rate();
  return value;
}

ordered_json RunHeader(const std::string& digest, const std::string& model,
                       std::uint64_t seed) {
  ordered_json header;
  header["record"] = "run";
  header["config_digest"] = digest;
  header["seed"] = seed;
  header["model"] = model;
  return header;
}

}  // namespace

std::string ProviderSpec::ToString() const {
  switch (kind) {
    case Kind::kToy:
      return "toy:" + std::to_string(toy_seed) + ":" + std::to_string(toy_dim);
    case Kind::kFile:
      return "file:" + file.string();
    case Kind::kHttp:
      return "http:" + url + ":" + model;
  }
  return "";
}

ProviderSpec ParseProviderSpec(const std::string& text) {
  ProviderSpec spec;
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ContractError("provider must be toy:SEED:DIM, file:PATH or "
                        "http:URL:MODEL, got '" + text + "'");
  }
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (kind == "toy") {
    const auto sep = rest.find(':');
    if (sep == std::string::npos) {
      throw ContractError("toy provider needs SEED:DIM, got '" + rest + "'");
    }
    spec.kind = ProviderSpec::Kind::kToy;
    spec.toy_seed = ParseInteger<std::uint64_t>(rest.substr(0, sep), "toy seed");
    spec.toy_dim = ParseInteger<Eigen::Index>(rest.substr(sep + 1), "toy dimension");
    if (spec.toy_dim < 2) throw ContractError("toy dimension must be >= 2");
  } else if (kind == "file") {
    if (rest.empty()) throw ContractError("file provider needs a path");
    spec.kind = ProviderSpec::Kind::kFile;
    spec.file = rest;
  } else if (kind == "http") {
    const auto sep = rest.rfind(':');
    if (sep == std::string::npos || sep == 0 || sep + 1 == rest.size()) {
      throw ContractError("http provider needs URL:MODEL, got '" + rest + "'");
    }
    spec.kind = ProviderSpec::Kind::kHttp;
    spec.model = rest.substr(sep + 1);
    std::string url = rest.substr(0, sep);
    if (url.rfind("//", 0) == 0) {
      url = "http:" + url;
    } else if (url.find("://") == std::string::npos) {
      url = "http://" + url;
    }
    spec.url = url;
    ParseEndpoint(spec.url);
  } else {
    throw ContractError("unknown provider kind '" + kind + "'");
  }
  return spec;
}

std::vector<RelationId> ParseRelationList(const std::string& text) {
  if (text == "all") {
    return {RelationId::kIntersectivity, RelationId::kPairIntersectivity,
            RelationId::kNonSubsectivity};
  }
  std::vector<RelationId> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    const std::string name = text.substr(pos, end - pos);
    const auto id = ParseRelationName(name);
    if (!id) throw ContractError("unknown relation '" + name + "'");
    if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
    pos = end + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Lexicon ResolveLexicon(const RunConfig& config) {
  if (config.lexicon_path) return LoadLexiconFile(*config.lexicon_path);
  return DefaultLexicon();
}

std::string ConfigDigest(const RunConfig& config, const Lexicon& lexicon) {
  ordered_json canonical;
  canonical["lexicon"] = LexiconDigest(lexicon);
  canonical["max_adjectives"] = config.max_adjectives;
  if (config.provider) {
    canonical["provider"] = config.provider->ToString();
    if (config.provider->kind == ProviderSpec::Kind::kFile &&
        std::filesystem::exists(config.provider->file)) {
      canonical["provider_file"] = FileDigest(config.provider->file);
    }
  }
  ordered_json relations = ordered_json::array();
  for (RelationId id : config.relations) relations.push_back(RelationName(id));
  canonical["relations"] = relations;
  canonical["seed"] = config.seed;
  if (config.reference) {
    canonical["reference"] = std::filesystem::exists(*config.reference)
                                 ? FileDigest(*config.reference)
                                 : config.reference->string();
    canonical["tolerance"] = config.tolerance;
    canonical["reference_row"] = config.reference_row.value_or("");
  }
  canonical["trials"] = config.trials;
  canonical["universe_size"] = config.universe_size;
  canonical["mix"] = config.mix.weights;
  return HexDigest(Fnv1a64(canonical.dump()));
}

std::unique_ptr<EmbeddingProvider> MakeProvider(const RunConfig& config) {
  if (!config.provider) throw ContractError("no provider given");
  const ProviderSpec& spec = *config.provider;
  switch (spec.kind) {
    case ProviderSpec::Kind::kToy:
      return std::make_unique<ToyProvider>(spec.toy_seed, spec.toy_dim);
    case ProviderSpec::Kind::kFile:
      return FileProvider::Open(spec.file);
    case ProviderSpec::Kind::kHttp: {
      RemoteOptions options;
      options.batch_size = config.batch_size;
      auto remote =
          std::make_unique<RemoteProvider>(spec.url, spec.model, options);
      if (!config.use_cache) return remote;
      const auto dir = config.cache_dir.value_or(config.out_dir / "cache");
      return std::make_unique<CachingProvider>(
          std::move(remote), CachingProvider::CacheFileFor(dir, spec.model));
    }
  }
  throw ContractError("unhandled provider kind");
}

GenerateSummary CmdGenerate(const RunConfig& config, std::ostream& log) {
  const Lexicon lexicon = ResolveLexicon(config);
  const std::vector<Phrase> phrases =
      GeneratePhrases(lexicon, config.max_adjectives);

  GenerateSummary summary;
  summary.counts_by_length = CountByLength(phrases);
  summary.counts_by_length.resize(config.max_adjectives + 1, 0);
  summary.total = phrases.size();
  summary.corpus_path = config.out_dir / "corpus.txt";

  std::ofstream out = OpenOutput(summary.corpus_path);
  WriteCorpus(phrases, out);
  CloseOutput(out, summary.corpus_path);

  std::string line;
  for (std::size_t k = 1; k < summary.counts_by_length.size(); ++k) {
    line += PhraseShape(k) + ": " + std::to_string(summary.counts_by_length[k]) +
            ", ";
  }
  line += "total: " + std::to_string(summary.total);
  summary.counts_line = line;
  log << line << '\n';
  return summary;
}

EvaluateSummary CmdEvaluate(const RunConfig& config, std::ostream& log) {
  Stopwatch total_time;
  const Lexicon lexicon = ResolveLexicon(config);
  const std::string digest = ConfigDigest(config, lexicon);
  auto want = [&](RelationId id) {
    return std::find(config.relations.begin(), config.relations.end(), id) !=
           config.relations.end();
  };

  const std::vector<Phrase> phrases =
      GeneratePhrases(lexicon, config.max_adjectives);
  std::vector<Phrase> an_phrases;
  for (const Phrase& p : phrases) {
    if (p.adjective_count() == 1) an_phrases.push_back(p);
  }
  const std::vector<PairQuadruple> quadruples =
      want(RelationId::kPairIntersectivity) ? GeneratePairQuadruples(lexicon)
                                            : std::vector<PairQuadruple>{};
  const std::vector<std::string> texts = PhraseTextsNeeded(phrases, quadruples);
  log << "corpus: " << phrases.size() << " phrases, " << quadruples.size()
      << " quadruples, " << texts.size() << " unique texts\n";

  // Embedding.
  Stopwatch embed_time;
  std::unique_ptr<EmbeddingProvider> provider = MakeProvider(config);
  constexpr std::size_t kChunk = 1024;
  const std::size_t chunks = (texts.size() + kChunk - 1) / kChunk;
  std::vector<std::vector<EmbeddingVector>> chunk_vectors(chunks);
  const bool remote = config.provider->kind == ProviderSpec::Kind::kHttp;
  ParallelFor(chunks, remote ? 1 : config.workers, [&](std::size_t c) {
    const std::size_t begin = c * kChunk;
    const std::size_t end = std::min(texts.size(), begin + kChunk);
    chunk_vectors[c] = provider->Embed(
        std::span<const std::string>(texts).subspan(begin, end - begin));
    if (chunk_vectors[c].size() != end - begin) {
      throw ProtocolError("provider returned a misaligned batch");
    }
  });
  EmbeddingStore store(provider->model_id());
  for (std::size_t c = 0; c < chunks; ++c) {
    for (std::size_t i = 0; i < chunk_vectors[c].size(); ++i) {
      store.Insert(texts[c * kChunk + i], std::move(chunk_vectors[c][i]));
    }
  }
  log << "embedded " << store.size() << " texts with " << provider->model_id()
      << " in " << FormatFixed(embed_time.Seconds(), 2) << " s\n";

  // Relations.
  Stopwatch eval_time;
  ResultsBundle bundle;
  bundle.model_id = provider->model_id();
  std::vector<RelationOutcome> intersectivity, pair, nonsub;
  if (want(RelationId::kIntersectivity)) {
    intersectivity = EvaluateIntersectivity(phrases, store, config.workers);
    std::vector<RelationOutcome> an, aan;
    for (const RelationOutcome& o : intersectivity) {
      if (o.type_tags.size() == 1) an.push_back(o);
      if (o.type_tags.size() == 2) aan.push_back(o);
    }
    bundle.tables[TableKind::kAnIntersectivity] = Aggregate(an, Grouping::kByType);
    bundle.globals[TableKind::kAnIntersectivity] = Summarize(an);
    if (!aan.empty()) {
      bundle.tables[TableKind::kAanIntersectivity] =
          Aggregate(aan, Grouping::kByOrderedTypePair);
      bundle.globals[TableKind::kAanIntersectivity] = Summarize(aan);
    }
  }
  if (want(RelationId::kPairIntersectivity)) {
    pair = EvaluatePairIntersectivity(quadruples, store, config.workers);
    bundle.tables[TableKind::kPairIntersectivity] =
        Aggregate(pair, Grouping::kByOrderedTypePair);
    bundle.globals[TableKind::kPairIntersectivity] = Summarize(pair);
  }
  if (want(RelationId::kNonSubsectivity)) {
    nonsub = EvaluateNonSubsectivity(an_phrases, store, config.workers);
    bundle.tables[TableKind::kNonSubsectivity] = Aggregate(nonsub, Grouping::kByType);
    bundle.globals[TableKind::kNonSubsectivity] = Summarize(nonsub);
  }
  log << "evaluated " << intersectivity.size() + pair.size() + nonsub.size()
      << " relation instances in " << FormatFixed(eval_time.Seconds(), 2)
      << " s\n";

  const std::vector<std::size_t> by_length = [&] {
    auto counts = CountByLength(phrases);
    counts.resize(std::max<std::size_t>(3, counts.size()), 0);
    return counts;
  }();
  bundle.metadata = RunMetadata{LexiconDigest(lexicon),
                                by_length[1],
                                by_length[2],
                                phrases.size(),
                                quadruples.size(),
                                texts.size(),
                                config.seed,
                                config.provider->ToString(),
                                digest};

  EvaluateSummary summary;
  const ordered_json header = RunHeader(digest, bundle.model_id, config.seed);

  // Outcomes.
  {
    const auto path = config.out_dir / "outcomes.jsonl";
    std::ofstream out = OpenOutput(path);
    out << header.dump() << '\n';
    for (const auto* group : {&intersectivity, &pair, &nonsub}) {
      for (const RelationOutcome& o : *group) WriteOutcomeRecord(o, out);
    }
    CloseOutput(out, path);
    summary.artifacts.push_back(path);
  }

  // Tables.
  for (const auto& [kind, cells] : bundle.tables) {
    for (TableFormat format :
         {TableFormat::kCsv, TableFormat::kMarkdown, TableFormat::kRecords}) {
      const auto path = config.out_dir / "tables" /
                        (std::string(TableKindName(kind)) + "." +
                         std::string(TableFormatExtension(format)));
      std::ofstream out = OpenOutput(path);
      switch (format) {
        case TableFormat::kCsv:
          out << "# config_digest: " << digest << " seed: " << config.seed
              << '\n';
          break;
        case TableFormat::kMarkdown:
          out << "<!-- config_digest: " << digest << " seed: " << config.seed
              << " -->\n\n";
          break;
        case TableFormat::kRecords:
          out << header.dump() << '\n';
          break;
      }
      out << RenderTable(bundle, kind, format);
      CloseOutput(out, path);
      summary.artifacts.push_back(path);
    }
    log << '\n' << RenderTable(bundle, kind, TableFormat::kMarkdown);
    const GlobalRate& global = bundle.globals[kind];
    log << TableKindName(kind) << " overall: " << FormatFixed(global.rate(), 4)
        << " (" << global.satisfied << "/" << global.total << ", ties "
        << global.ties << ")\n";
  }

  // Run metadata.
  {
    ordered_json run;
    run["config_digest"] = digest;
    run["model"] = bundle.model_id;
    run["provider"] = bundle.metadata.provider;
    run["seed"] = config.seed;
    run["lexicon_digest"] = bundle.metadata.lexicon_digest;
    run["lexicon"] = config.lexicon_path ? config.lexicon_path->string()
                                         : std::string("bundled");
    run["max_adjectives"] = config.max_adjectives;
    ordered_json relations = ordered_json::array();
    for (RelationId id : config.relations) relations.push_back(RelationName(id));
    run["relations"] = relations;
    ordered_json counts;
    counts["AN"] = bundle.metadata.an_phrases;
    counts["AAN"] = bundle.metadata.aan_phrases;
    counts["phrases"] = bundle.metadata.total_phrases;
    counts["quadruples"] = bundle.metadata.quadruples;
    counts["unique_texts"] = bundle.metadata.unique_texts;
    run["counts"] = counts;
    ordered_json globals;
    for (const auto& [kind, global] : bundle.globals) {
      globals[std::string(TableKindName(kind))] = RateJson(global);
    }
    run["overall"] = globals;
    const auto path = config.out_dir / "run.json";
    std::ofstream out = OpenOutput(path);
    out << run.dump(2) << '\n';
    CloseOutput(out, path);
    summary.artifacts.push_back(path);
  }

  // Regression against a reference table.
  if (config.reference) {
    const ReferenceTable reference = LoadReferenceCsv(*config.reference);
    summary.deviations = CompareAgainstReference(bundle, reference,
                                                 config.tolerance,
                                                 config.reference_row);
    const auto path = config.out_dir / "deviations.jsonl";
    std::ofstream out = OpenOutput(path);
    ordered_json head = header;
    head["reference_table"] = TableKindName(reference.kind);
    head["tolerance"] = config.tolerance;
    out << head.dump() << '\n';
    for (const Deviation& d : summary.deviations) {
      ordered_json record;
      record["row"] = d.row;
      record["column"] = d.column;
      if (d.observed) {
        record["observed"] = *d.observed;
      } else {
        record["observed"] = nullptr;
      }
      record["reference"] = d.reference;
      record["abs_diff"] = d.abs_diff;
      record["flagged"] = d.flagged;
      record["missing"] = d.missing;
      out << record.dump() << '\n';
    }
    CloseOutput(out, path);
    summary.artifacts.push_back(path);
    log << "\nregression vs " << config.reference->string() << " ("
        << TableKindName(reference.kind) << ", tolerance "
        << config.tolerance << "): " << summary.deviations.size()
        << " deviation(s)\n";
    for (const Deviation& d : summary.deviations) {
      log << "  " << d.column << ": "
          << (d.observed ? FormatFixed(*d.observed, 4) : std::string("missing"))
          << " vs " << FormatFixed(d.reference, 4) << '\n';
    }
  }

  log << "wrote " << summary.artifacts.size() << " artifacts to "
      << config.out_dir.string() << " in " << FormatFixed(total_time.Seconds(), 2)
      << " s\n";
  summary.bundle = std::move(bundle);
  return summary;
}

OracleSummary CmdOracle(const RunConfig& config, std::ostream& log) {
  const Lexicon lexicon = ResolveLexicon(config);
  const std::string digest = ConfigDigest(config, lexicon);
  OracleSummary summary;
  summary.report = RunSimulation(config.seed, config.universe_size,
                                 config.trials, config.mix, config.workers);
  summary.report_path = config.out_dir / "oracle_report.jsonl";
  std::ofstream out = OpenOutput(summary.report_path);
  WriteSimulationReport(summary.report, digest, out);
  CloseOutput(out, summary.report_path);
  log << FormatSimulationTable(summary.report);
  return summary;
}

}  // namespace adjprobe
