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

#ifndef ADJPROBE_REPORT_H_
#define ADJPROBE_REPORT_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "adjprobe/relations.h"

namespace adjprobe {

enum class TableKind {
  kAnIntersectivity,    // one column per adjective type
  kAanIntersectivity,   // ordered (first, second) type pairs of AAN phrases
  kPairIntersectivity,  // ordered (type(a1), type(a2)) of quadruples
  kNonSubsectivity,     // one column per adjective type
};

inline constexpr std::array<TableKind, 4> kAllTableKinds = {
    TableKind::kAnIntersectivity, TableKind::kAanIntersectivity,
    TableKind::kPairIntersectivity, TableKind::kNonSubsectivity};

std::string_view TableKindName(TableKind kind);
std::optional<TableKind> ParseTableKind(std::string_view name);

enum class TableFormat { kCsv, kMarkdown, kRecords };
std::string_view TableFormatExtension(TableFormat format);
std::optional<TableFormat> ParseTableFormat(std::string_view name);

// Column keys in rendering order. Type-pair columns for AAN tables vary the
// first type fastest; for the pair relation the second type varies fastest.
std::vector<GroupKey> TableColumns(TableKind kind);
// Rates print with 3 decimals for the AN table and 4 elsewhere.
int TableDecimals(TableKind kind);

struct RunMetadata {
  std::string lexicon_digest;
  std::size_t an_phrases = 0;
  std::size_t aan_phrases = 0;
  std::size_t total_phrases = 0;
  std::size_t quadruples = 0;
  std::size_t unique_texts = 0;
  std::uint64_t seed = 0;
  std::string provider;
  std::string config_digest;
};

struct ResultsBundle {
  std::string model_id;
  std::map<TableKind, std::vector<ConsistencyCell>> tables;
  std::map<TableKind, GlobalRate> globals;
  RunMetadata metadata;
};

// One row per bundle. Throws ContractError if a bundle has no cells for
// `kind`. Cells a bundle lacks render as empty (CSV) or n/a (Markdown) and
// are skipped in records.
std::string RenderTable(std::span<const ResultsBundle> bundles, TableKind kind,
                        TableFormat format);
std::string RenderTable(const ResultsBundle& bundle, TableKind kind,
                        TableFormat format);
// String-keyed form; unknown kind or format names raise ContractError.
std::string RenderTable(const ResultsBundle& bundle, std::string_view kind,
                        std::string_view format);

// RFC 4180 reader. Lines starting with '#' outside quotes are skipped.
std::vector<std::vector<std::string>> ParseCsv(std::string_view document);

// Reference table in the rendered CSV layout: the first header cell names the
// table kind, the remaining header cells are column labels, and each row is a
// model name followed by rates (blank = not reported).
struct ReferenceTable {
  TableKind kind;
  std::vector<GroupKey> columns;
  std::vector<std::string> row_names;
  std::vector<std::vector<std::optional<double>>> rows;
};

// Throws FormatError on malformed content and ContractError when a column
// does not fit the table kind.
ReferenceTable ParseReferenceCsv(std::string_view document);
ReferenceTable LoadReferenceCsv(const std::filesystem::path& path);

struct Deviation {
  std::string row;
  std::string column;
  std::optional<double> observed;  // empty: the bundle lacks this cell
  double reference = 0.0;
  double abs_diff = 0.0;
  bool flagged = false;
  bool missing = false;
};

// Cells whose |observed - reference| exceeds `tolerance`, plus reference cells
// the bundle does not have. The reference row is `row` if given, else the row
// named like the bundle's model, else the only row. Throws ContractError when
// the bundle has no table of the reference's kind or no row can be chosen.
std::vector<Deviation> CompareAgainstReference(
    const ResultsBundle& bundle, const ReferenceTable& reference,
    double tolerance, const std::optional<std::string>& row = std::nullopt);

}  // namespace adjprobe

#endif  // ADJPROBE_REPORT_H_
