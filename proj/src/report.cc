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

#include "adjprobe/report.h"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "adjprobe/errors.h"
#include "adjprobe/format.h"
#include "json.hpp"

namespace adjprobe {
namespace {

constexpr std::array<std::string_view, 4> kTableKindNames = {
    "an-intersectivity", "aan-intersectivity", "pair-intersectivity",
    "non-subsectivity"};

std::string CsvField(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(field);
  }
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string MarkdownField(std::string_view field) {
  std::string out;
  for (char c : field) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

const ConsistencyCell* FindCell(const std::vector<ConsistencyCell>& cells,
                                const GroupKey& key) {
  for (const ConsistencyCell& cell : cells) {
    if (cell.key == key) return &cell;
  }
  return nullptr;
}

const std::vector<ConsistencyCell>& CellsFor(const ResultsBundle& bundle,
                                             TableKind kind) {
  auto it = bundle.tables.find(kind);
  if (it == bundle.tables.end()) {
    throw ContractError("results for '" + bundle.model_id + "' have no " +
                        std::string(TableKindName(kind)) + " table");
  }
  return it->second;
}

std::size_t Arity(TableKind kind) {
  return kind == TableKind::kAnIntersectivity ||
                 kind == TableKind::kNonSubsectivity
             ? 1
             : 2;
}

}  // namespace

std::string_view TableKindName(TableKind kind) {
  return kTableKindNames[static_cast<std::size_t>(kind)];
}

std::optional<TableKind> ParseTableKind(std::string_view name) {
  for (TableKind kind : kAllTableKinds) {
    if (TableKindName(kind) == name) return kind;
  }
  return std::nullopt;
}

std::string_view TableFormatExtension(TableFormat format) {
  switch (format) {
    case TableFormat::kCsv: return "csv";
    case TableFormat::kMarkdown: return "md";
    case TableFormat::kRecords: return "jsonl";
  }
  return "";
}

std::optional<TableFormat> ParseTableFormat(std::string_view name) {
  if (name == "csv") return TableFormat::kCsv;
  if (name == "markdown" || name == "md") return TableFormat::kMarkdown;
  if (name == "records" || name == "jsonl") return TableFormat::kRecords;
  return std::nullopt;
}

std::vector<GroupKey> TableColumns(TableKind kind) {
  std::vector<GroupKey> columns;
  switch (kind) {
    case TableKind::kAnIntersectivity:
    case TableKind::kNonSubsectivity:
      for (AdjectiveType t : kAllAdjectiveTypes) columns.push_back({t, std::nullopt});
      break;
    case TableKind::kAanIntersectivity:
      for (AdjectiveType second : kAllAdjectiveTypes) {
        for (AdjectiveType first : kAllAdjectiveTypes) {
          columns.push_back({first, second});
        }
      }
      break;
    case TableKind::kPairIntersectivity:
      for (AdjectiveType first : kAllAdjectiveTypes) {
        for (AdjectiveType second : kAllAdjectiveTypes) {
          columns.push_back({first, second});
        }
      }
      break;
  }
  return columns;
}

int TableDecimals(TableKind kind) {
  return kind == TableKind::kAnIntersectivity ? 3 : 4;
}

std::string RenderTable(std::span<const ResultsBundle> bundles, TableKind kind,
                        TableFormat format) {
  const std::vector<GroupKey> columns = TableColumns(kind);
  const int decimals = TableDecimals(kind);
  std::ostringstream out;
  switch (format) {
    case TableFormat::kCsv: {
      out << TableKindName(kind);
      for (const GroupKey& key : columns) out << ',' << CsvField(key.Label());
      out << '\n';
      for (const ResultsBundle& bundle : bundles) {
        const auto& cells = CellsFor(bundle, kind);
        out << CsvField(bundle.model_id);
        for (const GroupKey& key : columns) {
          out << ',';
          if (const ConsistencyCell* cell = FindCell(cells, key)) {
            out << FormatFixed(cell->rate(), decimals);
          }
        }
        out << '\n';
      }
      break;
    }
    case TableFormat::kMarkdown: {
      out << "| model";
      for (const GroupKey& key : columns) out << " | " << key.Label();
      out << " |\n|---";
      for (std::size_t i = 0; i < columns.size(); ++i) out << "|---:";
      out << "|\n";
      for (const ResultsBundle& bundle : bundles) {
        const auto& cells = CellsFor(bundle, kind);
        out << "| " << MarkdownField(bundle.model_id);
        for (const GroupKey& key : columns) {
          const ConsistencyCell* cell = FindCell(cells, key);
          out << " | "
              << (cell ? FormatFixed(cell->rate(), decimals) : std::string("n/a"));
        }
        out << " |\n";
      }
      break;
    }
    case TableFormat::kRecords: {
      for (const ResultsBundle& bundle : bundles) {
        const auto& cells = CellsFor(bundle, kind);
        for (const GroupKey& key : columns) {
          const ConsistencyCell* cell = FindCell(cells, key);
          if (cell == nullptr) continue;
          nlohmann::ordered_json record;
          record["model"] = bundle.model_id;
          record["table"] = TableKindName(kind);
          nlohmann::ordered_json group = nlohmann::ordered_json::array();
          group.push_back(ShortName(key.first));
          if (key.second) group.push_back(ShortName(*key.second));
          record["group"] = std::move(group);
          record["satisfied"] = cell->satisfied;
          record["total"] = cell->total;
          record["ties"] = cell->ties;
          record["rate"] = cell->rate();
          out << record.dump() << '\n';
        }
      }
      break;
    }
  }
  return out.str();
}

std::string RenderTable(const ResultsBundle& bundle, TableKind kind,
                        TableFormat format) {
  return RenderTable(std::span<const ResultsBundle>(&bundle, 1), kind, format);
}

std::string RenderTable(const ResultsBundle& bundle, std::string_view kind,
                        std::string_view format) {
  const auto parsed_kind = ParseTableKind(kind);
  if (!parsed_kind) {
    throw ContractError("unknown table kind '" + std::string(kind) + "'");
  }
  const auto parsed_format = ParseTableFormat(format);
  if (!parsed_format) {
    throw ContractError("unknown table format '" + std::string(format) + "'");
  }
  return RenderTable(bundle, *parsed_kind, *parsed_format);
}

std::vector<std::vector<std::string>> ParseCsv(std::string_view document) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool in_quotes = false;
  bool at_line_start = true;
  std::size_t line = 1;
  for (std::size_t i = 0; i < document.size(); ++i) {
    const char c = document[i];
    if (at_line_start && !in_quotes && c == '#') {
      while (i < document.size() && document[i] != '\n') ++i;
      ++line;
      continue;
    }
    at_line_start = false;
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < document.size() && document[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty()) {
          throw FormatError(line, "csv", "quote inside an unquoted field");
        }
        in_quotes = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        break;
      case '\r':
        break;
      case '\n':
        row.push_back(std::move(field));
        field.clear();
        rows.push_back(std::move(row));
        row.clear();
        at_line_start = true;
        ++line;
        break;
      default:
        field += c;
    }
  }
  if (in_quotes) throw FormatError(line, "csv", "unterminated quoted field");
  if (!field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

ReferenceTable ParseReferenceCsv(std::string_view document) {
  const auto rows = ParseCsv(document);
  if (rows.empty()) throw FormatError(1, "header", "empty reference table");
  const auto& header = rows.front();
  const auto kind = ParseTableKind(header.front());
  if (!kind) {
    throw FormatError(1, "header",
                      "first header cell must name a table kind, got '" +
                          header.front() + "'");
  }
  ReferenceTable table{*kind, {}, {}, {}};
  for (std::size_t c = 1; c < header.size(); ++c) {
    const auto key = ParseGroupLabel(header[c]);
    if (!key) throw FormatError(1, header[c], "unrecognized column label");
    if ((key->second ? 2u : 1u) != Arity(*kind)) {
      throw ContractError("column '" + header[c] + "' does not fit a " +
                          std::string(TableKindName(*kind)) + " table");
    }
    table.columns.push_back(*key);
  }
  for (std::size_t r = 1; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (row.size() == 1 && row.front().empty()) continue;
    if (row.size() != header.size()) {
      throw FormatError(r + 1, "row", "expected " + std::to_string(header.size()) +
                                          " fields, got " +
                                          std::to_string(row.size()));
    }
    std::vector<std::optional<double>> values;
    for (std::size_t c = 1; c < row.size(); ++c) {
      const std::string& text = row[c];
      if (text.empty()) {
        values.push_back(std::nullopt);
        continue;
      }
      double value = 0.0;
      const auto [ptr, ec] =
          std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw FormatError(r + 1, header[c], "not a number: '" + text + "'");
      }
      values.push_back(value);
    }
    table.row_names.push_back(row.front());
    table.rows.push_back(std::move(values));
  }
  return table;
}

ReferenceTable LoadReferenceCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open reference table " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseReferenceCsv(buffer.str());
}

std::vector<Deviation> CompareAgainstReference(
    const ResultsBundle& bundle, const ReferenceTable& reference,
    double tolerance, const std::optional<std::string>& row) {
  const auto& cells = CellsFor(bundle, reference.kind);
  std::optional<std::size_t> row_index;
  auto find_row = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t i = 0; i < reference.row_names.size(); ++i) {
      if (reference.row_names[i] == name) return i;
    }
    return std::nullopt;
  };
  if (row) {
    row_index = find_row(*row);
    if (!row_index) {
      throw ContractError("reference has no row '" + *row + "'");
    }
  } else if (auto named = find_row(bundle.model_id)) {
    row_index = named;
  } else if (reference.rows.size() == 1) {
    row_index = 0;
  } else {
    throw ContractError("reference has " + std::to_string(reference.rows.size()) +
                        " rows and none named '" + bundle.model_id +
                        "'; pick one explicitly");
  }

  std::vector<Deviation> deviations;
  const auto& values = reference.rows[*row_index];
  for (std::size_t c = 0; c < reference.columns.size(); ++c) {
    if (!values[c]) continue;
    Deviation d;
    d.row = reference.row_names[*row_index];
    d.column = reference.columns[c].Label();
    d.reference = *values[c];
    if (const ConsistencyCell* cell = FindCell(cells, reference.columns[c])) {
      d.observed = cell->rate();
      d.abs_diff = std::abs(cell->rate() - *values[c]);
      d.flagged = d.abs_diff > tolerance;
    } else {
      d.missing = true;
    }
    if (d.flagged || d.missing) deviations.push_back(std::move(d));
  }
  return deviations;
}

}  // namespace adjprobe
