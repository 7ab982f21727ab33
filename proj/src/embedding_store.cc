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

#include "adjprobe/embedding_store.h"

#include <fstream>
#include <istream>
#include <ostream>

#include "adjprobe/errors.h"
#include "json.hpp"

namespace adjprobe {

using ordered_json = nlohmann::ordered_json;

EmbeddingStore::EmbeddingStore(std::string model_id,
                               std::optional<Eigen::Index> dimension)
    : model_id_(std::move(model_id)), dimension_(dimension) {
  if (dimension_ && *dimension_ < 1) {
    throw DataError("store dimension must be positive");
  }
}

bool EmbeddingStore::Insert(std::string text, EmbeddingVector vector) {
  if (vector.size() < 1) throw DataError("empty vector for '" + text + "'");
  if (dimension_ && *dimension_ != vector.size()) {
    throw DataError("dimension clash for '" + text + "': store has " +
                    std::to_string(*dimension_) + ", vector has " +
                    std::to_string(vector.size()));
  }
  if (!AllFinite(vector)) {
    throw DataError("non-finite component in vector for '" + text + "'");
  }
  if (index_.contains(text)) return false;
  dimension_ = vector.size();
  index_.emplace(text, entries_.size());
  entries_.emplace_back(std::move(text), std::move(vector));
  return true;
}

const EmbeddingVector* EmbeddingStore::Find(std::string_view text) const {
  auto it = index_.find(std::string(text));
  if (it == index_.end()) return nullptr;
  return &entries_[it->second].second;
}

const EmbeddingVector& EmbeddingStore::At(std::string_view text) const {
  const EmbeddingVector* v = Find(text);
  if (v == nullptr) throw MissingEmbeddingError(std::string(text));
  return *v;
}

bool operator==(const EmbeddingStore& a, const EmbeddingStore& b) {
  if (a.model_id_ != b.model_id_ || a.dimension_ != b.dimension_ ||
      a.entries_.size() != b.entries_.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].first != b.entries_[i].first) return false;
    if (a.entries_[i].second != b.entries_[i].second) return false;
  }
  return true;
}

std::string StoreHeaderLine(const std::string& model_id,
                            std::optional<Eigen::Index> dimension) {
  ordered_json header;
  header["model"] = model_id;
  header["dim"] = dimension.value_or(0);
  return header.dump();
}

void WriteStoreRecord(const std::string& text, const EmbeddingVector& vector,
                      std::ostream& out) {
  ordered_json record;
  record["text"] = text;
  ordered_json components = ordered_json::array();
  for (Eigen::Index i = 0; i < vector.size(); ++i) {
    components.push_back(vector(i));
  }
  record["vector"] = std::move(components);
  out << record.dump() << '\n';
}

void WriteStore(const EmbeddingStore& store, std::ostream& out) {
  out << StoreHeaderLine(store.model_id(), store.dimension()) << '\n';
  for (const auto& [text, vector] : store.entries()) {
    WriteStoreRecord(text, vector, out);
  }
}

namespace {

EmbeddingVector ParseVector(const ordered_json& value, std::size_t line) {
  if (!value.is_array() || value.empty()) {
    throw FormatError(line, "vector", "expected a non-empty number array");
  }
  EmbeddingVector v(static_cast<Eigen::Index>(value.size()));
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (!value[i].is_number()) {
      throw FormatError(line, "vector", "component " + std::to_string(i) +
                                            " is not a number");
    }
    v(static_cast<Eigen::Index>(i)) = value[i].get<double>();
  }
  return v;
}

}  // namespace

EmbeddingStore ReadStore(std::istream& in) {
  std::string line;
  std::size_t line_number = 0;
  std::optional<EmbeddingStore> store;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    ordered_json record;
    try {
      record = ordered_json::parse(line);
    } catch (const ordered_json::parse_error& e) {
      throw FormatError(line_number, "record", e.what());
    }
    if (!record.is_object()) {
      throw FormatError(line_number, "record", "expected a JSON object");
    }
    if (!store) {
      auto model = record.find("model");
      auto dim = record.find("dim");
      if (model == record.end() || !model->is_string()) {
        throw FormatError(line_number, "model", "missing metadata line");
      }
      if (dim == record.end() || !dim->is_number_integer() ||
          dim->get<long long>() < 0) {
        throw FormatError(line_number, "dim", "expected a non-negative integer");
      }
      const long long d = dim->get<long long>();
      store.emplace(model->get<std::string>(),
                    d == 0 ? std::nullopt
                           : std::optional<Eigen::Index>(
                                 static_cast<Eigen::Index>(d)));
      continue;
    }
    auto text = record.find("text");
    auto vector = record.find("vector");
    if (text == record.end() || !text->is_string()) {
      throw FormatError(line_number, "text", "expected a string");
    }
    if (vector == record.end()) {
      throw FormatError(line_number, "vector", "missing");
    }
    EmbeddingVector v = ParseVector(*vector, line_number);
    if (store->dimension() && *store->dimension() != v.size()) {
      throw DataError("record at line " + std::to_string(line_number) +
                      " has dimension " + std::to_string(v.size()) +
                      ", expected " + std::to_string(*store->dimension()));
    }
    if (!AllFinite(v)) {
      throw DataError("record at line " + std::to_string(line_number) +
                      " has a non-finite component");
    }
    if (!store->Insert(text->get<std::string>(), std::move(v))) {
      throw FormatError(line_number, "text",
                        "duplicate text '" + text->get<std::string>() + "'");
    }
  }
  if (!store) return EmbeddingStore();
  return std::move(*store);
}

void SaveStore(const EmbeddingStore& store, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write vector file " + path.string());
  WriteStore(store, out);
  if (!out) throw Error("write failed for vector file " + path.string());
}

EmbeddingStore LoadStore(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open vector file " + path.string());
  return ReadStore(in);
}

}  // namespace adjprobe
