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

#include <random>
#include <sstream>

#include "adjprobe/errors.h"
#include "adjprobe/providers.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace adjprobe {
namespace {

EmbeddingVector Vec(std::initializer_list<double> values) {
  EmbeddingVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

EmbeddingStore Parse(const std::string& doc) {
  std::istringstream in(doc);
  return ReadStore(in);
}

TEST(EmbeddingStoreTest, InsertAndLookup) {
  EmbeddingStore store("m");
  EXPECT_FALSE(store.dimension().has_value());
  EXPECT_TRUE(store.Insert("red dog", Vec({1, 2})));
  EXPECT_FALSE(store.Insert("red dog", Vec({9, 9})));
  EXPECT_EQ(store.At("red dog"), Vec({1, 2}));
  EXPECT_EQ(store.dimension(), 2);
  EXPECT_THROW(store.Insert("dog", Vec({1, 2, 3})), DataError);
  EXPECT_THROW(store.Insert("cat", Vec({1, std::nan("")})), DataError);
  try {
    store.At("fake gun");
    FAIL();
  } catch (const MissingEmbeddingError& e) {
    EXPECT_EQ(e.text(), "fake gun");
  }
}

TEST(EmbeddingStoreTest, EmptyDocumentIsEmptyStore) {
  EXPECT_TRUE(Parse("").empty());
  const EmbeddingStore header_only = Parse("{\"model\":\"m\",\"dim\":0}\n");
  EXPECT_TRUE(header_only.empty());
  EXPECT_EQ(header_only.model_id(), "m");
}

TEST(EmbeddingStoreTest, MixedDimensionsRejected) {
  const std::string doc =
      "{\"model\":\"m\",\"dim\":0}\n"
      "{\"text\":\"a\",\"vector\":[1,0]}\n"
      "{\"text\":\"b\",\"vector\":[1,0,0]}\n";
  try {
    Parse(doc);
    FAIL();
  } catch (const DataError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find('2'), std::string::npos);
    EXPECT_NE(what.find('3'), std::string::npos);
  }
}

TEST(EmbeddingStoreTest, MalformedLinesCarryLineNumber) {
  try {
    Parse("{\"model\":\"m\",\"dim\":0}\n{\"text\":\"a\",\"vector\":[1,0]}\nnot json\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(Parse("{\"model\":\"m\",\"dim\":0}\n{\"text\":\"a\"}\n"),
               FormatError);
  EXPECT_THROW(Parse("{\"model\":\"m\",\"dim\":0}\n"
                     "{\"text\":\"a\",\"vector\":[1]}\n"
                     "{\"text\":\"a\",\"vector\":[2]}\n"),
               FormatError);
}

TEST(EmbeddingStoreTest, FileProviderNamesMissingText) {
  EmbeddingStore store("m");
  store.Insert("red dog", Vec({1, 0}));
  FileProvider provider(store);
  EXPECT_EQ(provider.model_id(), "m");
  const std::vector<std::string> texts = {"red dog", "blue dog"};
  try {
    provider.Embed(texts);
    FAIL();
  } catch (const MissingEmbeddingError& e) {
    EXPECT_EQ(e.text(), "blue dog");
  }
}

// Random stores survive a save/load cycle bit for bit.
TEST(EmbeddingStorePropertyTest, RoundTrip) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> value(-1e6, 1e6);
  testing::TempDir dir;
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index dim = 1 + static_cast<Eigen::Index>(rng() % 16);
    EmbeddingStore store("model-" + std::to_string(trial));
    const std::size_t n = rng() % 8;
    for (std::size_t i = 0; i < n; ++i) {
      EmbeddingVector v(dim);
      for (Eigen::Index j = 0; j < dim; ++j) {
        v(j) = value(rng) * std::pow(10.0, static_cast<double>(rng() % 40) - 20);
      }
      std::string text = "t" + std::to_string(i) + " \"q\"\\ é";
      store.Insert(std::move(text), std::move(v));
    }
    std::ostringstream out;
    WriteStore(store, out);
    ASSERT_EQ(Parse(out.str()), store) << out.str();
    if (trial % 100 == 0) {
      const auto path = dir / "store.jsonl";
      SaveStore(store, path);
      ASSERT_EQ(LoadStore(path), store);
    }
  }
}

}  // namespace
}  // namespace adjprobe
