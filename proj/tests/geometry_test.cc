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

#include "adjprobe/geometry.h"

#include <random>
#include <vector>

#include "gtest/gtest.h"

namespace adjprobe {
namespace {

EmbeddingVector Vec(std::initializer_list<double> values) {
  EmbeddingVector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double x : values) v(i++) = x;
  return v;
}

EmbeddingVector RandomVector(std::mt19937_64& rng, Eigen::Index dim) {
  std::normal_distribution<double> normal;
  EmbeddingVector v(dim);
  do {
    for (Eigen::Index i = 0; i < dim; ++i) v(i) = normal(rng);
  } while (IsZero(v));
  return v;
}

TEST(GeometryTest, KnownDistances) {
  EXPECT_NEAR(CosineDistance(Vec({1, 0}), Vec({1, 1})),
              0.292893218813452475599, 1e-15);
  EXPECT_EQ(CosineDistance(Vec({1, 0}), Vec({0, 1})), 1.0);
  EXPECT_EQ(CosineDistance(Vec({1, 0}), Vec({-1, 0})), 2.0);
  EXPECT_EQ(CosineDistance(Vec({3, 4}), Vec({3, 4})), 0.0);
}

TEST(GeometryTest, FloatScalar) {
  Vector<float> u(2), v(2);
  u << 1.0f, 0.0f;
  v << 0.0f, 2.0f;
  EXPECT_FLOAT_EQ(CosineDistance(u, v), 1.0f);
}

TEST(GeometryTest, Errors) {
  EXPECT_THROW(CosineDistance(Vec({0, 0}), Vec({1, 0})), GeometryError);
  EXPECT_THROW(CosineDistance(Vec({1, 0}), Vec({0, 0})), GeometryError);
  EXPECT_THROW(CosineDistance(Vec({1, 0}), Vec({1, 0, 0})), GeometryError);
  EXPECT_THROW(L2Normalize(Vec({0, 0, 0})), GeometryError);
  std::vector<EmbeddingVector> none;
  EXPECT_THROW(MeanPool<double>(none), GeometryError);
  std::vector<EmbeddingVector> mixed = {Vec({1, 2}), Vec({1, 2, 3})};
  EXPECT_THROW(MeanPool<double>(mixed), GeometryError);
}

TEST(GeometryTest, MeanPoolAverages) {
  std::vector<EmbeddingVector> vs = {Vec({1, 0}), Vec({0, 1}), Vec({2, 2})};
  const EmbeddingVector m = MeanPool<double>(vs);
  EXPECT_DOUBLE_EQ(m(0), 1.0);
  EXPECT_DOUBLE_EQ(m(1), 1.0);
}

TEST(GeometryPropertyTest, SymmetricBitForBit) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index dim = 1 + static_cast<Eigen::Index>(rng() % 64);
    const auto u = RandomVector(rng, dim);
    const auto v = RandomVector(rng, dim);
    ASSERT_EQ(CosineDistance(u, v), CosineDistance(v, u));
  }
}

TEST(GeometryPropertyTest, RangeAndIdentity) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index dim = 1 + static_cast<Eigen::Index>(rng() % 64);
    const auto u = RandomVector(rng, dim);
    const auto v = RandomVector(rng, dim);
    const double d = CosineDistance(u, v);
    ASSERT_GE(d, 0.0);
    ASSERT_LE(d, 2.0);
    ASSERT_NEAR(CosineDistance(u, u), 0.0, 1e-12);
    ASSERT_NEAR(CosineDistance(u, EmbeddingVector(-u)), 2.0, 1e-12);
  }
}

TEST(GeometryPropertyTest, PositiveScaleInvariance) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> scale(1e-3, 1e3);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index dim = 2 + static_cast<Eigen::Index>(rng() % 63);
    const auto u = RandomVector(rng, dim);
    const auto v = RandomVector(rng, dim);
    const EmbeddingVector su = scale(rng) * u;
    const EmbeddingVector sv = scale(rng) * v;
    ASSERT_NEAR(CosineDistance(su, sv), CosineDistance(u, v), 1e-9);
  }
}

TEST(GeometryPropertyTest, MeanPoolOfCopiesIsExact) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index dim = 1 + static_cast<Eigen::Index>(rng() % 32);
    const auto v = RandomVector(rng, dim);
    const std::size_t k = 1 + rng() % 12;
    std::vector<EmbeddingVector> copies(k, v);
    ASSERT_EQ(MeanPool<double>(copies), v);
  }
}

TEST(GeometryPropertyTest, NormalizeGivesUnitNormAndKeepsDistance) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 1000; ++trial) {
    const Eigen::Index dim = 1 + static_cast<Eigen::Index>(rng() % 64);
    const auto u = RandomVector(rng, dim);
    const auto v = RandomVector(rng, dim);
    const EmbeddingVector nu = L2Normalize(u);
    ASSERT_NEAR(OrderedSquaredNorm(nu), 1.0, 1e-12);
    ASSERT_NEAR(CosineDistance(nu, v), CosineDistance(u, v), 1e-12);
  }
}

}  // namespace
}  // namespace adjprobe
