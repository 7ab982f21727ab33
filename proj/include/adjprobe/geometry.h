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

#ifndef ADJPROBE_GEOMETRY_H_
#define ADJPROBE_GEOMETRY_H_

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include <Eigen/Core>

#include "adjprobe/errors.h"

namespace adjprobe {

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using EmbeddingVector = Vector<double>;

namespace internal {

template <typename DerivedA, typename DerivedB>
void CheckSameDimension(const Eigen::MatrixBase<DerivedA>& u,
                        const Eigen::MatrixBase<DerivedB>& v) {
  if (u.size() != v.size()) {
    throw GeometryError("dimension mismatch: " + std::to_string(u.size()) +
                        " vs " + std::to_string(v.size()));
  }
}

}  // namespace internal

// Sum of u_i * v_i accumulated strictly left to right. Eigen's own dot() uses
// a packet reduction whose order depends on the target ISA, which would make
// results differ across machines.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar OrderedDot(const Eigen::MatrixBase<DerivedA>& u,
                                     const Eigen::MatrixBase<DerivedB>& v) {
  internal::CheckSameDimension(u, v);
  typename DerivedA::Scalar sum(0);
  for (Eigen::Index i = 0; i < u.size(); ++i) sum += u(i) * v(i);
  return sum;
}

template <typename Derived>
typename Derived::Scalar OrderedSquaredNorm(
    const Eigen::MatrixBase<Derived>& v) {
  typename Derived::Scalar sum(0);
  for (Eigen::Index i = 0; i < v.size(); ++i) sum += v(i) * v(i);
  return sum;
}

template <typename Derived>
bool IsZero(const Eigen::MatrixBase<Derived>& v) {
  return (v.array() == typename Derived::Scalar(0)).all();
}

template <typename Derived>
bool AllFinite(const Eigen::MatrixBase<Derived>& v) {
  return v.allFinite();
}

// 1 - cos(u, v), clamped to [0, 2]. The formula is symmetric term by term,
// so CosineDistance(u, v) == CosineDistance(v, u) bit for bit.
// Throws GeometryError on dimension mismatch or a zero operand.
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar CosineDistance(const Eigen::MatrixBase<DerivedA>& u,
                                         const Eigen::MatrixBase<DerivedB>& v) {
  using Scalar = typename DerivedA::Scalar;
  internal::CheckSameDimension(u, v);
  if (u.size() == 0) throw GeometryError("empty vector");
  if (IsZero(u) || IsZero(v)) {
    throw GeometryError("zero vector has no direction");
  }
  const Scalar norms = std::sqrt(OrderedSquaredNorm(u)) *
                       std::sqrt(OrderedSquaredNorm(v));
  const Scalar distance = Scalar(1) - OrderedDot(u, v) / norms;
  return std::clamp(distance, Scalar(0), Scalar(2));
}

// Componentwise arithmetic mean, computed as a running mean so that pooling
// k copies of v returns v exactly.
template <typename Scalar>
Vector<Scalar> MeanPool(std::span<const Vector<Scalar>> vectors) {
  if (vectors.empty()) throw GeometryError("mean pool of no vectors");
  Vector<Scalar> mean = vectors.front();
  for (std::size_t k = 1; k < vectors.size(); ++k) {
    internal::CheckSameDimension(mean, vectors[k]);
    mean += (vectors[k] - mean) / static_cast<Scalar>(k + 1);
  }
  return mean;
}

template <typename Derived>
Vector<typename Derived::Scalar> L2Normalize(
    const Eigen::MatrixBase<Derived>& v) {
  if (v.size() == 0 || IsZero(v)) {
    throw GeometryError("cannot normalize a zero vector");
  }
  return v / std::sqrt(OrderedSquaredNorm(v));
}

}  // namespace adjprobe

#endif  // ADJPROBE_GEOMETRY_H_
