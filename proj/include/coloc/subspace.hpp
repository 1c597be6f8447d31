// Copyright 2026 The coloc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <vector>

#include "coloc/linalg.hpp"

namespace coloc {

/// A linear subspace of k^n stored as its reduced row-echelon basis, so two
/// subspaces are equal exactly when their representations are.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of k^ambient.
  Subspace(std::size_t ambient, Field f);

  static Subspace span(std::size_t ambient, Field f,
                       const std::vector<Vector>& vectors);
  static Subspace full(std::size_t ambient, Field f);
  static Subspace from_echelon(const Echelon& e);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  Field field() const { return field_; }
  const Matrix& basis() const { return basis_; }
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  std::vector<Vector> basis_vectors() const;
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates not carrying a pivot, in increasing order. These index the
  /// canonical basis of the quotient k^n / *this.
  std::vector<std::size_t> non_pivots() const;

  bool contains(std::span<const Scalar> v) const;
  /// v minus its component along the subspace; zero at all pivot columns.
  Vector reduce(std::span<const Scalar> v) const;
  /// Coordinates of v (assumed to lie in the subspace) in the rref basis.
  Vector coordinates(std::span<const Scalar> v) const;
  /// Inverse of coordinates().
  Vector from_coordinates(std::span<const Scalar> coords) const;

  bool is_subspace_of(const Subspace& o) const;
  Subspace sum(const Subspace& o) const;
  Subspace intersection(const Subspace& o) const;
  /// {f : <f, x> = 0 for all x} under the standard pairing.
  Subspace annihilator() const;
  /// Image of the subspace under a linear map (rows = target dimension).
  Subspace image_under(const Matrix& map) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ &&
           a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Field field_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Column space of a matrix.
Subspace image(const Matrix& m);
/// Null space of a matrix.
Subspace kernel(const Matrix& m);
/// Preimage of a subspace of the target under a linear map.
Subspace preimage(const Matrix& map, const Subspace& target_sub);

}  // namespace coloc
