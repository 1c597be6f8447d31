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

#include <optional>
#include <vector>

#include "coloc/matrix.hpp"

namespace coloc {

/// Incremental Gaussian elimination. Rows are inserted one at a time and
/// kept in echelon form with a leading one at each pivot; only the stored
/// rows' nonzero entries are touched during reduction.
class Echelon {
 public:
  Echelon(std::size_t cols, Field f);

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }
  Field field() const { return field_; }

  /// Residue of v after elimination against the stored rows.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero(reduce(v)); }
  /// Returns true when v was independent of the stored rows.
  bool insert(Vector v);

  /// Fully reduced basis, one row per pivot in increasing pivot order.
  Matrix rref() const;
  std::vector<std::size_t> pivots() const;

 private:
  struct Row {
    Vector v;
    std::vector<std::size_t> nz;
  };
  std::size_t cols_;
  Field field_;
  std::vector<Row> rows_;
  std::vector<int> row_of_pivot_;
  std::vector<std::size_t> pivot_order_;  // sorted pivot columns
};

struct RrefResult {
  Matrix reduced;  // same shape as the input, zero rows at the bottom
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0}, one vector per free column in increasing order.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Kernel of the map whose rows were inserted into e.
std::vector<Vector> kernel_from_echelon(const Echelon& e);
/// Kernel of the map whose matrix has the given rows.
std::vector<Vector> kernel_of_rows(const std::vector<Vector>& rows,
                                   std::size_t cols, Field f);
std::optional<Vector> solve(const Matrix& m, const Vector& b);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace coloc
