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

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "coloc/scalar.hpp"

namespace coloc {

using Vector = std::vector<Scalar>;

Vector zero_vector(std::size_t n, Field f);
Vector unit_vector(std::size_t n, std::size_t i, Field f);
bool is_zero(std::span<const Scalar> v);
/// y += a * x
void axpy(const Scalar& a, std::span<const Scalar> x, std::span<Scalar> y);
Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scaled(const Scalar& a, std::span<const Scalar> x);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
/// Row-major flattening of a ⊗ b: index(i, j) = i * b.size() + j.
Vector kron(std::span<const Scalar> a, std::span<const Scalar> b);

/// Dense row-major matrix over a single Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f = {});

  static Matrix identity(std::size_t n, Field f = {});
  static Matrix from_ints(std::initializer_list<std::initializer_list<long>> rows,
                          Field f = {});
  /// Rows are copied verbatim; all must have equal length.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols,
                          Field f);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows,
                             Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<Scalar> row(std::size_t r) {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, std::span<const Scalar> v);

  Matrix transpose() const;
  Vector apply(std::span<const Scalar> v) const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Row-major flattening (index r * cols + c).
  const std::vector<Scalar>& data() const { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

Matrix kron(const Matrix& a, const Matrix& b);
/// Block-diagonal placement of the given matrices.
Matrix block_diagonal(const std::vector<Matrix>& blocks, Field f);

}  // namespace coloc
