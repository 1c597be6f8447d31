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

#include "coloc/matrix.hpp"

#include <string>

#include "coloc/error.hpp"

namespace coloc {

namespace {

void require_len(std::size_t a, std::size_t b, const char* what) {
  if (a != b)
    throw DimensionMismatch(std::string(what) + ": lengths " +
                            std::to_string(a) + " and " + std::to_string(b));
}

}  // namespace

Vector zero_vector(std::size_t n, Field f) { return Vector(n, Scalar(f)); }

Vector unit_vector(std::size_t n, std::size_t i, Field f) {
  Vector v = zero_vector(n, f);
  v.at(i) = Scalar(f, 1);
  return v;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

void axpy(const Scalar& a, std::span<const Scalar> x, std::span<Scalar> y) {
  require_len(x.size(), y.size(), "axpy");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero()) y[i].addmul(a, x[i]);
}

Scalar dot(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_len(a.size(), b.size(), "dot");
  if (a.empty()) return Scalar();
  Scalar s(a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s.addmul(a[i], b[i]);
  return s;
}

Vector scaled(const Scalar& a, std::span<const Scalar> x) {
  Vector r(x.begin(), x.end());
  for (auto& v : r) v *= a;
  return r;
}

Vector add(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_len(a.size(), b.size(), "add");
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector sub(std::span<const Scalar> a, std::span<const Scalar> b) {
  require_len(a.size(), b.size(), "sub");
  Vector r(a.begin(), a.end());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector kron(std::span<const Scalar> a, std::span<const Scalar> b) {
  if (a.empty() || b.empty()) return {};
  Vector r = zero_vector(a.size() * b.size(), a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar(f)) {}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(f, 1);
  return m;
}

Matrix Matrix::from_ints(std::initializer_list<std::initializer_list<long>> rows,
                         Field f) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c, f);
  std::size_t i = 0;
  for (const auto& row : rows) {
    require_len(row.size(), c, "from_ints");
    std::size_t j = 0;
    for (long v : row) m(i, j++) = Scalar(f, v);
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols,
                         Field f) {
  Matrix m(rows.size(), cols, f);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_len(rows[i].size(), cols, "from_rows");
    for (std::size_t j = 0; j < cols; ++j) {
      if (!(rows[i][j].field() == f)) throw FieldMismatch("from_rows: mixed fields");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows,
                            Field f) {
  Matrix m(rows, cols.size(), f);
  for (std::size_t j = 0; j < cols.size(); ++j) m.set_column(j, cols[j]);
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
  require_len(v.size(), rows_, "set_column");
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!(v[r].field() == field_)) throw FieldMismatch("set_column: mixed fields");
    (*this)(r, c) = v[r];
  }
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(std::span<const Scalar> v) const {
  require_len(v.size(), cols_, "apply");
  Vector out = zero_vector(rows_, field_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r].addmul(a, v[c]);
    }
  }
  return out;
}

bool Matrix::is_zero() const { return coloc::is_zero(data_); }

Matrix Matrix::operator*(const Matrix& o) const {
  require_len(cols_, o.rows_, "matrix product");
  if (!(field_ == o.field_)) throw FieldMismatch("matrix product: mixed fields");
  Matrix p(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o(k, j);
        if (!b.is_zero()) p(i, j).addmul(a, b);
      }
    }
  return p;
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_len(rows_, o.rows_, "matrix sum");
  require_len(cols_, o.cols_, "matrix sum");
  Matrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += o.data_[i];
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const {
  require_len(rows_, o.rows_, "matrix difference");
  require_len(cols_, o.cols_, "matrix difference");
  Matrix s(*this);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] -= o.data_[i];
  return s;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
         a.data_ == b.data_;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("kron: mixed fields");
  Matrix k(a.rows() * b.rows(), a.cols() * b.cols(), a.field());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x.is_zero()) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
          if (!b(r, c).is_zero())
            k(i * b.rows() + r, j * b.cols() + c) = x * b(r, c);
    }
  return k;
}

Matrix block_diagonal(const std::vector<Matrix>& blocks, Field f) {
  std::size_t r = 0, c = 0;
  for (const auto& b : blocks) {
    r += b.rows();
    c += b.cols();
  }
  Matrix m(r, c, f);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == f) && b.rows() * b.cols() > 0)
      throw FieldMismatch("block_diagonal: mixed fields");
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
    r0 += b.rows();
    c0 += b.cols();
  }
  return m;
}

}  // namespace coloc
