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

#include "coloc/linalg.hpp"

#include <algorithm>

#include "coloc/error.hpp"

namespace coloc {

Echelon::Echelon(std::size_t cols, Field f)
    : cols_(cols), field_(f), row_of_pivot_(cols, -1) {}

Vector Echelon::reduce(Vector v) const {
  if (v.size() != cols_) throw DimensionMismatch("Echelon::reduce: bad length");
  for (std::size_t c : pivot_order_) {
    if (v[c].is_zero()) continue;
    const Row& r = rows_[static_cast<std::size_t>(row_of_pivot_[c])];
    const Scalar factor = v[c];
    for (std::size_t j : r.nz) v[j].submul(factor, r.v[j]);
  }
  return v;
}

bool Echelon::insert(Vector v) {
  for (const auto& x : v)
    if (!(x.field() == field_)) throw FieldMismatch("Echelon: mixed fields");
  v = reduce(std::move(v));
  std::size_t lead = cols_;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!v[j].is_zero()) {
      lead = j;
      break;
    }
  if (lead == cols_) return false;
  const Scalar inv = v[lead].inverse();
  Row r;
  for (std::size_t j = lead; j < cols_; ++j)
    if (!v[j].is_zero()) {
      v[j] *= inv;
      r.nz.push_back(j);
    }
  r.v = std::move(v);
  row_of_pivot_[lead] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  pivot_order_.insert(
      std::upper_bound(pivot_order_.begin(), pivot_order_.end(), lead), lead);
  return true;
}

std::vector<std::size_t> Echelon::pivots() const { return pivot_order_; }

Matrix Echelon::rref() const {
  // Back-substitute from the last pivot so every row is zero at all other
  // pivot columns.
  std::vector<Vector> reduced(pivot_order_.size());
  for (std::size_t k = pivot_order_.size(); k-- > 0;) {
    const std::size_t c = pivot_order_[k];
    Vector v = rows_[static_cast<std::size_t>(row_of_pivot_[c])].v;
    for (std::size_t l = k + 1; l < pivot_order_.size(); ++l) {
      const std::size_t c2 = pivot_order_[l];
      if (v[c2].is_zero()) continue;
      const Scalar factor = v[c2];
      axpy(-factor, reduced[l], v);
    }
    reduced[k] = std::move(v);
  }
  return Matrix::from_rows(reduced, cols_, field_);
}

RrefResult rref(const Matrix& m) {
  Echelon e(m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row_vector(r));
  Matrix top = e.rref();
  Matrix full(m.rows(), m.cols(), m.field());
  for (std::size_t r = 0; r < top.rows(); ++r)
    for (std::size_t c = 0; c < top.cols(); ++c) full(r, c) = top(r, c);
  return {std::move(full), e.pivots()};
}

std::size_t rank(const Matrix& m) {
  Echelon e(m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row_vector(r));
  return e.rank();
}

std::vector<Vector> kernel_from_echelon(const Echelon& e) {
  const Matrix r = e.rref();
  const auto piv = e.pivots();
  std::vector<bool> is_pivot(e.cols(), false);
  for (auto p : piv) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < e.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = zero_vector(e.cols(), e.field());
    v[f] = Scalar(e.field(), 1);
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  Echelon e(m.cols(), m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row_vector(r));
  return kernel_from_echelon(e);
}

std::vector<Vector> kernel_of_rows(const std::vector<Vector>& rows,
                                   std::size_t cols, Field f) {
  Echelon e(cols, f);
  for (const auto& r : rows) e.insert(r);
  return kernel_from_echelon(e);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows())
    throw DimensionMismatch("solve: right-hand side has length " +
                            std::to_string(b.size()) + ", expected " +
                            std::to_string(m.rows()));
  Echelon e(m.cols() + 1, m.field());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Vector row = m.row_vector(r);
    row.push_back(b[r]);
    e.insert(std::move(row));
  }
  const auto piv = e.pivots();
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;
  const Matrix red = e.rref();
  Vector x = zero_vector(m.cols(), m.field());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = red(i, m.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse: not square");
  const std::size_t n = m.rows();
  Echelon e(2 * n, m.field());
  for (std::size_t r = 0; r < n; ++r) {
    Vector row = m.row_vector(r);
    for (std::size_t j = 0; j < n; ++j)
      row.push_back(Scalar(m.field(), j == r ? 1 : 0));
    e.insert(std::move(row));
  }
  const auto piv = e.pivots();
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) return std::nullopt;
  const Matrix red = e.rref();
  Matrix inv(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = red(i, n + j);
  return inv;
}

}  // namespace coloc
