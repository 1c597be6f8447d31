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

#include "coloc/subspace.hpp"

#include "coloc/error.hpp"

namespace coloc {

Subspace::Subspace(std::size_t ambient, Field f)
    : ambient_(ambient), field_(f), basis_(0, ambient, f) {}

Subspace Subspace::from_echelon(const Echelon& e) {
  Subspace s(e.cols(), e.field());
  s.basis_ = e.rref();
  s.pivots_ = e.pivots();
  return s;
}

Subspace Subspace::span(std::size_t ambient, Field f,
                        const std::vector<Vector>& vectors) {
  Echelon e(ambient, f);
  for (const auto& v : vectors) e.insert(v);
  return from_echelon(e);
}

Subspace Subspace::full(std::size_t ambient, Field f) {
  Subspace s(ambient, f);
  s.basis_ = Matrix::identity(ambient, f);
  for (std::size_t i = 0; i < ambient; ++i) s.pivots_.push_back(i);
  return s;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_vector(i));
  return out;
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<bool> p(ambient_, false);
  for (auto c : pivots_) p[c] = true;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!p[i]) out.push_back(i);
  return out;
}

Vector Subspace::reduce(std::span<const Scalar> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("Subspace::reduce: bad length");
  Vector r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar c = r[pivots_[i]];
    if (!c.is_zero()) axpy(-c, basis_.row(i), r);
  }
  return r;
}

bool Subspace::contains(std::span<const Scalar> v) const {
  return is_zero(reduce(v));
}

Vector Subspace::coordinates(std::span<const Scalar> v) const {
  if (v.size() != ambient_)
    throw DimensionMismatch("Subspace::coordinates: bad length");
  Vector c;
  c.reserve(dim());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

Vector Subspace::from_coordinates(std::span<const Scalar> coords) const {
  if (coords.size() != dim())
    throw DimensionMismatch("Subspace::from_coordinates: bad length");
  Vector v = zero_vector(ambient_, field_);
  for (std::size_t i = 0; i < coords.size(); ++i) axpy(coords[i], basis_.row(i), v);
  return v;
}

bool Subspace::is_subspace_of(const Subspace& o) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!o.contains(basis_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& o) const {
  if (o.ambient_ != ambient_) throw DimensionMismatch("Subspace::sum: ambient");
  auto vs = basis_vectors();
  auto ws = o.basis_vectors();
  vs.insert(vs.end(), ws.begin(), ws.end());
  return span(ambient_, field_, vs);
}

Subspace Subspace::annihilator() const {
  return span(ambient_, field_, kernel_of_rows(basis_vectors(), ambient_, field_));
}

Subspace Subspace::intersection(const Subspace& o) const {
  if (o.ambient_ != ambient_)
    throw DimensionMismatch("Subspace::intersection: ambient");
  return annihilator().sum(o.annihilator()).annihilator();
}

Subspace Subspace::image_under(const Matrix& map) const {
  if (map.cols() != ambient_) throw DimensionMismatch("image_under: shape");
  std::vector<Vector> imgs;
  for (std::size_t i = 0; i < dim(); ++i) imgs.push_back(map.apply(basis_.row(i)));
  return span(map.rows(), map.field(), imgs);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.rows(), m.field(), cols);
}

Subspace kernel(const Matrix& m) {
  return Subspace::span(m.cols(), m.field(), kernel_basis(m));
}

Subspace preimage(const Matrix& map, const Subspace& target_sub) {
  // v maps into W iff every functional annihilating W kills map(v).
  const Subspace ann = target_sub.annihilator();
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < ann.dim(); ++i) {
    Vector r = zero_vector(map.cols(), map.field());
    for (std::size_t c = 0; c < map.cols(); ++c) {
      Scalar s(map.field());
      for (std::size_t t = 0; t < map.rows(); ++t)
        if (!ann.basis()(i, t).is_zero() && !map(t, c).is_zero())
          s.addmul(ann.basis()(i, t), map(t, c));
      r[c] = s;
    }
    rows.push_back(std::move(r));
  }
  return Subspace::span(map.cols(), map.field(),
                        kernel_of_rows(rows, map.cols(), map.field()));
}

}  // namespace coloc
