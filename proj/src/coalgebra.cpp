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

#include "coloc/coalgebra.hpp"

#include <array>
#include <sstream>

#include "coloc/error.hpp"

namespace coloc {

namespace {

using Key3 = std::array<std::size_t, 3>;
using Acc3 = std::map<Key3, Scalar>;

void accumulate(Acc3& acc, const Key3& k, const Scalar& v) {
  auto [it, inserted] = acc.try_emplace(k, v);
  if (!inserted) it->second += v;
}

bool same_sparse(const Acc3& a, const Acc3& b, Key3* witness) {
  // Compare ignoring explicit zeros.
  auto nonzero = [](const Acc3& m) {
    Acc3 out;
    for (const auto& [k, v] : m)
      if (!v.is_zero()) out.emplace(k, v);
    return out;
  };
  const Acc3 x = nonzero(a), y = nonzero(b);
  if (x == y) return true;
  for (const auto& [k, v] : x) {
    auto it = y.find(k);
    if (it == y.end() || !(it->second == v)) {
      if (witness) *witness = k;
      return false;
    }
  }
  for (const auto& [k, v] : y)
    if (!x.count(k)) {
      if (witness) *witness = k;
      return false;
    }
  return true;
}

void check_terms(const std::vector<Expansion>& terms, std::size_t first_dim,
                 std::size_t second_dim, Field f, const char* what) {
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (const auto& t : terms[i]) {
      if (t.first >= first_dim || t.second >= second_dim)
        throw Error(std::string(what) + ": index out of range in expansion of basis element " +
                    std::to_string(i));
      if (!(t.coef.field() == f))
        throw FieldMismatch(std::string(what) + ": mixed fields in expansion of basis element " +
                            std::to_string(i));
    }
}

void check_labels(const std::vector<std::string>& labels, const char* what) {
  std::map<std::string, int> seen;
  for (const auto& l : labels)
    if (++seen[l] > 1) throw Error(std::string(what) + ": duplicate label '" + l + "'");
}

std::vector<std::string> prefixed(const std::vector<std::string>& labels,
                                  std::size_t i) {
  std::vector<std::string> out;
  for (const auto& l : labels) out.push_back(std::to_string(i) + "." + l);
  return out;
}

std::vector<std::string> labels_at(const std::vector<std::string>& labels,
                                   const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(labels[i]);
  return out;
}

// Nonzero parts of a coaction applied to v. `pick` maps a term to
// (coalgebra index, module index).
template <class Pick>
std::vector<std::pair<std::size_t, Vector>> sparse_coact(const std::vector<Expansion>& co,
                                                         std::span<const Scalar> v,
                                                         std::size_t dim, Field f, Pick pick) {
  std::map<std::size_t, Vector> acc;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : co[i]) {
      const auto [k, j] = pick(t);
      auto it = acc.find(k);
      if (it == acc.end()) it = acc.emplace(k, zero_vector(dim, f)).first;
      it->second[j].addmul(v[i], t.coef);
    }
  }
  std::vector<std::pair<std::size_t, Vector>> out;
  for (auto& [k, part] : acc)
    if (!is_zero(part)) out.emplace_back(k, std::move(part));
  return out;
}

}  // namespace

std::string Violation::to_string() const {
  std::ostringstream os;
  os << identity << " fails at basis element " << basis_index;
  if (!label.empty()) os << " (" << label << ")";
  if (!detail.empty()) os << ": " << detail;
  return os.str();
}

Coalgebra::Coalgebra(Field f, std::vector<std::string> labels,
                     std::vector<Expansion> delta, Vector counit)
    : field_(f), labels_(std::move(labels)), delta_(std::move(delta)),
      counit_(std::move(counit)) {
  if (labels_.empty()) throw Error("coalgebra must have dimension >= 1");
  if (delta_.size() != labels_.size() || counit_.size() != labels_.size())
    throw DimensionMismatch("coalgebra: basis, delta and counit sizes differ");
  check_labels(labels_, "coalgebra");
  check_terms(delta_, dim(), dim(), f, "coalgebra");
  for (const auto& e : counit_)
    if (!(e.field() == f)) throw FieldMismatch("coalgebra: counit over another field");
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

std::optional<std::size_t> Coalgebra::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vector Coalgebra::comultiply(std::span<const Scalar> v) const {
  if (v.size() != dim()) throw DimensionMismatch("comultiply: bad length");
  const std::size_t n = dim();
  Vector out = zero_vector(n * n, field_);
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : delta_[i]) out[t.first * n + t.second].addmul(v[i], t.coef);
  }
  return out;
}

bool operator==(const Coalgebra& a, const Coalgebra& b) {
  if (!(a.field_ == b.field_) || a.labels_ != b.labels_ || !(a.counit_ == b.counit_))
    return false;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Acc3 x, y;
    for (const auto& t : a.delta_[i]) accumulate(x, {t.first, t.second, 0}, t.coef);
    for (const auto& t : b.delta_[i]) accumulate(y, {t.first, t.second, 0}, t.coef);
    if (!same_sparse(x, y, nullptr)) return false;
  }
  return true;
}

std::optional<Violation> validate_coalgebra(const Coalgebra& c) {
  const std::size_t n = c.dim();
  const Field f = c.field();
  for (std::size_t i = 0; i < n; ++i) {
    Acc3 lhs, rhs;
    for (const auto& t : c.delta(i)) {
      for (const auto& u : c.delta(t.first))
        accumulate(lhs, {u.first, u.second, t.second}, t.coef * u.coef);
      for (const auto& u : c.delta(t.second))
        accumulate(rhs, {t.first, u.first, u.second}, t.coef * u.coef);
    }
    Key3 w{};
    if (!same_sparse(lhs, rhs, &w)) {
      return Violation{"coassociativity (delta (x) id) delta = (id (x) delta) delta", i,
                       c.label(i),
                       "coefficient of " + c.label(w[0]) + " (x) " + c.label(w[1]) +
                           " (x) " + c.label(w[2]) + " differs"};
    }
    Vector left = zero_vector(n, f), right = zero_vector(n, f);
    for (const auto& t : c.delta(i)) {
      left[t.second].addmul(c.counit()[t.first], t.coef);
      right[t.first].addmul(c.counit()[t.second], t.coef);
    }
    const Vector id = unit_vector(n, i, f);
    if (!(left == id))
      return Violation{"counit law (eps (x) id) delta = id", i, c.label(i), ""};
    if (!(right == id))
      return Violation{"counit law (id (x) eps) delta = id", i, c.label(i), ""};
  }
  return std::nullopt;
}

Comodule::Comodule(CoalgebraPtr c, std::vector<std::string> labels,
                   std::vector<Expansion> coaction)
    : coalgebra_(std::move(c)), labels_(std::move(labels)),
      coaction_(std::move(coaction)) {
  if (!coalgebra_) throw Error("comodule: missing coalgebra");
  if (coaction_.size() != labels_.size())
    throw DimensionMismatch("comodule: basis and coaction sizes differ");
  check_labels(labels_, "comodule");
  check_terms(coaction_, dim(), coalgebra_->dim(), coalgebra_->field(), "comodule");
}

std::vector<Vector> Comodule::coact(std::span<const Scalar> v) const {
  if (v.size() != dim()) throw DimensionMismatch("coact: bad length");
  std::vector<Vector> parts(coalgebra_->dim(), zero_vector(dim(), field()));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : coaction_[i]) parts[t.second][t.first].addmul(v[i], t.coef);
  }
  return parts;
}

std::vector<std::pair<std::size_t, Vector>> Comodule::coact_parts(
    std::span<const Scalar> v) const {
  if (v.size() != dim()) throw DimensionMismatch("coact: bad length");
  return sparse_coact(coaction_, v, dim(), field(),
                      [](const Term& t) { return std::pair{t.second, t.first}; });
}

Matrix Comodule::action_matrix(std::span<const Scalar> f) const {
  if (f.size() != coalgebra_->dim())
    throw DimensionMismatch("action_matrix: functional has wrong length");
  Matrix a(dim(), dim(), field());
  for (std::size_t i = 0; i < dim(); ++i)
    for (const auto& t : coaction_[i])
      if (!f[t.second].is_zero()) a(t.first, i).addmul(t.coef, f[t.second]);
  return a;
}

bool same_coalgebra(const CoalgebraPtr& a, const CoalgebraPtr& b) {
  return a == b || (a && b && *a == *b);
}

std::optional<Violation> validate_comodule(const Comodule& m) {
  const Coalgebra& c = *m.coalgebra();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Acc3 lhs, rhs;
    for (const auto& t : m.coaction(i)) {
      for (const auto& u : m.coaction(t.first))
        accumulate(lhs, {u.first, u.second, t.second}, t.coef * u.coef);
      for (const auto& u : c.delta(t.second))
        accumulate(rhs, {t.first, u.first, u.second}, t.coef * u.coef);
    }
    Vector v = zero_vector(m.dim(), m.field());
    for (const auto& t : m.coaction(i)) v[t.first].addmul(c.counit()[t.second], t.coef);
    if (!(v == unit_vector(m.dim(), i, m.field())))
      return Violation{"coaction counit law (id (x) eps) rho = id", i, m.labels()[i], ""};
    Key3 w{};
    if (!same_sparse(lhs, rhs, &w))
      return Violation{"coaction coassociativity (rho (x) id) rho = (id (x) delta) rho", i,
                       m.labels()[i], ""};
  }
  return std::nullopt;
}

LeftComodule::LeftComodule(CoalgebraPtr c, std::vector<std::string> labels,
                           std::vector<Expansion> coaction)
    : coalgebra_(std::move(c)), labels_(std::move(labels)),
      coaction_(std::move(coaction)) {
  if (!coalgebra_) throw Error("left comodule: missing coalgebra");
  if (coaction_.size() != labels_.size())
    throw DimensionMismatch("left comodule: basis and coaction sizes differ");
  check_labels(labels_, "left comodule");
  check_terms(coaction_, coalgebra_->dim(), dim(), coalgebra_->field(), "left comodule");
}

std::vector<Vector> LeftComodule::coact(std::span<const Scalar> v) const {
  if (v.size() != dim()) throw DimensionMismatch("coact: bad length");
  std::vector<Vector> parts(coalgebra_->dim(), zero_vector(dim(), field()));
  for (std::size_t i = 0; i < dim(); ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : coaction_[i]) parts[t.first][t.second].addmul(v[i], t.coef);
  }
  return parts;
}

std::vector<std::pair<std::size_t, Vector>> LeftComodule::coact_parts(
    std::span<const Scalar> v) const {
  if (v.size() != dim()) throw DimensionMismatch("coact: bad length");
  return sparse_coact(coaction_, v, dim(), field(),
                      [](const Term& t) { return std::pair{t.first, t.second}; });
}

Matrix LeftComodule::action_matrix(std::span<const Scalar> f) const {
  if (f.size() != coalgebra_->dim())
    throw DimensionMismatch("action_matrix: functional has wrong length");
  Matrix a(dim(), dim(), field());
  for (std::size_t i = 0; i < dim(); ++i)
    for (const auto& t : coaction_[i])
      if (!f[t.first].is_zero()) a(t.second, i).addmul(t.coef, f[t.first]);
  return a;
}

std::optional<Violation> validate_left_comodule(const LeftComodule& m) {
  const Coalgebra& c = *m.coalgebra();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Acc3 lhs, rhs;
    for (const auto& t : m.coaction(i)) {
      for (const auto& u : c.delta(t.first))
        accumulate(lhs, {u.first, u.second, t.second}, t.coef * u.coef);
      for (const auto& u : m.coaction(t.second))
        accumulate(rhs, {t.first, u.first, u.second}, t.coef * u.coef);
    }
    if (!same_sparse(lhs, rhs, nullptr))
      return Violation{"left coaction coassociativity (delta (x) id) lambda = (id (x) lambda) lambda",
                       i, m.labels()[i], ""};
    Vector v = zero_vector(m.dim(), m.field());
    for (const auto& t : m.coaction(i)) v[t.second].addmul(c.counit()[t.first], t.coef);
    if (!(v == unit_vector(m.dim(), i, m.field())))
      return Violation{"left coaction counit law (eps (x) id) lambda = id", i,
                       m.labels()[i], ""};
  }
  return std::nullopt;
}

std::optional<Violation> validate_bicomodule(const LeftComodule& left,
                                             const Comodule& right) {
  if (left.dim() != right.dim())
    throw DimensionMismatch("bicomodule: left and right structures on different spaces");
  for (std::size_t i = 0; i < left.dim(); ++i) {
    Acc3 lhs, rhs;
    for (const auto& t : right.coaction(i))
      for (const auto& u : left.coaction(t.first))
        accumulate(lhs, {u.first, u.second, t.second}, t.coef * u.coef);
    for (const auto& t : left.coaction(i))
      for (const auto& u : right.coaction(t.second))
        accumulate(rhs, {t.first, u.first, u.second}, t.coef * u.coef);
    if (!same_sparse(lhs, rhs, nullptr))
      return Violation{"bicomodule compatibility (lambda (x) id) rho = (id (x) rho) lambda",
                       i, left.labels()[i], ""};
  }
  return std::nullopt;
}

bool is_comodule_map(const Comodule& source, const Comodule& target,
                     const Matrix& map) {
  if (!same_coalgebra(source.coalgebra(), target.coalgebra()))
    throw Error("comodule map between comodules over different coalgebras");
  if (map.rows() != target.dim() || map.cols() != source.dim())
    throw DimensionMismatch("comodule map has wrong shape");
  std::vector<Vector> cols;
  for (std::size_t a = 0; a < source.dim(); ++a) cols.push_back(map.column(a));
  for (std::size_t a = 0; a < source.dim(); ++a) {
    const auto lhs = target.coact_parts(cols[a]);
    std::map<std::size_t, Vector> rhs;
    for (const auto& t : source.coaction(a)) {
      auto it = rhs.find(t.second);
      if (it == rhs.end()) it = rhs.emplace(t.second, zero_vector(target.dim(), target.field())).first;
      axpy(t.coef, cols[t.first], it->second);
    }
    std::size_t nonzero = 0;
    for (const auto& [k, v] : rhs) nonzero += !is_zero(v);
    if (nonzero != lhs.size()) return false;
    for (const auto& [k, v] : lhs) {
      auto it = rhs.find(k);
      if (it == rhs.end() || it->second != v) return false;
    }
  }
  return true;
}

Comodule regular_comodule(const CoalgebraPtr& c) {
  return Comodule(c, c->labels(), c->delta());
}

LeftComodule regular_left_comodule(const CoalgebraPtr& c) {
  return LeftComodule(c, c->labels(), c->delta());
}

bool is_subcomodule(const Comodule& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) throw DimensionMismatch("is_subcomodule: ambient");
  for (std::size_t l = 0; l < s.dim(); ++l)
    for (const auto& [k, part] : m.coact_parts(s.basis().row(l)))
      if (!s.contains(part)) return false;
  return true;
}

Comodule restrict_to(const Comodule& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) throw DimensionMismatch("restrict_to: ambient");
  std::vector<Expansion> coaction(s.dim());
  for (std::size_t l = 0; l < s.dim(); ++l) {
    for (const auto& [k, part] : m.coact_parts(s.basis().row(l))) {
      if (!s.contains(part))
        throw ValidationError("subspace is not a subcomodule (coaction leaves it)");
      const Vector coords = s.coordinates(part);
      for (std::size_t j = 0; j < coords.size(); ++j)
        if (!coords[j].is_zero()) coaction[l].push_back({coords[j], j, k});
    }
  }
  return Comodule(m.coalgebra(), labels_at(m.labels(), s.pivots()), std::move(coaction));
}

ComoduleMorphism inclusion(const Comodule& m, const Subspace& s) {
  Comodule sub = restrict_to(m, s);
  return {std::move(sub), m, s.basis().transpose()};
}

Comodule zero_comodule(const CoalgebraPtr& c) { return Comodule(c, {}, {}); }

bool is_left_subcomodule(const LeftComodule& m, const Subspace& s) {
  for (std::size_t l = 0; l < s.dim(); ++l)
    for (const auto& [k, part] : m.coact_parts(s.basis().row(l)))
      if (!s.contains(part)) return false;
  return true;
}

LeftComodule restrict_to(const LeftComodule& m, const Subspace& s) {
  if (s.ambient_dim() != m.dim()) throw DimensionMismatch("restrict_to: ambient");
  std::vector<Expansion> coaction(s.dim());
  for (std::size_t l = 0; l < s.dim(); ++l) {
    for (const auto& [k, part] : m.coact_parts(s.basis().row(l))) {
      if (!s.contains(part))
        throw ValidationError("subspace is not a left subcomodule");
      const Vector coords = s.coordinates(part);
      for (std::size_t j = 0; j < coords.size(); ++j)
        if (!coords[j].is_zero()) coaction[l].push_back({coords[j], k, j});
    }
  }
  return LeftComodule(m.coalgebra(), labels_at(m.labels(), s.pivots()),
                      std::move(coaction));
}

Quotient quotient_comodule(const Comodule& m, const Subspace& s) {
  if (!is_subcomodule(m, s))
    throw ValidationError("quotient_comodule: subspace is not coaction-stable");
  const auto free = s.non_pivots();
  const std::size_t q = free.size();
  const Field f = m.field();
  Matrix proj(q, m.dim(), f);
  for (std::size_t r = 0; r < q; ++r) proj(r, free[r]) = Scalar(f, 1);
  for (std::size_t l = 0; l < s.dim(); ++l)
    for (std::size_t r = 0; r < q; ++r) proj(r, s.pivots()[l]) = -s.basis()(l, free[r]);
  std::vector<Expansion> coaction(q);
  for (std::size_t r = 0; r < q; ++r) {
    for (const auto& [k, part] : m.coact_parts(unit_vector(m.dim(), free[r], f))) {
      const Vector img = proj.apply(part);
      for (std::size_t j = 0; j < q; ++j)
        if (!img[j].is_zero()) coaction[r].push_back({img[j], j, k});
    }
  }
  Comodule quot(m.coalgebra(), labels_at(m.labels(), free), std::move(coaction));
  ComoduleMorphism pi{m, quot, proj};
  return {std::move(quot), std::move(pi)};
}

Subspace sub_comodule_generated(const Comodule& m, const std::vector<Vector>& vs) {
  Echelon e(m.dim(), m.field());
  std::vector<Vector> queue;
  for (const auto& v : vs)
    if (e.insert(v)) queue.push_back(v);
  while (!queue.empty()) {
    Vector v = std::move(queue.back());
    queue.pop_back();
    for (auto& [k, part] : m.coact_parts(v))
      if (e.insert(part)) queue.push_back(std::move(part));
  }
  return Subspace::from_echelon(e);
}

Comodule direct_sum(const std::vector<Comodule>& ms) {
  if (ms.empty()) throw Error("direct_sum: empty list");
  std::vector<std::string> labels;
  std::vector<Expansion> coaction;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (!same_coalgebra(ms[i].coalgebra(), ms[0].coalgebra()))
      throw Error("direct_sum: comodules over different coalgebras");
    auto l = prefixed(ms[i].labels(), i);
    labels.insert(labels.end(), l.begin(), l.end());
    for (const auto& exp : ms[i].coaction()) {
      Expansion e;
      for (const auto& t : exp) e.push_back({t.coef, t.first + offset, t.second});
      coaction.push_back(std::move(e));
    }
    offset += ms[i].dim();
  }
  return Comodule(ms[0].coalgebra(), std::move(labels), std::move(coaction));
}

Coalgebra direct_sum_coalgebra(const std::vector<Coalgebra>& cs) {
  if (cs.empty()) throw Error("direct_sum_coalgebra: empty list");
  const Field f = cs[0].field();
  std::vector<std::string> labels;
  std::vector<Expansion> delta;
  Vector counit;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    if (!(cs[i].field() == f)) throw FieldMismatch("direct_sum_coalgebra: mixed fields");
    auto l = prefixed(cs[i].labels(), i);
    labels.insert(labels.end(), l.begin(), l.end());
    for (const auto& exp : cs[i].delta()) {
      Expansion e;
      for (const auto& t : exp) e.push_back({t.coef, t.first + offset, t.second + offset});
      delta.push_back(std::move(e));
    }
    counit.insert(counit.end(), cs[i].counit().begin(), cs[i].counit().end());
    offset += cs[i].dim();
  }
  return Coalgebra(f, std::move(labels), std::move(delta), std::move(counit));
}

bool is_cocommutative(const Coalgebra& c) {
  for (std::size_t i = 0; i < c.dim(); ++i) {
    Acc3 a, b;
    for (const auto& t : c.delta(i)) {
      accumulate(a, {t.first, t.second, 0}, t.coef);
      accumulate(b, {t.second, t.first, 0}, t.coef);
    }
    if (!same_sparse(a, b, nullptr)) return false;
  }
  return true;
}

namespace {

// Delta(v) as a dim x dim matrix D with D(j, k) the coefficient of c_j (x) c_k.
Matrix delta_matrix(const Coalgebra& c, std::span<const Scalar> v) {
  const Vector flat = c.comultiply(v);
  Matrix d(c.dim(), c.dim(), c.field());
  for (std::size_t j = 0; j < c.dim(); ++j)
    for (std::size_t k = 0; k < c.dim(); ++k) d(j, k) = flat[j * c.dim() + k];
  return d;
}

}  // namespace

bool is_subcoalgebra(const Coalgebra& c, const Subspace& s) {
  if (s.ambient_dim() != c.dim()) throw DimensionMismatch("is_subcoalgebra: ambient");
  for (std::size_t l = 0; l < s.dim(); ++l) {
    const Matrix d = delta_matrix(c, s.basis().row(l));
    for (std::size_t j = 0; j < c.dim(); ++j) {
      if (!s.contains(d.row(j))) return false;
      if (!s.contains(d.column(j))) return false;
    }
  }
  return true;
}

Coalgebra restrict_coalgebra(const Coalgebra& c, const Subspace& s) {
  if (!is_subcoalgebra(c, s)) throw ValidationError("subspace is not a subcoalgebra");
  if (s.dim() == 0) throw Error("coalgebra must have dimension >= 1");
  std::vector<Expansion> delta(s.dim());
  Vector counit;
  const auto& piv = s.pivots();
  for (std::size_t l = 0; l < s.dim(); ++l) {
    const Matrix d = delta_matrix(c, s.basis().row(l));
    for (std::size_t a = 0; a < piv.size(); ++a)
      for (std::size_t b = 0; b < piv.size(); ++b)
        if (!d(piv[a], piv[b]).is_zero()) delta[l].push_back({d(piv[a], piv[b]), a, b});
    counit.push_back(dot(s.basis().row(l), c.counit()));
  }
  return Coalgebra(c.field(), labels_at(c.labels(), piv), std::move(delta),
                   std::move(counit));
}

Subspace largest_subcomodule_in(const Comodule& m, const Subspace& s) {
  const std::size_t n = m.coalgebra()->dim();
  std::vector<Matrix> parts;
  parts.reserve(n);
  for (std::size_t k = 0; k < n; ++k)
    parts.push_back(m.action_matrix(unit_vector(n, k, m.field())));
  Subspace cur = s;
  while (true) {
    Subspace next = cur;
    for (const auto& p : parts) next = next.intersection(preimage(p, cur));
    if (next.dim() == cur.dim()) return next;
    cur = std::move(next);
  }
}

Subspace kernel_of(const ComoduleMorphism& f) { return kernel(f.map); }
Subspace image_of(const ComoduleMorphism& f) { return image(f.map); }

}  // namespace coloc
