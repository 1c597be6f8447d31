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

#include "coloc/structure.hpp"

#include <random>

#include "coloc/error.hpp"

namespace coloc {

namespace {

std::vector<Matrix> radical_actions(const Comodule& m) {
  const auto ds = dual_structure(m.coalgebra());
  std::vector<Matrix> out;
  for (const auto& f : ds->radical.ideal.basis_vectors()) out.push_back(m.action_matrix(f));
  return out;
}

Vector flatten(const Matrix& m) { return m.data(); }

Matrix unflatten(const Vector& v, std::size_t rows, std::size_t cols, Field f) {
  Matrix m(rows, cols, f);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[r * cols + c];
  return m;
}

}  // namespace

Subspace socle(const Comodule& m) {
  std::vector<Vector> rows;
  for (const auto& a : radical_actions(m))
    for (std::size_t r = 0; r < a.rows(); ++r)
      if (!is_zero(a.row(r))) rows.push_back(a.row_vector(r));
  return Subspace::span(m.dim(), m.field(), kernel_of_rows(rows, m.dim(), m.field()));
}

std::vector<std::size_t> isotypic_decomposition(const Comodule& m, std::uint64_t seed) {
  const auto ids = basic_idempotents(m.coalgebra(), seed);
  const Subspace soc = socle(m);
  std::vector<std::size_t> k;
  for (std::size_t i = 0; i < ids->size(); ++i) {
    const std::size_t piece = soc.image_under(m.action_matrix(ids->idempotents[i])).dim();
    const std::size_t unit = rank(ids->simples[i].action_matrix(ids->idempotents[i]));
    if (unit == 0 || piece % unit != 0)
      throw InternalError("isotypic decomposition: e_i soc(M) is not a multiple of e_i S_i");
    k.push_back(piece / unit);
  }
  return k;
}

std::vector<std::size_t> LoewySeries::layer_dims() const {
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (auto d : dims) {
    out.push_back(d - prev);
    prev = d;
  }
  return out;
}

LoewySeries loewy_series(const Comodule& m) {
  const auto acts = radical_actions(m);
  LoewySeries s;
  Subspace cur = socle(m);
  while (true) {
    s.terms.push_back(cur);
    s.dims.push_back(cur.dim());
    if (cur.dim() == m.dim()) break;
    Subspace next = Subspace::full(m.dim(), m.field());
    for (const auto& a : acts) next = next.intersection(preimage(a, cur));
    if (next.dim() <= cur.dim()) throw InternalError("Loewy series stalled below M");
    cur = std::move(next);
  }
  return s;
}

Subspace wedge(const Coalgebra& c, const Subspace& a, const Subspace& b) {
  if (!is_subcoalgebra(c, a) || !is_subcoalgebra(c, b))
    throw ValidationError("wedge: arguments must be subcoalgebras");
  const std::size_t n = c.dim();
  const Field f = c.field();
  const auto fa = a.non_pivots();
  const auto fb = b.non_pivots();
  if (fa.empty() || fb.empty()) return Subspace::full(n, f);
  auto project = [&](const Subspace& s, const std::vector<std::size_t>& free) {
    std::vector<Vector> out;
    for (std::size_t j = 0; j < n; ++j) {
      const Vector r = s.reduce(unit_vector(n, j, f));
      Vector p;
      for (auto q : free) p.push_back(r[q]);
      out.push_back(std::move(p));
    }
    return out;
  };
  const auto pa = project(a, fa);
  const auto pb = project(b, fb);
  Matrix m(fa.size() * fb.size(), n, f);
  for (std::size_t i = 0; i < n; ++i) {
    Vector col = zero_vector(m.rows(), f);
    for (const auto& t : c.delta(i)) axpy(t.coef, kron(pa[t.first], pb[t.second]), col);
    m.set_column(i, col);
  }
  return kernel(m);
}

Subspace wedge_closure(const Coalgebra& c, const Subspace& a) {
  Subspace cur = a;
  while (true) {
    Subspace next = wedge(c, cur, a);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

std::vector<Subspace> coradical_filtration(const CoalgebraPtr& c) {
  const Subspace c0 = coradical(c);
  std::vector<Subspace> out{c0};
  while (out.back().dim() < c->dim()) {
    Subspace next = wedge(*c, out.back(), c0);
    if (next == out.back()) throw InternalError("coradical filtration stalled below C");
    out.push_back(std::move(next));
  }
  return out;
}

std::vector<Matrix> hom_space(const Comodule& n, const Comodule& m) {
  if (!same_coalgebra(n.coalgebra(), m.coalgebra()))
    throw Error("hom_space: comodules over different coalgebras");
  const std::size_t dn = n.dim(), dm = m.dim(), dc = n.coalgebra()->dim();
  const Field f = n.field();
  if (dn == 0 || dm == 0) return {};
  // Unknown X(a, b) sits at a * dn + b; equation (j, k, a) compares the
  // coefficient of m_a (x) c_k in (X (x) id) rho(n_j) and rho(X n_j).
  Echelon e(dm * dn, f);
  for (std::size_t j = 0; j < dn; ++j) {
    std::vector<Vector> rows(dc * dm);
    auto row = [&](std::size_t k, std::size_t a) -> Vector& {
      Vector& r = rows[k * dm + a];
      if (r.empty()) r = zero_vector(dm * dn, f);
      return r;
    };
    for (const auto& t : n.coaction(j))
      for (std::size_t a = 0; a < dm; ++a) row(t.second, a)[a * dn + t.first] += t.coef;
    for (std::size_t b = 0; b < dm; ++b)
      for (const auto& t : m.coaction(b)) row(t.second, t.first)[b * dn + j] -= t.coef;
    for (auto& r : rows)
      if (!r.empty() && !is_zero(r)) e.insert(std::move(r));
  }
  std::vector<Matrix> out;
  for (const auto& v : kernel_from_echelon(e)) out.push_back(unflatten(v, dm, dn, f));
  return out;
}

std::optional<Matrix> find_isomorphism(const Comodule& a, const Comodule& b,
                                       std::uint64_t seed) {
  if (a.dim() != b.dim()) return std::nullopt;
  if (a.dim() == 0) return Matrix(0, 0, a.field());
  const auto h = hom_space(a, b);
  for (const auto& x : h)
    if (inverse(x)) return x;
  if (h.size() < 2) return std::nullopt;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> coef(-5, 5);
  for (int round = 0; round < 24; ++round) {
    Matrix x(b.dim(), a.dim(), a.field());
    for (const auto& y : h) {
      const Scalar s(a.field(), coef(rng));
      for (std::size_t r = 0; r < x.rows(); ++r)
        for (std::size_t c = 0; c < x.cols(); ++c)
          if (!y(r, c).is_zero()) x(r, c).addmul(s, y(r, c));
    }
    if (inverse(x)) return x;
  }
  return std::nullopt;
}

Comodule injective_indecomposable(const CoalgebraPtr& c, std::size_t i, std::uint64_t seed) {
  const auto ids = basic_idempotents(c, seed);
  return restrict_to(regular_comodule(c), ids->hull_subspaces.at(i));
}

InjectiveHull injective_hull_embedding(const Comodule& m, std::uint64_t seed) {
  const CoalgebraPtr& c = m.coalgebra();
  const auto ids = basic_idempotents(c, seed);
  const Field f = m.field();
  const auto k = isotypic_decomposition(m, seed);
  const Subspace soc = socle(m);

  std::vector<Comodule> summands;
  std::vector<std::size_t> types;
  std::vector<Vector> rows;  // rows of the embedding matrix
  for (std::size_t i = 0; i < ids->size(); ++i) {
    if (k[i] == 0) continue;
    const Matrix ae = m.action_matrix(ids->idempotents[i]);
    const Subspace w = soc.image_under(ae);
    if (w.dim() != k[i])
      throw InternalError("injective hull: e_i soc(M) has unexpected dimension");
    const Subspace& hull = ids->hull_subspaces[i];
    const Comodule ce = restrict_to(regular_comodule(c), hull);
    for (auto p : w.pivots()) {
      // T(m) = sum psi(m_0) m_1 with psi(x) = (e_i . x)[p].
      std::vector<Vector> cols;
      for (std::size_t b = 0; b < m.dim(); ++b) {
        Vector img = zero_vector(c->dim(), f);
        for (const auto& t : m.coaction(b))
          if (!ae(p, t.first).is_zero()) img[t.second] += t.coef * ae(p, t.first);
        if (!hull.contains(img)) throw InternalError("injective hull: T(m) left Ce_i");
        cols.push_back(hull.coordinates(img));
      }
      for (std::size_t r = 0; r < hull.dim(); ++r) {
        Vector row;
        for (std::size_t b = 0; b < m.dim(); ++b) row.push_back(cols[b][r]);
        rows.push_back(std::move(row));
      }
      summands.push_back(ce);
      types.push_back(i);
    }
  }
  if (summands.empty()) {
    if (m.dim() != 0) throw InternalError("injective hull: nonzero comodule with zero socle");
    Comodule z = zero_comodule(c);
    return {z, k, {m, z, Matrix(0, 0, f)}, {}};
  }
  Comodule e = direct_sum(summands);
  Matrix map = Matrix::from_rows(rows, m.dim(), f);
  if (!is_comodule_map(m, e, map)) throw InternalError("injective hull: map is not colinear");
  if (rank(map) != m.dim()) throw InternalError("injective hull: map is not injective");
  return {e, k, {m, std::move(e), std::move(map)}, std::move(types)};
}

bool is_injective(const Comodule& m, std::uint64_t seed) {
  const auto ids = basic_idempotents(m.coalgebra(), seed);
  const auto k = isotypic_decomposition(m, seed);
  std::size_t d = 0;
  for (std::size_t i = 0; i < k.size(); ++i) d += k[i] * ids->hull_subspaces[i].dim();
  return d == m.dim();
}

Matrix Resolution::differential(std::size_t k) const {
  if (k >= depth) throw Error("differential: level beyond the computed depth");
  return embeddings.at(k + 1) * projections.at(k);
}

Resolution minimal_injective_resolution(const Comodule& m, std::size_t depth,
                                        std::uint64_t seed, std::size_t term_cap) {
  Resolution r{m, depth, {}, {}, {m}, {}, {}, {}, seed};
  for (std::size_t k = 0; k <= depth; ++k) {
    const Comodule& kk = r.cokernels.back();
    if (k > 0 && term_cap > 0 && kk.dim() > term_cap) {
      r.depth = k - 1;
      break;
    }
    InjectiveHull h = injective_hull_embedding(kk, seed);
    Quotient q = quotient_comodule(h.hull, image(h.embedding.map));
    r.multiplicities.push_back(std::move(h.multiplicities));
    r.embeddings.push_back(std::move(h.embedding.map));
    r.projections.push_back(std::move(q.projection.map));
    r.summands.push_back(std::move(h.summands));
    r.terms.push_back(std::move(h.hull));
    r.cokernels.push_back(std::move(q.comodule));
  }
  return r;
}

std::optional<std::string> verify_resolution(const Resolution& r) {
  for (std::size_t k = 0; k <= r.depth; ++k) {
    const std::string at = " at level " + std::to_string(k);
    const Comodule& kk = r.cokernels[k];
    const Comodule& q = r.terms[k];
    if (!is_comodule_map(kk, q, r.embeddings[k])) return "embedding not colinear" + at;
    if (rank(r.embeddings[k]) != kk.dim()) return "embedding not injective" + at;
    if (!is_comodule_map(q, r.cokernels[k + 1], r.projections[k]))
      return "projection not colinear" + at;
    if (rank(r.projections[k]) != r.cokernels[k + 1].dim()) return "projection not onto" + at;
    if (!(kernel(r.projections[k]) == image(r.embeddings[k]))) return "not exact" + at;
    if (socle(q).dim() != socle(kk).dim()) return "not minimal" + at;
    if (k >= 1 && k < r.depth && !(r.differential(k) * r.differential(k - 1)).is_zero())
      return "d o d != 0" + at;
  }
  return std::nullopt;
}

Subspace radical_of(const Comodule& m) {
  Echelon e(m.dim(), m.field());
  for (const auto& a : radical_actions(m))
    for (std::size_t c = 0; c < a.cols(); ++c) e.insert(a.column(c));
  return Subspace::from_echelon(e);
}

ProjectiveCover projective_cover(const CoalgebraPtr& c, std::size_t i, std::uint64_t seed) {
  const auto ids = basic_idempotents(c, seed);
  const Comodule reg = regular_comodule(c);
  const Subspace x = image(reg.action_matrix(ids->idempotents.at(i)));
  const LeftComodule lx = restrict_to(regular_left_comodule(c), x);
  // The dual basis phi_a of (e_i C)* coacts by
  // rho(phi_b) = sum over lambda(x_a) terms (nu, k, b) of nu phi_a (x) c_k.
  std::vector<Expansion> rho(lx.dim());
  for (std::size_t a = 0; a < lx.dim(); ++a)
    for (const auto& t : lx.coaction(a)) rho[t.second].push_back({t.coef, a, t.first});
  std::vector<std::string> labels;
  for (const auto& l : lx.labels()) labels.push_back(l + "*");
  Comodule p(c, std::move(labels), std::move(rho));
  if (auto v = validate_comodule(p)) throw InternalError("projective cover: " + v->to_string());
  const Comodule& s = ids->simples[i];
  for (const auto& h : hom_space(p, s))
    if (rank(h) == s.dim()) return {p, {p, s, h}};
  throw InternalError("projective cover: no epimorphism onto S_i");
}

Algebra endomorphism_algebra(const Comodule& m) {
  const Field f = m.field();
  const std::size_t d = m.dim();
  std::vector<Vector> flat;
  for (const auto& h : hom_space(m, m)) flat.push_back(flatten(h));
  const Subspace s = Subspace::span(d * d, f, flat);
  std::vector<Matrix> basis;
  for (const auto& v : s.basis_vectors()) basis.push_back(unflatten(v, d, d, f));
  const std::size_t r = basis.size();
  std::vector<std::vector<SparseVector>> prod(r, std::vector<SparseVector>(r));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      const Vector c = s.coordinates(flatten(basis[a] * basis[b]));
      for (std::size_t t = 0; t < r; ++t)
        if (!c[t].is_zero()) prod[a][b].emplace_back(t, c[t]);
    }
  return Algebra(f, std::move(prod), s.coordinates(flatten(Matrix::identity(d, f))));
}

}  // namespace coloc
