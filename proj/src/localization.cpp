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

#include "coloc/localization.hpp"

#include <map>

#include "coloc/error.hpp"
#include "coloc/structure.hpp"

namespace coloc {

namespace {

using Acc = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

void add_outer(Acc& acc, const Scalar& coef, const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    const Scalar ca = coef * a[i];
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      auto it = acc.find({i, j});
      if (it == acc.end()) it = acc.emplace(std::pair{i, j}, Scalar(coef.field())).first;
      it->second.addmul(ca, b[j]);
    }
  }
}

Expansion to_expansion(const Acc& acc) {
  Expansion e;
  for (const auto& [k, v] : acc)
    if (!v.is_zero()) e.push_back({v, k.first, k.second});
  return e;
}

// Coordinates in s of the columns of a map whose image lies in s.
std::vector<Vector> column_coords(const Matrix& map, const Subspace& s) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < map.cols(); ++k) out.push_back(s.coordinates(map.column(k)));
  return out;
}

std::vector<std::string> labels_at(const std::vector<std::string>& labels,
                                   const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(labels.at(i));
  return out;
}

void require_valid(const std::optional<Violation>& v, const char* what) {
  if (v) throw InternalError(std::string("localization: ") + what + ": " + v->to_string());
}

}  // namespace

LocalizationContext build_context(const CoalgebraPtr& c, const TorsionSpec& spec) {
  if (spec.kept.empty()) throw Error("localization: J contains every simple, so e = 0");
  const Field f = c->field();
  const std::size_t n = c->dim();
  const Comodule reg = regular_comodule(c);
  const LeftComodule lreg = regular_left_comodule(c);
  const Matrix le = reg.action_matrix(spec.idempotent);
  const Matrix re = lreg.action_matrix(spec.idempotent);
  const Matrix pi = le * re;
  const Subspace ece = image(pi);
  const Subspace ec = image(le);
  const Subspace ce = image(re);

  const auto p = column_coords(pi, ece);   // pi(c_k) in eCe coordinates
  const auto l = column_coords(le, ec);    // e.c_k in eC coordinates
  const auto r = column_coords(re, ce);    // c_k<-e in Ce coordinates
  auto expand = [&](const Subspace& s, const std::vector<Vector>& left,
                    const std::vector<Vector>& right) {
    std::vector<Expansion> out;
    for (std::size_t row = 0; row < s.dim(); ++row) {
      Acc acc;
      for (std::size_t i = 0; i < n; ++i) {
        const Scalar& x = s.basis()(row, i);
        if (x.is_zero()) continue;
        for (const auto& t : c->delta(i)) add_outer(acc, x * t.coef, left[t.first], right[t.second]);
      }
      out.push_back(to_expansion(acc));
    }
    return out;
  };

  Vector counit;
  for (std::size_t row = 0; row < ece.dim(); ++row) {
    Scalar s(f);
    for (std::size_t i = 0; i < n; ++i) s.addmul(ece.basis()(row, i), c->counit()[i]);
    counit.push_back(s);
  }
  CoalgebraPtr local = share(Coalgebra(f, labels_at(c->labels(), ece.pivots()),
                                       expand(ece, p, p), std::move(counit)));
  require_valid(validate_coalgebra(*local), "eCe");

  LeftComodule ec_left = restrict_to(lreg, ec);
  // In eC the left factor is e.c_1 and the right factor pi(c_2); in Ce the
  // left factor is pi(c_1) and the right one c_2<-e.
  Comodule ec_right(local, ec_left.labels(), expand(ec, l, p));
  Comodule ce_right = restrict_to(reg, ce);
  LeftComodule ce_left(local, ce_right.labels(), expand(ce, p, r));

  require_valid(validate_left_comodule(ec_left), "eC (left C)");
  require_valid(validate_comodule(ec_right), "eC (right eCe)");
  require_valid(validate_bicomodule(ec_left, ec_right), "eC bicomodule");
  require_valid(validate_left_comodule(ce_left), "Ce (left eCe)");
  require_valid(validate_comodule(ce_right), "Ce (right C)");
  require_valid(validate_bicomodule(ce_left, ce_right), "Ce bicomodule");

  return {c,
          spec,
          ece,
          std::move(local),
          ec,
          ce,
          std::move(ec_left),
          std::move(ec_right),
          std::move(ce_left),
          std::move(ce_right),
          le,
          re};
}

LocalizationContext build_context(const CoalgebraPtr& c, std::vector<std::size_t> torsion,
                                  std::uint64_t seed) {
  const auto ids = basic_idempotents(c, seed);
  return build_context(c, torsion_spec(*ids, std::move(torsion)));
}

Subspace localized_subspace(const LocalizationContext& ctx, const Comodule& m) {
  return image(m.action_matrix(ctx.spec.idempotent));
}

Comodule localize_comodule(const LocalizationContext& ctx, const Comodule& m) {
  if (!same_coalgebra(m.coalgebra(), ctx.ambient))
    throw Error("localize: comodule over a different coalgebra");
  const Matrix ae = m.action_matrix(ctx.spec.idempotent);
  const Subspace w = image(ae);
  const auto em = column_coords(ae, w);
  const Matrix pi = ctx.left_e * ctx.right_e;
  const auto p = column_coords(pi, ctx.ece_subspace);
  std::vector<Expansion> rho;
  for (std::size_t row = 0; row < w.dim(); ++row) {
    Acc acc;
    for (std::size_t b = 0; b < m.dim(); ++b) {
      const Scalar& x = w.basis()(row, b);
      if (x.is_zero()) continue;
      for (const auto& t : m.coaction(b)) add_outer(acc, x * t.coef, em[t.first], p[t.second]);
    }
    rho.push_back(to_expansion(acc));
  }
  Comodule out(ctx.local, labels_at(m.labels(), w.pivots()), std::move(rho));
  require_valid(validate_comodule(out), "eM");
  return out;
}

Subspace cotensor(const Comodule& x, const LeftComodule& y) {
  if (!same_coalgebra(x.coalgebra(), y.coalgebra()))
    throw Error("cotensor: middle coalgebras differ");
  const std::size_t dx = x.dim(), dy = y.dim(), dd = x.coalgebra()->dim();
  const Field f = x.field();
  if (dx == 0 || dy == 0) return Subspace(dx * dy, f);
  // Equation (a, k, b): coefficient of x_a (x) d_k (x) y_b.
  std::map<std::size_t, std::map<std::size_t, Scalar>> eqs;
  auto add = [&](std::size_t eq, std::size_t var, const Scalar& v) {
    auto& row = eqs[eq];
    auto it = row.find(var);
    if (it == row.end()) it = row.emplace(var, Scalar(f)).first;
    it->second += v;
  };
  for (std::size_t a2 = 0; a2 < dx; ++a2)
    for (std::size_t b2 = 0; b2 < dy; ++b2) {
      const std::size_t var = a2 * dy + b2;
      for (const auto& t : x.coaction(a2)) add((t.first * dd + t.second) * dy + b2, var, t.coef);
      for (const auto& t : y.coaction(b2)) add((a2 * dd + t.first) * dy + t.second, var, -t.coef);
    }
  Echelon e(dx * dy, f);
  for (const auto& [eq, row] : eqs) {
    Vector v = zero_vector(dx * dy, f);
    bool any = false;
    for (const auto& [var, s] : row)
      if (!s.is_zero()) {
        v[var] = s;
        any = true;
      }
    if (any) e.insert(std::move(v));
  }
  return Subspace::span(dx * dy, f, kernel_from_echelon(e));
}

Comodule cotensor_comodule(const Comodule& x, const LeftComodule& y, const Comodule& y_right) {
  if (y_right.dim() != y.dim()) throw DimensionMismatch("cotensor: right coaction has wrong dim");
  const Subspace k = cotensor(x, y);
  const std::size_t dy = y.dim();
  std::vector<Expansion> rho;
  for (std::size_t row = 0; row < k.dim(); ++row) {
    std::map<std::size_t, Vector> parts;
    for (std::size_t idx = 0; idx < k.ambient_dim(); ++idx) {
      const Scalar& w = k.basis()(row, idx);
      if (w.is_zero()) continue;
      const std::size_t a = idx / dy, b = idx % dy;
      for (const auto& t : y_right.coaction(b)) {
        auto it = parts.find(t.second);
        if (it == parts.end())
          it = parts.emplace(t.second, zero_vector(k.ambient_dim(), x.field())).first;
        it->second[a * dy + t.first].addmul(w, t.coef);
      }
    }
    Expansion e;
    for (const auto& [d, v] : parts) {
      if (is_zero(v)) continue;
      if (!k.contains(v)) throw InternalError("cotensor: residual coaction leaves the kernel");
      const Vector co = k.coordinates(v);
      for (std::size_t j = 0; j < co.size(); ++j)
        if (!co[j].is_zero()) e.push_back({co[j], j, d});
    }
    rho.push_back(std::move(e));
  }
  std::vector<std::string> labels;
  for (auto p : k.pivots()) labels.push_back(x.labels()[p / dy] + "|" + y.labels()[p % dy]);
  Comodule out(y_right.coalgebra(), std::move(labels), std::move(rho));
  require_valid(validate_comodule(out), "cotensor");
  return out;
}

Comodule section_functor(const LocalizationContext& ctx, const Comodule& n) {
  return cotensor_comodule(n, ctx.ce_left, ctx.ce_right);
}

ComoduleMorphism localization_iso(const LocalizationContext& ctx, const Comodule& m) {
  const Comodule em = localize_comodule(ctx, m);
  const Subspace w = localized_subspace(ctx, m);
  const Comodule target = cotensor_comodule(m, ctx.ec_left, ctx.ec_right);
  const Subspace box = cotensor(m, ctx.ec_left);
  const std::size_t dy = ctx.ec_subspace.dim();
  const auto l = column_coords(ctx.left_e, ctx.ec_subspace);
  Matrix map(target.dim(), em.dim(), m.field());
  for (std::size_t col = 0; col < w.dim(); ++col) {
    Vector v = zero_vector(m.dim() * dy, m.field());
    for (std::size_t b = 0; b < m.dim(); ++b) {
      const Scalar& x = w.basis()(col, b);
      if (x.is_zero()) continue;
      for (const auto& t : m.coaction(b))
        for (std::size_t j = 0; j < dy; ++j)
          if (!l[t.second][j].is_zero()) v[t.first * dy + j].addmul(x * t.coef, l[t.second][j]);
    }
    if (!box.contains(v)) throw InternalError("localization iso: image leaves M box eC");
    map.set_column(col, box.coordinates(v));
  }
  return {em, target, std::move(map)};
}

ComoduleMorphism section_counit(const LocalizationContext& ctx, const Comodule& n) {
  const Comodule s = section_functor(ctx, n);
  const Subspace box = cotensor(n, ctx.ce_left);
  const Comodule ls = localize_comodule(ctx, s);
  const Subspace w = localized_subspace(ctx, s);
  const std::size_t dy = ctx.ce_subspace.dim();
  Vector eps;  // counit of C on the basis of Ce
  for (std::size_t r = 0; r < dy; ++r) {
    Scalar v(n.field());
    for (std::size_t i = 0; i < ctx.ambient->dim(); ++i)
      v.addmul(ctx.ce_subspace.basis()(r, i), ctx.ambient->counit()[i]);
    eps.push_back(v);
  }
  Matrix map(n.dim(), ls.dim(), n.field());
  for (std::size_t col = 0; col < w.dim(); ++col) {
    const Vector z = box.from_coordinates(w.basis_vector(col));
    Vector out = zero_vector(n.dim(), n.field());
    for (std::size_t idx = 0; idx < z.size(); ++idx)
      if (!z[idx].is_zero()) out[idx / dy].addmul(z[idx], eps[idx % dy]);
    map.set_column(col, out);
  }
  return {ls, n, std::move(map)};
}

ComoduleMorphism adjunction_unit(const LocalizationContext& ctx, const Comodule& m) {
  const Comodule em = localize_comodule(ctx, m);
  const Comodule target = section_functor(ctx, em);
  const Subspace box = cotensor(em, ctx.ce_left);
  const Matrix ae = m.action_matrix(ctx.spec.idempotent);
  const auto e_m = column_coords(ae, localized_subspace(ctx, m));
  const auto r = column_coords(ctx.right_e, ctx.ce_subspace);
  const std::size_t dy = ctx.ce_subspace.dim();
  Matrix map(target.dim(), m.dim(), m.field());
  for (std::size_t b = 0; b < m.dim(); ++b) {
    Vector v = zero_vector(em.dim() * dy, m.field());
    for (const auto& t : m.coaction(b))
      for (std::size_t i = 0; i < em.dim(); ++i) {
        if (e_m[t.first][i].is_zero()) continue;
        const Scalar s = t.coef * e_m[t.first][i];
        for (std::size_t j = 0; j < dy; ++j)
          if (!r[t.second][j].is_zero()) v[i * dy + j].addmul(s, r[t.second][j]);
      }
    if (!box.contains(v)) throw InternalError("adjunction unit: image leaves eM box Ce");
    map.set_column(b, box.coordinates(v));
  }
  return {m, target, std::move(map)};
}

Subspace torsion_subcomodule(const LocalizationContext& ctx, const Comodule& m) {
  return largest_subcomodule_in(m, kernel(m.action_matrix(ctx.spec.idempotent)));
}

bool is_torsion(const LocalizationContext& ctx, const Comodule& m) {
  return m.action_matrix(ctx.spec.idempotent).is_zero();
}

bool hom_vanishing_check(const LocalizationContext& ctx, const Comodule& m,
                         std::uint64_t seed) {
  for (auto i : ctx.spec.kept)
    if (!hom_space(m, injective_indecomposable(ctx.ambient, i, seed)).empty()) return false;
  return true;
}

LocalizationContext localize_at_simple(const CoalgebraPtr& c, std::size_t i,
                                       std::uint64_t seed) {
  const auto ids = basic_idempotents(c, seed);
  if (i >= ids->size()) throw Error("localize_at_simple: simple index out of range");
  std::vector<std::size_t> torsion;
  for (std::size_t j = 0; j < ids->size(); ++j)
    if (j != i) torsion.push_back(j);
  LocalizationContext ctx = build_context(c, torsion_spec(*ids, torsion));
  const auto ds = dual_structure(ctx.local);
  const std::size_t top = ctx.local->dim() - ds->radical.ideal.dim();
  if (top != endomorphism_algebra(ids->simples[i]).dim())
    throw InternalError("localize_at_simple: e_iCe_i is not colocal");
  return ctx;
}

std::vector<std::vector<std::size_t>> eiej_matrix(const CoalgebraPtr& c, std::uint64_t seed) {
  const auto ids = basic_idempotents(c, seed);
  const Comodule reg = regular_comodule(c);
  const LeftComodule lreg = regular_left_comodule(c);
  std::vector<Matrix> left, right;
  for (const auto& e : ids->idempotents) {
    left.push_back(reg.action_matrix(e));
    right.push_back(lreg.action_matrix(e));
  }
  std::vector<std::vector<std::size_t>> out(ids->size(), std::vector<std::size_t>(ids->size()));
  for (std::size_t i = 0; i < ids->size(); ++i)
    for (std::size_t j = 0; j < ids->size(); ++j) out[i][j] = rank(left[i] * right[j]);
  return out;
}

bool locasimple_check(const LocalizationContext& ctx, std::uint64_t seed) {
  const auto ids = basic_idempotents(ctx.ambient, seed);
  std::vector<Comodule> candidates;
  for (const auto& s : ids->simples) {
    Comodule es = localize_comodule(ctx, s);
    if (es.dim() > 0) candidates.push_back(std::move(es));
  }
  for (const auto& t : simple_comodules(ctx.local, seed)) {
    bool found = false;
    for (const auto& y : candidates)
      if (find_isomorphism(t, y, seed)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

}  // namespace coloc
