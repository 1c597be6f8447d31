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

#include "coloc/catalog.hpp"
#include "coloc/structure.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "gen.hpp"

using namespace coloc;
using coloc::testing::catalog_instances;
using coloc::testing::random_instances;
using coloc::testing::test_comodules;
using coloc::testing::Gen;
using coloc::testing::Named;

namespace {

Subspace span_labels(const Coalgebra& c, std::initializer_list<const char*> labels) {
  std::vector<Vector> vs;
  for (auto l : labels) vs.push_back(unit_vector(c.dim(), *c.index_of(l), c.field()));
  return Subspace::span(c.dim(), c.field(), vs);
}

// M_{n+1} / M_n as a comodule.
Comodule layer(const Comodule& m, const Subspace& lower, const Subspace& upper) {
  const Comodule up = restrict_to(m, upper);
  std::vector<Vector> coords;
  for (const auto& v : lower.basis_vectors()) coords.push_back(upper.coordinates(v));
  return quotient_comodule(up, Subspace::span(up.dim(), m.field(), coords)).comodule;
}

std::vector<Named> sweep() {
  auto v = catalog_instances();
  for (auto& r : random_instances(30, 7, 18)) v.push_back(std::move(r));
  return v;
}

}  // namespace

TEST_CASE("socle examples") {
  const auto e1 = share(gen_example1(2));
  const Comodule reg = regular_comodule(e1);
  CHECK(socle(reg) == span_labels(*e1, {"g"}));
  const auto ids = basic_idempotents(e1);
  CHECK(socle(ids->simples[0]).dim() == 1);

  const auto gd = share(gen_gd(4));
  const Comodule ce1 = injective_indecomposable(gd, 0);
  CHECK(ce1.dim() == 4);
  CHECK(socle(ce1).dim() == 1);
  CHECK(socle(reg).dim() == 1);
}

TEST_CASE("isotypic decomposition examples") {
  const auto e1 = share(gen_example1(2));
  const Comodule reg = regular_comodule(e1);
  const Comodule top = quotient_comodule(reg, coradical(e1)).comodule;
  CHECK(isotypic_decomposition(top) == std::vector<std::size_t>{2});
  CHECK(isotypic_decomposition(basic_idempotents(e1)->simples[0]) ==
        std::vector<std::size_t>{1});

  const auto gd = share(gen_gd(4));
  CHECK(isotypic_decomposition(regular_comodule(gd)) == std::vector<std::size_t>{1, 1, 1, 1});

  const auto mc = share(gen_matrix_coalgebra(2));
  CHECK(isotypic_decomposition(regular_comodule(mc)) == std::vector<std::size_t>{2});
}

TEST_CASE("Loewy series examples") {
  const auto kx = share(gen_kx_truncated(3));
  CHECK(loewy_series(regular_comodule(kx)).dims == std::vector<std::size_t>{1, 2, 3, 4});
  const auto e1 = share(gen_example1(2));
  const auto s = loewy_series(regular_comodule(e1));
  CHECK(s.dims == std::vector<std::size_t>{1, 3});
  CHECK(s.layer_dims() == std::vector<std::size_t>{1, 2});
  const auto mc = share(gen_matrix_coalgebra(2));
  CHECK(loewy_series(regular_comodule(mc)).dims == std::vector<std::size_t>{4});
}

TEST_CASE("wedge examples") {
  const auto e1 = share(gen_example1(2));
  const Subspace kg = span_labels(*e1, {"g"});
  CHECK(wedge(*e1, kg, kg).dim() == 3);
  CHECK(wedge_closure(*e1, kg).dim() == 3);
  CHECK(wedge_closure(*e1, Subspace::full(3, e1->field())).dim() == 3);

  const auto gd = share(gen_gd(4));
  const Subspace kg2 = span_labels(*gd, {"g2"});
  CHECK(wedge(*gd, kg2, kg2) == kg2);
  const Subspace kg1 = span_labels(*gd, {"g1"});
  CHECK(wedge_closure(*gd, kg1) == kg1);

  const auto kx = share(gen_kx_truncated(3));
  CHECK(wedge(*kx, span_labels(*kx, {"1"}), span_labels(*kx, {"1"})) ==
        span_labels(*kx, {"1", "X"}));

  CHECK_THROWS_AS(wedge(*e1, span_labels(*e1, {"x1"}), kg), ValidationError);
}

TEST_CASE("coradical filtration") {
  const auto kx = share(gen_kx_truncated(3));
  const auto f = coradical_filtration(kx);
  REQUIRE(f.size() == 4);
  CHECK(f[1] == span_labels(*kx, {"1", "X"}));
  const auto gd = share(gen_gd(4));
  const auto fg = coradical_filtration(gd);
  REQUIRE(fg.size() == 2);
  CHECK(fg[0].dim() == 4);
}

TEST_CASE("hom spaces and isomorphisms") {
  const auto gd = share(gen_gd(4));
  const auto ids = basic_idempotents(gd);
  const Comodule reg = regular_comodule(gd);
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(hom_space(ids->simples[i], reg).size() == 1);
    for (std::size_t j = 0; j < 4; ++j)
      CHECK(hom_space(ids->simples[i], ids->simples[j]).size() == (i == j ? 1u : 0u));
  }
  CHECK(hom_space(reg, reg).size() == gd->dim());  // End(C_C) = C*
  CHECK(find_isomorphism(ids->simples[1], ids->simples[1]).has_value());
  CHECK(!find_isomorphism(ids->simples[1], ids->simples[2]).has_value());
}

TEST_CASE("injective hull examples") {
  const auto gd = share(gen_gd(4));
  const auto ids = basic_idempotents(gd);
  const auto h = injective_hull_embedding(ids->simples[0]);
  CHECK(h.hull.dim() == 4);
  CHECK(h.multiplicities == std::vector<std::size_t>{1, 0, 0, 0});
  CHECK(is_valid(h.embedding));
  CHECK(is_injective(h.hull));
  CHECK(!is_injective(ids->simples[0]));
  CHECK(is_injective(ids->simples[1]));

  const auto e1 = share(gen_example1(2));
  const Comodule reg = regular_comodule(e1);
  const Comodule top = quotient_comodule(reg, coradical(e1)).comodule;
  const auto ht = injective_hull_embedding(top);
  CHECK(ht.hull.dim() == 6);
  CHECK(ht.multiplicities == std::vector<std::size_t>{2});
  CHECK(is_injective(reg));
}

TEST_CASE("minimal injective resolutions") {
  const auto kx = share(gen_kx_truncated(3));
  const auto r = minimal_injective_resolution(basic_idempotents(kx)->simples[0], 3);
  CHECK(!verify_resolution(r));
  for (std::size_t k = 0; k <= 3; ++k) CHECK(r.multiplicities[k] == std::vector<std::size_t>{1});

  const auto e1 = share(gen_example1(2));
  const auto r1 = minimal_injective_resolution(basic_idempotents(e1)->simples[0], 2);
  CHECK(!verify_resolution(r1));
  CHECK(r1.multiplicities[0][0] == 1);
  CHECK(r1.multiplicities[1][0] == 2);
  CHECK(r1.multiplicities[2][0] == 4);

  const auto mc = share(gen_matrix_coalgebra(2));
  const auto rm = minimal_injective_resolution(basic_idempotents(mc)->simples[0], 2);
  CHECK(!verify_resolution(rm));
  CHECK(rm.terms[0].dim() == 2);
  CHECK(rm.terms[1].dim() == 0);
  CHECK(rm.terms[2].dim() == 0);
}

TEST_CASE("projective covers and endomorphism algebras") {
  const auto gd = share(gen_gd(4));
  const auto p1 = projective_cover(gd, 0);
  CHECK(p1.cover.dim() == 1);
  const auto p2 = projective_cover(gd, 1);
  CHECK(p2.cover.dim() == 2);
  CHECK(is_valid(p2.epi));
  CHECK(kernel_of(p2.epi).is_subspace_of(radical_of(p2.cover)));
  CHECK(endomorphism_algebra(p2.cover).dim() == 1);

  const auto mc = share(gen_matrix_coalgebra(2));
  CHECK(projective_cover(mc, 0).cover.dim() == 2);

  const auto e1 = share(gen_example1(2));
  const Algebra end = endomorphism_algebra(regular_comodule(e1));
  CHECK(end.dim() == 3);
  CHECK(!validate_algebra(end));
  const auto rad = jacobson_radical(end);
  CHECK(rad.ideal.dim() == 2);
  CHECK(endomorphism_algebra(basic_idempotents(e1)->simples[0]).dim() == 1);
}

TEST_CASE("property: socle is essential, Loewy series exhausts with semisimple layers") {
  Gen g(11);
  for (const auto& [name, c] : sweep()) {
    CAPTURE(name);
    for (const auto& m : test_comodules(c)) {
      const Subspace soc = socle(m);
      if (soc.dim() > 0)
        CHECK(isotypic_decomposition(restrict_to(m, soc)) == isotypic_decomposition(m));
      for (int t = 0; t < 4 && m.dim() > 0; ++t) {
        const Vector v = g.vector(m.dim(), m.field());
        if (is_zero(v)) continue;
        CHECK(sub_comodule_generated(m, {v}).intersection(soc).dim() > 0);
      }
      const auto s = loewy_series(m);
      CHECK(s.dims.back() == m.dim());
      CHECK(s.terms.front() == soc);
      for (std::size_t n = 0; n + 1 < s.terms.size(); ++n) {
        const Comodule l = layer(m, s.terms[n], s.terms[n + 1]);
        CHECK(socle(l).dim() == l.dim());
      }
    }
  }
}

TEST_CASE("property: Loewy series of C_C is the coradical filtration") {
  for (const auto& [name, c] : sweep()) {
    CAPTURE(name);
    const auto s = loewy_series(regular_comodule(c));
    const auto f = coradical_filtration(c);
    REQUIRE(s.terms.size() == f.size());
    for (std::size_t n = 0; n < f.size(); ++n) CHECK(s.terms[n] == f[n]);
  }
}

TEST_CASE("property: injective hulls and resolutions") {
  for (const auto& [name, c] : sweep()) {
    CAPTURE(name);
    const auto ids = basic_idempotents(c);
    for (const auto& m : test_comodules(c)) {
      const auto h = injective_hull_embedding(m);
      CHECK(is_valid(h.embedding));
      CHECK(is_injective(h.hull));
      CHECK(socle(h.hull).dim() == socle(m).dim());
      const auto r = minimal_injective_resolution(m, 2);
      const auto err = verify_resolution(r);
      CHECK_MESSAGE(!err, (err ? *err : ""));
      for (std::size_t k = 0; k <= 2; ++k) {
        std::size_t d = 0;
        for (std::size_t i = 0; i < ids->size(); ++i)
          d += r.multiplicities[k][i] * ids->hull_subspaces[i].dim();
        CHECK(r.terms[k].dim() == d);
      }
    }
    for (std::size_t i = 0; i < ids->size(); ++i) {
      const auto p = projective_cover(c, i);
      CHECK(is_valid(p.epi));
      CHECK(kernel_of(p.epi).is_subspace_of(radical_of(p.cover)));
      const Algebra end = endomorphism_algebra(p.cover);
      const auto rad = jacobson_radical(end);
      CHECK(end.dim() - rad.ideal.dim() == endomorphism_algebra(ids->simples[i]).dim());
    }
  }
}

TEST_CASE("property: injective endomorphisms are bijective and preserve Loewy terms") {
  Gen g(23);
  for (const auto& [name, c] : sweep()) {
    CAPTURE(name);
    for (const auto& m : test_comodules(c)) {
      const auto h = hom_space(m, m);
      const auto s = loewy_series(m);
      for (int t = 0; t < 6 && !h.empty(); ++t) {
        Matrix f(m.dim(), m.dim(), m.field());
        for (const auto& x : h) {
          const Scalar k = g.scalar(m.field());
          for (std::size_t r = 0; r < f.rows(); ++r)
            for (std::size_t q = 0; q < f.cols(); ++q) f(r, q) += k * x(r, q);
        }
        REQUIRE(is_comodule_map(m, m, f));
        if (kernel(f).dim() != 0) continue;
        CHECK(rank(f) == m.dim());
        for (const auto& term : s.terms) CHECK(term.image_under(f) == term);
      }
    }
  }
}

TEST_CASE("property: short exact sequences and the second isomorphism identities") {
  Gen g(5);
  for (const auto& [name, c] : sweep()) {
    CAPTURE(name);
    const Comodule m = regular_comodule(c);
    for (int t = 0; t < 3; ++t) {
      const Subspace a = sub_comodule_generated(m, {g.vector(m.dim(), m.field())});
      const Subspace x = sub_comodule_generated(m, {g.vector(m.dim(), m.field())});
      // 0 -> A -> M -> M/A -> 0
      const Quotient q = quotient_comodule(m, a);
      CHECK(m.dim() == a.dim() + q.comodule.dim());
      CHECK(kernel_of(q.projection) == a);
      // dim(A / (X cap A)) + dim(M / (A + X)) = dim(M / X)
      const Subspace ax = a.intersection(x);
      const Subspace sum = a.sum(x);
      CHECK(a.dim() - ax.dim() + (m.dim() - sum.dim()) == m.dim() - x.dim());
      // (M/X) / (Y/X) = M/Y with Y = A + X.
      const Quotient mx = quotient_comodule(m, x);
      const Subspace yx = sum.image_under(mx.projection.map);
      const Comodule lhs = quotient_comodule(mx.comodule, yx).comodule;
      const Comodule rhs = quotient_comodule(m, sum).comodule;
      CHECK(find_isomorphism(lhs, rhs).has_value());
      // Socles: soc(A) = A cap soc(M).
      CHECK(socle(restrict_to(m, a)).dim() == a.intersection(socle(m)).dim());
    }
  }
}
