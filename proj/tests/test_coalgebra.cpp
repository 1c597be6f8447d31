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
#include "coloc/coalgebra.hpp"
#include "coloc/error.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "gen.hpp"

using namespace coloc;

namespace {

const Field Q = Field::rationals();

Vector unit(std::size_t n, std::size_t i) { return unit_vector(n, i, Q); }

Subspace span_of(const Coalgebra& c, std::initializer_list<const char*> labels) {
  std::vector<Vector> vs;
  for (auto l : labels) vs.push_back(unit(c.dim(), *c.index_of(l)));
  return Subspace::span(c.dim(), c.field(), vs);
}

// The one-dimensional comodule k m with rho(m) = coef * m (x) g.
Comodule line_at(const CoalgebraPtr& c, std::size_t g, long coef) {
  return Comodule(c, {"m"}, {{{Scalar(c->field(), coef), 0, g}}});
}

}  // namespace

TEST_CASE("validate_coalgebra on small instances") {
  CHECK_FALSE(validate_coalgebra(gen_example1(0)));
  CHECK_FALSE(validate_coalgebra(gen_example1(2)));

  // Break the counit at x1: (id (x) eps) delta(x1) = x1 + g.
  const Coalgebra good = gen_example1(2);
  Vector eps = good.counit();
  eps[1] = Scalar(Q, 1);
  const Coalgebra bad(Q, good.labels(), good.delta(), eps);
  auto v = validate_coalgebra(bad);
  REQUIRE(v);
  CHECK(v->identity.find("counit") != std::string::npos);
  CHECK(v->label == "x1");

  // Non-coassociative: delta(x) = x (x) x + g (x) x over {g, x}.
  const Coalgebra nc(Q, {"g", "x"},
                      {{{Scalar(Q, 1), 0, 0}}, {{Scalar(Q, 1), 1, 1}, {Scalar(Q, 1), 0, 1}}},
                      {Scalar(Q, 1), Scalar(Q, 1)});
  auto w = validate_coalgebra(nc);
  REQUIRE(w);
}

TEST_CASE("structural errors") {
  CHECK_THROWS_AS(Coalgebra(Q, {}, {}, {}), Error);
  CHECK_THROWS_AS(Coalgebra(Q, {"a", "a"}, {{}, {}}, {Scalar(Q), Scalar(Q)}), Error);
  CHECK_THROWS_AS(Coalgebra(Q, {"a"}, {{{Scalar(Q, 1), 0, 3}}}, {Scalar(Q, 1)}), Error);
  CHECK_THROWS_AS(Coalgebra(Q, {"a"}, {{{Scalar(Field::prime(5), 1), 0, 0}}}, {Scalar(Q, 1)}),
                  Error);
}

TEST_CASE("validate_comodule") {
  auto c = share(gen_example1(2));
  CHECK_FALSE(validate_comodule(regular_comodule(c)));
  CHECK_FALSE(validate_comodule(line_at(c, 0, 1)));
  auto v = validate_comodule(line_at(c, 0, 2));
  REQUIRE(v);
  CHECK(v->identity.find("counit") != std::string::npos);
}

TEST_CASE("regular comodule dimensions") {
  CHECK(regular_comodule(share(gen_example1(0))).dim() == 1);
  CHECK(regular_comodule(share(gen_example1(2))).dim() == 3);
  CHECK(regular_comodule(share(gen_gd(4))).dim() == 7);
}

TEST_CASE("quotient comodules") {
  auto e1 = share(gen_example1(2));
  const Comodule m = regular_comodule(e1);
  const Quotient q0 = quotient_comodule(m, Subspace(m.dim(), Q));
  CHECK(q0.comodule.dim() == 3);
  CHECK(is_valid(q0.projection));

  const Quotient q = quotient_comodule(m, span_of(*e1, {"g"}));
  CHECK(q.comodule.dim() == 2);
  CHECK_FALSE(validate_comodule(q.comodule));
  CHECK(is_valid(q.projection));
  // C/C0 is semisimple: every basis vector is fixed by eps and killed by
  // the functionals dual to x1 and x2.
  for (std::size_t k = 1; k < 3; ++k)
    CHECK(q.comodule.action_matrix(unit(3, k)).is_zero());

  auto gd = share(gen_gd(4));
  const Comodule r = regular_comodule(gd);
  const Quotient qg = quotient_comodule(r, span_of(*gd, {"g2", "g3", "g4"}));
  CHECK(qg.comodule.dim() == 4);
  CHECK(is_valid(qg.projection));

  CHECK_THROWS_AS(quotient_comodule(r, span_of(*gd, {"d1"})), ValidationError);
}

TEST_CASE("generated subcomodules") {
  auto gd = share(gen_gd(4));
  const Comodule r = regular_comodule(gd);
  CHECK(sub_comodule_generated(r, {zero_vector(7, Q)}).dim() == 0);
  CHECK(sub_comodule_generated(r, {unit(7, *gd->index_of("d1"))}) ==
        span_of(*gd, {"g1", "d1"}));

  auto e1 = share(gen_example1(2));
  CHECK(sub_comodule_generated(regular_comodule(e1), {unit(3, 1)}) ==
        span_of(*e1, {"g", "x1"}));
}

TEST_CASE("direct sums") {
  const Coalgebra one = direct_sum_coalgebra({gen_gd(3)});
  CHECK(one.dim() == 5);
  CHECK_FALSE(validate_coalgebra(one));

  const Coalgebra ex2 = gen_example2({1, 2});
  CHECK(ex2.dim() == 5);
  CHECK(ex2.label(0) == "0.g");
  CHECK(ex2.label(2) == "1.g");
  CHECK_FALSE(validate_coalgebra(ex2));
  CHECK(gen_example2({1, 2, 3}).dim() == 9);
  CHECK_THROWS(gen_example2({2, 2}));
  CHECK_THROWS(gen_example2({0, 1}));

  auto c = share(gen_example1(2));
  const Comodule ss = direct_sum({line_at(c, 0, 1), line_at(c, 0, 1)});
  CHECK(ss.dim() == 2);
  CHECK_FALSE(validate_comodule(ss));
  for (std::size_t k = 1; k < 3; ++k) CHECK(ss.action_matrix(unit(3, k)).is_zero());

  CHECK_THROWS(direct_sum_coalgebra({gen_gd(2), gen_gd(2, Field::prime(3))}));
}

TEST_CASE("cocommutativity") {
  CHECK(is_cocommutative(gen_example1(2)));
  CHECK(is_cocommutative(gen_kx_truncated(3)));
  CHECK_FALSE(is_cocommutative(gen_gd(4)));
  CHECK_FALSE(is_cocommutative(gen_matrix_coalgebra(2)));
}

TEST_CASE("catalog generators") {
  CHECK(gen_example1(0).dim() == 1);
  CHECK(gen_kx_truncated(0).dim() == 1);
  CHECK(gen_gd(1).dim() == 1);
  CHECK(gen_matrix_coalgebra(1).dim() == 1);
  CHECK(gen_kx_truncated(5).dim() == 6);
  CHECK(gen_gd(6).dim() == 11);
  CHECK_THROWS(gen_kx_truncated(3, Field::prime(5)));

  // Path generator reproduces the hand-written examples exactly.
  CHECK(gen_path_coalgebra(loop_quiver(2), 1) == gen_example1(2));
  CHECK(gen_path_coalgebra(gd_quiver(4), 1) == gen_gd(4));
  CHECK(gen_path_coalgebra(gd_quiver(6), 1) == gen_gd(6));
  CHECK(gen_path_coalgebra(loop_quiver(0), 3) == gen_example1(0));

  const Coalgebra r = gen_random(42, 3, 4, 2);
  CHECK_FALSE(validate_coalgebra(r));
  CHECK(gen_random(42, 3, 4, 2) == r);
  CHECK(gen_random(7, 1, 0, 2).dim() == 1);
  CHECK_THROWS(gen_path_coalgebra(loop_quiver(3), 4, {}, 20));
}

TEST_CASE("path coalgebra of a length-two path") {
  // a: v1 -> v2, b: v2 -> v3; delta(b*a) = v3 (x) b*a + b (x) a + b*a (x) v1.
  Quiver q{{"v1", "v2", "v3"}, {{0, 1, "a"}, {1, 2, "b"}}};
  const Coalgebra c = gen_path_coalgebra(q, 2);
  REQUIRE(c.dim() == 6);
  const auto ba = *c.index_of("b*a");
  const auto& d = c.delta(ba);
  REQUIRE(d.size() == 3);
  CHECK(c.label(d[0].first) == "v3");
  CHECK(c.label(d[1].first) == "b");
  CHECK(c.label(d[1].second) == "a");
  CHECK(c.label(d[2].second) == "v1");
}

TEST_CASE("property: every generator output validates") {
  for (const auto& [name, c] : testing::catalog_instances()) {
    INFO(name);
    CHECK_FALSE(validate_coalgebra(*c));
    CHECK_FALSE(validate_comodule(regular_comodule(c)));
    CHECK_FALSE(validate_left_comodule(regular_left_comodule(c)));
  }
  for (const auto& [name, c] : testing::random_instances(200)) {
    INFO(name);
    CHECK_FALSE(validate_coalgebra(*c));
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Coalgebra r = gen_random(s, 2, 3, 2, Field::prime(2), 40);
    CHECK_FALSE(validate_coalgebra(r));
  }
}

TEST_CASE("property: subcomodules and quotients") {
  testing::Gen g(11);
  for (const auto& [name, c] : testing::random_instances(40, 300)) {
    INFO(name);
    const Comodule m = regular_comodule(c);
    const Subspace s = sub_comodule_generated(m, {g.vector(m.dim(), Q, 1)});
    CHECK(is_subcomodule(m, s));
    const Quotient q = quotient_comodule(m, s);
    CHECK(q.comodule.dim() + s.dim() == m.dim());
    CHECK(is_valid(q.projection));
    CHECK(kernel_of(q.projection) == s);
    CHECK_FALSE(validate_comodule(restrict_to(m, s)));
    CHECK(is_valid(inclusion(m, s)));
    // The largest subcomodule inside s is s itself.
    CHECK(largest_subcomodule_in(m, s) == s);
  }
}
