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
#include "coloc/dual_algebra.hpp"
#include "coloc/error.hpp"
#include "coloc/linalg.hpp"
#include "coloc/localization.hpp"
#include "coloc/structure.hpp"
#include "coloc/tower.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace coloc;
using Dims = std::vector<std::size_t>;

namespace {

Dims stage_dims(const Tower& t) {
  Dims out;
  for (const auto& s : t.stages) out.push_back(s->dim());
  return out;
}

Dims right_dims(const CoalgebraPtr& c) {
  const auto ids = basic_idempotents(c);
  const Comodule reg = regular_comodule(c);
  Dims out;
  for (const auto& e : ids->idempotents) out.push_back(rank(reg.action_matrix(e)));
  return out;
}

}  // namespace

TEST_CASE("catalog examples") {
  const auto e2 = share(gen_example1(2));
  CHECK(e2->dim() == 3);
  CHECK(basic_idempotents(e2)->size() == 1);
  CHECK(coradical(e2).dim() == 1);

  const auto e5 = share(gen_example1(5));
  const Comodule top5 = quotient_comodule(regular_comodule(e5), coradical(e5)).comodule;
  CHECK(hom_space(basic_idempotents(e5)->simples[0], top5).size() == 5);

  CHECK(gen_example2({1}).dim() == 2);
  const auto x = share(gen_example2({1, 2, 3}));
  CHECK(x->dim() == 9);
  CHECK(basic_idempotents(x)->size() == 3);
  const auto x12 = share(gen_example2({1, 2}));
  const auto ids12 = basic_idempotents(x12);
  const Comodule top12 = quotient_comodule(regular_comodule(x12), coradical(x12)).comodule;
  CHECK(hom_space(ids12->simples[0], top12).size() == 1);
  CHECK(hom_space(ids12->simples[1], top12).size() == 2);
  CHECK_THROWS_AS(gen_example2({2, 2}), Error);
  CHECK_THROWS_AS(gen_example2({}), Error);

  const auto k3 = share(gen_kx_truncated(3));
  CHECK(dual_structure(k3)->radical.ideal.dim() == 3);
  CHECK(basic_idempotents(k3)->size() == 1);
  CHECK(loewy_series(regular_comodule(k3)).dims == Dims{1, 2, 3, 4});

  const auto g4 = share(gen_gd(4));
  CHECK(g4->dim() == 7);
  CHECK(right_dims(g4) == Dims{1, 2, 2, 2});
  CHECK(basic_idempotents(g4)->hull_subspaces[0].dim() == 4);

  const auto m2 = share(gen_matrix_coalgebra(2));
  CHECK(basic_idempotents(m2)->size() == 1);
  CHECK(basic_idempotents(m2)->simples[0].dim() == 2);
  CHECK(dual_structure(m2)->radical.ideal.dim() == 0);

  const auto r = share(gen_random(42, 3, 4, 2));
  CHECK(basic_idempotents(r)->size() == 3);
}

TEST_CASE("build_tower") {
  CHECK(stage_dims(build_tower(TowerFamily::kx, 5)) == Dims{1, 2, 3, 4, 5, 6});
  CHECK(stage_dims(build_tower(TowerFamily::gd, 5)) == Dims{1, 3, 5, 7, 9, 11});
  CHECK(stage_dims(build_tower(TowerFamily::example2, 3)) == Dims{2, 5, 9, 14});
  const Tower t = build_tower(TowerFamily::example2, 2, {1, 3, 4});
  CHECK(stage_dims(t) == Dims{2, 6, 11});
  CHECK(t.name == "example2[1,3,4]");
  CHECK(t.horizon() == 2);
  CHECK_THROWS_AS(build_tower(TowerFamily::example2, 3, {1, 2}), Error);
  CHECK(parse_tower_family("gd") == TowerFamily::gd);
  CHECK_THROWS_AS(parse_tower_family("kx2"), Error);

  // gd stages are not prefixes of each other, only label-included.
  const Tower g = build_tower(TowerFamily::gd, 2);
  CHECK(g.inclusions[1] == Dims{0, 1, 3});
}

TEST_CASE("tower_from_stages rejects bad inclusions") {
  const Field Q = Field::rationals();
  const Scalar one(Q, 1);
  // {g, x1, y}: x1 is (g, y)-primitive here but (g, g)-primitive below.
  const Coalgebra skew(Q, {"g", "x1", "y"},
                       {{{one, 0, 0}}, {{one, 0, 1}, {one, 1, 2}}, {{one, 2, 2}}},
                       {one, Scalar(Q), one});
  CHECK_THROWS_AS(tower_from_stages("bad", {share(gen_example1(1)), share(skew)}),
                  ValidationError);
  CHECK_THROWS_AS(tower_from_stages("bad", {share(gen_gd(2)), share(gen_kx_truncated(2))}),
                  ValidationError);
  CHECK_THROWS_AS(tower_from_stages("bad", {share(gen_gd(2)), share(gen_gd(3, Field::prime(3)))}),
                  FieldMismatch);
  CHECK_THROWS_AS(tower_from_stages("none", {}), Error);
}

TEST_CASE("gd tower verdicts") {
  const TowerVerdict v = tower_classify(build_tower(TowerFamily::gd, 5));
  CHECK(v.horizon == 5);
  CHECK(v.at("right-semiperfect").status == TowerStatus::holds_at_horizon);
  for (const auto& s : v.at("right-semiperfect").evidence)
    if (s.key != "g1" && s.values.size() >= 2) CHECK(s.values.back() == 2);

  const auto& left = v.at("left-semiperfect");
  CHECK(left.status == TowerStatus::fails_with_witness);
  REQUIRE(left.witness);
  CHECK(left.witness->key == "g1");
  CHECK(left.witness->values == Dims{1, 2, 3, 4, 5, 6});

  const auto& lsqf = v.at("left-sqf");
  CHECK(lsqf.status == TowerStatus::fails_with_witness);
  REQUIRE(lsqf.witness);
  CHECK(lsqf.witness->key == "g1");
  CHECK(lsqf.witness->values == Dims{0, 1, 2, 3, 4, 5});
  CHECK(v.at("right-sqf").status == TowerStatus::holds_at_horizon);
  CHECK(v.at("colocal").status == TowerStatus::fails_with_witness);
  CHECK_THROWS_AS(v.at("noetherian"), Error);
}

TEST_CASE("example2 tower verdicts") {
  const TowerVerdict v = tower_classify(build_tower(TowerFamily::example2, 3, {1, 2, 3, 4}));
  CHECK(v.at("right-semiperfect").status == TowerStatus::holds_at_horizon);
  CHECK(v.at("left-semiperfect").status == TowerStatus::holds_at_horizon);
  CHECK(v.at("right-sqf").status == TowerStatus::holds_at_horizon);
  CHECK(v.at("left-sqf").status == TowerStatus::holds_at_horizon);
  const auto& cn = v.at("co-noetherian");
  CHECK(cn.status == TowerStatus::fails_with_witness);
  REQUIRE(cn.witness);
  CHECK(cn.witness->values == Dims{1, 2, 3, 4});
}

TEST_CASE("kx tower verdicts") {
  const TowerVerdict v = tower_classify(build_tower(TowerFamily::kx, 5));
  CHECK(v.at("colocal").status == TowerStatus::holds_at_horizon);
  CHECK(v.at("colocal").evidence[0].values == Dims(6, 1));
  for (const char* p : {"right-semiperfect", "left-semiperfect"}) {
    const auto& s = v.at(p);
    CHECK(s.status == TowerStatus::fails_with_witness);
    REQUIRE(s.witness);
    CHECK(s.witness->values == Dims{1, 2, 3, 4, 5, 6});
  }
  CHECK(v.at("right-sqf").status == TowerStatus::undecided);
  CHECK(v.at("left-sqf").status == TowerStatus::undecided);
  const auto& h = v.at("hereditary");
  CHECK(h.status == TowerStatus::undecided);
  CHECK(h.note == "not inferable from truncations");
  CHECK(h.evidence[0].values == Dims{1, 0, 0, 0, 0, 0});
}

TEST_CASE("series classification") {
  CHECK(is_stable({"a", 0, {3, 3}}));
  CHECK_FALSE(is_stable({"a", 0, {3}}));
  CHECK(is_growing({"a", 0, {5, 1, 2, 3}}));
  CHECK_FALSE(is_growing({"a", 0, {1, 2}}));
  CHECK_FALSE(is_growing({"a", 0, {1, 2, 2}}));
}

TEST_CASE("property: subcoalgebra closure along towers") {
  std::vector<Tower> towers{build_tower(TowerFamily::kx, 4), build_tower(TowerFamily::gd, 4),
                            build_tower(TowerFamily::example2, 2)};
  // Random quivers truncated at increasing length share their path labels.
  for (std::uint64_t s = 500; towers.size() < 20; ++s) {
    const Quiver q = random_quiver(s, 1 + s % 3, 1 + s % 4);
    try {
      std::vector<CoalgebraPtr> stages;
      for (std::size_t l = 0; l <= 2; ++l) stages.push_back(share(gen_path_coalgebra(q, l, {}, 20)));
      towers.push_back(tower_from_stages("random(" + std::to_string(s) + ")", std::move(stages)));
    } catch (const Error&) {
    }
  }
  for (const Tower& t : towers) {
    CAPTURE(t.name);
    const TowerVerdict v = tower_classify(t);
    for (const auto& p : v.properties) {
      CAPTURE(p.property);
      if (p.status == TowerStatus::fails_with_witness) {
        REQUIRE(p.witness);
        if (p.property == "colocal") {
          CHECK(p.witness->values.back() > 1);
        } else {
          CHECK(is_growing(*p.witness));
        }
      } else {
        CHECK_FALSE(p.witness);
      }
      if (p.property == "hereditary") continue;
      // Every tracked dimension is monotone along the inclusions.
      for (const auto& s : p.evidence)
        for (std::size_t n = 1; n < s.values.size(); ++n) CHECK(s.values[n - 1] <= s.values[n]);
    }
  }
}

TEST_CASE("property: direct sums") {
  const auto rs = testing::random_instances(24, 900, 12);
  for (std::size_t k = 0; k + 1 < rs.size(); k += 2) {
    const auto& a = rs[k].c;
    const auto& b = rs[k + 1].c;
    CAPTURE(rs[k].name);
    CAPTURE(rs[k + 1].name);
    const auto sum = share(direct_sum_coalgebra({*a, *b}));
    const auto ea = eiej_matrix(a), eb = eiej_matrix(b), es = eiej_matrix(sum);
    const std::size_t na = ea.size(), nb = eb.size();
    REQUIRE(es.size() == na + nb);
    for (std::size_t i = 0; i < na + nb; ++i)
      for (std::size_t j = 0; j < na + nb; ++j) {
        std::size_t want = 0;
        if (i < na && j < na) want = ea[i][j];
        if (i >= na && j >= na) want = eb[i - na][j - na];
        CHECK(es[i][j] == want);
      }
  }
}
