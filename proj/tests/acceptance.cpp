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

// Acceptance run: one PASS/FAIL line per criterion. All arithmetic is
// exact, so every comparison below is equality with zero tolerance.

#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "coloc/catalog.hpp"
#include "coloc/homological.hpp"
#include "coloc/localization.hpp"
#include "coloc/structure.hpp"
#include "coloc/tower.hpp"
#include "fixtures.hpp"
#include "gen.hpp"

using namespace coloc;
using coloc::testing::catalog_instances;
using coloc::testing::Gen;
using coloc::testing::Named;
using coloc::testing::random_instances;
using coloc::testing::test_comodules;

using Dims = std::vector<std::size_t>;

namespace {

// Pinned tolerances. Exact arithmetic: no slack anywhere.
constexpr long kTolerance = 0;
// Resolutions stop once a cokernel exceeds this dimension.
constexpr std::size_t kTermCap = 200;
constexpr std::size_t kAxiomRandom = 200;
constexpr std::size_t kLocalizationRandom = 100;
constexpr std::size_t kHomologicalRandom = 50;
constexpr std::size_t kMaxDepth = 3;

// Collects the first few failures of one criterion.
class Checker {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    if (failures_.size() < 3) failures_.push_back(what);
    ++failed_;
  }
  std::size_t checks() const { return checks_; }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks";
    if (failed_ != 0) {
      s << ", " << failed_ << " failed:";
      for (const auto& f : failures_) s << " [" << f << "]";
    }
    return s.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
};

std::string str(const Dims& d) {
  std::string out = "(";
  for (std::size_t i = 0; i < d.size(); ++i) out += (i ? "," : "") + std::to_string(d[i]);
  return out + ")";
}

bool is_iso(const ComoduleMorphism& f) {
  return is_valid(f) && f.source.dim() == f.target.dim() && rank(f.map) == f.source.dim();
}

std::vector<std::vector<std::size_t>> torsion_sets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> j;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) j.push_back(i);
    out.push_back(j);
  }
  return out;
}

Subspace span_labels(const Coalgebra& c, const std::vector<std::string>& labels) {
  std::vector<Vector> vs;
  for (const auto& l : labels) vs.push_back(unit_vector(c.dim(), *c.index_of(l), c.field()));
  return Subspace::span(c.dim(), c.field(), vs);
}

std::vector<Named> with_random(std::size_t count, std::uint64_t seed, std::size_t cap) {
  auto v = catalog_instances();
  for (auto& r : random_instances(count, seed, cap)) v.push_back(std::move(r));
  return v;
}

void axioms(Checker& ck) {
  auto all = catalog_instances();
  for (auto& r : random_instances(kAxiomRandom)) all.push_back(std::move(r));
  for (const auto& [name, c] : all) {
    ck.expect(!validate_coalgebra(*c), name + ": coalgebra axioms");
    ck.expect(!validate_algebra(dual_algebra(*c)), name + ": dual algebra axioms");
  }
}

void localization(Checker& ck) {
  Gen g(77);
  for (const auto& [name, c] : with_random(kLocalizationRandom, 101, 16)) {
    const auto ids = basic_idempotents(c);
    const auto comodules = test_comodules(c);
    for (const auto& j : torsion_sets(ids->size())) {
      const auto ctx = build_context(c, j);
      for (const auto& m : comodules) {
        const auto iso = localization_iso(ctx, m);
        ck.expect(is_iso(iso) && iso.source.dim() == rank(m.action_matrix(ctx.spec.idempotent)),
                  name + ": eM = M cotensor eC");
        ck.expect(is_torsion(ctx, m) == hom_vanishing_check(ctx, m),
                  name + ": torsion iff hom vanishing");
        if (m.dim() == 0) continue;
        const Subspace a = sub_comodule_generated(m, {g.vector(m.dim(), m.field())});
        const std::size_t whole = localize_comodule(ctx, m).dim();
        const std::size_t sub = localize_comodule(ctx, restrict_to(m, a)).dim();
        const std::size_t quo = localize_comodule(ctx, quotient_comodule(m, a).comodule).dim();
        ck.expect(whole == sub + quo, name + ": exactness");
      }
      for (const auto& n :
           {regular_comodule(ctx.local), localize_comodule(ctx, regular_comodule(c))})
        ck.expect(is_iso(section_counit(ctx, n)), name + ": adjunction counit");
    }
  }
}

void gd_golden(Checker& ck) {
  for (std::size_t m : {4, 6}) {
    const std::string name = "gd(" + std::to_string(m) + ")";
    const auto c = share(gen_gd(m));
    const auto ids = basic_idempotents(c);
    const Comodule reg = regular_comodule(c);
    const LeftComodule left = regular_left_comodule(c);
    ck.expect(ids->size() == m, name + ": simples");
    for (std::size_t n = 0; n < ids->size(); ++n) {
      const Matrix l = reg.action_matrix(ids->idempotents[n]);
      const Subspace ec = image(l);
      if (n == 0) {
        ck.expect(ec == span_labels(*c, {"g1"}), name + ": e1C = kg1");
      } else {
        ck.expect(ec.dim() == 2, name + ": dim e_nC = 2");
        const Subspace ece1 = image(l * left.action_matrix(ids->idempotents[0]));
        ck.expect(ece1.dim() == 1, name + ": e_nCe_1 one-dimensional");
      }
    }
    const auto e = eiej_matrix(c);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        ck.expect(e[i][j] == ((i == j || (j == 0 && i >= 1)) ? 1u : 0u), name + ": eiej");
  }
  const TowerVerdict v = tower_classify(build_tower(TowerFamily::gd, 5));
  ck.expect(v.at("right-semiperfect").status == TowerStatus::holds_at_horizon,
            "gd tower: right-semiperfect");
  for (const char* p : {"left-semiperfect", "left-sqf"}) {
    const auto& pv = v.at(p);
    ck.expect(pv.status == TowerStatus::fails_with_witness && pv.witness.has_value() &&
                  is_growing(*pv.witness),
              std::string("gd tower: ") + p + " witness");
  }
}

void example1_golden(Checker& ck) {
  for (std::size_t d : {2, 5}) {
    const std::string name = "example1(" + std::to_string(d) + ")";
    const auto c = share(gen_example1(d));
    const Subspace c0 = coradical(c);
    ck.expect(c0 == span_labels(*c, {"g"}), name + ": coradical = kg");
    const Comodule top = quotient_comodule(regular_comodule(c), c0).comodule;
    ck.expect(socle(top).dim() == top.dim(), name + ": C/C0 semisimple");
    const auto ids = basic_idempotents(c);
    ck.expect(ids->size() == 1 && ids->idempotents[0] == c->counit(), name + ": basic set {counit}");
    ck.expect(hom_space(ids->simples[0], top).size() == d, name + ": dim Hom(S, C/C0) = d");
    ck.expect(eiej_matrix(c).size() == 1, name + ": colocal");
  }
}

void example2_golden(Checker& ck) {
  const TowerVerdict v = tower_classify(build_tower(TowerFamily::example2, 3, {1, 2, 3, 4}));
  ck.expect(v.at("right-semiperfect").status == TowerStatus::holds_at_horizon,
            "example2 tower: right-semiperfect");
  const auto& cn = v.at("co-noetherian");
  ck.expect(cn.status == TowerStatus::fails_with_witness && cn.witness.has_value() &&
                cn.witness->values == Dims{1, 2, 3, 4},
            "example2 tower: co-noetherian witness " +
                (cn.witness ? str(cn.witness->values) : std::string("none")));
}

// Resolutions of every simple and of C/C0, as in the homological sweep.
std::vector<Comodule> targets(const CoalgebraPtr& c) {
  const auto ids = basic_idempotents(c);
  std::vector<Comodule> out(ids->simples.begin(), ids->simples.end());
  const Subspace c0 = coradical(c);
  if (c0.dim() < c->dim()) out.push_back(quotient_comodule(regular_comodule(c), c0).comodule);
  return out;
}

void bass(Checker& ck) {
  for (const auto& [name, c] : with_random(kHomologicalRandom, 301, 14)) {
    for (const auto& m : targets(c)) {
      const Resolution r = minimal_injective_resolution(m, kMaxDepth, kDefaultSeed, kTermCap);
      ck.expect(r.depth == kMaxDepth || r.cokernels[r.depth + 1].dim() > kTermCap,
                name + ": depth cut only by the term cap");
      const auto ids = basic_idempotents(c);
      const auto profiles = bass_numbers(r);
      for (std::size_t i = 0; i < ids->size(); ++i) {
        const Dims ext = ext_from_resolution(ids->simples[i], r);
        const std::size_t hss = hom_space(ids->simples[i], ids->simples[i]).size();
        for (std::size_t k = 0; k <= r.depth; ++k) {
          std::size_t direct = 0;
          for (std::size_t s : r.summands[k]) direct += s == i ? 1 : 0;
          const long diff = static_cast<long>(direct * hss) - static_cast<long>(ext[k]);
          ck.expect(std::labs(diff) <= kTolerance && direct == r.multiplicities[k][i] &&
                        profiles[i].bass[k] == direct,
                    name + ": n = dim Ext / dim End at level " + std::to_string(k));
        }
      }
    }
  }
  const auto kx = share(gen_kx_truncated(3));
  const Dims kxp = bass_numbers(basic_idempotents(kx)->simples[0], 3)[0].bass;
  ck.expect(kxp == Dims{1, 1, 1, 1}, "kx(3) profile " + str(kxp));
  const auto e1 = share(gen_example1(2));
  const Dims e1p = bass_numbers(basic_idempotents(e1)->simples[0], 2)[0].bass;
  ck.expect(e1p == Dims{1, 2, 4}, "example1(2) profile " + str(e1p));
}

void oracle(Checker& ck) {
  for (const auto& [name, c] : with_random(kHomologicalRandom, 301, 14)) {
    const auto ids = basic_idempotents(c);
    for (const auto& m : targets(c)) {
      const Resolution r = minimal_injective_resolution(m, kMaxDepth, kDefaultSeed, kTermCap);
      for (const auto& s : ids->simples)
        ck.expect(ext_from_resolution(s, r) == cstar_ext_oracle(s, m, r.depth),
                  name + ": injective vs projective Ext");
    }
  }
}

void hereditary(Checker& ck) {
  for (std::size_t m : {4, 6}) {
    const std::string name = "gd(" + std::to_string(m) + ")";
    const auto c = share(gen_gd(m));
    ck.expect(hereditary_check(c).hereditary, name + ": hereditary");
    const auto ids = basic_idempotents(c);
    for (std::size_t i = 0; i < ids->size(); ++i)
      ck.expect(localize_at_simple(c, i).local->dim() == 1, name + ": dim e_iCe_i = 1");
    for (bool b : colocal_division_check(c)) ck.expect(b, name + ": division corner");
  }
  const TowerVerdict v = tower_classify(build_tower(TowerFamily::gd, 5));
  ck.expect(v.at("right-semiperfect").status == TowerStatus::holds_at_horizon,
            "gd: right semiperfect");
  for (const auto& [name, c] : std::vector<Named>{{"kx(3)", share(gen_kx_truncated(3))},
                                                  {"example1(2)", share(gen_example1(2))}}) {
    const auto h = hereditary_check(c);
    ck.expect(!h.hereditary && h.ext2[0][0] != 0, name + ": Ext^2 witness");
  }
  ck.expect(hereditary_check(share(gen_matrix_coalgebra(2))).hereditary, "matrix(2): hereditary");
}

void mono_and_loewy(Checker& ck) {
  Gen g(23);
  for (const auto& [name, c] : with_random(30, 7, 18)) {
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
        if (kernel(f).dim() != 0) continue;
        ck.expect(rank(f) == m.dim(), name + ": mono is iso");
        for (const auto& term : s.terms) ck.expect(term.image_under(f) == term, name + ": f(M_n) = M_n");
      }
    }
    const auto s = loewy_series(regular_comodule(c));
    const auto w = coradical_filtration(c);
    ck.expect(s.terms.size() == w.size(), name + ": Loewy length");
    for (std::size_t n = 0; n < std::min(s.terms.size(), w.size()); ++n)
      ck.expect(s.terms[n] == w[n], name + ": Loewy term = wedge term");
  }
  const auto e1 = share(gen_example1(2));
  const Subspace c0 = coradical(e1);
  ck.expect(wedge(*e1, c0, c0) == Subspace::full(e1->dim(), e1->field()),
            "example1(2): C = C0 ^ C0");
}

void locasimple(Checker& ck) {
  for (const auto& [name, c] : catalog_instances()) {
    const auto ids = basic_idempotents(c);
    for (std::size_t i = 0; i < ids->size(); ++i)
      ck.expect(locasimple_check(localize_at_simple(c, i)), name + ": simple " + std::to_string(i));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Checker&)>>> criteria = {
      {"axiom suite", axioms},
      {"localization identities", localization},
      {"gd golden values", gd_golden},
      {"example1 golden values", example1_golden},
      {"example2 tower", example2_golden},
      {"bass numbers", bass},
      {"ext oracle equivalence", oracle},
      {"hereditary", hereditary},
      {"mono-iso and Loewy", mono_and_loewy},
      {"simple localizations", locasimple},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Checker ck;
    std::string detail;
    try {
      criteria[k].second(ck);
      detail = ck.summary();
    } catch (const std::exception& e) {
      ck.expect(false, "exception");
      detail = std::string("exception: ") + e.what();
    }
    failed += ck.ok() ? 0 : 1;
    std::printf("%s %zu %s (tolerance exact): %s\n", ck.ok() ? "PASS" : "FAIL", k + 1,
                criteria[k].first.c_str(), detail.c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
