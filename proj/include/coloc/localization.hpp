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

// Localization at an idempotent e of C*. Conventions:
//   e.c   = sum c_1 e(c_2)    (left action, right comodules)
//   c<-e  = sum e(c_1) c_2    (right action)
//   eCe   = e.C<-e with delta(x) = (pi (x) pi) delta(x), pi(c) = e.c<-e.

#pragma once

#include <cstdint>
#include <vector>

#include "coloc/dual_algebra.hpp"

namespace coloc {

struct LocalizationContext {
  CoalgebraPtr ambient;
  TorsionSpec spec;
  Subspace ece_subspace;  // eCe inside C; its rref rows are the basis of local
  CoalgebraPtr local;     // eCe
  Subspace ec_subspace;
  Subspace ce_subspace;
  LeftComodule ec_left;   // eC as a left C-comodule
  Comodule ec_right;      // eC as a right eCe-comodule
  LeftComodule ce_left;   // Ce as a left eCe-comodule
  Comodule ce_right;      // Ce as a right C-comodule
  Matrix left_e;          // c -> e.c on C
  Matrix right_e;         // c -> c<-e on C
};

/// Throws Error when J contains every simple (e = 0).
LocalizationContext build_context(const CoalgebraPtr& c, const TorsionSpec& spec);
LocalizationContext build_context(const CoalgebraPtr& c, std::vector<std::size_t> torsion,
                                  std::uint64_t seed = kDefaultSeed);

/// eM inside M.
Subspace localized_subspace(const LocalizationContext& ctx, const Comodule& m);
/// eM as a right eCe-comodule, coaction (e. (x) pi) rho.
Comodule localize_comodule(const LocalizationContext& ctx, const Comodule& m);

/// x box_D y = ker(rho (x) id - id (x) lambda) inside x (x) y.
Subspace cotensor(const Comodule& x, const LeftComodule& y);
/// The cotensor with the right coaction induced by y_right, a right
/// coaction on the space of y commuting with its left coaction.
Comodule cotensor_comodule(const Comodule& x, const LeftComodule& y, const Comodule& y_right);

/// N box_eCe Ce as a right C-comodule.
Comodule section_functor(const LocalizationContext& ctx, const Comodule& n);

/// eM -> M box_C eC, x -> sum x_0 (x) e.x_1.
ComoduleMorphism localization_iso(const LocalizationContext& ctx, const Comodule& m);
/// e(N box Ce) -> N, induced by id (x) eps.
ComoduleMorphism section_counit(const LocalizationContext& ctx, const Comodule& n);
/// alpha: M -> S(T(M)), m -> sum e.m_0 (x) m_1<-e.
ComoduleMorphism adjunction_unit(const LocalizationContext& ctx, const Comodule& m);

/// Largest subcomodule killed by e.
Subspace torsion_subcomodule(const LocalizationContext& ctx, const Comodule& m);
bool is_torsion(const LocalizationContext& ctx, const Comodule& m);
/// Hom(M, Ce_i) = 0 for every i outside J.
bool hom_vanishing_check(const LocalizationContext& ctx, const Comodule& m,
                         std::uint64_t seed = kDefaultSeed);

/// J = all simples except i; checks that e_iCe_i is colocal.
LocalizationContext localize_at_simple(const CoalgebraPtr& c, std::size_t i,
                                       std::uint64_t seed = kDefaultSeed);

/// Entry (i, j) is dim e_i C e_j.
std::vector<std::vector<std::size_t>> eiej_matrix(const CoalgebraPtr& c,
                                                  std::uint64_t seed = kDefaultSeed);

/// Every simple eCe-comodule is isomorphic to eY for some simple C-comodule Y.
bool locasimple_check(const LocalizationContext& ctx, std::uint64_t seed = kDefaultSeed);

}  // namespace coloc
