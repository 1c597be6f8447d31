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

// Ext dimensions, Bass numbers and the checks built on them.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coloc/error.hpp"
#include "coloc/structure.hpp"

namespace coloc {

struct ExtProfile {
  std::optional<std::size_t> source_simple;
  std::size_t depth = 0;
  std::vector<std::size_t> ext;   // dim Ext^n(N, M), n = 0..depth
  std::vector<std::size_t> bass;  // multiplicity of Ce_i in Q_n; simple source only
  std::size_t hom_ss = 0;         // dim Hom(S, S); simple source only
};

/// Cohomology of Hom(N, Q.) for a computed minimal injective resolution of M.
std::vector<std::size_t> ext_from_resolution(const Comodule& n, const Resolution& r);
ExtProfile ext_dims(const Comodule& n, const Comodule& m, std::size_t depth,
                    std::uint64_t seed = kDefaultSeed);

/// One profile per simple S_i; throws BassMismatch on disagreement.
std::vector<ExtProfile> bass_numbers(const Comodule& m, std::size_t depth,
                                     std::uint64_t seed = kDefaultSeed);
std::vector<ExtProfile> bass_numbers(const Resolution& r);

/// dim Ext^n_{C*}(N, M), n = 0..depth, from a minimal projective
/// resolution of N over the finite-dimensional algebra C* by the covers
/// C* e_i.
std::vector<std::size_t> cstar_ext_oracle(const Comodule& n, const Comodule& m,
                                          std::size_t depth,
                                          std::uint64_t seed = kDefaultSeed);

struct HereditaryVerdict {
  bool hereditary = false;
  std::vector<std::vector<std::size_t>> ext2;  // ext2[i][j] = dim Ext^2(S_i, S_j)
};

/// Ext^2 vanishing on all pairs of simples. The guard defaults to
/// max(dim C, 2);
/// throws Error when it is below 2.
HereditaryVerdict hereditary_check(const CoalgebraPtr& c,
                                   std::optional<std::size_t> depth_guard = std::nullopt,
                                   std::uint64_t seed = kDefaultSeed);

/// Entry i: dim e_iCe_i == dim End(S_i), i.e. e_iCe_i is dual to a
/// division algebra.
std::vector<bool> colocal_division_check(const CoalgebraPtr& c,
                                         std::uint64_t seed = kDefaultSeed);

}  // namespace coloc
