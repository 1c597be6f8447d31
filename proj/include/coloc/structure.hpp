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

// Structure of comodules: socle, Loewy series, wedges, injective hulls and
// resolutions, projective covers, Hom spaces.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coloc/dual_algebra.hpp"

namespace coloc {

/// ann_M(J) for the radical J of C*.
Subspace socle(const Comodule& m);

/// k_i with soc(m) = sum S_i^{k_i}, indexed like basic_idempotents.
std::vector<std::size_t> isotypic_decomposition(const Comodule& m,
                                                std::uint64_t seed = kDefaultSeed);

struct LoewySeries {
  std::vector<Subspace> terms;   // M_0 = soc(M) < M_1 < ... = M
  std::vector<std::size_t> dims;  // dim M_n
  std::vector<std::size_t> layer_dims() const;
};
LoewySeries loewy_series(const Comodule& m);

/// A ^ B = delta^{-1}(A (x) C + C (x) B); inputs must be subcoalgebras.
Subspace wedge(const Coalgebra& c, const Subspace& a, const Subspace& b);
/// Union of the iterated wedges of A with itself.
Subspace wedge_closure(const Coalgebra& c, const Subspace& a);
/// The iterated wedges of C_0: C_0, C_0 ^ C_0, ... up to C.
std::vector<Subspace> coradical_filtration(const CoalgebraPtr& c);

/// Hom^C(n, m) as a basis of matrices (m.dim() x n.dim()).
std::vector<Matrix> hom_space(const Comodule& n, const Comodule& m);
/// Some invertible comodule map a -> b, searched among Hom basis elements
/// and seeded random combinations.
std::optional<Matrix> find_isomorphism(const Comodule& a, const Comodule& b,
                                       std::uint64_t seed = kDefaultSeed);

/// Ce_i as a right comodule.
Comodule injective_indecomposable(const CoalgebraPtr& c, std::size_t i,
                                  std::uint64_t seed = kDefaultSeed);

struct InjectiveHull {
  Comodule hull;                             // sum over i of (Ce_i)^{k_i}
  std::vector<std::size_t> multiplicities;  // k_i
  ComoduleMorphism embedding;
  /// Simple index of each Ce_i summand of hull, in block order.
  std::vector<std::size_t> summands;
};

/// The embedding m -> E(m) assembled from the functionals of the
/// isotypic pieces e_i soc(m); checked colinear and injective.
InjectiveHull injective_hull_embedding(const Comodule& m, std::uint64_t seed = kDefaultSeed);

/// dim m equals the dimension of its injective hull.
bool is_injective(const Comodule& m, std::uint64_t seed = kDefaultSeed);

struct Resolution {
  Comodule resolved;
  std::size_t depth = 0;
  /// multiplicities[k][i] = n_{Q_k, i} for k = 0..depth.
  std::vector<std::vector<std::size_t>> multiplicities;
  std::vector<Comodule> terms;             // Q_0..Q_depth
  std::vector<Comodule> cokernels;         // K_0 = M, K_1, ..., K_{depth+1}
  std::vector<Matrix> embeddings;          // K_k -> Q_k
  std::vector<Matrix> projections;         // Q_k -> K_{k+1}
  /// summands[k]: simple index of each Ce_i block of Q_k, in order.
  std::vector<std::vector<std::size_t>> summands;
  /// Seed of the idempotent set the blocks refer to.
  std::uint64_t seed = kDefaultSeed;
  /// Q_k -> Q_{k+1} for k < depth.
  Matrix differential(std::size_t k) const;
  /// M -> Q_0.
  const Matrix& augmentation() const { return embeddings.at(0); }
};

/// Levels 0..depth. With a nonzero term_cap the resolution stops early,
/// before taking the hull of a cokernel of dimension above the cap; depth
/// then records the last level computed (level 0 is always computed).
Resolution minimal_injective_resolution(const Comodule& m, std::size_t depth,
                                        std::uint64_t seed = kDefaultSeed,
                                        std::size_t term_cap = 0);

/// Exactness at every level and minimality (soc K_k -> soc Q_k onto).
std::optional<std::string> verify_resolution(const Resolution& r);

struct ProjectiveCover {
  Comodule cover;  // (e_i C)*
  ComoduleMorphism epi;
};
ProjectiveCover projective_cover(const CoalgebraPtr& c, std::size_t i,
                                 std::uint64_t seed = kDefaultSeed);
/// J . M, the radical of M as a C*-module.
Subspace radical_of(const Comodule& m);

/// End^C(m), with b_a b_b the composition X_a X_b.
Algebra endomorphism_algebra(const Comodule& m);

}  // namespace coloc
