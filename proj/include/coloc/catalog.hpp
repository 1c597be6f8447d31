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

// Generators for the standard example coalgebras.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coloc/coalgebra.hpp"

namespace coloc {

/// Basis g, x1..xd with g group-like and every xi (g, g)-primitive.
Coalgebra gen_example1(std::size_t d, Field f = {});

/// Direct sum of gen_example1(d_n); dims must be strictly increasing and
/// positive.
Coalgebra gen_example2(const std::vector<std::size_t>& dims, Field f = {});

/// Degree <= n part of the divided-binomial coalgebra k[X]:
/// delta(X^m) = sum_i binom(m, i) X^i (x) X^(m-i). Characteristic zero only.
Coalgebra gen_kx_truncated(std::size_t n, Field f = {});

/// Basis g1..gm, d1..d(m-1): g group-like, delta(dn) = g1 (x) dn + dn (x) g(n+1).
Coalgebra gen_gd(std::size_t m, Field f = {});

/// Matrix coalgebra: delta(e_ij) = sum_k e_ik (x) e_kj, eps(e_ij) = delta_ij.
Coalgebra gen_matrix_coalgebra(std::size_t n, Field f = {});

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  std::string label;
};

struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
};

/// Upper bound on the number of paths a path coalgebra may have.
inline constexpr std::size_t kPathCap = 60;

/// Path coalgebra truncated at length L. Paths compose like maps: the path
/// "b*a" runs a first, and delta(p) = sum over factorizations p = p' p'' of
/// p' (x) p'', with a vertex in place of an empty factor. So an arrow
/// a: s -> t has delta(a) = t (x) a + a (x) s.
Coalgebra gen_path_coalgebra(const Quiver& q, std::size_t max_length,
                             Field f = {}, std::size_t cap = kPathCap);

/// Seeded random quiver (endpoints drawn uniformly), truncated at L.
Quiver random_quiver(std::uint64_t seed, std::size_t vertices, std::size_t arrows);
Coalgebra gen_random(std::uint64_t seed, std::size_t vertices, std::size_t arrows,
                     std::size_t max_length, Field f = {}, std::size_t cap = kPathCap);

/// Quiver whose truncation at length 1 is gen_gd(m).
Quiver gd_quiver(std::size_t m);
/// One vertex with d loops; truncation at length 1 is gen_example1(d).
Quiver loop_quiver(std::size_t d);

}  // namespace coloc
