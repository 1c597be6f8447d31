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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "coloc/catalog.hpp"
#include "coloc/error.hpp"
#include "coloc/structure.hpp"

namespace coloc::testing {

struct Named {
  std::string name;
  CoalgebraPtr c;
};

/// The fixed catalog used by the sweeps. Kept small enough that every
/// homological computation on it stays fast.
inline std::vector<Named> catalog_instances() {
  std::vector<Named> out;
  out.push_back({"point", share(gen_example1(0))});
  out.push_back({"example1(2)", share(gen_example1(2))});
  out.push_back({"example1(5)", share(gen_example1(5))});
  out.push_back({"example2(1,2,3)", share(gen_example2({1, 2, 3}))});
  out.push_back({"kx(3)", share(gen_kx_truncated(3))});
  out.push_back({"gd(4)", share(gen_gd(4))});
  out.push_back({"gd(6)", share(gen_gd(6))});
  out.push_back({"matrix(2)", share(gen_matrix_coalgebra(2))});
  out.push_back({"matrix(2) over GF(5)", share(gen_matrix_coalgebra(2, Field::prime(5)))});
  out.push_back({"gd(4) over GF(3)", share(gen_gd(4, Field::prime(3)))});
  out.push_back({"matrix(2) over GF(2)", share(gen_matrix_coalgebra(2, Field::prime(2)))});
  return out;
}

/// Seeded random path coalgebras with 1-4 vertices, 0-5 arrows, L <= 3.
/// Seeds whose path count exceeds the cap are skipped deterministically.
inline std::vector<Named> random_instances(std::size_t count, std::uint64_t base_seed = 1,
                                           std::size_t cap = 24) {
  std::vector<Named> out;
  for (std::uint64_t s = base_seed; out.size() < count; ++s) {
    const std::size_t v = 1 + s % 4;
    const std::size_t a = (s / 4) % 6;
    const std::size_t L = 1 + (s / 24) % 3;
    try {
      out.push_back({"random(" + std::to_string(s) + ")", share(gen_random(s, v, a, L, {}, cap))});
    } catch (const Error&) {
    }
  }
  return out;
}

// A few comodules per coalgebra: C_C, each Ce_i, each S_i, C/C_0.
inline std::vector<Comodule> test_comodules(const CoalgebraPtr& c) {
  std::vector<Comodule> out{regular_comodule(c)};
  const auto ids = basic_idempotents(c);
  for (std::size_t i = 0; i < ids->size(); ++i) {
    out.push_back(injective_indecomposable(c, i));
    out.push_back(ids->simples[i]);
  }
  const Subspace c0 = coradical(c);
  if (c0.dim() < c->dim()) out.push_back(quotient_comodule(out[0], c0).comodule);
  return out;
}

}  // namespace coloc::testing
