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

// Towers C_0 <= C_1 <= ... <= C_N of finite-dimensional coalgebras standing
// in for an infinite one, and horizon-qualified verdicts read off them.

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coloc/coalgebra.hpp"
#include "coloc/dual_algebra.hpp"

namespace coloc {

enum class TowerFamily { kx, gd, example2 };

/// "kx", "gd" or "example2"; throws Error otherwise.
TowerFamily parse_tower_family(std::string_view name);
std::string_view to_string(TowerFamily f);

struct Tower {
  std::string name;
  std::vector<CoalgebraPtr> stages;
  /// inclusions[n][b] is the index in stage n + 1 of basis element b of stage n.
  std::vector<std::vector<std::size_t>> inclusions;

  std::size_t horizon() const { return stages.size() - 1; }
};

/// Stages embed by basis label. Throws ValidationError when a stage fails
/// validation, a label is missing, or the inclusion is not a coalgebra map.
Tower tower_from_stages(std::string name, std::vector<CoalgebraPtr> stages);

/// Stages n = 0..N: kx -> gen_kx_truncated(n), gd -> gen_gd(n + 1),
/// example2 -> gen_example2(dims[0..n]). dims defaults to 1..N+1 and must
/// have at least N + 1 entries.
Tower build_tower(TowerFamily family, std::size_t horizon,
                  const std::vector<std::size_t>& dims = {}, Field f = {});

enum class TowerStatus { holds_at_horizon, fails_with_witness, undecided };
std::string_view to_string(TowerStatus s);

/// One tracked quantity over the stages first_stage..N.
struct Series {
  std::string key;
  std::size_t first_stage = 0;
  std::vector<std::size_t> values;
};

/// Last two values equal.
bool is_stable(const Series& s);
/// Last three values strictly increasing.
bool is_growing(const Series& s);

struct PropertyVerdict {
  std::string property;
  TowerStatus status = TowerStatus::undecided;
  std::vector<Series> evidence;
  std::optional<Series> witness;  // set when status is fails_with_witness
  std::string note;
};

struct TowerVerdict {
  std::string tower;
  std::size_t horizon = 0;
  std::vector<PropertyVerdict> properties;

  /// Throws Error for an unknown property name.
  const PropertyVerdict& at(std::string_view property) const;
};

/// Properties: colocal, right-semiperfect (dim e_iC_n), left-semiperfect
/// (dim C_ne_i), right-sqf / left-sqf (nonzero off-diagonal entries per row /
/// column of eiej, then growth of the entries), co-noetherian
/// (max_i dim Hom(S_i, C_n/(C_n)_0)), quasi-finite (dim Hom(S_i, C_n)) and
/// hereditary (never inferred). Simples are tracked through the inclusions
/// and keyed by the label of their first pivot in the stage they appear in.
TowerVerdict tower_classify(const Tower& t, std::uint64_t seed = kDefaultSeed);

}  // namespace coloc
