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

#include "coloc/tower.hpp"

#include <algorithm>
#include <map>

#include "coloc/catalog.hpp"
#include "coloc/error.hpp"
#include "coloc/homological.hpp"
#include "coloc/linalg.hpp"
#include "coloc/localization.hpp"
#include "coloc/structure.hpp"

namespace coloc {

namespace {

using SparseTensor = std::map<std::pair<std::size_t, std::size_t>, Scalar>;

SparseTensor collect(const Expansion& e, const std::vector<std::size_t>* map) {
  SparseTensor out;
  for (const auto& t : e) {
    const auto key = map ? std::pair{(*map)[t.first], (*map)[t.second]}
                         : std::pair{t.first, t.second};
    auto it = out.find(key);
    if (it == out.end()) {
      out.emplace(key, t.coef);
    } else {
      it->second += t.coef;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace

TowerFamily parse_tower_family(std::string_view name) {
  if (name == "kx") return TowerFamily::kx;
  if (name == "gd") return TowerFamily::gd;
  if (name == "example2") return TowerFamily::example2;
  throw Error("unknown tower family '" + std::string(name) + "'");
}

std::string_view to_string(TowerFamily f) {
  switch (f) {
    case TowerFamily::kx: return "kx";
    case TowerFamily::gd: return "gd";
    case TowerFamily::example2: return "example2";
  }
  return "";
}

std::string_view to_string(TowerStatus s) {
  switch (s) {
    case TowerStatus::holds_at_horizon: return "holds-at-horizon";
    case TowerStatus::fails_with_witness: return "fails-with-witness";
    case TowerStatus::undecided: return "undecided";
  }
  return "";
}

Tower tower_from_stages(std::string name, std::vector<CoalgebraPtr> stages) {
  if (stages.empty()) throw Error("tower: no stages");
  Tower t{std::move(name), std::move(stages), {}};
  for (std::size_t n = 0; n < t.stages.size(); ++n) {
    if (auto v = validate_coalgebra(*t.stages[n]))
      throw ValidationError("tower stage " + std::to_string(n) + ": " + v->to_string());
    if (n == 0) continue;
    const Coalgebra& lo = *t.stages[n - 1];
    const Coalgebra& hi = *t.stages[n];
    if (!(lo.field() == hi.field()))
      throw FieldMismatch("tower stages " + std::to_string(n - 1) + " and " +
                          std::to_string(n) + " live over different fields");
    std::vector<std::size_t> map;
    for (const auto& l : lo.labels()) {
      auto j = hi.index_of(l);
      if (!j)
        throw ValidationError("tower: label '" + l + "' of stage " + std::to_string(n - 1) +
                              " is missing from stage " + std::to_string(n));
      map.push_back(*j);
    }
    for (std::size_t b = 0; b < lo.dim(); ++b) {
      if (collect(lo.delta(b), &map) != collect(hi.delta(map[b]), nullptr) ||
          !(lo.counit()[b] == hi.counit()[map[b]]))
        throw ValidationError("tower: inclusion of stage " + std::to_string(n - 1) +
                              " is not a coalgebra map at '" + lo.labels()[b] + "'");
    }
    t.inclusions.push_back(std::move(map));
  }
  return t;
}

Tower build_tower(TowerFamily family, std::size_t horizon, const std::vector<std::size_t>& dims,
                  Field f) {
  std::vector<std::size_t> ds = dims;
  if (family == TowerFamily::example2) {
    if (ds.empty())
      for (std::size_t n = 1; n <= horizon + 1; ++n) ds.push_back(n);
    if (ds.size() < horizon + 1)
      throw Error("example2 tower: horizon " + std::to_string(horizon) + " needs " +
                  std::to_string(horizon + 1) + " dimensions");
  }
  std::vector<CoalgebraPtr> stages;
  for (std::size_t n = 0; n <= horizon; ++n) {
    switch (family) {
      case TowerFamily::kx: stages.push_back(share(gen_kx_truncated(n, f))); break;
      case TowerFamily::gd: stages.push_back(share(gen_gd(n + 1, f))); break;
      case TowerFamily::example2:
        stages.push_back(share(gen_example2({ds.begin(), ds.begin() + static_cast<long>(n + 1)}, f)));
        break;
    }
  }
  std::string name(to_string(family));
  if (family == TowerFamily::example2) {
    name += "[";
    for (std::size_t n = 0; n <= horizon; ++n) name += (n ? "," : "") + std::to_string(ds[n]);
    name += "]";
  }
  return tower_from_stages(std::move(name), std::move(stages));
}

bool is_stable(const Series& s) {
  const auto& v = s.values;
  return v.size() >= 2 && v[v.size() - 1] == v[v.size() - 2];
}

bool is_growing(const Series& s) {
  const auto& v = s.values;
  const std::size_t n = v.size();
  return n >= 3 && v[n - 3] < v[n - 2] && v[n - 2] < v[n - 1];
}

const PropertyVerdict& TowerVerdict::at(std::string_view property) const {
  for (const auto& p : properties)
    if (p.property == property) return p;
  throw Error("tower verdict: no property '" + std::string(property) + "'");
}

namespace {

// Fails on the first growing series, holds when every series of length >= 2
// is stable and there is at least one, else undecided.
PropertyVerdict judge(std::string property, std::vector<Series> evidence) {
  PropertyVerdict p{std::move(property), TowerStatus::undecided, std::move(evidence), {}, {}};
  bool any = false, all_stable = true;
  for (const auto& s : p.evidence) {
    if (is_growing(s)) {
      p.status = TowerStatus::fails_with_witness;
      p.witness = s;
      return p;
    }
    if (s.values.size() < 2) continue;
    any = true;
    all_stable = all_stable && is_stable(s);
  }
  if (any && all_stable) p.status = TowerStatus::holds_at_horizon;
  return p;
}

struct StageData {
  std::shared_ptr<const IdempotentSet> ids;
  std::vector<std::size_t> key;  // simple i -> index into the tracked keys
  std::vector<std::size_t> right_dim, left_dim, hom_c;
  std::vector<std::vector<std::size_t>> eiej;
  std::size_t top_max = 0;
  bool hereditary = false;
};

}  // namespace

TowerVerdict tower_classify(const Tower& t, std::uint64_t seed) {
  std::vector<std::string> keys;
  std::vector<std::size_t> key_stage;
  std::vector<StageData> data;
  for (std::size_t n = 0; n < t.stages.size(); ++n) {
    const CoalgebraPtr& c = t.stages[n];
    StageData d;
    d.ids = basic_idempotents(c, seed);
    const std::size_t ni = d.ids->size();
    d.key.assign(ni, keys.size());
    std::vector<bool> matched(ni, false);
    if (n > 0) {
      // Each simple of the previous stage is a simple comodule here.
      const StageData& prev = data.back();
      const Comodule reg = regular_comodule(c);
      for (std::size_t i = 0; i < prev.ids->size(); ++i) {
        std::vector<Vector> image;
        for (const auto& v : prev.ids->simple_subspaces[i].basis_vectors()) {
          Vector w = zero_vector(c->dim(), c->field());
          for (std::size_t b = 0; b < v.size(); ++b) w[t.inclusions[n - 1][b]] = v[b];
          image.push_back(std::move(w));
        }
        const Comodule s = restrict_to(reg, Subspace::span(c->dim(), c->field(), image));
        const std::size_t j = simple_type(*d.ids, s);
        if (matched[j]) throw InternalError("tower: two simples of a stage merged in the next");
        matched[j] = true;
        d.key[j] = prev.key[i];
      }
    }
    for (std::size_t i = 0; i < ni; ++i)
      if (!matched[i]) {
        d.key[i] = keys.size();
        keys.push_back(c->labels()[d.ids->simple_subspaces[i].pivots().front()]);
        key_stage.push_back(n);
      }
    const Comodule reg = regular_comodule(c);
    for (std::size_t i = 0; i < ni; ++i) {
      d.right_dim.push_back(rank(reg.action_matrix(d.ids->idempotents[i])));
      d.left_dim.push_back(d.ids->hull_subspaces[i].dim());
      d.hom_c.push_back(hom_space(d.ids->simples[i], reg).size());
    }
    d.eiej = eiej_matrix(c, seed);
    const Subspace c0 = coradical(c);
    if (c0.dim() < c->dim()) {
      const Comodule top = quotient_comodule(reg, c0).comodule;
      for (const auto& s : d.ids->simples)
        d.top_max = std::max(d.top_max, hom_space(s, top).size());
    }
    d.hereditary = hereditary_check(c, std::nullopt, seed).hereditary;
    data.push_back(std::move(d));
  }

  // Per-simple series, from the stage the simple appears in.
  auto per_simple = [&](auto value) {
    std::vector<Series> out;
    for (std::size_t k = 0; k < keys.size(); ++k) {
      Series s{keys[k], key_stage[k], {}};
      for (std::size_t n = key_stage[k]; n < data.size(); ++n) {
        const auto& d = data[n];
        const auto i = static_cast<std::size_t>(std::find(d.key.begin(), d.key.end(), k) - d.key.begin());
        s.values.push_back(value(d, i));
      }
      out.push_back(std::move(s));
    }
    return out;
  };
  auto index_of_key = [](const StageData& d, std::size_t k) {
    return static_cast<std::size_t>(std::find(d.key.begin(), d.key.end(), k) - d.key.begin());
  };

  TowerVerdict v{t.name, t.horizon(), {}};

  {
    Series count{"simples", 0, {}};
    for (const auto& d : data) count.values.push_back(d.ids->size());
    PropertyVerdict p{"colocal", TowerStatus::holds_at_horizon, {count}, {}, {}};
    if (count.values.back() > 1) {
      p.status = TowerStatus::fails_with_witness;
      p.witness = count;
      p.note = "stage " + std::to_string(data.size() - 1) + " already has " +
               std::to_string(count.values.back()) + " simples";
    }
    v.properties.push_back(std::move(p));
  }
  v.properties.push_back(judge("right-semiperfect",
                               per_simple([](const StageData& d, std::size_t i) { return d.right_dim[i]; })));
  v.properties.push_back(judge("left-semiperfect",
                               per_simple([](const StageData& d, std::size_t i) { return d.left_dim[i]; })));

  for (const bool rows : {true, false}) {
    const std::string name = rows ? "right-sqf" : "left-sqf";
    auto counts = per_simple([&](const StageData& d, std::size_t i) {
      std::size_t nz = 0;
      for (std::size_t j = 0; j < d.eiej.size(); ++j)
        if (j != i && (rows ? d.eiej[i][j] : d.eiej[j][i]) != 0) ++nz;
      return nz;
    });
    PropertyVerdict p = judge(name, counts);
    if (p.status == TowerStatus::holds_at_horizon) {
      // The pattern is stable; a growing entry leaves the verdict open.
      for (std::size_t a = 0; a < keys.size() && !p.witness; ++a)
        for (std::size_t b = 0; b < keys.size(); ++b) {
          Series s{"e(" + keys[a] + ")Ce(" + keys[b] + ")", std::max(key_stage[a], key_stage[b]), {}};
          for (std::size_t n = s.first_stage; n < data.size(); ++n)
            s.values.push_back(data[n].eiej[index_of_key(data[n], a)][index_of_key(data[n], b)]);
          if (is_growing(s)) {
            p.status = TowerStatus::undecided;
            p.note = "nonzero pattern is stable but " + s.key + " grows";
            p.evidence.push_back(std::move(s));
            break;
          }
        }
    }
    v.properties.push_back(std::move(p));
  }

  {
    Series top{"max_i dim Hom(S_i, C/C_0)", 0, {}};
    for (const auto& d : data) top.values.push_back(d.top_max);
    v.properties.push_back(judge("co-noetherian", {top}));
  }
  v.properties.push_back(judge("quasi-finite",
                               per_simple([](const StageData& d, std::size_t i) { return d.hom_c[i]; })));
  {
    Series h{"stage hereditary", 0, {}};
    for (const auto& d : data) h.values.push_back(d.hereditary ? 1 : 0);
    v.properties.push_back({"hereditary", TowerStatus::undecided, {h}, {}, "not inferable from truncations"});
  }
  return v;
}

}  // namespace coloc
