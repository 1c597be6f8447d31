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

#include "coloc/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "coloc/catalog.hpp"
#include "coloc/error.hpp"
#include "coloc/homological.hpp"
#include "coloc/io.hpp"
#include "coloc/linalg.hpp"
#include "coloc/localization.hpp"
#include "coloc/structure.hpp"
#include "coloc/tower.hpp"

namespace coloc {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// A verdict that ends the command with exit code 1 and a report.
struct Verdict {
  std::string status;
  std::string message;
  Json data;
};

struct Options {
  std::string format = "text";
  std::string input = "-";
  std::uint64_t seed = kDefaultSeed;
  // Selectors and parameters shared by several subcommands.
  std::string module = "regular";
  std::string source;
  std::string target;
  std::string left = "regular";
  std::string at;
  std::string local_module;
  std::string wedge_a, wedge_b;
  std::size_t depth = 2;
  std::size_t cap = 0;
  std::optional<std::size_t> simple;
  std::optional<std::size_t> guard;
  bool oracle = false;
  // gen and tower.
  std::string name;
  std::vector<std::string> params;
  std::string out_path;
  std::string field = "Q";
  std::size_t horizon = 0;
  std::vector<std::size_t> dims;
  bool classify = false;
};

std::size_t parse_index(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError(what + ": expected a non-negative integer, got '" + s + "'");
  return std::stoul(s);
}

std::vector<std::size_t> parse_index_list(const std::string& s, const std::string& what) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_index(part, what));
  if (out.empty()) throw UsageError(what + ": empty index list");
  return out;
}

Field parse_field(const std::string& s) {
  if (s == "Q") return Field::rationals();
  if (s.size() > 4 && s.rfind("GF(", 0) == 0 && s.back() == ')') {
    try {
      return Field::prime(parse_index(s.substr(3, s.size() - 4), "--field"));
    } catch (const UsageError&) {
      throw;
    } catch (const Error& e) {
      throw UsageError(std::string("--field: ") + e.what());
    }
  }
  throw UsageError("--field: expected Q or GF(p), got '" + s + "'");
}

Json vec_json(const std::vector<std::string>& labels, const Vector& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[labels[i]] = to_json(v[i]);
  return out;
}

Json basis_json(const std::vector<std::string>& labels, const Subspace& s) {
  Json out = Json::array();
  for (const auto& v : s.basis_vectors()) out.push_back(vec_json(labels, v));
  return out;
}

Json series_json(const Series& s) {
  return Json{{"key", s.key}, {"first_stage", s.first_stage}, {"values", s.values}};
}

// Plain-text rendering of a report: nested keys, arrays on one line,
// arrays of arrays as rows.
std::string prim(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  return j.dump();
}

bool is_flat(const Json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

void render(const Json& j, std::ostream& os, std::size_t indent) {
  const std::string pad(indent, ' ');
  for (const auto& [key, v] : j.items()) {
    if (!v.is_structured()) {
      const std::string text = prim(v);
      os << pad << key << ":" << (text.empty() ? "" : " ") << text << "\n";
    } else if (v.is_object()) {
      if (v.empty()) {
        os << pad << key << ": {}\n";
      } else {
        os << pad << key << ":\n";
        render(v, os, indent + 2);
      }
    } else if (is_flat(v)) {
      os << pad << key << ":";
      if (v.empty()) os << " (none)";
      for (const auto& x : v) os << " " << prim(x);
      os << "\n";
    } else {
      os << pad << key << ":\n";
      for (const auto& x : v) {
        if (x.is_array() && is_flat(x)) {
          os << pad << " ";
          for (const auto& y : x) os << " " << prim(y);
          os << "\n";
        } else if (x.is_object()) {
          os << pad << "  -\n";
          render(x, os, indent + 4);
        } else {
          os << pad << "  - " << x.dump() << "\n";
        }
      }
    }
  }
}

class Runner {
 public:
  Runner(const Options& o, std::istream& in) : o_(o), in_(in) {}

  const CoalgebraPtr& coalgebra() {
    if (c_) return c_;
    std::string text;
    if (o_.input == "-") {
      std::ostringstream s;
      s << in_.rdbuf();
      text = s.str();
    } else {
      std::ifstream f(o_.input, std::ios::binary);
      if (!f) throw ParseError("cannot open '" + o_.input + "'");
      std::ostringstream s;
      s << f.rdbuf();
      text = s.str();
    }
    const Json j = parse_json(text);
    // A report carrying a coalgebra (localize) can be piped on.
    const bool wrapped = j.is_object() && j.contains("data") && j["data"].is_object() &&
                         j["data"].contains("coalgebra");
    c_ = share(coalgebra_from_json(wrapped ? j["data"]["coalgebra"] : j, validate_));
    return c_;
  }

  const IdempotentSet& ids() {
    if (!ids_) ids_ = basic_idempotents(coalgebra(), o_.seed);
    return *ids_;
  }

  std::size_t simple_index(std::size_t i) {
    if (i >= ids().size())
      throw UsageError("simple index " + std::to_string(i) + " out of range (" +
                       std::to_string(ids().size()) + " simples)");
    return i;
  }

  Comodule select(const std::string& sel) {
    const CoalgebraPtr& c = coalgebra();
    const auto colon = sel.find(':');
    const std::string kind = sel.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : sel.substr(colon + 1);
    if (kind == "regular" && arg.empty()) return regular_comodule(c);
    if (kind == "radquot" && arg.empty()) return quotient_comodule(regular_comodule(c), coradical(c)).comodule;
    if (kind == "simple") return ids().simples[simple_index(parse_index(arg, "simple"))];
    if (kind == "injective") return injective_indecomposable(c, simple_index(parse_index(arg, "injective")), o_.seed);
    if (kind == "projective") return projective_cover(c, simple_index(parse_index(arg, "projective")), o_.seed).cover;
    if (kind == "file" && !arg.empty()) {
      Comodule m = parse_comodule_file(arg);
      if (!(*m.coalgebra() == *c))
        throw UsageError("comodule file '" + arg + "' is over a different coalgebra");
      // Rebind to the loaded coalgebra so the two compare as the same object.
      return Comodule(c, m.labels(), m.coaction());
    }
    throw UsageError("unknown module selector '" + sel +
                     "' (regular, simple:i, injective:i, projective:i, radquot, file:path)");
  }

  Json instance() {
    const CoalgebraPtr& c = coalgebra();
    Json j;
    j["field"] = c->field().name();
    j["dim"] = c->dim();
    try {
      j["simples"] = ids().size();
    } catch (const NonSplitError&) {
      j["simples"] = nullptr;
    }
    return j;
  }

  void set_validate(bool v) { validate_ = v; }

 private:
  const Options& o_;
  std::istream& in_;
  CoalgebraPtr c_;
  std::shared_ptr<const IdempotentSet> ids_;
  bool validate_ = true;
};

Json bass_json(const std::vector<ExtProfile>& ps, std::optional<std::size_t> only) {
  Json out = Json::array();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (only && *only != i) continue;
    out.push_back({{"simple", i}, {"ext", ps[i].ext}, {"bass", ps[i].bass}, {"hom_ss", ps[i].hom_ss}});
  }
  return out;
}

Json verdict_json(const TowerVerdict& v) {
  Json out = Json::array();
  for (const auto& p : v.properties) {
    Json j{{"property", p.property}, {"status", std::string(to_string(p.status))}};
    j["witness"] = p.witness ? series_json(*p.witness) : Json(nullptr);
    j["note"] = p.note;
    Json ev = Json::array();
    for (const auto& s : p.evidence) ev.push_back(series_json(s));
    j["evidence"] = std::move(ev);
    out.push_back(std::move(j));
  }
  return out;
}

Coalgebra generate(const Options& o) {
  const Field f = parse_field(o.field);
  auto need = [&](std::size_t n) {
    if (o.params.size() != n)
      throw UsageError("gen " + o.name + ": expected " + std::to_string(n) + " parameter(s)");
  };
  auto p = [&](std::size_t i) { return parse_index(o.params[i], "gen " + o.name); };
  if (o.name == "example1") { need(1); return gen_example1(p(0), f); }
  if (o.name == "kx") { need(1); return gen_kx_truncated(p(0), f); }
  if (o.name == "gd") { need(1); return gen_gd(p(0), f); }
  if (o.name == "matrix") { need(1); return gen_matrix_coalgebra(p(0), f); }
  if (o.name == "example2") {
    if (o.params.empty()) throw UsageError("gen example2: expected at least one dimension");
    std::vector<std::size_t> ds;
    for (std::size_t i = 0; i < o.params.size(); ++i) ds.push_back(p(i));
    return gen_example2(ds, f);
  }
  if (o.name == "random") {
    need(4);
    return gen_random(p(0), p(1), p(2), p(3), f);
  }
  throw UsageError("gen: unknown generator '" + o.name +
                   "' (example1, example2, kx, gd, matrix, random)");
}

using Command = std::function<Json(Runner&, const Options&)>;

Json cmd_validate(Runner& r, const Options&) {
  r.set_validate(false);
  const CoalgebraPtr& c = r.coalgebra();
  if (auto v = validate_coalgebra(*c))
    throw Verdict{"violation", v->to_string(),
                  Json{{"identity", v->identity}, {"label", v->label}, {"detail", v->detail}}};
  if (auto v = validate_algebra(dual_algebra(*c)))
    throw Verdict{"violation", "dual algebra: " + v->to_string(),
                  Json{{"identity", v->identity}, {"label", v->label}, {"detail", v->detail}}};
  return Json{{"coalgebra", "ok"}, {"dual_algebra", "ok"}};
}

Json cmd_info(Runner& r, const Options&) {
  const CoalgebraPtr& c = r.coalgebra();
  Json d;
  d["labels"] = c->labels();
  d["cocommutative"] = is_cocommutative(*c);
  const Subspace c0 = coradical(c);
  d["coradical_dim"] = c0.dim();
  Json filt = Json::array();
  for (const auto& s : coradical_filtration(c)) filt.push_back(s.dim());
  d["coradical_filtration_dims"] = std::move(filt);
  const auto& ids = r.ids();
  Json sd = Json::array();
  bool pointed = true;
  for (const auto& s : ids.simples) {
    sd.push_back(s.dim());
    pointed = pointed && s.dim() == 1;
  }
  d["simple_dims"] = std::move(sd);
  d["pointed"] = pointed;
  d["colocal"] = ids.size() == 1;
  d["cosemisimple"] = c0.dim() == c->dim();
  return d;
}

Json cmd_simples(Runner& r, const Options&) {
  const CoalgebraPtr& c = r.coalgebra();
  const auto& ids = r.ids();
  const Comodule reg = regular_comodule(c);
  Json out = Json::array();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    Json s;
    s["index"] = i;
    s["key"] = c->label(ids.simple_subspaces[i].pivots().front());
    s["dim"] = ids.simples[i].dim();
    s["end_dim"] = endomorphism_algebra(ids.simples[i]).dim();
    s["right_dim"] = rank(reg.action_matrix(ids.idempotents[i]));
    s["hull_dim"] = ids.hull_subspaces[i].dim();
    s["basis"] = basis_json(c->labels(), ids.simple_subspaces[i]);
    out.push_back(std::move(s));
  }
  return Json{{"simples", std::move(out)}};
}

Json cmd_idempotents(Runner& r, const Options&) {
  const CoalgebraPtr& c = r.coalgebra();
  std::vector<std::string> dual;
  for (const auto& l : c->labels()) dual.push_back(l + "*");
  Json out = Json::array();
  for (std::size_t i = 0; i < r.ids().size(); ++i)
    out.push_back({{"index", i}, {"coordinates", vec_json(dual, r.ids().idempotents[i])}});
  return Json{{"idempotents", std::move(out)}};
}

Json cmd_socle(Runner& r, const Options& o) {
  const Comodule m = r.select(o.module);
  const Subspace s = socle(m);
  return Json{{"module", o.module}, {"module_dim", m.dim()}, {"dim", s.dim()},
              {"basis", basis_json(m.labels(), s)}};
}

Json cmd_loewy(Runner& r, const Options& o) {
  const Comodule m = r.select(o.module);
  const LoewySeries l = loewy_series(m);
  return Json{{"module", o.module}, {"dims", l.dims}, {"layer_dims", l.layer_dims()}};
}

Json cmd_coradical(Runner& r, const Options&) {
  const CoalgebraPtr& c = r.coalgebra();
  const Subspace c0 = coradical(c);
  Json filt = Json::array();
  for (const auto& s : coradical_filtration(c)) filt.push_back(s.dim());
  return Json{{"dim", c0.dim()}, {"basis", basis_json(c->labels(), c0)},
              {"filtration_dims", std::move(filt)}};
}

Subspace label_span(const Coalgebra& c, const std::string& list) {
  std::vector<Vector> vs;
  std::stringstream ss(list);
  std::string l;
  while (std::getline(ss, l, ',')) {
    auto i = c.index_of(l);
    if (!i) throw UsageError("unknown basis label '" + l + "'");
    vs.push_back(unit_vector(c.dim(), *i, c.field()));
  }
  return Subspace::span(c.dim(), c.field(), vs);
}

Json cmd_wedge(Runner& r, const Options& o) {
  const CoalgebraPtr& c = r.coalgebra();
  const Subspace a = o.wedge_a.empty() ? coradical(c) : label_span(*c, o.wedge_a);
  const Subspace b = o.wedge_b.empty() ? coradical(c) : label_span(*c, o.wedge_b);
  const Subspace w = wedge(*c, a, b);
  return Json{{"a_dim", a.dim()}, {"b_dim", b.dim()}, {"dim", w.dim()},
              {"basis", basis_json(c->labels(), w)}};
}

std::vector<std::size_t> torsion_of(Runner& r, const std::vector<std::size_t>& kept) {
  std::vector<std::size_t> torsion;
  for (auto k : kept) r.simple_index(k);
  for (std::size_t i = 0; i < r.ids().size(); ++i)
    if (std::find(kept.begin(), kept.end(), i) == kept.end()) torsion.push_back(i);
  return torsion;
}

Json cmd_localize(Runner& r, const Options& o) {
  if (o.at.empty()) throw UsageError("localize: --at is required");
  const auto kept = parse_index_list(o.at, "--at");
  const auto ctx = build_context(r.coalgebra(), torsion_of(r, kept), o.seed);
  Json d;
  d["kept"] = ctx.spec.kept;
  d["torsion"] = ctx.spec.torsion;
  d["dim"] = ctx.local->dim();
  d["ec_dim"] = ctx.ec_subspace.dim();
  d["ce_dim"] = ctx.ce_subspace.dim();
  if (!o.local_module.empty()) {
    const Comodule m = r.select(o.local_module);
    d["module"] = o.local_module;
    d["module_dim"] = m.dim();
    d["localized_dim"] = localize_comodule(ctx, m).dim();
  }
  d["coalgebra"] = to_json(*ctx.local);
  return d;
}

Json cmd_cotensor(Runner& r, const Options& o) {
  const Comodule x = r.select(o.module);
  Json d{{"module", o.module}, {"left", o.left}};
  if (o.left == "regular") {
    d["dim"] = cotensor(x, regular_left_comodule(r.coalgebra())).dim();
  } else if (o.left.rfind("eC:", 0) == 0) {
    const auto kept = parse_index_list(o.left.substr(3), "--left");
    const auto ctx = build_context(r.coalgebra(), torsion_of(r, kept), o.seed);
    d["dim"] = cotensor(x, ctx.ec_left).dim();
    d["localized_dim"] = localize_comodule(ctx, x).dim();
  } else {
    throw UsageError("unknown left selector '" + o.left + "' (regular, eC:i,j,...)");
  }
  return d;
}

Json cmd_hom(Runner& r, const Options& o) {
  const std::string src = o.source.empty() ? "regular" : o.source;
  const std::string tgt = o.target.empty() ? "regular" : o.target;
  return Json{{"source", src}, {"target", tgt},
              {"dim", hom_space(r.select(src), r.select(tgt)).size()}};
}

Json cmd_ext(Runner& r, const Options& o) {
  const std::string src = o.source.empty() ? "simple:0" : o.source;
  const std::string tgt = o.target.empty() ? "simple:0" : o.target;
  const Comodule n = r.select(src), m = r.select(tgt);
  const Resolution res = minimal_injective_resolution(m, o.depth, o.seed, o.cap);
  Json d{{"source", src}, {"target", tgt}, {"depth", res.depth}, {"ext", ext_from_resolution(n, res)}};
  if (o.oracle) {
    const auto orc = cstar_ext_oracle(n, m, res.depth, o.seed);
    d["oracle"] = orc;
    if (orc != d["ext"].get<std::vector<std::size_t>>())
      throw Verdict{"mismatch", "injective and C* resolutions disagree", d};
  }
  return d;
}

Json cmd_resolve(Runner& r, const Options& o) {
  const Comodule m = r.select(o.module);
  const Resolution res = minimal_injective_resolution(m, o.depth, o.seed, o.cap);
  Json terms = Json::array(), cok = Json::array();
  for (const auto& t : res.terms) terms.push_back(t.dim());
  for (const auto& k : res.cokernels) cok.push_back(k.dim());
  Json d{{"module", o.module}, {"depth", res.depth}, {"term_dims", std::move(terms)},
         {"cokernel_dims", std::move(cok)}, {"multiplicities", res.multiplicities}};
  if (auto bad = verify_resolution(res)) throw Verdict{"violation", *bad, d};
  d["verified"] = true;
  return d;
}

Json cmd_bass(Runner& r, const Options& o) {
  std::string sel = o.module;
  if (sel == "regular" && o.simple) sel = "simple:" + std::to_string(*o.simple);
  if (o.simple) r.simple_index(*o.simple);
  const Comodule m = r.select(sel);
  const Resolution res = minimal_injective_resolution(m, o.depth, o.seed, o.cap);
  return Json{{"module", sel}, {"depth", res.depth}, {"profiles", bass_json(bass_numbers(res), o.simple)}};
}

Json cmd_eiej(Runner& r, const Options& o) {
  const auto t = eiej_matrix(r.coalgebra(), o.seed);
  return Json{{"matrix", t}};
}

Json cmd_hereditary(Runner& r, const Options& o) {
  const auto v = hereditary_check(r.coalgebra(), o.guard, o.seed);
  return Json{{"hereditary", v.hereditary}, {"ext2", v.ext2}};
}

Json cmd_report(Runner& r, const Options& o) {
  Json d = cmd_info(r, o);
  d["eiej"] = eiej_matrix(r.coalgebra(), o.seed);
  d["loewy_dims"] = loewy_series(regular_comodule(r.coalgebra())).dims;
  const auto div = colocal_division_check(r.coalgebra(), o.seed);
  d["colocal_division"] = div;
  const auto h = hereditary_check(r.coalgebra(), o.guard, o.seed);
  d["hereditary"] = h.hereditary;
  d["ext2"] = h.ext2;
  Json bass = Json::array();
  for (std::size_t j = 0; j < r.ids().size(); ++j) {
    const Resolution res =
        minimal_injective_resolution(r.ids().simples[j], o.depth, o.seed, o.cap ? o.cap : 200);
    bass.push_back({{"target", j}, {"depth", res.depth}, {"profiles", bass_json(bass_numbers(res), std::nullopt)}});
  }
  d["bass"] = std::move(bass);
  return d;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"Exact computations with finite-dimensional coalgebras and comodules", "coloc"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "machine"}));
  app.add_option("-i,--in", o.input, "Coalgebra file, '-' for standard input");
  app.add_option("--seed", o.seed, "Seed for randomized searches");

  std::vector<std::pair<CLI::App*, Command>> cmds;
  auto add = [&](const char* name, const char* help, Command f) {
    CLI::App* s = app.add_subcommand(name, help);
    cmds.emplace_back(s, std::move(f));
    return s;
  };
  const char* sel_help = "regular | simple:i | injective:i | projective:i | radquot | file:path";
  add("validate", "Check the coalgebra and dual algebra axioms", cmd_validate);
  add("info", "Dimensions, coradical and simple count", cmd_info);
  add("simples", "The simple comodules S_i", cmd_simples);
  add("idempotents", "The basic idempotents on the dual basis", cmd_idempotents);
  add("socle", "Socle of a comodule", cmd_socle)->add_option("--module", o.module, sel_help);
  add("loewy", "Loewy series of a comodule", cmd_loewy)->add_option("--module", o.module, sel_help);
  add("coradical", "Coradical and coradical filtration", cmd_coradical);
  {
    auto* s = add("wedge", "Wedge of two subcoalgebras (default C_0 and C_0)", cmd_wedge);
    s->add_option("--a", o.wedge_a, "Comma-separated basis labels spanning A");
    s->add_option("--b", o.wedge_b, "Comma-separated basis labels spanning B");
  }
  {
    auto* s = add("localize", "The localized coalgebra eCe", cmd_localize);
    s->add_option("--at", o.at, "Kept simple index or comma-separated set")->required();
    s->add_option("--module", o.local_module, sel_help);
  }
  {
    auto* s = add("cotensor", "Dimension of M cotensor a left comodule", cmd_cotensor);
    s->add_option("--module", o.module, sel_help);
    s->add_option("--left", o.left, "regular | eC:i,j,...");
  }
  {
    auto* s = add("hom", "Dimension of Hom(N, M)", cmd_hom);
    s->add_option("--source", o.source, sel_help);
    s->add_option("--target", o.target, sel_help);
  }
  {
    auto* s = add("ext", "dim Ext^n(N, M) for n <= depth", cmd_ext);
    s->add_option("--source", o.source, sel_help);
    s->add_option("--target", o.target, sel_help);
    s->add_option("--depth", o.depth, "Resolution depth");
    s->add_option("--cap", o.cap, "Stop before a cokernel above this dimension (0: none)");
    s->add_flag("--oracle", o.oracle, "Compare with the C* projective resolution");
  }
  {
    auto* s = add("resolve", "Minimal injective resolution", cmd_resolve);
    s->add_option("--module", o.module, sel_help);
    s->add_option("--depth", o.depth, "Resolution depth");
    s->add_option("--cap", o.cap, "Stop before a cokernel above this dimension (0: none)");
  }
  {
    auto* s = add("bass", "Bass numbers of a comodule", cmd_bass);
    s->add_option("--module", o.module, sel_help);
    s->add_option("--simple", o.simple, "Only this simple; also the default module");
    s->add_option("--depth", o.depth, "Resolution depth");
    s->add_option("--cap", o.cap, "Stop before a cokernel above this dimension (0: none)");
  }
  add("eiej", "Table of dim e_i C e_j", cmd_eiej);
  add("hereditary", "Ext^2 between simples", cmd_hereditary)
      ->add_option("--guard", o.guard, "Depth guard (at least 2)");
  CLI::App* gen = app.add_subcommand("gen", "Write a catalog coalgebra");
  gen->add_option("name", o.name, "example1 | example2 | kx | gd | matrix | random")->required();
  gen->add_option("params", o.params, "Generator parameters");
  gen->add_option("--out", o.out_path, "Write to this file instead of standard output");
  gen->add_option("--field", o.field, "Q or GF(p)");
  CLI::App* tower = app.add_subcommand("tower", "Tower of truncations and its verdicts");
  tower->add_option("family", o.name, "kx | gd | example2")->required();
  tower->add_option("--horizon", o.horizon, "Last stage index")->required();
  tower->add_option("--dims", o.dims, "example2 dimensions");
  tower->add_option("--field", o.field, "Q or GF(p)");
  tower->add_flag("--classify", o.classify, "Compute verdicts");
  {
    auto* s = add("report", "Summary of the standard invariants", cmd_report);
    s->add_option("--depth", o.depth, "Bass number depth");
    s->add_option("--cap", o.cap, "Cokernel cap for the Bass numbers (default 200)");
    s->add_option("--guard", o.guard, "Hereditary depth guard");
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  std::string command;
  for (const auto* s : app.get_subcommands()) command = s->get_name();
  Json report;
  report["command"] = command;
  report["args"] = args;
  Runner runner(o, in);
  auto emit = [&]() {
    if (o.format == "machine") {
      out << dump(report);
    } else {
      render(report, out, 0);
    }
  };

  try {
    if (gen->parsed()) {
      const Coalgebra c = generate(o);
      if (o.out_path.empty()) {
        out << dump(to_json(c));
        return kExitOk;
      }
      std::ofstream f(o.out_path, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + o.out_path + "'");
      f << dump(to_json(c));
      report["data"] = Json{{"path", o.out_path}, {"dim", c.dim()}};
      report["status"] = "ok";
      emit();
      return kExitOk;
    }
    if (tower->parsed()) {
      const Tower t = build_tower(parse_tower_family(o.name), o.horizon, o.dims, parse_field(o.field));
      Json d;
      d["name"] = t.name;
      d["horizon"] = t.horizon();
      Json dims = Json::array();
      for (const auto& s : t.stages) dims.push_back(s->dim());
      d["stage_dims"] = std::move(dims);
      if (o.classify) d["verdicts"] = verdict_json(tower_classify(t, o.seed));
      report["status"] = "ok";
      report["data"] = std::move(d);
      emit();
      return kExitOk;
    }
    for (auto& [sub, f] : cmds) {
      if (!sub->parsed()) continue;
      try {
        Json data = f(runner, o);
        report["instance"] = runner.instance();
        report["status"] = "ok";
        report["data"] = std::move(data);
        emit();
        return kExitOk;
      } catch (const Verdict& v) {
        report["status"] = v.status;
        report["message"] = v.message;
        report["data"] = v.data;
      } catch (const NonSplitError& e) {
        report["status"] = "non-split";
        report["message"] = e.what();
        report["data"] = Json{{"minimal_polynomial", e.minimal_polynomial}};
      } catch (const RadicalVerificationError& e) {
        report["status"] = "radical-unverified";
        report["message"] = e.what();
      } catch (const BassMismatch& e) {
        report["status"] = "mismatch";
        report["message"] = e.what();
      } catch (const ValidationError& e) {
        report["status"] = "violation";
        report["message"] = e.what();
      } catch (const InternalError& e) {
        report["status"] = "internal-error";
        report["message"] = e.what();
      }
      emit();
      err << "coloc " << command << ": " << report["status"].get<std::string>() << ": "
          << report["message"].get<std::string>() << "\n";
      return kExitVerdict;
    }
  } catch (const ValidationError& e) {
    // Only reachable from gen and tower, whose inputs are generated.
    err << "error: " << e.what() << "\n";
    return kExitVerdict;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  err << "error: no subcommand\n";
  return kExitUsage;
}

}  // namespace coloc
