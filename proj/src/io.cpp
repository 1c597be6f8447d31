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

#include "coloc/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "coloc/error.hpp"

namespace coloc {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Field field_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "Q") return Field::rationals();
    throw ParseError("field: unknown field tag '" + j.get<std::string>() + "'");
  }
  if (j.is_object() && j.size() == 1 && j.contains("GF")) {
    const Json& p = j["GF"];
    if (!p.is_number_integer() || p.get<std::int64_t>() < 2)
      throw ParseError("field: GF needs an integer characteristic");
    try {
      return Field::prime(p.get<std::uint64_t>());
    } catch (const Error& e) {
      throw ParseError(std::string("field: ") + e.what());
    }
  }
  throw ParseError("field: unknown field tag " + j.dump());
}

Scalar scalar_from_json(Field f, const Json& j, const std::string& where) {
  try {
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    if (j.is_number_integer()) return Scalar::parse(f, j.dump());
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.what());
  }
  throw ParseError(where + ": malformed scalar " + j.dump());
}

const Json& member(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j[key];
}

std::vector<std::string> read_basis(const Json& j, const char* what) {
  const Json& b = member(j, "basis");
  if (!b.is_array()) throw ParseError("basis: expected an array of labels");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_string()) throw ParseError("basis[" + std::to_string(i) + "]: expected a string");
    labels.push_back(b[i].get<std::string>());
  }
  if (labels.empty()) throw ParseError(std::string(what) + " must have dimension ≥ 1");
  return labels;
}

std::size_t lookup(const std::map<std::string, std::size_t>& index, const Json& label,
                   const std::string& where) {
  if (!label.is_string()) throw ParseError(where + ": expected a label");
  auto it = index.find(label.get<std::string>());
  if (it == index.end()) throw ParseError(where + ": unknown label '" + label.get<std::string>() + "'");
  return it->second;
}

std::map<std::string, std::size_t> index_of(const std::vector<std::string>& labels) {
  std::map<std::string, std::size_t> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (!out.emplace(labels[i], i).second)
      throw ParseError("basis: duplicate label '" + labels[i] + "'");
  return out;
}

// "key": {label: [[coef, a, b], ...]} into expansions indexed by label.
std::vector<Expansion> read_triples(const Json& j, const char* key, Field f,
                                    const std::map<std::string, std::size_t>& rows,
                                    const std::map<std::string, std::size_t>& first,
                                    const std::map<std::string, std::size_t>& second) {
  std::vector<Expansion> out(rows.size());
  if (!j.contains(key)) return out;
  const Json& d = j[key];
  if (!d.is_object()) throw ParseError(std::string(key) + ": expected an object");
  for (const auto& [label, terms] : d.items()) {
    const std::string where = std::string(key) + "." + label;
    auto row = rows.find(label);
    if (row == rows.end()) throw ParseError(where + ": unknown label '" + label + "'");
    if (!terms.is_array()) throw ParseError(where + ": expected an array of triples");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string w = where + "[" + std::to_string(t) + "]";
      const Json& tr = terms[t];
      if (!tr.is_array() || tr.size() != 3) throw ParseError(w + ": expected [coef, label, label]");
      Scalar coef = scalar_from_json(f, tr[0], w);
      if (coef.is_zero()) continue;
      out[row->second].push_back({std::move(coef), lookup(first, tr[1], w), lookup(second, tr[2], w)});
    }
  }
  return out;
}

Json triples_to_json(const std::vector<Expansion>& exps, const std::vector<std::string>& rows,
                     const std::vector<std::string>& first, const std::vector<std::string>& second) {
  Json out = Json::object();
  for (std::size_t i = 0; i < exps.size(); ++i) {
    Json terms = Json::array();
    for (const auto& t : exps[i]) terms.push_back({to_json(t.coef), first[t.first], second[t.second]});
    out[rows[i]] = std::move(terms);
  }
  return out;
}

}  // namespace

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    // Strip the library's own "[json.exception...] parse error at ...:" prefix.
    std::string msg = e.what();
    if (auto p = msg.find(": syntax error"); p != std::string::npos) msg = msg.substr(p + 2);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }
}

Json to_json(const Scalar& s) {
  if (s.field().is_rational()) return s.to_string();
  return s.residue();
}

Json field_to_json(Field f) {
  if (f.is_rational()) return "Q";
  return Json{{"GF", f.characteristic()}};
}

namespace {

// Arrays without nested containers stay on one line.
void dump_to(const Json& j, std::string& out, std::size_t indent) {
  auto flat = [](const Json& a) {
    for (const auto& x : a)
      if (x.is_structured()) return false;
    return true;
  };
  if (!j.is_structured()) {
    out += j.dump();
    return;
  }
  if (j.empty()) {
    out += j.is_array() ? "[]" : "{}";
    return;
  }
  if (j.is_array() && flat(j)) {
    out += "[";
    bool first = true;
    for (const auto& x : j) {
      out += first ? "" : ", ";
      out += x.dump();
      first = false;
    }
    out += "]";
    return;
  }
  const std::string pad(indent + 2, ' ');
  out += j.is_array() ? "[\n" : "{\n";
  bool first = true;
  for (const auto& [key, v] : j.items()) {
    if (!first) out += ",\n";
    first = false;
    out += pad;
    if (j.is_object()) out += Json(key).dump() + ": ";
    dump_to(v, out, indent + 2);
  }
  out += "\n" + std::string(indent, ' ') + (j.is_array() ? "]" : "}");
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  dump_to(j, out, 0);
  return out + "\n";
}

Coalgebra coalgebra_from_json(const Json& j, bool validate) {
  if (!j.is_object()) throw ParseError("expected a coalgebra object");
  const Field f = field_from_json(member(j, "field"));
  auto labels = read_basis(j, "coalgebra");
  const auto index = index_of(labels);
  auto delta = read_triples(j, "delta", f, index, index, index);
  Vector counit(labels.size(), Scalar(f));
  if (j.contains("counit")) {
    const Json& e = j["counit"];
    if (!e.is_object()) throw ParseError("counit: expected an object");
    for (const auto& [label, v] : e.items()) {
      auto it = index.find(label);
      if (it == index.end()) throw ParseError("counit." + label + ": unknown label '" + label + "'");
      counit[it->second] = scalar_from_json(f, v, "counit." + label);
    }
  }
  Coalgebra c(f, std::move(labels), std::move(delta), std::move(counit));
  if (validate)
    if (auto v = validate_coalgebra(c)) throw ValidationError(v->to_string());
  return c;
}

Coalgebra parse_coalgebra(std::string_view text, bool validate) {
  return coalgebra_from_json(parse_json(text), validate);
}

Coalgebra parse_coalgebra_file(const std::string& path, bool validate) {
  return parse_coalgebra(read_file(path), validate);
}

Comodule comodule_from_json(const Json& j, const std::string& base_dir, bool validate) {
  if (!j.is_object()) throw ParseError("expected a comodule object");
  const Json& cj = member(j, "coalgebra");
  CoalgebraPtr c;
  if (cj.is_string()) {
    std::filesystem::path p(cj.get<std::string>());
    if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
    c = share(parse_coalgebra_file(p.string(), validate));
  } else {
    c = share(coalgebra_from_json(cj, validate));
  }
  auto labels = read_basis(j, "comodule");
  const auto index = index_of(labels);
  std::map<std::string, std::size_t> cindex;
  for (std::size_t i = 0; i < c->dim(); ++i) cindex.emplace(c->label(i), i);
  auto rho = read_triples(j, "rho", c->field(), index, index, cindex);
  Comodule m(c, std::move(labels), std::move(rho));
  if (validate)
    if (auto v = validate_comodule(m)) throw ValidationError(v->to_string());
  return m;
}

Comodule parse_comodule(std::string_view text, const std::string& base_dir, bool validate) {
  return comodule_from_json(parse_json(text), base_dir, validate);
}

Comodule parse_comodule_file(const std::string& path, bool validate) {
  const auto dir = std::filesystem::path(path).parent_path().string();
  return parse_comodule(read_file(path), dir.empty() ? "." : dir, validate);
}

Json to_json(const Coalgebra& c) {
  Json j;
  j["field"] = field_to_json(c.field());
  j["basis"] = c.labels();
  j["delta"] = triples_to_json(c.delta(), c.labels(), c.labels(), c.labels());
  Json e = Json::object();
  for (std::size_t i = 0; i < c.dim(); ++i)
    if (!c.counit()[i].is_zero()) e[c.label(i)] = to_json(c.counit()[i]);
  j["counit"] = std::move(e);
  return j;
}

Json to_json(const Comodule& m) {
  Json j;
  j["coalgebra"] = to_json(*m.coalgebra());
  j["basis"] = m.labels();
  j["rho"] = triples_to_json(m.coaction(), m.labels(), m.labels(), m.coalgebra()->labels());
  return j;
}

}  // namespace coloc
