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

// Coalgebra and comodule files.
//
//   {"field": "Q" | {"GF": p},
//    "basis": [label, ...],
//    "delta": {label: [[coef, left, right], ...]},
//    "counit": {label: coef}}
//
// Coefficients are "a/b" strings over Q (lowest terms) and decimal integers
// over GF(p); integers are accepted for Q and strings for GF(p) on input.
// Missing delta or counit entries are zero. A comodule file replaces delta
// and counit by "rho" (triples [coef, module label, coalgebra label]) and
// adds "coalgebra", either an inline coalgebra object or a path relative to
// the comodule file.

#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "coloc/coalgebra.hpp"

namespace coloc {

using Json = nlohmann::ordered_json;

/// Throws ParseError on malformed text ("line L, column C: ...") or content
/// ("delta.x1[0]: ..."). With validate set, a failed axiom raises
/// ValidationError naming the identity and basis element.
Coalgebra parse_coalgebra(std::string_view text, bool validate = true);
Coalgebra coalgebra_from_json(const Json& j, bool validate = true);
Coalgebra parse_coalgebra_file(const std::string& path, bool validate = true);

/// base_dir resolves a "coalgebra" given as a path.
Comodule parse_comodule(std::string_view text, const std::string& base_dir = ".",
                        bool validate = true);
Comodule comodule_from_json(const Json& j, const std::string& base_dir = ".",
                            bool validate = true);
Comodule parse_comodule_file(const std::string& path, bool validate = true);

Json to_json(const Coalgebra& c);
Json to_json(const Comodule& m);
/// Q as a string, GF(p) as an integer.
Json to_json(const Scalar& s);
Json field_to_json(Field f);

/// Two-space indentation and a trailing newline.
std::string dump(const Json& j);

/// Raw JSON text with positioned syntax errors.
Json parse_json(std::string_view text);

}  // namespace coloc
