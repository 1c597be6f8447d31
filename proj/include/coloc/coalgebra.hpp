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

// Finite-dimensional coalgebras, right and left comodules, and comodule
// morphisms. Structure constants are stored as sparse term lists:
//
//   Coalgebra:     delta(c_i) = sum coef * c_first (x) c_second
//   Comodule:      rho(m_i)   = sum coef * m_first (x) c_second
//   LeftComodule:  lambda(x_i) = sum coef * c_first (x) x_second
//
// Tensor products are flattened row-major, index(i, j) = i * dim2 + j.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coloc/subspace.hpp"

namespace coloc {

struct Term {
  Scalar coef;
  std::size_t first = 0;
  std::size_t second = 0;

  friend bool operator==(const Term&, const Term&) = default;
};

using Expansion = std::vector<Term>;

/// A failed axiom: which identity, at which basis element.
struct Violation {
  std::string identity;
  std::size_t basis_index = 0;
  std::string label;
  std::string detail;

  std::string to_string() const;
};

class Coalgebra {
 public:
  /// Structural checks only (indices in range, one field, unique labels,
  /// dimension at least one). Axioms are checked by validate_coalgebra.
  Coalgebra(Field f, std::vector<std::string> labels, std::vector<Expansion> delta,
            Vector counit);

  Field field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;
  const Expansion& delta(std::size_t i) const { return delta_.at(i); }
  const std::vector<Expansion>& delta() const { return delta_; }
  const Vector& counit() const { return counit_; }

  /// Delta applied to an arbitrary vector, flattened into C (x) C.
  Vector comultiply(std::span<const Scalar> v) const;

  friend bool operator==(const Coalgebra& a, const Coalgebra& b);

 private:
  Field field_;
  std::vector<std::string> labels_;
  std::vector<Expansion> delta_;
  Vector counit_;
  std::map<std::string, std::size_t> index_;
};

using CoalgebraPtr = std::shared_ptr<const Coalgebra>;

inline CoalgebraPtr share(Coalgebra c) {
  return std::make_shared<const Coalgebra>(std::move(c));
}

/// Coassociativity and both counit laws, checked exactly.
std::optional<Violation> validate_coalgebra(const Coalgebra& c);

/// Right C-comodule.
class Comodule {
 public:
  Comodule(CoalgebraPtr c, std::vector<std::string> labels,
           std::vector<Expansion> coaction);

  const CoalgebraPtr& coalgebra() const { return coalgebra_; }
  Field field() const { return coalgebra_->field(); }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Expansion& coaction(std::size_t i) const { return coaction_.at(i); }
  const std::vector<Expansion>& coaction() const { return coaction_; }

  /// rho(v) = sum_k parts[k] (x) c_k.
  std::vector<Vector> coact(std::span<const Scalar> v) const;
  /// The nonzero parts of coact(v) as (k, parts[k]), k increasing.
  std::vector<std::pair<std::size_t, Vector>> coact_parts(std::span<const Scalar> v) const;
  /// Matrix of the left C*-action f . m = sum m_0 f(m_1).
  Matrix action_matrix(std::span<const Scalar> f) const;

 private:
  CoalgebraPtr coalgebra_;
  std::vector<std::string> labels_;
  std::vector<Expansion> coaction_;
};

bool same_coalgebra(const CoalgebraPtr& a, const CoalgebraPtr& b);
std::optional<Violation> validate_comodule(const Comodule& m);

/// Left C-comodule; lambda(x_i) = sum coef * c_first (x) x_second.
class LeftComodule {
 public:
  LeftComodule(CoalgebraPtr c, std::vector<std::string> labels,
               std::vector<Expansion> coaction);

  const CoalgebraPtr& coalgebra() const { return coalgebra_; }
  Field field() const { return coalgebra_->field(); }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Expansion& coaction(std::size_t i) const { return coaction_.at(i); }
  const std::vector<Expansion>& coaction() const { return coaction_; }

  /// lambda(v) = sum_k c_k (x) parts[k].
  std::vector<Vector> coact(std::span<const Scalar> v) const;
  std::vector<std::pair<std::size_t, Vector>> coact_parts(std::span<const Scalar> v) const;
  /// Matrix of the right C*-action x <- f = sum f(x_{-1}) x_0.
  Matrix action_matrix(std::span<const Scalar> f) const;

 private:
  CoalgebraPtr coalgebra_;
  std::vector<std::string> labels_;
  std::vector<Expansion> coaction_;
};

std::optional<Violation> validate_left_comodule(const LeftComodule& m);

/// Compatibility of a left C-coaction and a right D-coaction on one space:
/// (lambda (x) id) rho = (id (x) rho) lambda.
std::optional<Violation> validate_bicomodule(const LeftComodule& left,
                                             const Comodule& right);

struct ComoduleMorphism {
  Comodule source;
  Comodule target;
  Matrix map;  // target.dim() x source.dim()
};

/// Checks (f (x) id) rho_source = rho_target f.
bool is_comodule_map(const Comodule& source, const Comodule& target,
                     const Matrix& map);
inline bool is_valid(const ComoduleMorphism& f) {
  return is_comodule_map(f.source, f.target, f.map);
}

Comodule regular_comodule(const CoalgebraPtr& c);
/// C as a left comodule over itself.
LeftComodule regular_left_comodule(const CoalgebraPtr& c);

bool is_subcomodule(const Comodule& m, const Subspace& s);
/// The subcomodule s with the rref rows of s as basis. Throws
/// ValidationError when s is not coaction-stable.
Comodule restrict_to(const Comodule& m, const Subspace& s);
ComoduleMorphism inclusion(const Comodule& m, const Subspace& s);
Comodule zero_comodule(const CoalgebraPtr& c);

bool is_left_subcomodule(const LeftComodule& m, const Subspace& s);
LeftComodule restrict_to(const LeftComodule& m, const Subspace& s);

struct Quotient {
  Comodule comodule;
  ComoduleMorphism projection;
};

/// M / s with basis the non-pivot coordinates of s.
Quotient quotient_comodule(const Comodule& m, const Subspace& s);

/// Smallest coaction-stable subspace containing the vectors.
Subspace sub_comodule_generated(const Comodule& m, const std::vector<Vector>& vs);

Comodule direct_sum(const std::vector<Comodule>& ms);
Coalgebra direct_sum_coalgebra(const std::vector<Coalgebra>& cs);

bool is_cocommutative(const Coalgebra& c);
/// Delta(s) is contained in s (x) s.
bool is_subcoalgebra(const Coalgebra& c, const Subspace& s);
/// The subcoalgebra s, basis = rref rows of s.
Coalgebra restrict_coalgebra(const Coalgebra& c, const Subspace& s);

/// Largest coaction-stable subspace contained in s.
Subspace largest_subcomodule_in(const Comodule& m, const Subspace& s);

/// Kernel and image of a comodule map, as subspaces.
Subspace kernel_of(const ComoduleMorphism& f);
Subspace image_of(const ComoduleMorphism& f);

}  // namespace coloc
