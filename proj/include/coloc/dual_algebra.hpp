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

// The convolution algebra C* and the data derived from it: Jacobson
// radical, coradical, a basic set of primitive idempotents and the simple
// comodules they single out.
//
// Conventions. Functionals are coordinate vectors on the dual basis c_i*.
// A right comodule is a left C*-module through f . m = sum m_0 f(m_1), and
// C is a left comodule, hence a right C*-module, through
// c <- f = sum f(c_1) c_2. So Ce = C <- e.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "coloc/coalgebra.hpp"
#include "coloc/poly.hpp"

namespace coloc {

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

/// Finite-dimensional associative algebra with a fixed basis b_0..b_{n-1}.
class Algebra {
 public:
  /// products[i][j] is b_i b_j.
  Algebra(Field f, std::vector<std::vector<SparseVector>> products, Vector unit);

  Field field() const { return field_; }
  std::size_t dim() const { return unit_.size(); }
  const Vector& unit() const { return unit_; }
  const SparseVector& product(std::size_t i, std::size_t j) const { return products_[i][j]; }

  Vector multiply(std::span<const Scalar> x, std::span<const Scalar> y) const;
  /// Matrix of y -> x y.
  Matrix left_matrix(std::span<const Scalar> x) const;
  /// Matrix of y -> y x.
  Matrix right_matrix(std::span<const Scalar> x) const;
  Vector basis_element(std::size_t i) const { return unit_vector(dim(), i, field_); }

 private:
  Field field_;
  std::vector<std::vector<SparseVector>> products_;
  Vector unit_;
};

/// Associativity on basis triples and the two unit laws.
std::optional<Violation> validate_algebra(const Algebra& a);

/// C* on the dual basis; the unit is the counit.
Algebra dual_algebra(const Coalgebra& c);
/// (f * g)(c_i) = sum over delta(c_i) of f(c_first) g(c_second).
Vector convolve(const Coalgebra& c, std::span<const Scalar> f, std::span<const Scalar> g);
/// f . v = sum v_0 f(v_1).
Vector cstar_action(const Comodule& m, std::span<const Scalar> f, std::span<const Scalar> v);
/// c <- f = sum f(c_1) c_2, the right action on C.
Vector right_action(const Coalgebra& c, std::span<const Scalar> f, std::span<const Scalar> v);
/// Matrix of c -> c <- f.
Matrix right_action_matrix(const Coalgebra& c, std::span<const Scalar> f);

/// Radical together with its certificate data.
struct Radical {
  Subspace ideal;
  /// Least k with J^k = 0.
  std::size_t nilpotency = 0;
};

/// Kernel of the trace form Tr(L_xy), accepted only after verifying that it
/// is a nilpotent two-sided ideal whose quotient has a nondegenerate trace
/// form (which makes it the radical in every characteristic). Throws
/// RadicalVerificationError otherwise.
Radical jacobson_radical(const Algebra& a);

/// A / J with basis the non-pivot coordinates of J.
struct QuotientAlgebra {
  Algebra algebra;
  Subspace kernel;
  std::vector<std::size_t> positions;  // chosen coordinates of A

  Vector project(std::span<const Scalar> x) const;
  /// Representative with zeros at the pivots of J.
  Vector lift(std::span<const Scalar> y) const;
};
QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal);

/// Minimal polynomial of x in the corner algebra with identity u (x = u x u).
Poly minimal_polynomial(const Algebra& a, std::span<const Scalar> x,
                        std::span<const Scalar> u);
Vector evaluate(const Algebra& a, const Poly& p, std::span<const Scalar> x,
                std::span<const Scalar> u);
Subspace center(const Algebra& a);
/// dim u A u.
std::size_t corner_dim(const Algebra& a, std::span<const Scalar> u);

/// Per-coalgebra data computed once and shared.
struct DualStructure {
  Algebra algebra;
  Radical radical;
  /// J-perp inside C.
  Subspace coradical;
};

std::shared_ptr<const DualStructure> dual_structure(const CoalgebraPtr& c);

/// Annihilator of x in M* (dual-basis coordinates).
Subspace perp(const Comodule& m, const Subspace& x);
Subspace coradical(const CoalgebraPtr& c);

inline constexpr std::uint64_t kDefaultSeed = 20261014;

/// A basic set of primitive orthogonal idempotents with the matching simple
/// comodules S_i = soc(Ce_i). Index i is ordered by the pivot columns of
/// S_i inside C (ties broken by the reduced bases).
struct IdempotentSet {
  Field field;
  std::vector<Vector> idempotents;
  std::vector<Subspace> simple_subspaces;  // S_i as subspaces of C
  std::vector<Subspace> hull_subspaces;    // Ce_i as subspaces of C
  std::vector<Comodule> simples;

  std::size_t size() const { return idempotents.size(); }
  /// Sum of e_i over the given indices (zero for an empty list).
  Vector sum(const std::vector<std::size_t>& indices) const;
};

/// Throws NonSplitError when the semisimple quotient does not split.
std::shared_ptr<const IdempotentSet> basic_idempotents(const CoalgebraPtr& c,
                                                       std::uint64_t seed = kDefaultSeed);
std::vector<Comodule> simple_comodules(const CoalgebraPtr& c,
                                       std::uint64_t seed = kDefaultSeed);

/// The index i with e_i . S != 0 for a simple comodule S.
std::size_t simple_type(const IdempotentSet& ids, const Comodule& simple);

/// Complement data for a set J of simple indices: e = sum over i not in J.
struct TorsionSpec {
  std::vector<std::size_t> torsion;  // J, sorted
  std::vector<std::size_t> kept;     // complement of J, sorted
  Vector idempotent;                 // e
};
TorsionSpec torsion_spec(const IdempotentSet& ids, std::vector<std::size_t> torsion);

}  // namespace coloc
