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

// Dense univariate polynomials over a Field, with just enough factoring to
// split idempotents: roots over Q and GF(p), gcds, square-free parts.

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coloc/matrix.hpp"

namespace coloc {

/// Coefficients low degree first; the zero polynomial has no coefficients.
class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, Vector coeffs);
  static Poly constant(const Scalar& c);
  static Poly x(Field f);
  /// x - a.
  static Poly linear(const Scalar& a);

  Field field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const Vector& coeffs() const { return c_; }
  Scalar coeff(std::size_t i) const;
  const Scalar& lead() const { return c_.back(); }
  Poly monic() const;
  Scalar eval(const Scalar& x) const;
  Poly derivative() const;
  std::string to_string() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  Field field_;
  Vector c_;
};

/// Quotient and remainder; throws Error on division by zero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
/// Monic gcd (zero if both are zero).
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
  Poly g, s, t;  // s a + t b = g, g monic
};
Xgcd xgcd(const Poly& a, const Poly& b);

/// base^e mod m.
Poly powmod(const Poly& base, const mpz_class& e, const Poly& m);

/// Product of the distinct monic irreducible factors.
Poly squarefree_part(const Poly& p);

/// Distinct roots in the ground field, sorted (by value over Q, by residue
/// over GF(p)).
std::vector<Scalar> roots(const Poly& p);

/// Multiplicity of a as a root of p.
std::size_t root_multiplicity(const Poly& p, const Scalar& a);

}  // namespace coloc
