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

#include "coloc/poly.hpp"

#include <algorithm>
#include <functional>

#include "coloc/error.hpp"

namespace coloc {

Poly::Poly(Field f, Vector coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& s : c_)
    if (s.field() != f) throw FieldMismatch("Poly: coefficient over another field");
  trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }
Poly Poly::x(Field f) { return Poly(f, {Scalar(f), Scalar(f, 1)}); }
Poly Poly::linear(const Scalar& a) { return Poly(a.field(), {-a, Scalar(a.field(), 1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(field_); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Scalar inv = lead().inverse();
  Vector c = c_;
  for (auto& x : c) x *= inv;
  return Poly(field_, std::move(c));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar r(field_);
  for (std::size_t i = c_.size(); i-- > 0;) {
    r *= x;
    r += c_[i];
  }
  return r;
}

Poly Poly::derivative() const {
  Vector d;
  for (std::size_t i = 1; i < c_.size(); ++i)
    d.push_back(c_[i] * Scalar(field_, static_cast<long>(i)));
  return Poly(field_, std::move(d));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    std::string coef = c_[i].to_string();
    const bool neg = field_.is_rational() && coef[0] == '-';
    if (neg) coef.erase(0, 1);
    if (!out.empty()) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    const bool unit = coef == "1";
    if (i == 0) out += coef;
    else {
      if (!unit) out += coef + "*";
      out += i == 1 ? "x" : "x^" + std::to_string(i);
    }
  }
  return out;
}

Poly operator+(const Poly& a, const Poly& b) {
  Vector c(std::max(a.c_.size(), b.c_.size()), Scalar(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Poly(a.field_, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  Vector c(std::max(a.c_.size(), b.c_.size()), Scalar(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Poly(a.field_, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  Vector c(a.c_.size() + b.c_.size() - 1, Scalar(a.field_));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j].addmul(a.c_[i], b.c_[j]);
  return Poly(a.field_, std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error("polynomial division by zero");
  const Field f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  Vector r = a.coeffs();
  Vector q(r.size() - b.coeffs().size() + 1, Scalar(f));
  const Scalar inv = b.lead().inverse();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    const Scalar c = r[k + db] * inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j].submul(c, b.coeffs()[j]);
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  const Field f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Scalar(f, 1)), s1(f);
  Poly t0(f), t1 = Poly::constant(Scalar(f, 1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Poly inv = Poly::constant(r0.lead().inverse());
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly powmod(const Poly& base, const mpz_class& e, const Poly& m) {
  Poly result = Poly::constant(Scalar(base.field(), 1)) % m;
  Poly b = base % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % m;
  }
  return result;
}

namespace {

// p = q(x^ch) in characteristic ch; returns q.
Poly pth_root(const Poly& p, std::uint64_t ch) {
  Vector c;
  for (std::size_t i = 0; i < p.coeffs().size(); i += ch) c.push_back(p.coeffs()[i]);
  // a^(1/p) = a in GF(p).
  return Poly(p.field(), std::move(c));
}

}  // namespace

Poly squarefree_part(const Poly& p) {
  if (p.degree() <= 0) return Poly::constant(Scalar(p.field(), 1));
  const Poly d = p.derivative();
  if (d.is_zero()) return squarefree_part(pth_root(p, p.field().characteristic()));
  const Poly g = gcd(p, d);
  const Poly w = (p / g).monic();
  if (p.field().is_rational()) return w;
  // Factors whose multiplicity is divisible by the characteristic survive
  // only in g.
  const Poly r = squarefree_part(g);
  return (w * r / gcd(w, r)).monic();
}

std::size_t root_multiplicity(const Poly& p, const Scalar& a) {
  if (p.is_zero()) throw Error("root_multiplicity: zero polynomial");
  std::size_t k = 0;
  Poly q = p;
  const Poly lin = Poly::linear(a);
  while (true) {
    auto [d, r] = divmod(q, lin);
    if (!r.is_zero()) return k;
    q = std::move(d);
    ++k;
  }
}

namespace {

int sign(const mpq_class& x) { return sgn(x); }

// Squarefree integer polynomial -> its integer roots, by Sturm counting on
// half-integer endpoints.
std::vector<mpz_class> integer_roots(const std::vector<mpz_class>& g) {
  const Field Q = Field::rationals();
  Vector gc;
  for (const auto& x : g) gc.push_back(Scalar(Q, x));
  const Poly gp(Q, gc);
  std::vector<Poly> sturm{gp, gp.derivative()};
  while (sturm.back().degree() > 0) {
    Poly r = sturm[sturm.size() - 2] % sturm.back();
    if (r.is_zero()) break;
    sturm.push_back(Poly::constant(Scalar(Q, -1)) * r);
  }
  auto variations = [&](const mpq_class& x) {
    int count = 0, last = 0;
    for (const auto& s : sturm) {
      const int sg = sign(s.eval(Scalar(x)).rational());
      if (sg == 0) continue;
      if (last != 0 && sg != last) ++count;
      last = sg;
    }
    return count;
  };
  mpz_class bound = 1;
  for (const auto& x : g) bound = std::max(bound, mpz_class(abs(x)));
  bound += 1;
  std::vector<mpz_class> out;
  const mpq_class half(1, 2);
  // Roots in (lo - 1/2, hi + 1/2].
  std::function<void(const mpz_class&, const mpz_class&, int, int)> search =
      [&](const mpz_class& lo, const mpz_class& hi, int vlo, int vhi) {
        if (vlo - vhi == 0) return;
        if (lo == hi) {
          if (gp.eval(Scalar(mpq_class(lo))).is_zero()) out.push_back(lo);
          return;
        }
        mpz_class mid = lo + (hi - lo) / 2;
        const int vmid = variations(mpq_class(mid) + half);
        search(lo, mid, vlo, vmid);
        search(mid + 1, hi, vmid, vhi);
      };
  search(-bound, bound, variations(mpq_class(-bound) - half),
         variations(mpq_class(bound) + half));
  return out;
}

std::vector<Scalar> rational_roots(const Poly& p) {
  const Poly s = squarefree_part(p);
  const std::size_t n = static_cast<std::size_t>(s.degree());
  if (n == 0) return {};
  mpz_class den = 1;
  for (const auto& c : s.coeffs()) den = lcm(den, mpz_class(c.rational().get_den()));
  std::vector<mpz_class> P;
  for (const auto& c : s.coeffs()) P.push_back(mpz_class(c.rational() * den));
  const mpz_class a = P.back();
  // g(y) = a^(n-1) P(y / a) is monic with integer coefficients, and its
  // roots are a times the roots of P.
  std::vector<mpz_class> g(n + 1);
  mpz_class apow = 1;
  for (std::size_t k = n; k-- > 0;) {
    g[k] = P[k] * apow;
    apow *= a;
  }
  g[n] = 1;
  std::vector<Scalar> out;
  for (const auto& r : integer_roots(g)) out.push_back(Scalar(mpq_class(r, a)));
  std::sort(out.begin(), out.end(),
            [](const Scalar& x, const Scalar& y) { return x.rational() < y.rational(); });
  return out;
}

void split_equal_degree_one(const Poly& g, std::vector<Scalar>& out) {
  const Field f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.monic().coeff(0));
    return;
  }
  const mpz_class e = (mpz_class(std::to_string(f.characteristic())) - 1) / 2;
  for (long a = 1;; ++a) {
    const Poly t = Poly(f, {Scalar(f, a), Scalar(f, 1)});
    const Poly h = gcd(powmod(t, e, g) - Poly::constant(Scalar(f, 1)), g);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      split_equal_degree_one(h, out);
      split_equal_degree_one(g / h, out);
      return;
    }
  }
}

std::vector<Scalar> prime_field_roots(const Poly& p) {
  const Field f = p.field();
  const std::uint64_t ch = f.characteristic();
  std::vector<Scalar> out;
  if (ch <= 4096) {
    for (std::uint64_t r = 0; r < ch; ++r) {
      const Scalar x(f, static_cast<long>(r));
      if (p.eval(x).is_zero()) out.push_back(x);
    }
    return out;
  }
  const Poly m = p.monic();
  const mpz_class pm(std::to_string(ch));
  const Poly g = gcd(powmod(Poly::x(f), pm, m) - Poly::x(f), m);
  split_equal_degree_one(g, out);
  std::sort(out.begin(), out.end(),
            [](const Scalar& x, const Scalar& y) { return x.residue() < y.residue(); });
  return out;
}

}  // namespace

std::vector<Scalar> roots(const Poly& p) {
  if (p.is_zero()) throw Error("roots: zero polynomial");
  return p.field().is_rational() ? rational_roots(p) : prime_field_roots(p);
}

}  // namespace coloc
