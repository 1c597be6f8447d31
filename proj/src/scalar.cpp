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

#include "coloc/scalar.hpp"

#include <cctype>

#include "coloc/error.hpp"

namespace coloc {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce(const mpz_class& z, std::uint64_t p) {
  mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
  if (r < 0) r += static_cast<unsigned long>(p);
  return r.get_ui();
}

bool is_decimal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit integers.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (std::uint64_t{1} << 62) || !is_prime(p))
    throw Error("field characteristic " + std::to_string(p) +
                " is not a supported prime");
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(Field f, long value) : field_(f) {
  if (f.is_rational())
    q_ = value;
  else
    r_ = reduce(mpz_class(value), f.characteristic());
}

Scalar::Scalar(Field f, const mpz_class& value) : field_(f) {
  if (f.is_rational())
    q_ = mpq_class(value);
  else
    r_ = reduce(value, f.characteristic());
}

Scalar::Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Scalar Scalar::parse(Field f, std::string_view text) {
  const std::string s(text);
  if (!f.is_rational()) {
    if (!is_decimal(s)) throw ParseError("malformed scalar '" + s + "'");
    return Scalar(f, mpz_class(s[0] == '+' ? s.substr(1) : s));
  }
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_decimal(s)) throw ParseError("malformed scalar '" + s + "'");
    return Scalar(mpq_class(mpz_class(s[0] == '+' ? s.substr(1) : s)));
  }
  const std::string num = s.substr(0, slash);
  const std::string den = s.substr(slash + 1);
  if (!is_decimal(num) || den.empty() || !is_decimal(den) || den[0] == '-' ||
      den[0] == '+')
    throw ParseError("malformed scalar '" + s + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in scalar '" + s + "'");
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (g != 1 && n != 0)
    throw ParseError("scalar '" + s + "' is not in lowest terms");
  if (n == 0 && d != 1)
    throw ParseError("scalar '" + s + "' is not in lowest terms");
  return Scalar(mpq_class(n, d));
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? sgn(q_) == 0 : r_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? q_ == 1 : r_ == 1;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

void Scalar::check(const Scalar& o) const {
  if (!(field_ == o.field_))
    throw FieldMismatch("mixed fields: " + field_.name() + " and " +
                        o.field_.name());
}

Scalar Scalar::operator-() const {
  Scalar r(*this);
  if (field_.is_rational())
    r.q_ = -q_;
  else if (r_ != 0)
    r.r_ = field_.characteristic() - r_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    q_ += o.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + o.r_) % p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check(o);
  if (field_.is_rational()) {
    q_ -= o.q_;
  } else {
    const std::uint64_t p = field_.characteristic();
    r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + p - o.r_) % p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = mulmod(r_, o.r_, field_.characteristic());
  return *this;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero");
  Scalar r(*this);
  if (field_.is_rational())
    r.q_ = 1 / q_;
  else
    r.r_ = powmod(r_, field_.characteristic() - 2, field_.characteristic());
  return r;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check(o);
  return *this *= o.inverse();
}

void Scalar::submul(const Scalar& a, const Scalar& b) {
  check(a);
  check(b);
  if (field_.is_rational()) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_sub(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
  } else {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t t = mulmod(a.r_, b.r_, p);
    r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + p - t) % p);
  }
}

void Scalar::addmul(const Scalar& a, const Scalar& b) {
  check(a);
  check(b);
  if (field_.is_rational()) {
    thread_local mpq_class tmp;
    mpq_mul(tmp.get_mpq_t(), a.q_.get_mpq_t(), b.q_.get_mpq_t());
    mpq_add(q_.get_mpq_t(), q_.get_mpq_t(), tmp.get_mpq_t());
  } else {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t t = mulmod(a.r_, b.r_, p);
    r_ = static_cast<std::uint64_t>((static_cast<u128>(r_) + t) % p);
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

}  // namespace coloc
