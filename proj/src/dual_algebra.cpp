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

#include "coloc/dual_algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>

#include "coloc/error.hpp"

namespace coloc {

namespace {

void add_sparse(const Scalar& coef, const SparseVector& s, Vector& out) {
  for (const auto& [t, c] : s) out[t].addmul(coef, c);
}

std::vector<std::size_t> support(std::span<const Scalar> v) {
  std::vector<std::size_t> nz;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) nz.push_back(i);
  return nz;
}

SparseVector to_sparse(const Vector& v) {
  SparseVector s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  return s;
}

}  // namespace

Algebra::Algebra(Field f, std::vector<std::vector<SparseVector>> products, Vector unit)
    : field_(f), products_(std::move(products)), unit_(std::move(unit)) {
  const std::size_t n = unit_.size();
  if (products_.size() != n) throw DimensionMismatch("algebra: product table size");
  for (const auto& row : products_) {
    if (row.size() != n) throw DimensionMismatch("algebra: product table size");
    for (const auto& s : row)
      for (const auto& [t, c] : s) {
        if (t >= n) throw Error("algebra: structure constant index out of range");
        if (c.field() != f) throw FieldMismatch("algebra: mixed fields");
      }
  }
}

Vector Algebra::multiply(std::span<const Scalar> x, std::span<const Scalar> y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("multiply: length");
  Vector out = zero_vector(dim(), field_);
  const auto ys = support(y);
  Scalar xy(field_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (auto j : ys) {
      xy = x[i] * y[j];
      add_sparse(xy, products_[i][j], out);
    }
  }
  return out;
}

Matrix Algebra::left_matrix(std::span<const Scalar> x) const {
  Matrix m(dim(), dim(), field_);
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(x, basis_element(j)));
  return m;
}

Matrix Algebra::right_matrix(std::span<const Scalar> x) const {
  Matrix m(dim(), dim(), field_);
  for (std::size_t j = 0; j < dim(); ++j) m.set_column(j, multiply(basis_element(j), x));
  return m;
}

std::optional<Violation> validate_algebra(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector lhs = zero_vector(n, f), rhs = zero_vector(n, f);
        for (const auto& [t, c] : a.product(i, j)) add_sparse(c, a.product(t, k), lhs);
        for (const auto& [t, c] : a.product(j, k)) add_sparse(c, a.product(i, t), rhs);
        if (!(lhs == rhs))
          return Violation{"associativity (b_i b_j) b_k = b_i (b_j b_k)", i, "",
                           "at j=" + std::to_string(j) + ", k=" + std::to_string(k)};
      }
  for (std::size_t j = 0; j < n; ++j) {
    const Vector b = a.basis_element(j);
    if (!(a.multiply(a.unit(), b) == b) || !(a.multiply(b, a.unit()) == b))
      return Violation{"unit law 1 b = b = b 1", j, "", ""};
  }
  return std::nullopt;
}

Algebra dual_algebra(const Coalgebra& c) {
  const std::size_t n = c.dim();
  const Field f = c.field();
  std::vector<std::vector<std::map<std::size_t, Scalar>>> acc(
      n, std::vector<std::map<std::size_t, Scalar>>(n));
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : c.delta(k)) {
      auto [it, fresh] = acc[t.first][t.second].try_emplace(k, Scalar(f));
      it->second += t.coef;
    }
  std::vector<std::vector<SparseVector>> prod(n, std::vector<SparseVector>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto& [k, v] : acc[i][j])
        if (!v.is_zero()) prod[i][j].emplace_back(k, v);
  return Algebra(f, std::move(prod), c.counit());
}

Vector convolve(const Coalgebra& c, std::span<const Scalar> f, std::span<const Scalar> g) {
  if (f.size() != c.dim() || g.size() != c.dim())
    throw DimensionMismatch("convolve: functional length");
  Vector out = zero_vector(c.dim(), c.field());
  for (std::size_t i = 0; i < c.dim(); ++i)
    for (const auto& t : c.delta(i)) {
      if (f[t.first].is_zero() || g[t.second].is_zero()) continue;
      out[i] += t.coef * f[t.first] * g[t.second];
    }
  return out;
}

Vector cstar_action(const Comodule& m, std::span<const Scalar> f, std::span<const Scalar> v) {
  if (f.size() != m.coalgebra()->dim()) throw DimensionMismatch("action: functional length");
  if (v.size() != m.dim()) throw DimensionMismatch("action: vector length");
  Vector out = zero_vector(m.dim(), m.field());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : m.coaction(i))
      if (!f[t.second].is_zero()) out[t.first] += v[i] * t.coef * f[t.second];
  }
  return out;
}

Vector right_action(const Coalgebra& c, std::span<const Scalar> f, std::span<const Scalar> v) {
  if (f.size() != c.dim() || v.size() != c.dim())
    throw DimensionMismatch("right action: length");
  Vector out = zero_vector(c.dim(), c.field());
  for (std::size_t i = 0; i < c.dim(); ++i) {
    if (v[i].is_zero()) continue;
    for (const auto& t : c.delta(i))
      if (!f[t.first].is_zero()) out[t.second] += v[i] * t.coef * f[t.first];
  }
  return out;
}

Matrix right_action_matrix(const Coalgebra& c, std::span<const Scalar> f) {
  Matrix m(c.dim(), c.dim(), c.field());
  for (std::size_t i = 0; i < c.dim(); ++i)
    m.set_column(i, right_action(c, f, unit_vector(c.dim(), i, c.field())));
  return m;
}

namespace {

// Gram matrix of the trace form Tr(L_{b_i b_j}).
Matrix trace_form(const Algebra& a) {
  const std::size_t n = a.dim();
  Vector tr = zero_vector(n, a.field());
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [t, c] : a.product(k, j))
        if (t == j) tr[k] += c;
  Matrix g(n, n, a.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (const auto& [t, c] : a.product(i, j)) g(i, j).addmul(c, tr[t]);
  return g;
}

// (Tr(X^(p^i)) mod p^(i+1)) / p^i for an integer lift X of the left
// multiplication by x. Only called with p^i <= dim A.
std::uint64_t lifted_trace(const Algebra& a, const Vector& x, std::uint64_t p, std::size_t i) {
  const std::size_t n = a.dim();
  unsigned __int128 mod = p;
  for (std::size_t k = 0; k < i; ++k) mod *= p;
  using Mat = std::vector<std::vector<std::uint64_t>>;
  const Matrix l = a.left_matrix(x);
  Mat cur(n, std::vector<std::uint64_t>(n));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) cur[r][c] = l(r, c).residue();
  auto mul = [&](const Mat& u, const Mat& v) {
    Mat w(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t k = 0; k < n; ++k) {
        if (u[r][k] == 0) continue;
        for (std::size_t c = 0; c < n; ++c)
          w[r][c] = static_cast<std::uint64_t>(
              (w[r][c] + static_cast<unsigned __int128>(u[r][k]) * v[k][c]) % mod);
      }
    return w;
  };
  for (std::size_t k = 0; k < i; ++k) {
    Mat acc(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t r = 0; r < n; ++r) acc[r][r] = 1;
    Mat sq = cur;
    for (std::uint64_t e = p; e > 0; e >>= 1) {
      if (e & 1) acc = mul(acc, sq);
      if (e > 1) sq = mul(sq, sq);
    }
    cur = std::move(acc);
  }
  unsigned __int128 tr = 0;
  for (std::size_t r = 0; r < n; ++r) tr = (tr + cur[r][r]) % mod;
  return static_cast<std::uint64_t>(tr / (mod / p));
}

// Trace-form kernel in characteristic 0. Over GF(p), the chain
// I_i = {x in I_(i-1) : g_i(x b) = 0 for all b} of lifted traces g_i,
// stopped at i = floor(log_p dim A).
Subspace radical_candidate(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  if (f.is_rational()) return kernel(trace_form(a));
  const std::uint64_t p = f.characteristic();
  std::size_t levels = 0;
  for (unsigned __int128 q = p; q <= n; q *= p) ++levels;
  Subspace cur = Subspace::full(n, f);
  for (std::size_t i = 0; i <= levels && cur.dim() > 0; ++i) {
    const auto basis = cur.basis_vectors();
    Matrix g(n, basis.size(), f);
    for (std::size_t k = 0; k < basis.size(); ++k)
      for (std::size_t b = 0; b < n; ++b) {
        const std::uint64_t t =
            lifted_trace(a, a.multiply(basis[k], a.basis_element(b)), p, i);
        g(b, k) = Scalar(f, mpz_class(std::to_string(t)));
      }
    std::vector<Vector> next;
    for (const auto& coeffs : kernel(g).basis_vectors()) {
      Vector v = zero_vector(n, f);
      for (std::size_t k = 0; k < basis.size(); ++k) axpy(coeffs[k], basis[k], v);
      next.push_back(std::move(v));
    }
    cur = Subspace::span(n, f, next);
  }
  return cur;
}

}  // namespace

Vector QuotientAlgebra::project(std::span<const Scalar> x) const {
  const Vector r = kernel.reduce(x);
  Vector y;
  y.reserve(positions.size());
  for (auto p : positions) y.push_back(r[p]);
  return y;
}

Vector QuotientAlgebra::lift(std::span<const Scalar> y) const {
  Vector x = zero_vector(kernel.ambient_dim(), kernel.field());
  for (std::size_t i = 0; i < positions.size(); ++i) x[positions[i]] = y[i];
  return x;
}

QuotientAlgebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
  const auto pos = ideal.non_pivots();
  const std::size_t r = pos.size();
  QuotientAlgebra q{Algebra(a.field(), {}, {}), ideal, pos};
  std::vector<std::vector<SparseVector>> prod(r, std::vector<SparseVector>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      Vector p = zero_vector(a.dim(), a.field());
      add_sparse(Scalar(a.field(), 1), a.product(pos[i], pos[j]), p);
      prod[i][j] = to_sparse(q.project(p));
    }
  q.algebra = Algebra(a.field(), std::move(prod), q.project(a.unit()));
  return q;
}

Radical jacobson_radical(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  const Subspace j = radical_candidate(a);
  const auto jb = j.basis_vectors();
  for (const auto& v : jb)
    for (std::size_t i = 0; i < n; ++i) {
      const Vector b = a.basis_element(i);
      if (!j.contains(a.multiply(b, v)) || !j.contains(a.multiply(v, b)))
        throw RadicalVerificationError("radical candidate is not a two-sided ideal over " +
                                       f.name());
    }
  std::size_t k = 1;
  Subspace power = j;
  while (power.dim() > 0) {
    if (k > n + 1)
      throw RadicalVerificationError("radical candidate is not nilpotent over " + f.name());
    Echelon next(n, f);
    for (const auto& p : power.basis_vectors())
      for (const auto& v : jb) next.insert(a.multiply(p, v));
    power = Subspace::from_echelon(next);
    ++k;
  }
  const QuotientAlgebra q = quotient_algebra(a, j);
  if (radical_candidate(q.algebra).dim() != 0)
    throw RadicalVerificationError("quotient by the radical candidate is not certified "
                                   "semisimple over " + f.name());
  return {j, k};
}

Poly minimal_polynomial(const Algebra& a, std::span<const Scalar> x,
                        std::span<const Scalar> u) {
  const Field f = a.field();
  std::vector<Vector> powers{Vector(u.begin(), u.end())};
  if (is_zero(u)) return Poly::constant(Scalar(f, 1));
  Echelon e(a.dim(), f);
  e.insert(powers[0]);
  while (true) {
    Vector next = a.multiply(powers.back(), x);
    if (!e.insert(next)) {
      const Matrix m = Matrix::from_columns(powers, a.dim(), f);
      const auto sol = solve(m, next);
      if (!sol) throw InternalError("minimal polynomial: dependent power not solvable");
      Vector coeffs;
      for (const auto& s : *sol) coeffs.push_back(-s);
      coeffs.push_back(Scalar(f, 1));
      return Poly(f, std::move(coeffs));
    }
    powers.push_back(std::move(next));
  }
}

Vector evaluate(const Algebra& a, const Poly& p, std::span<const Scalar> x,
                std::span<const Scalar> u) {
  Vector r = zero_vector(a.dim(), a.field());
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    r = a.multiply(r, x);
    axpy(p.coeffs()[k], u, r);
  }
  return r;
}

Subspace center(const Algebra& a) {
  const std::size_t n = a.dim();
  std::vector<Vector> rows;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vector> block(n, zero_vector(n, a.field()));
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [t, c] : a.product(i, j)) block[t][i] += c;
      for (const auto& [t, c] : a.product(j, i)) block[t][i] -= c;
    }
    for (auto& r : block)
      if (!is_zero(r)) rows.push_back(std::move(r));
  }
  return Subspace::span(n, a.field(), kernel_of_rows(rows, n, a.field()));
}

namespace {

Subspace corner(const Algebra& a, std::span<const Scalar> u) {
  Echelon e(a.dim(), a.field());
  for (std::size_t k = 0; k < a.dim(); ++k)
    e.insert(a.multiply(a.multiply(u, a.basis_element(k)), u));
  return Subspace::from_echelon(e);
}

}  // namespace

std::size_t corner_dim(const Algebra& a, std::span<const Scalar> u) {
  return corner(a, u).dim();
}

namespace {

std::mutex cache_mutex;

template <class Value>
struct Cache {
  struct Entry {
    std::weak_ptr<const Coalgebra> owner;
    std::shared_ptr<const Value> value;
  };
  std::map<std::pair<const Coalgebra*, std::uint64_t>, Entry> entries;

  std::shared_ptr<const Value> find(const CoalgebraPtr& c, std::uint64_t key) {
    auto it = entries.find({c.get(), key});
    if (it == entries.end()) return nullptr;
    if (it->second.owner.lock() != c) {
      entries.erase(it);
      return nullptr;
    }
    return it->second.value;
  }
  void store(const CoalgebraPtr& c, std::uint64_t key, std::shared_ptr<const Value> v) {
    for (auto it = entries.begin(); it != entries.end();)
      it = it->second.owner.expired() ? entries.erase(it) : std::next(it);
    entries[{c.get(), key}] = {c, std::move(v)};
  }
};

Cache<DualStructure>& dual_cache() {
  static Cache<DualStructure> c;
  return c;
}

Cache<IdempotentSet>& idempotent_cache() {
  static Cache<IdempotentSet> c;
  return c;
}

}  // namespace

std::shared_ptr<const DualStructure> dual_structure(const CoalgebraPtr& c) {
  {
    std::lock_guard lock(cache_mutex);
    if (auto hit = dual_cache().find(c, 0)) return hit;
  }
  Algebra a = dual_algebra(*c);
  Radical r = jacobson_radical(a);
  Subspace c0 = r.ideal.annihilator();
  auto value = std::make_shared<const DualStructure>(
      DualStructure{std::move(a), std::move(r), std::move(c0)});
  std::lock_guard lock(cache_mutex);
  dual_cache().store(c, 0, value);
  return value;
}

Subspace perp(const Comodule& m, const Subspace& x) {
  if (x.ambient_dim() != m.dim()) throw DimensionMismatch("perp: subspace of another space");
  return x.annihilator();
}

Subspace coradical(const CoalgebraPtr& c) { return dual_structure(c)->coradical; }

Vector IdempotentSet::sum(const std::vector<std::size_t>& indices) const {
  const std::size_t n = idempotents.empty() ? 0 : idempotents[0].size();
  Vector s = zero_vector(n, field);
  for (auto i : indices) s = add(s, idempotents.at(i));
  return s;
}

namespace {

// Idempotent z-polynomial projecting onto one coprime factor of m, if the
// factorization machinery finds one.
std::optional<Vector> split_by(const Algebra& b, const Vector& z, const Vector& u,
                               const Poly& m) {
  for (const auto& lambda : roots(m)) {
    const std::size_t mult = root_multiplicity(m, lambda);
    Poly f = Poly::constant(Scalar(b.field(), 1));
    for (std::size_t i = 0; i < mult; ++i) f = f * Poly::linear(lambda);
    const Poly g = m / f;
    if (g.degree() < 1) continue;
    const Xgcd x = xgcd(f, g);
    return evaluate(b, (x.t * g) % m, z, u);
  }
  return std::nullopt;
}

class BlockSplitter {
 public:
  BlockSplitter(const Algebra& b, std::uint64_t seed) : b_(b), rng_(seed) {}

  /// A proper idempotent of u B u, or nullopt once the candidate supply is
  /// exhausted. last_poly records the last minimal polynomial tried.
  std::optional<Vector> split(const Vector& u) {
    const auto w = corner(b_, u).basis_vectors();
    auto attempt = [&](const Vector& z) -> std::optional<Vector> {
      if (is_zero(z)) return std::nullopt;
      const Poly m = minimal_polynomial(b_, z, u);
      if (m.degree() <= 1) return std::nullopt;
      last_poly = m.to_string();
      if (auto e = split_by(b_, z, u, m)) return e;
      const Poly s = squarefree_part(m);
      if (s == m) return std::nullopt;
      // s(z) is a nonzero nilpotent y; some w y has a zero root next to a
      // nonzero eigenvalue unless the corner is a division algebra.
      const Vector y = evaluate(b_, s, z, u);
      for (const auto& x : w)
        for (const Vector& c : {b_.multiply(x, y), b_.multiply(y, x)}) {
          if (is_zero(c)) continue;
          const Poly mc = minimal_polynomial(b_, c, u);
          if (mc.degree() < 2) continue;
          if (auto e = split_by(b_, c, u, mc)) return e;
        }
      return std::nullopt;
    };
    for (const auto& z : w)
      if (auto e = attempt(z)) return e;
    for (std::size_t a = 0; a < w.size(); ++a)
      for (std::size_t c = 0; c < w.size(); ++c) {
        if (auto e = attempt(b_.multiply(w[a], w[c]))) return e;
        if (c > a)
          if (auto e = attempt(add(w[a], w[c]))) return e;
      }
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int round = 0; round < 32; ++round) {
      Vector z = zero_vector(b_.dim(), b_.field());
      for (const auto& x : w) axpy(Scalar(b_.field(), coef(rng_)), x, z);
      if (auto e = attempt(z)) return e;
    }
    return std::nullopt;
  }

  std::string last_poly;

 private:
  const Algebra& b_;
  std::mt19937_64 rng_;
};

// Primitive central idempotents of a split semisimple algebra.
std::vector<Vector> central_idempotents(const Algebra& b) {
  const auto z = center(b).basis_vectors();
  std::vector<Vector> todo{b.unit()}, done;
  while (!todo.empty()) {
    const Vector u = todo.back();
    todo.pop_back();
    Echelon zu(b.dim(), b.field());
    for (const auto& x : z) zu.insert(b.multiply(u, x));
    if (zu.rank() <= 1) {
      done.push_back(u);
      continue;
    }
    const Matrix basis = zu.rref();
    std::optional<Poly> m;
    Vector elem;
    for (std::size_t r = 0; r < basis.rows() && !m; ++r) {
      Vector x = basis.row_vector(r);
      Poly p = minimal_polynomial(b, x, u);
      if (p.degree() >= 2) {
        m = std::move(p);
        elem = std::move(x);
      }
    }
    if (!m) throw InternalError("center splitting: no non-scalar element");
    const auto rts = roots(*m);
    Poly lin = Poly::constant(Scalar(b.field(), 1));
    for (const auto& r : rts) lin = lin * Poly::linear(r);
    if (lin.degree() < m->degree()) {
      const Poly rest = *m / lin;
      throw NonSplitError("semisimple quotient does not split over " + b.field().name() +
                              ": a central element has minimal polynomial " +
                              m->to_string() + " with irreducible factor " +
                              rest.to_string(),
                          m->to_string());
    }
    for (const auto& lambda : rts) {
      Poly lag = Poly::constant(Scalar(b.field(), 1));
      for (const auto& mu : rts) {
        if (mu == lambda) continue;
        lag = lag * Poly::linear(mu) * Poly::constant((lambda - mu).inverse());
      }
      todo.push_back(evaluate(b, lag, elem, u));
    }
  }
  return done;
}

std::size_t isqrt(std::size_t n) {
  std::size_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

int compare_scalars(const Scalar& a, const Scalar& b) {
  if (a.field().is_rational()) return cmp(a.rational(), b.rational());
  return a.residue() < b.residue() ? -1 : a.residue() > b.residue() ? 1 : 0;
}

bool subspace_less(const Subspace& a, const Subspace& b) {
  if (a.pivots() != b.pivots()) return a.pivots() < b.pivots();
  const auto& x = a.basis().data();
  const auto& y = b.basis().data();
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i)
    if (int c = compare_scalars(x[i], y[i])) return c < 0;
  return x.size() < y.size();
}

IdempotentSet compute_idempotents(const CoalgebraPtr& c, std::uint64_t seed) {
  const auto ds = dual_structure(c);
  const Algebra& a = ds->algebra;
  const Field f = a.field();
  const QuotientAlgebra q = quotient_algebra(a, ds->radical.ideal);
  const Algebra& b = q.algebra;

  struct Block {
    Vector primitive;  // in B
    std::size_t size;  // matrix size of the block
  };
  std::vector<Block> blocks;
  BlockSplitter splitter(b, seed);
  for (const auto& z : central_idempotents(b)) {
    const std::size_t bd = corner_dim(b, z);
    const std::size_t n = isqrt(bd);
    if (n * n != bd) throw InternalError("central block dimension is not a square");
    Vector u = z;
    while (corner_dim(b, u) > 1) {
      auto e = splitter.split(u);
      if (!e)
        throw NonSplitError("semisimple quotient does not split over " + f.name() +
                                ": a simple block of dimension " + std::to_string(bd) +
                                " admits no splitting element (last minimal polynomial " +
                                splitter.last_poly + ")",
                            splitter.last_poly);
      const Vector rest = sub(u, *e);
      u = corner_dim(b, *e) <= corner_dim(b, rest) ? *e : rest;
    }
    blocks.push_back({u, n});
  }

  // Lift through the radical, keeping the lifts orthogonal.
  std::vector<Vector> lifted;
  Vector used = zero_vector(a.dim(), f);
  for (const auto& blk : blocks) {
    const Vector comp = sub(a.unit(), used);
    Vector e = a.multiply(a.multiply(comp, q.lift(blk.primitive)), comp);
    for (int it = 0;; ++it) {
      const Vector e2 = a.multiply(e, e);
      if (e2 == e) break;
      if (it > 64) throw InternalError("idempotent lifting did not converge");
      const Vector e3 = a.multiply(e2, e);
      e = sub(scaled(Scalar(f, 3), e2), scaled(Scalar(f, 2), e3));
    }
    for (const auto& p : lifted)
      if (!is_zero(a.multiply(e, p)) || !is_zero(a.multiply(p, e)))
        throw InternalError("lifted idempotents are not orthogonal");
    used = add(used, e);
    lifted.push_back(std::move(e));
  }

  struct Item {
    Vector e;
    Subspace hull, simple;
  };
  std::vector<Item> items;
  for (std::size_t i = 0; i < lifted.size(); ++i) {
    Subspace hull = image(right_action_matrix(*c, lifted[i]));
    Subspace simple = ds->coradical.intersection(hull);
    if (simple.dim() != blocks[i].size)
      throw InternalError("socle of Ce_i does not have the dimension of its simple");
    items.push_back({lifted[i], std::move(hull), std::move(simple)});
  }
  std::sort(items.begin(), items.end(),
            [](const Item& x, const Item& y) { return subspace_less(x.simple, y.simple); });

  IdempotentSet out{f, {}, {}, {}, {}};
  const Comodule reg = regular_comodule(c);
  for (auto& it : items) {
    out.simples.push_back(restrict_to(reg, it.simple));
    out.idempotents.push_back(std::move(it.e));
    out.simple_subspaces.push_back(std::move(it.simple));
    out.hull_subspaces.push_back(std::move(it.hull));
  }
  return out;
}

}  // namespace

std::shared_ptr<const IdempotentSet> basic_idempotents(const CoalgebraPtr& c,
                                                       std::uint64_t seed) {
  {
    std::lock_guard lock(cache_mutex);
    if (auto hit = idempotent_cache().find(c, seed)) return hit;
  }
  auto value = std::make_shared<const IdempotentSet>(compute_idempotents(c, seed));
  std::lock_guard lock(cache_mutex);
  idempotent_cache().store(c, seed, value);
  return value;
}

std::vector<Comodule> simple_comodules(const CoalgebraPtr& c, std::uint64_t seed) {
  return basic_idempotents(c, seed)->simples;
}

std::size_t simple_type(const IdempotentSet& ids, const Comodule& simple) {
  std::optional<std::size_t> found;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (simple.action_matrix(ids.idempotents[i]).is_zero()) continue;
    if (found) throw ValidationError("simple_type: comodule is not simple");
    found = i;
  }
  if (!found) throw ValidationError("simple_type: comodule is zero or not simple");
  return *found;
}

TorsionSpec torsion_spec(const IdempotentSet& ids, std::vector<std::size_t> torsion) {
  std::sort(torsion.begin(), torsion.end());
  torsion.erase(std::unique(torsion.begin(), torsion.end()), torsion.end());
  TorsionSpec t;
  for (auto j : torsion)
    if (j >= ids.size()) throw Error("torsion spec: simple index out of range");
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (!std::binary_search(torsion.begin(), torsion.end(), i)) t.kept.push_back(i);
  t.torsion = std::move(torsion);
  t.idempotent = ids.sum(t.kept);
  return t;
}

}  // namespace coloc
