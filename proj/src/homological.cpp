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

#include "coloc/homological.hpp"

#include <algorithm>

#include "coloc/error.hpp"
#include "coloc/localization.hpp"

namespace coloc {

std::vector<std::size_t> ext_from_resolution(const Comodule& n, const Resolution& r) {
  const CoalgebraPtr& c = r.resolved.coalgebra();
  const auto ids = basic_idempotents(c, r.seed);
  const Field f = n.field();
  // Hom(N, Q_k) is the sum over the Ce_i blocks of Q_k of Hom(N, Ce_i).
  std::vector<std::optional<std::vector<Matrix>>> block_hom(ids->size());
  // rank_pi[k] = rank of {pi_k h : h in Hom(N, Q_k)}. Since the next
  // embedding is injective this is also the rank of Hom(N, d_k).
  std::vector<std::size_t> hom_dim, rank_pi;
  for (std::size_t k = 0; k <= r.depth; ++k) {
    const Matrix& pi = r.projections[k];
    Echelon e(pi.rows() * n.dim(), f);
    std::size_t count = 0, offset = 0;
    for (auto i : r.summands[k]) {
      if (!block_hom[i]) block_hom[i] = hom_space(n, injective_indecomposable(c, i, r.seed));
      const std::size_t d = ids->hull_subspaces[i].dim();
      for (const auto& h : *block_hom[i]) {
        ++count;
        Matrix img(pi.rows(), n.dim(), f);
        for (std::size_t row = 0; row < pi.rows(); ++row)
          for (std::size_t b = 0; b < d; ++b) {
            const Scalar& p = pi(row, offset + b);
            if (p.is_zero()) continue;
            for (std::size_t col = 0; col < n.dim(); ++col)
              if (!h(b, col).is_zero()) img(row, col).addmul(p, h(b, col));
          }
        if (img.rows() > 0 && n.dim() > 0) e.insert(img.data());
      }
      offset += d;
    }
    if (offset != r.terms[k].dim()) throw InternalError("ext: Q_k blocks do not cover Q_k");
    hom_dim.push_back(count);
    rank_pi.push_back(e.rank());
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= r.depth; ++k)
    out.push_back(hom_dim[k] - rank_pi[k] - (k == 0 ? 0 : rank_pi[k - 1]));
  return out;
}

ExtProfile ext_dims(const Comodule& n, const Comodule& m, std::size_t depth,
                    std::uint64_t seed) {
  const Resolution r = minimal_injective_resolution(m, depth, seed);
  ExtProfile p;
  p.depth = depth;
  p.ext = ext_from_resolution(n, r);
  return p;
}

std::vector<ExtProfile> bass_numbers(const Resolution& r) {
  const auto ids = basic_idempotents(r.resolved.coalgebra(), r.seed);
  std::vector<ExtProfile> out;
  for (std::size_t i = 0; i < ids->size(); ++i) {
    const Comodule& s = ids->simples[i];
    ExtProfile p;
    p.source_simple = i;
    p.depth = r.depth;
    p.ext = ext_from_resolution(s, r);
    p.hom_ss = hom_space(s, s).size();
    for (std::size_t k = 0; k <= r.depth; ++k) {
      const std::size_t direct = r.multiplicities[k][i];
      p.bass.push_back(direct);
      if (p.ext[k] != direct * p.hom_ss)
        throw BassMismatch("Bass number mismatch at level " + std::to_string(k) +
                           " for simple " + std::to_string(i) + ": multiplicity " +
                           std::to_string(direct) + ", dim Ext " + std::to_string(p.ext[k]) +
                           ", dim Hom(S,S) " + std::to_string(p.hom_ss));
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<ExtProfile> bass_numbers(const Comodule& m, std::size_t depth, std::uint64_t seed) {
  return bass_numbers(minimal_injective_resolution(m, depth, seed));
}

std::vector<std::size_t> cstar_ext_oracle(const Comodule& n, const Comodule& m,
                                          std::size_t depth, std::uint64_t seed) {
  if (!same_coalgebra(n.coalgebra(), m.coalgebra()))
    throw Error("ext oracle: comodules over different coalgebras");
  const CoalgebraPtr& c = n.coalgebra();
  const Field f = c->field();
  const std::size_t dc = c->dim();
  const std::size_t dm = m.dim();
  const auto ds = dual_structure(c);
  const auto ids = basic_idempotents(c, seed);
  const Algebra& a = ds->algebra;
  const std::size_t ni = ids->size();
  const auto rad = ds->radical.ideal.basis_vectors();

  // Projective covers A e_i: basis, left action of A in those coordinates.
  std::vector<Subspace> pe(ni);
  std::vector<std::vector<Matrix>> lact(ni), lrad(ni), lidem(ni);
  for (std::size_t i = 0; i < ni; ++i) {
    pe[i] = image(a.right_matrix(ids->idempotents[i]));
    const auto pb = pe[i].basis_vectors();
    auto on_pe = [&](std::span<const Scalar> x) {
      Matrix out(pb.size(), pb.size(), f);
      for (std::size_t b = 0; b < pb.size(); ++b)
        out.set_column(b, pe[i].coordinates(a.multiply(x, pb[b])));
      return out;
    };
    for (std::size_t k = 0; k < dc; ++k) lact[i].push_back(on_pe(a.basis_element(k)));
    for (const auto& j : rad) lrad[i].push_back(on_pe(j));
    for (const auto& e : ids->idempotents) lidem[i].push_back(on_pe(e));
  }
  std::vector<Matrix> act_n, act_m, rad_n, idem_n, idem_m;
  for (std::size_t k = 0; k < dc; ++k) {
    act_n.push_back(n.action_matrix(unit_vector(dc, k, f)));
    act_m.push_back(m.action_matrix(unit_vector(dc, k, f)));
  }
  for (const auto& j : rad) rad_n.push_back(n.action_matrix(j));
  std::vector<Subspace> em;  // e_i M = Hom(A e_i, M)
  for (const auto& e : ids->idempotents) {
    idem_n.push_back(n.action_matrix(e));
    em.push_back(image(m.action_matrix(e)));
  }

  // Level 0 acts on N; level l > 0 on P_(l-1) = (+)_t A e_(types[t]).
  std::vector<std::size_t> types;
  bool base = true;
  auto blockwise = [&](const std::vector<std::vector<Matrix>>& mats, std::size_t which,
                       const Vector& v) {
    Vector out(v.size(), Scalar(f));
    std::size_t off = 0;
    for (auto t : types) {
      const Matrix& x = mats[t][which];
      const Vector blk = x.apply(std::span<const Scalar>(v).subspan(off, x.cols()));
      std::copy(blk.begin(), blk.end(), out.begin() + static_cast<long>(off));
      off += x.cols();
    }
    return out;
  };
  auto act = [&](std::size_t k, const Vector& v) {
    return base ? act_n[k].apply(v) : blockwise(lact, k, v);
  };

  // dim Hom_A(K, M) for the current K, from X a = a X on a basis of A.
  Subspace k = Subspace::full(n.dim(), f);
  auto module_hom_dim = [&](const std::vector<Vector>& kb) -> std::size_t {
    const std::size_t dk = kb.size();
    if (dk == 0 || dm == 0) return 0;
    Echelon eq(dm * dk, f);
    for (std::size_t q = 0; q < dc; ++q) {
      std::vector<Vector> ak;  // a_q acting on K, in K coordinates
      for (const auto& v : kb) ak.push_back(k.coordinates(act(q, v)));
      for (std::size_t r = 0; r < dm; ++r)
        for (std::size_t col = 0; col < dk; ++col) {
          // (X a_q - a_q X)(r, col), unknown X(r, s) at r * dk + s.
          Vector row(dm * dk, Scalar(f));
          for (std::size_t s2 = 0; s2 < dk; ++s2)
            if (!ak[col][s2].is_zero()) row[r * dk + s2] += ak[col][s2];
          for (std::size_t s2 = 0; s2 < dm; ++s2)
            if (!act_m[q](r, s2).is_zero()) row[s2 * dk + col] -= act_m[q](r, s2);
          if (!is_zero(row)) eq.insert(std::move(row));
        }
    }
    return dm * dk - eq.rank();
  };

  std::vector<std::size_t> hom_k, hom_p;
  for (std::size_t level = 0; level <= depth; ++level) {
    // Generators of type i: a basis of e_i K modulo J K.
    const auto kb = k.basis_vectors();
    Echelon top(k.dim(), f);
    for (std::size_t r = 0; r < rad.size(); ++r)
      for (const auto& v : kb) top.insert(k.coordinates(base ? rad_n[r].apply(v) : blockwise(lrad, r, v)));
    std::vector<std::pair<std::size_t, Vector>> gens;
    for (std::size_t i = 0; i < ni; ++i)
      for (const auto& v : kb) {
        Vector w = base ? idem_n[i].apply(v) : blockwise(lidem, i, v);
        if (top.insert(k.coordinates(w))) gens.emplace_back(i, std::move(w));
      }
    hom_k.push_back(module_hom_dim(kb));
    if (level == depth) break;
    std::size_t hd = 0;
    for (const auto& g : gens) hd += em[g.first].dim();
    hom_p.push_back(hd);
    // phi: P_l -> K, (t, b) -> b . gen_t.
    std::size_t pd = 0;
    for (const auto& g : gens) pd += pe[g.first].dim();
    Matrix phi(k.ambient_dim(), pd, f);
    std::size_t col = 0;
    for (const auto& [i, w] : gens)
      for (const auto& bv : pe[i].basis_vectors()) {
        Vector img(k.ambient_dim(), Scalar(f));
        for (std::size_t q = 0; q < dc; ++q)
          if (!bv[q].is_zero()) {
            const Vector aw = act(q, w);
            for (std::size_t r = 0; r < img.size(); ++r)
              if (!aw[r].is_zero()) img[r].addmul(bv[q], aw[r]);
          }
        phi.set_column(col++, img);
      }
    k = kernel(phi);
    types.clear();
    for (const auto& g : gens) types.push_back(g.first);
    base = false;
  }
  // Ext^l = coker(Hom(P_(l-1), M) -> Hom(K_l, M)), and the kernel of that
  // restriction is Hom(K_(l-1), M).
  std::vector<std::size_t> out{hom_k[0]};
  for (std::size_t l = 1; l <= depth; ++l) out.push_back(hom_k[l] + hom_k[l - 1] - hom_p[l - 1]);
  return out;
}

HereditaryVerdict hereditary_check(const CoalgebraPtr& c,
                                   std::optional<std::size_t> depth_guard, std::uint64_t seed) {
  if (depth_guard.value_or(std::max<std::size_t>(c->dim(), 2)) < 2) throw Error("hereditary check needs a depth guard of at least 2");
  const auto ids = basic_idempotents(c, seed);
  HereditaryVerdict v;
  v.hereditary = true;
  v.ext2.assign(ids->size(), std::vector<std::size_t>(ids->size(), 0));
  for (std::size_t j = 0; j < ids->size(); ++j) {
    const Resolution r = minimal_injective_resolution(ids->simples[j], 2, seed);
    for (std::size_t i = 0; i < ids->size(); ++i) {
      v.ext2[i][j] = ext_from_resolution(ids->simples[i], r)[2];
      if (v.ext2[i][j] != 0) v.hereditary = false;
    }
  }
  return v;
}

std::vector<bool> colocal_division_check(const CoalgebraPtr& c, std::uint64_t seed) {
  const auto ids = basic_idempotents(c, seed);
  const auto table = eiej_matrix(c, seed);
  std::vector<bool> out;
  for (std::size_t i = 0; i < ids->size(); ++i)
    out.push_back(table[i][i] == endomorphism_algebra(ids->simples[i]).dim());
  return out;
}

}  // namespace coloc
