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

#include "coloc/catalog.hpp"

#include <map>
#include <random>

#include "coloc/error.hpp"

namespace coloc {

Coalgebra gen_example1(std::size_t d, Field f) {
  const Scalar one(f, 1);
  std::vector<std::string> labels{"g"};
  std::vector<Expansion> delta{{{one, 0, 0}}};
  Vector counit{one};
  for (std::size_t i = 1; i <= d; ++i) {
    labels.push_back("x" + std::to_string(i));
    delta.push_back({{one, 0, i}, {one, i, 0}});
    counit.push_back(Scalar(f));
  }
  return Coalgebra(f, std::move(labels), std::move(delta), std::move(counit));
}

Coalgebra gen_example2(const std::vector<std::size_t>& dims, Field f) {
  if (dims.empty()) throw Error("example2: empty dimension list");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (dims[i] == 0) throw Error("example2: dimensions must be positive");
    if (i > 0 && dims[i] <= dims[i - 1])
      throw Error("example2: dimensions must be strictly increasing");
  }
  std::vector<Coalgebra> parts;
  for (auto d : dims) parts.push_back(gen_example1(d, f));
  return direct_sum_coalgebra(parts);
}

Coalgebra gen_kx_truncated(std::size_t n, Field f) {
  if (!f.is_rational())
    throw Error("kx: positive characteristic is not supported (binomials degenerate)");
  std::vector<std::string> labels;
  std::vector<Expansion> delta;
  Vector counit;
  for (std::size_t m = 0; m <= n; ++m) {
    labels.push_back(m == 0 ? "1" : m == 1 ? "X" : "X^" + std::to_string(m));
    Expansion e;
    mpz_class binom = 1;
    for (std::size_t i = 0; i <= m; ++i) {
      e.push_back({Scalar(f, binom), i, m - i});
      binom = binom * static_cast<unsigned long>(m - i) / static_cast<unsigned long>(i + 1);
    }
    delta.push_back(std::move(e));
    counit.push_back(Scalar(f, m == 0 ? 1 : 0));
  }
  return Coalgebra(f, std::move(labels), std::move(delta), std::move(counit));
}

Coalgebra gen_gd(std::size_t m, Field f) {
  if (m == 0) throw Error("gd: m must be at least 1");
  const Scalar one(f, 1);
  std::vector<std::string> labels;
  std::vector<Expansion> delta;
  Vector counit;
  for (std::size_t n = 0; n < m; ++n) {
    labels.push_back("g" + std::to_string(n + 1));
    delta.push_back({{one, n, n}});
    counit.push_back(one);
  }
  for (std::size_t n = 1; n < m; ++n) {
    const std::size_t d = m + n - 1;
    labels.push_back("d" + std::to_string(n));
    delta.push_back({{one, 0, d}, {one, d, n}});
    counit.push_back(Scalar(f));
  }
  return Coalgebra(f, std::move(labels), std::move(delta), std::move(counit));
}

Coalgebra gen_matrix_coalgebra(std::size_t n, Field f) {
  if (n == 0) throw Error("matrix coalgebra: n must be at least 1");
  const Scalar one(f, 1);
  const std::string sep = n > 9 ? "_" : "";
  std::vector<std::string> labels;
  std::vector<Expansion> delta;
  Vector counit;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back("e" + std::to_string(i + 1) + sep + std::to_string(j + 1));
      Expansion e;
      for (std::size_t k = 0; k < n; ++k) e.push_back({one, i * n + k, k * n + j});
      delta.push_back(std::move(e));
      counit.push_back(Scalar(f, i == j ? 1 : 0));
    }
  return Coalgebra(f, std::move(labels), std::move(delta), std::move(counit));
}

Coalgebra gen_path_coalgebra(const Quiver& q, std::size_t max_length, Field f,
                             std::size_t cap) {
  if (q.vertices.empty()) throw Error("path coalgebra: quiver has no vertices");
  for (const auto& a : q.arrows)
    if (a.source >= q.vertices.size() || a.target >= q.vertices.size())
      throw Error("path coalgebra: arrow '" + a.label + "' has a missing endpoint");

  // A path is its arrow sequence in running order (first arrow first).
  struct Path {
    std::vector<std::size_t> arrows;
    std::size_t source, target;
  };
  std::vector<Path> paths;
  for (std::size_t v = 0; v < q.vertices.size(); ++v) paths.push_back({{}, v, v});
  std::vector<std::size_t> frontier;
  for (std::size_t a = 0; a < q.arrows.size() && max_length >= 1; ++a) {
    paths.push_back({{a}, q.arrows[a].source, q.arrows[a].target});
    frontier.push_back(paths.size() - 1);
  }
  for (std::size_t len = 2; len <= max_length && !frontier.empty(); ++len) {
    std::vector<std::size_t> next;
    for (auto p : frontier)
      for (std::size_t a = 0; a < q.arrows.size(); ++a) {
        if (q.arrows[a].source != paths[p].target) continue;
        Path np = paths[p];
        np.arrows.push_back(a);
        np.target = q.arrows[a].target;
        paths.push_back(std::move(np));
        next.push_back(paths.size() - 1);
        if (paths.size() > cap)
          throw Error("path coalgebra: more than " + std::to_string(cap) + " paths");
      }
    frontier = std::move(next);
  }
  if (paths.size() > cap)
    throw Error("path coalgebra: more than " + std::to_string(cap) + " paths");

  std::map<std::pair<std::vector<std::size_t>, std::size_t>, std::size_t> index;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const Path& p = paths[i];
    // Vertices are keyed by (empty, vertex); longer paths by arrows alone.
    index[{p.arrows, p.arrows.empty() ? p.source : 0}] = i;
    if (p.arrows.empty()) {
      labels.push_back(q.vertices[p.source]);
    } else {
      std::string l;
      for (std::size_t k = p.arrows.size(); k-- > 0;) {
        l += q.arrows[p.arrows[k]].label;
        if (k) l += "*";
      }
      labels.push_back(l);
    }
  }
  const Scalar one(f, 1);
  std::vector<Expansion> delta;
  Vector counit;
  for (const Path& p : paths) {
    Expansion e;
    const std::size_t len = p.arrows.size();
    if (len == 0) {
      const std::size_t v = index.at({{}, p.source});
      e.push_back({one, v, v});
    }
    // Left factor runs the arrows after position i, right factor those up
    // to position i; i = len puts the target vertex on the left.
    for (std::size_t i = len + 1; i-- > 0 && len > 0;) {
      std::vector<std::size_t> right(p.arrows.begin(), p.arrows.begin() + static_cast<long>(i));
      std::vector<std::size_t> left(p.arrows.begin() + static_cast<long>(i), p.arrows.end());
      const std::size_t li = left.empty() ? index.at({{}, p.target}) : index.at({left, 0});
      const std::size_t ri = right.empty() ? index.at({{}, p.source}) : index.at({right, 0});
      e.push_back({one, li, ri});
    }
    delta.push_back(std::move(e));
    counit.push_back(Scalar(f, len == 0 ? 1 : 0));
  }
  return Coalgebra(f, std::move(labels), std::move(delta), std::move(counit));
}

Quiver random_quiver(std::uint64_t seed, std::size_t vertices, std::size_t arrows) {
  if (vertices == 0) throw Error("random quiver: needs at least one vertex");
  std::mt19937_64 rng(seed);
  Quiver q;
  for (std::size_t v = 0; v < vertices; ++v) q.vertices.push_back("v" + std::to_string(v + 1));
  for (std::size_t a = 0; a < arrows; ++a) {
    const auto s = static_cast<std::size_t>(rng() % vertices);
    const auto t = static_cast<std::size_t>(rng() % vertices);
    q.arrows.push_back({s, t, "a" + std::to_string(a + 1)});
  }
  return q;
}

Coalgebra gen_random(std::uint64_t seed, std::size_t vertices, std::size_t arrows,
                     std::size_t max_length, Field f, std::size_t cap) {
  return gen_path_coalgebra(random_quiver(seed, vertices, arrows), max_length, f, cap);
}

Quiver gd_quiver(std::size_t m) {
  Quiver q;
  for (std::size_t n = 1; n <= m; ++n) q.vertices.push_back("g" + std::to_string(n));
  for (std::size_t n = 1; n < m; ++n) q.arrows.push_back({n, 0, "d" + std::to_string(n)});
  return q;
}

Quiver loop_quiver(std::size_t d) {
  Quiver q;
  q.vertices.push_back("g");
  for (std::size_t i = 1; i <= d; ++i) q.arrows.push_back({0, 0, "x" + std::to_string(i)});
  return q;
}

}  // namespace coloc
