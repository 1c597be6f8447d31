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

// Seeded generators shared by the property-style tests.

#pragma once

#include <cstdint>
#include <random>

#include "coloc/matrix.hpp"

namespace coloc::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t next() { return rng_(); }
  /// Uniform in [lo, hi].
  long range(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(int percent = 50) { return range(0, 99) < percent; }

  Scalar scalar(Field f, long bound = 3) { return Scalar(f, range(-bound, bound)); }

  Vector vector(std::size_t n, Field f, long bound = 3) {
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(scalar(f, bound));
    return v;
  }

  /// Random matrix, with roughly `sparsity` percent of entries zeroed so
  /// that rank deficiency actually occurs.
  Matrix matrix(std::size_t r, std::size_t c, Field f, int sparsity = 50) {
    Matrix m(r, c, f);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (!coin(sparsity)) m(i, j) = scalar(f);
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace coloc::testing
