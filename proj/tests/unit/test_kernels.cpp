// Copyright 2026 The gcep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <random>

#include "gcep/group.hpp"
#include "gcep/groupoid.hpp"
#include "gcep/kernels.hpp"

using namespace gcep;
namespace k = gcep::kernels;

TEST_CASE("associativity kernels agree") {
  for (const char *name : {"Sym(3)", "Q8", "A4"}) {
    const FiniteGroupoid x = delooping(builtin(name));
    const k::CompositionTable t{x.num_morphisms(), x.composition_table()};
    CHECK_FALSE(k::serial::find_nonassociative(t));
    CHECK_FALSE(k::omp::find_nonassociative(t));
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5;
    std::vector<int> table(n * n);
    for (int &v : table)
      v = static_cast<int>(rng() % n);
    const k::CompositionTable t{n, table};
    CHECK(k::serial::find_nonassociative(t) == k::omp::find_nonassociative(t));
  }
}

TEST_CASE("bar differential kernels agree") {
  for (const char *name : {"Zn(3)", "Sym(3)", "Z2xZ2"}) {
    const FiniteGroup g = builtin(name);
    for (int degree = 0; degree <= 2; ++degree) {
      const auto a = k::serial::bar_differential(g.table(), g.order(), degree);
      const auto b = k::omp::bar_differential(g.table(), g.order(), degree);
      CHECK(a.rows == b.rows);
      CHECK(a.cols == b.cols);
      CHECK(a.entries == b.entries);
    }
  }
}

TEST_CASE("bar differential squares to zero") {
  const FiniteGroup g = builtin("Sym(3)");
  const auto d0 = k::omp::bar_differential(g.table(), g.order(), 0);
  const auto d1 = k::omp::bar_differential(g.table(), g.order(), 1);
  for (int r = 0; r < d1.rows; ++r)
    for (int c = 0; c < d0.cols; ++c) {
      long s = 0;
      for (int m = 0; m < d1.cols; ++m)
        s += d1.entries[r * d1.cols + m] * d0.entries[m * d0.cols + c];
      CHECK(s == 0);
    }
  const auto d2 = k::omp::bar_differential(g.table(), g.order(), 2);
  for (int r = 0; r < d2.rows; r += 7)
    for (int c = 0; c < d1.cols; ++c) {
      long s = 0;
      for (int m = 0; m < d2.cols; ++m)
        s += d2.entries[r * d2.cols + m] * d1.entries[m * d1.cols + c];
      CHECK(s == 0);
    }
}

TEST_CASE("classify kernels agree") {
  const FiniteGroup g = builtin("Dih(4)");
  auto conj = [&](int a, int b) {
    for (Elem x = 0; x < g.order(); ++x)
      if (g.mul(g.mul(x, a), g.inv(x)) == b)
        return true;
    return false;
  };
  const auto a = k::serial::classify(g.order(), conj);
  const auto b = k::omp::classify(g.order(), conj);
  CHECK(a == b);
  CHECK(*std::max_element(a.begin(), a.end()) == 4);
}

TEST_CASE("coboundary kernels agree") {
  const FiniteGroup g = builtin("Sym(3)");
  std::mt19937 rng(3);
  for (int degree = 0; degree <= 2; ++degree) {
    std::vector<std::int64_t> values(k::checked_pow(g.order(), degree));
    for (auto &v : values)
      v = static_cast<std::int64_t>(rng() % 5);
    CHECK(k::serial::coboundary(g.table(), g.order(), degree, values, 5) ==
          k::omp::coboundary(g.table(), g.order(), degree, values, 5));
    CHECK(k::serial::coboundary(g.table(), g.order(), degree, values, 0) ==
          k::omp::coboundary(g.table(), g.order(), degree, values, 0));
  }
}

TEST_CASE("checked_pow saturates") {
  CHECK(k::checked_pow(3, 4) == 81);
  CHECK(k::checked_pow(1000, 10) == std::numeric_limits<std::int64_t>::max());
}
