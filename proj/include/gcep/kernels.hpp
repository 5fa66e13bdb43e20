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

// Data-parallel inner loops shared by the algebraic modules.
//
// Every kernel exists twice with an identical signature: a plain serial
// reference in `gcep::kernels::serial` and an OpenMP version in
// `gcep::kernels::omp`. The library calls the OpenMP versions; the tests
// check them against the serial ones and bench/ times both. All kernels are
// deterministic: results never depend on thread count or schedule.

#ifndef GCEP_KERNELS_HPP
#define GCEP_KERNELS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace gcep::kernels {

/// Partial composition table of `size` arrows; entry [f * size + g] is the
/// index of "f after g", or -1 when the pair is not composable.
struct CompositionTable {
  int size = 0;
  std::span<const int> entries;
};

/// Normalized bar-complex differential d: C^n -> C^{n+1} for a group given
/// by its multiplication table, with trivially acted-on coefficients.
/// Rows are indexed by (n+1)-tuples and columns by n-tuples of non-identity
/// elements, both in base-(order-1) little-endian digit order.
struct BarDifferential {
  int rows = 0;
  int cols = 0;
  std::vector<std::int8_t> entries; // row-major
};

using PairPredicate = std::function<bool(int, int)>;

namespace serial {

/// First triple (f, g, h), lexicographically, where both (fg)h and f(gh) are
/// defined but differ, or where exactly one side is defined.
std::optional<std::array<int, 3>> find_nonassociative(const CompositionTable &t);

BarDifferential bar_differential(std::span<const int> mul, int order, int degree);

/// Labels 0..n-1 with equivalence-class ids, where `related` is an
/// equivalence relation. Class ids are assigned in order of first member.
std::vector<int> classify(int n, const PairPredicate &related);

/// Evaluates the coboundary of a cochain with values in Z/modulus (modulus 0
/// means Z) on the full (non-normalized) bar complex. `action` gives the
/// scalar by which each element acts on the coefficients; empty means
/// trivial.
std::vector<std::int64_t> coboundary(std::span<const int> mul, int order, int degree,
                                     std::span<const std::int64_t> values,
                                     std::int64_t modulus,
                                     std::span<const std::int64_t> action = {});

} // namespace serial

namespace omp {

std::optional<std::array<int, 3>> find_nonassociative(const CompositionTable &t);

BarDifferential bar_differential(std::span<const int> mul, int order, int degree);

std::vector<int> classify(int n, const PairPredicate &related);

std::vector<std::int64_t> coboundary(std::span<const int> mul, int order, int degree,
                                     std::span<const std::int64_t> values,
                                     std::int64_t modulus,
                                     std::span<const std::int64_t> action = {});

} // namespace omp

/// Integer power with overflow guard, used for tuple counts.
std::int64_t checked_pow(std::int64_t base, int exponent);

} // namespace gcep::kernels

#endif // GCEP_KERNELS_HPP
