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

#include "kernel_detail.hpp"

#include <limits>

namespace gcep::kernels {

std::int64_t checked_pow(std::int64_t base, int exponent) {
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && result > std::numeric_limits<std::int64_t>::max() / base)
      return std::numeric_limits<std::int64_t>::max();
    result *= base;
  }
  return result;
}

namespace serial {

std::optional<std::array<int, 3>> find_nonassociative(const CompositionTable &t) {
  const int m = t.size;
  for (int f = 0; f < m; ++f)
    for (int g = 0; g < m; ++g) {
      const int fg = t.entries[f * m + g];
      for (int h = 0; h < m; ++h) {
        const int gh = t.entries[g * m + h];
        const int left = fg < 0 ? -1 : t.entries[fg * m + h];
        const int right = gh < 0 ? -1 : t.entries[f * m + gh];
        if (fg < 0 && gh < 0)
          continue;
        if (left != right)
          return std::array<int, 3>{f, g, h};
      }
    }
  return std::nullopt;
}

BarDifferential bar_differential(std::span<const int> mul, int order, int degree) {
  BarDifferential d;
  const int base = order - 1;
  d.rows = static_cast<int>(checked_pow(base, degree + 1));
  d.cols = static_cast<int>(checked_pow(base, degree));
  d.entries.assign(static_cast<std::size_t>(d.rows) * d.cols, 0);
  if (order <= 1)
    return d;
  for (std::int64_t r = 0; r < d.rows; ++r)
    detail::bar_row(mul, order, degree, r, d.entries.data() + r * d.cols);
  return d;
}

std::vector<int> classify(int n, const PairPredicate &related) {
  std::vector<int> label(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < reps.size(); ++c)
      if (related(reps[c], i)) {
        label[i] = static_cast<int>(c);
        break;
      }
    if (label[i] < 0) {
      label[i] = static_cast<int>(reps.size());
      reps.push_back(i);
    }
  }
  return label;
}

std::vector<std::int64_t> coboundary(std::span<const int> mul, int order, int degree,
                                     std::span<const std::int64_t> values,
                                     std::int64_t modulus,
                                     std::span<const std::int64_t> action) {
  const std::int64_t rows = checked_pow(order, degree + 1);
  std::vector<std::int64_t> out(rows);
  for (std::int64_t r = 0; r < rows; ++r)
    out[r] = detail::coboundary_at(mul, order, degree, values, modulus, action, r);
  return out;
}

} // namespace serial
} // namespace gcep::kernels
