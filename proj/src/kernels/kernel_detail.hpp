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

#ifndef GCEP_KERNEL_DETAIL_HPP
#define GCEP_KERNEL_DETAIL_HPP

#include "gcep/kernels.hpp"

#include <vector>

namespace gcep::kernels {

namespace detail {

// Decodes `index` into `degree` digits in base `base`, little-endian.
inline void decode(std::int64_t index, int base, int degree, int *digits) {
  for (int i = 0; i < degree; ++i) {
    digits[i] = static_cast<int>(index % base);
    index /= base;
  }
}

inline std::int64_t encode(const int *digits, int base, int degree) {
  std::int64_t index = 0;
  for (int i = degree - 1; i >= 0; --i)
    index = index * base + digits[i];
  return index;
}

// Writes row `row` of the normalized bar differential into `out`. Tuple
// digits are element index - 1 (identity excluded).
inline void bar_row(std::span<const int> mul, int order, int degree, std::int64_t row,
                    std::int8_t *out) {
  const int base = order - 1;
  const int n1 = degree + 1;
  std::vector<int> g(n1);
  decode(row, base, n1, g.data());
  for (int &x : g)
    x += 1;
  auto add = [&](const std::vector<int> &elems, int sign) {
    for (int i = 0; i < degree; ++i)
      if (elems[i] == 0)
        return; // normalized cochains vanish on identity arguments
    std::vector<int> digits(degree);
    for (int i = 0; i < degree; ++i)
      digits[i] = elems[i] - 1;
    out[encode(digits.data(), base, degree)] += static_cast<std::int8_t>(sign);
  };
  std::vector<int> elems(degree);
  // g1 . c(g2, ..., g_{n+1}) with trivial action
  for (int i = 0; i < degree; ++i)
    elems[i] = g[i + 1];
  add(elems, 1);
  for (int k = 1; k <= degree; ++k) {
    int pos = 0;
    for (int i = 0; i < n1; ++i) {
      if (i == k - 1) {
        elems[pos++] = mul[g[i] * order + g[i + 1]];
        ++i;
      } else {
        elems[pos++] = g[i];
      }
    }
    add(elems, (k % 2 == 0) ? 1 : -1);
  }
  for (int i = 0; i < degree; ++i)
    elems[i] = g[i];
  add(elems, (n1 % 2 == 0) ? 1 : -1);
}

inline std::int64_t reduce(std::int64_t v, std::int64_t modulus) {
  if (modulus == 0)
    return v;
  v %= modulus;
  return v < 0 ? v + modulus : v;
}

// Coboundary value at full tuple `row` (base `order`). A nonempty `action`
// multiplies the first face by action[g1].
inline std::int64_t coboundary_at(std::span<const int> mul, int order, int degree,
                                  std::span<const std::int64_t> values, std::int64_t modulus,
                                  std::span<const std::int64_t> action, std::int64_t row) {
  const int n1 = degree + 1;
  std::vector<int> g(n1);
  decode(row, order, n1, g.data());
  std::vector<int> elems(degree);
  std::int64_t acc = 0;
  for (int i = 0; i < degree; ++i)
    elems[i] = g[i + 1];
  const std::int64_t first = values[encode(elems.data(), order, degree)];
  acc += action.empty() ? first : reduce(action[g[0]] * first, modulus);
  for (int k = 1; k <= degree; ++k) {
    int pos = 0;
    for (int i = 0; i < n1; ++i) {
      if (i == k - 1) {
        elems[pos++] = mul[g[i] * order + g[i + 1]];
        ++i;
      } else {
        elems[pos++] = g[i];
      }
    }
    const std::int64_t v = values[encode(elems.data(), order, degree)];
    acc += (k % 2 == 0) ? v : -v;
  }
  for (int i = 0; i < degree; ++i)
    elems[i] = g[i];
  const std::int64_t v = values[encode(elems.data(), order, degree)];
  acc += (n1 % 2 == 0) ? v : -v;
  return reduce(acc, modulus);
}

} // namespace detail
} // namespace gcep::kernels

#endif // GCEP_KERNEL_DETAIL_HPP
