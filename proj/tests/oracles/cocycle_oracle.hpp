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

// Brute-force cohomology oracles, independent of the Smith normal form code.

#ifndef GCEP_TESTS_COCYCLE_ORACLE_HPP
#define GCEP_TESTS_COCYCLE_ORACLE_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "gcep/group.hpp"

namespace gcep::oracle {

// Prime-power decomposition of a finite abelian group given by any list of
// cyclic orders, keyed by prime.
inline std::map<long, std::vector<long>> primary_parts(const std::vector<long> &orders) {
  std::map<long, std::vector<long>> parts;
  for (long n : orders) {
    for (long p = 2; n > 1; ++p) {
      long q = 1;
      while (n % p == 0) {
        n /= p;
        q *= p;
      }
      if (q > 1)
        parts[p].push_back(q);
    }
  }
  for (auto &[p, qs] : parts)
    std::sort(qs.rbegin(), qs.rend());
  return parts;
}

inline std::vector<long> invariant_factors(const std::map<long, std::vector<long>> &parts) {
  std::size_t width = 0;
  for (const auto &[p, qs] : parts)
    width = std::max(width, qs.size());
  std::vector<long> out(width, 1);
  for (const auto &[p, qs] : parts)
    for (std::size_t i = 0; i < qs.size(); ++i)
      out[i] *= qs[i];
  std::sort(out.begin(), out.end());
  return out;
}

// Invariant factors of H^2(G; Z/N), trivial action, by listing every
// normalized 2-cocycle and every coboundary and counting torsion.
inline std::vector<long> h2_by_enumeration(const FiniteGroup &g, long modulus) {
  const int n = g.order();
  const int m = n - 1;
  if (m == 0 || modulus == 1)
    return {};
  const int vars = m * m;
  auto var = [&](int a, int b) { return (a - 1) + (b - 1) * m; };
  auto reduce = [&](long v) { return ((v % modulus) + modulus) % modulus; };

  // Cayley spanning tree from the identity. Every class has representatives
  // vanishing on the tree edges that do not leave the identity; two such
  // representatives differ by d(beta) with beta additive along the tree.
  std::vector<int> parent(n, -1), step(n, -1), order{0};
  parent[0] = 0;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Elem s : g.generators()) {
      const int y = g.mul(order[i], s);
      if (parent[y] < 0) {
        parent[y] = order[i];
        step[y] = s;
        order.push_back(y);
      }
    }
  std::vector<int> roots; // elements reached from the identity in one step
  for (int y : order)
    if (y != 0 && parent[y] == 0)
      roots.push_back(y);

  auto coboundary_key = [&](const std::vector<long> &beta) {
    std::string key(vars, '\0');
    for (int a = 1; a < n; ++a)
      for (int c = 1; c < n; ++c)
        key[var(a, c)] = static_cast<char>(reduce(beta[a] + beta[c] - beta[g.mul(a, c)]));
    return key;
  };
  std::unordered_set<std::string> residual;
  std::vector<long> beta(n, 0);
  std::function<void(std::size_t)> each_root = [&](std::size_t i) {
    if (i == roots.size()) {
      for (int y : order)
        if (y != 0 && parent[y] != 0)
          beta[y] = reduce(beta[parent[y]] + beta[step[y]]);
      residual.insert(coboundary_key(beta));
      return;
    }
    for (long v = 0; v < modulus; ++v) {
      beta[roots[i]] = v;
      each_root(i + 1);
    }
  };
  each_root(0);

  // z(c,e) - z(ac,e) + z(a,ce) - z(a,c) = 0 over the non-identity slots,
  // with repeated slots merged.
  struct Equation {
    std::vector<std::pair<int, long>> terms;
  };
  std::vector<Equation> equations;
  std::vector<std::vector<int>> touching(vars);
  for (int a = 1; a < n; ++a)
    for (int c = 1; c < n; ++c)
      for (int e = 1; e < n; ++e) {
        const int pairs[4][2] = {{c, e}, {g.mul(a, c), e}, {a, g.mul(c, e)}, {a, c}};
        const long signs[4] = {1, -1, 1, -1};
        std::map<int, long> coeff;
        for (int i = 0; i < 4; ++i)
          if (pairs[i][0] != 0 && pairs[i][1] != 0)
            coeff[var(pairs[i][0], pairs[i][1])] += signs[i];
        Equation eq;
        for (const auto &[slot, c0] : coeff)
          if (reduce(c0) != 0)
            eq.terms.push_back({slot, reduce(c0)});
        if (eq.terms.empty())
          continue;
        for (const auto &t : eq.terms)
          touching[t.first].push_back(static_cast<int>(equations.size()));
        equations.push_back(std::move(eq));
      }
  auto inverse_unit = [&](long c) {
    for (long x = 1; x < modulus; ++x)
      if (c * x % modulus == 1)
        return x;
    return 0L;
  };

  std::vector<long> z(vars, -1);
  std::vector<int> trail;
  // Assigns and propagates; false on a violated equation.
  std::function<bool(int, long)> assign = [&](int slot, long value) {
    std::vector<std::pair<int, long>> queue{{slot, value}};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      const auto [s, v] = queue[q];
      if (z[s] >= 0) {
        if (z[s] != v)
          return false;
        continue;
      }
      z[s] = v;
      trail.push_back(s);
      for (int k : touching[s]) {
        long sum = 0;
        int open = -1, open_count = 0;
        long open_coeff = 0;
        for (const auto &[t, c] : equations[k].terms) {
          if (z[t] >= 0)
            sum += c * z[t];
          else {
            ++open_count;
            open = t;
            open_coeff = c;
          }
        }
        if (open_count == 0 && reduce(sum) != 0)
          return false;
        if (open_count == 1) {
          const long inv = inverse_unit(open_coeff);
          if (inv != 0)
            queue.push_back({open, reduce(-sum * inv)});
        }
      }
    }
    return true;
  };
  auto undo = [&](std::size_t mark) {
    while (trail.size() > mark) {
      z[trail.back()] = -1;
      trail.pop_back();
    }
  };

  std::vector<long> prime_powers;
  for (const auto &[p, qs] : primary_parts({modulus}))
    for (long q = p; modulus % q == 0; q *= p)
      prime_powers.push_back(q);
  std::map<long, long> torsion_count;
  std::string scaled(vars, '\0');

  std::function<void()> search = [&] {
    int slot = -1;
    for (int i = 0; i < vars && slot < 0; ++i)
      if (z[i] < 0)
        slot = i;
    if (slot < 0) {
      // Fully assigned: every equation was checked when its last slot closed.
      for (long q : prime_powers) {
        for (int i = 0; i < vars; ++i)
          scaled[i] = static_cast<char>(q * z[i] % modulus);
        if (residual.count(scaled))
          ++torsion_count[q];
      }
      return;
    }
    for (long value = 0; value < modulus; ++value) {
      const std::size_t mark = trail.size();
      if (assign(slot, value))
        search();
      undo(mark);
    }
  };
  bool consistent = true;
  for (int y : order)
    if (y != 0 && parent[y] != 0)
      consistent = consistent && assign(var(parent[y], step[y]), 0);
  if (consistent)
    search();

  // |H[p^k]| = torsion_count[p^k] / |R|; the number of cyclic factors of
  // order at least p^k is log_p(|H[p^k]| / |H[p^(k-1)]|).
  const long base = static_cast<long>(residual.size());
  std::map<long, std::vector<long>> parts;
  for (const auto &[p, qs] : primary_parts({modulus})) {
    std::vector<long> at_least;
    long prev = 1;
    for (long q = p; modulus % q == 0; q *= p) {
      const long size = torsion_count[q] / base;
      long ratio = size / prev, r = 0;
      while (ratio > 1) {
        ratio /= p;
        ++r;
      }
      at_least.push_back(r);
      prev = size;
    }
    long q = p;
    for (std::size_t k = 0; k < at_least.size(); ++k, q *= p) {
      const long next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      for (long i = 0; i < at_least[k] - next; ++i)
        parts[p].push_back(q);
    }
    std::sort(parts[p].rbegin(), parts[p].rend());
  }
  return invariant_factors(parts);
}

// Multiset difference of primary decompositions: H^2(G; Z/|G|) is
// M(G) + G^ab for trivial action.
inline std::vector<long> schur_by_enumeration(const FiniteGroup &g) {
  const auto h2 = primary_parts(h2_by_enumeration(g, g.order()));
  const auto ab = primary_parts(abelianization_invariants(g));
  std::map<long, std::vector<long>> rest;
  for (const auto &[p, qs] : h2) {
    std::vector<long> left = qs;
    if (auto it = ab.find(p); it != ab.end())
      for (long q : it->second) {
        auto hit = std::find(left.begin(), left.end(), q);
        if (hit == left.end())
          return {-1}; // G^ab does not embed: the enumeration is inconsistent
        left.erase(hit);
      }
    if (!left.empty())
      rest[p] = left;
  }
  return invariant_factors(rest);
}

} // namespace gcep::oracle

#endif // GCEP_TESTS_COCYCLE_ORACLE_HPP
