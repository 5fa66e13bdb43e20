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

#ifndef GCEP_TESTS_CORPUS_HPP
#define GCEP_TESTS_CORPUS_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gcep/action.hpp"
#include "gcep/group.hpp"

namespace gcep::corpus {

struct NamedGroup {
  std::string name;
  FiniteGroup group;
};

/// Zn(1..8), Sym(3), Dih(4), Q8, Z2xZ2, A4.
inline std::vector<NamedGroup> groups() {
  std::vector<NamedGroup> out;
  for (int n = 1; n <= 8; ++n) {
    const std::string name = "Zn(" + std::to_string(n) + ")";
    out.push_back({name, builtin(name)});
  }
  for (const char *name : {"Sym(3)", "Dih(4)", "Q8", "Z2xZ2", "A4"})
    out.push_back({name, builtin(name)});
  return out;
}

using ElementSet = std::vector<Elem>;

/// One subgroup per conjugacy class, as sorted element lists. Every corpus
/// group has only subgroups on at most two generators.
inline std::vector<ElementSet> subgroup_classes(const FiniteGroup &g) {
  std::set<ElementSet> all;
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = a; b < g.order(); ++b) {
      const Subgroup s = generated_subgroup(g, {a, b});
      ElementSet e = s.inclusion.map();
      std::sort(e.begin(), e.end());
      all.insert(e);
    }
  std::vector<ElementSet> out;
  std::set<ElementSet> seen;
  for (const ElementSet &h : all) {
    if (seen.count(h))
      continue;
    out.push_back(h);
    for (Elem x = 0; x < g.order(); ++x) {
      ElementSet c;
      for (Elem y : h)
        c.push_back(g.mul(g.mul(x, y), g.inv(x)));
      std::sort(c.begin(), c.end());
      seen.insert(c);
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const ElementSet &a, const ElementSet &b) { return a.size() > b.size(); });
  return out;
}

/// A G-set by generator images.
struct GSet {
  int points = 0;
  std::vector<Permutation> images;
};

/// Left cosets g H numbered by first appearance.
inline GSet cosets(const FiniteGroup &g, const ElementSet &h) {
  std::vector<int> coset_of(g.order(), -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < g.order(); ++x) {
    if (coset_of[x] >= 0)
      continue;
    for (Elem y : h)
      coset_of[g.mul(x, y)] = static_cast<int>(reps.size());
    reps.push_back(x);
  }
  GSet out{static_cast<int>(reps.size()), {}};
  for (Elem s : g.generators()) {
    Permutation p(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      p[i] = coset_of[g.mul(s, reps[i])];
    out.images.push_back(p);
  }
  return out;
}

inline GSet disjoint(const GSet &a, const GSet &b) {
  GSet out = a;
  out.points += b.points;
  for (std::size_t k = 0; k < out.images.size(); ++k)
    for (int v : b.images[k])
      out.images[k].push_back(v + a.points);
  return out;
}

struct NamedAction {
  std::string name;
  GroupAction action;
  bool transitive;
};

inline GroupAction on_gset(const FiniteGroup &g, const GSet &x) {
  return GroupAction::on_set(g, x.points, x.images);
}

/// Every transitive G-set on at most `max_points` points (one per subgroup
/// class) and intransitive ones: two fixed points, the largest nontrivial
/// transitive set plus a fixed point, and two regular orbits when they fit.
inline std::vector<NamedAction> actions(const NamedGroup &ng, int max_points = 8) {
  const FiniteGroup &g = ng.group;
  std::vector<NamedAction> out;
  GSet largest;
  std::string largest_name;
  for (const ElementSet &h : subgroup_classes(g)) {
    const int points = g.order() / static_cast<int>(h.size());
    if (points > max_points)
      continue;
    const GSet x = cosets(g, h);
    const std::string name = ng.name + "/H" + std::to_string(h.size());
    out.push_back({name + "(" + std::to_string(points) + ")", on_gset(g, x), true});
    if (points < max_points && points > largest.points) {
      largest = x;
      largest_name = name;
    }
  }
  const GSet point = cosets(g, subgroup_classes(g).front());
  out.push_back({ng.name + " two fixed points", on_gset(g, disjoint(point, point)), false});
  if (largest.points > 1)
    out.push_back({largest_name + " plus fixed point", on_gset(g, disjoint(largest, point)),
                   false});
  if (2 * g.order() <= max_points && g.order() > 1) {
    const GSet regular = cosets(g, {0});
    out.push_back({ng.name + " two regular orbits", on_gset(g, disjoint(regular, regular)),
                   false});
  }
  return out;
}

} // namespace gcep::corpus

#endif // GCEP_TESTS_CORPUS_HPP
