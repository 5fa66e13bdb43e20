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

#include <algorithm>

#include "gcep/error.hpp"
#include "gcep/groupoid.hpp"

using namespace gcep;

TEST_CASE("delooping and chaotic groupoids validate") {
  CHECK_FALSE(delooping(builtin("Sym(3)")).validate());
  CHECK_FALSE(chaotic_groupoid(4).validate());
  CHECK_FALSE(discrete_groupoid(3).validate());
  CHECK(chaotic_groupoid(3).hom(0, 2).size() == 1);
}

TEST_CASE("make rejects a broken table") {
  // two objects, one arrow each way, but composites do not return identities
  std::vector<Arrow> arrows{{0, 0}, {1, 1}, {0, 1}, {1, 0}};
  auto bad = [](Mor f, Mor g) {
    if (f < 2)
      return g;
    if (g < 2)
      return f;
    return f == 2 ? 1 : 1;
  };
  CHECK_THROWS_AS(FiniteGroupoid::make(2, arrows, {0, 1}, bad), Error);
  auto good = [](Mor f, Mor g) {
    if (f < 2)
      return g;
    if (g < 2)
      return f;
    return f == 2 ? 1 : 0;
  };
  CHECK_NOTHROW(FiniteGroupoid::make(2, arrows, {0, 1}, good));
}

TEST_CASE("chaotic groupoid is equivalent to a point") {
  const FiniteGroupoid x = chaotic_groupoid(5);
  const GroupoidFunctor f = constant_functor(x, terminal_groupoid(), 0);
  CHECK(check_equivalence(f).is_equivalence());
  const QuasiInverse q = quasi_inverse(f);
  CHECK(q.inverse.is_valid());
  CHECK(q.unit.is_valid());
  CHECK(q.counit.is_valid());
}

TEST_CASE("skeleton inclusion is an equivalence") {
  const Coproduct u = disjoint_union(chaotic_groupoid(3), delooping(builtin("Zn(3)")));
  const Skeleton s = skeleton(u.groupoid);
  CHECK(s.groupoid.num_objects() == 2);
  CHECK(s.groupoid.num_morphisms() == 4);
  CHECK(s.inclusion.is_valid());
  CHECK(check_equivalence(s.inclusion).is_equivalence());
  const QuasiInverse q = quasi_inverse(s.inclusion);
  CHECK(q.unit.is_valid());
  CHECK(q.counit.is_valid());
}

TEST_CASE("non-equivalences are reported") {
  const FiniteGroupoid bz2 = delooping(builtin("Zn(2)"));
  const GroupoidFunctor f = constant_functor(bz2, terminal_groupoid(), 0);
  const EquivalenceReport r = check_equivalence(f);
  CHECK(r.essentially_surjective);
  CHECK_FALSE(r.fully_faithful);
  CHECK(r.failing_pair.has_value());
  const GroupoidFunctor g = constant_functor(terminal_groupoid(), discrete_groupoid(2), 1);
  const EquivalenceReport r2 = check_equivalence(g);
  CHECK_FALSE(r2.essentially_surjective);
  CHECK(r2.component_witness[0] == -1);
}

TEST_CASE("products and unions") {
  const FiniteGroupoid a = delooping(builtin("Zn(2)"));
  const FiniteGroupoid b = chaotic_groupoid(2);
  const Product p = product(a, b);
  CHECK_FALSE(p.groupoid.validate());
  CHECK(p.groupoid.num_objects() == 2);
  CHECK(p.groupoid.num_morphisms() == 8);
  CHECK(p.left.is_valid());
  CHECK(p.right.is_valid());
  const Coproduct u = disjoint_union(a, b);
  CHECK_FALSE(u.groupoid.validate());
  CHECK(u.left.is_valid());
  CHECK(u.right.is_valid());
  CHECK(connected_components(u.groupoid).size() == 2);
}

TEST_CASE("natural isomorphisms between homomorphisms are conjugations") {
  const FiniteGroup s3 = builtin("Sym(3)");
  const FiniteGroup z2 = builtin("Zn(2)");
  const auto homs = all_homomorphisms(z2, s3);
  int conjugate_pairs = 0;
  for (const auto &h1 : homs)
    for (const auto &h2 : homs) {
      auto eta = find_natural_isomorphism(delooping(h1), delooping(h2));
      if (eta) {
        CHECK(eta->is_valid());
        ++conjugate_pairs;
      }
    }
  // classes {trivial} and {three transpositions}
  CHECK(homs.size() == 4);
  CHECK(conjugate_pairs == 1 + 9);
}

TEST_CASE("automorphism groups and isomorphism search") {
  const FiniteGroup q8 = builtin("Q8");
  const AutomorphismGroup aut = automorphism_group(delooping(q8), 0);
  CHECK(isomorphic(aut.group, q8));
  const auto iso = find_groupoid_isomorphism(
      disjoint_union(chaotic_groupoid(2), delooping(q8)).groupoid,
      disjoint_union(delooping(q8), chaotic_groupoid(2)).groupoid);
  REQUIRE(iso.has_value());
  CHECK(iso->is_valid());
  CHECK(iso->is_isomorphism());
  CHECK_FALSE(find_groupoid_isomorphism(delooping(q8), delooping(builtin("Dih(4)"))));
}

TEST_CASE("strict fiber of a product projection") {
  const Product p = product(chaotic_groupoid(2), delooping(builtin("Zn(3)")));
  const StrictFiber f = strict_fiber(p.right, 0);
  CHECK(f.groupoid.num_objects() == 2);
  CHECK(f.groupoid.num_morphisms() == 4);
  CHECK(f.inclusion.is_valid());
}

namespace {

// Every valid functor, by trying every morphism map.
std::vector<std::vector<Mor>> brute_force_functors(const FiniteGroupoid &c,
                                                   const FiniteGroupoid &d) {
  std::vector<std::vector<Mor>> out;
  const int m = c.num_morphisms();
  std::vector<Mor> mors(m, 0);
  while (true) {
    std::vector<Obj> objs(c.num_objects());
    bool ok = true;
    for (Obj x = 0; x < c.num_objects(); ++x) {
      objs[x] = d.source(mors[c.identity(x)]);
      ok = ok && d.is_identity(mors[c.identity(x)]);
    }
    if (ok && GroupoidFunctor(c, d, objs, mors).is_valid())
      out.push_back(mors);
    int i = m - 1;
    while (i >= 0 && ++mors[i] == d.num_morphisms())
      mors[i--] = 0;
    if (i < 0)
      break;
  }
  return out;
}

} // namespace

TEST_CASE("functor enumeration matches brute force") {
  const FiniteGroupoid bz2 = delooping(builtin("Zn(2)"));
  const FiniteGroupoid mixed = disjoint_union(bz2, chaotic_groupoid(2)).groupoid;
  const std::vector<std::pair<FiniteGroupoid, FiniteGroupoid>> cases{
      {terminal_groupoid(), mixed},
      {bz2, delooping(builtin("Zn(3)"))},
      {bz2, bz2},
      {chaotic_groupoid(2), mixed},
      {mixed, mixed},
      {discrete_groupoid(2), bz2},
      {delooping(builtin("Z2xZ2")), delooping(builtin("Sym(3)"))},
  };
  for (const auto &[c, d] : cases) {
    const auto fast = all_functors(c, d);
    auto slow = brute_force_functors(c, d);
    std::vector<std::vector<Mor>> fast_maps;
    for (const auto &f : fast) {
      CHECK(f.is_valid());
      fast_maps.push_back(f.mor_map());
    }
    std::sort(slow.begin(), slow.end());
    std::sort(fast_maps.begin(), fast_maps.end());
    CHECK(fast_maps == slow);
  }
}

TEST_CASE("functor enumeration respects constraints and bounds") {
  const FiniteGroupoid d = discrete_groupoid(3);
  FunctorSearch only_two;
  only_two.object_allowed = [](Obj, Obj y) { return y == 2; };
  CHECK(all_functors(chaotic_groupoid(3), d, only_two).size() == 1);
  CHECK(all_functors(chaotic_groupoid(3), d).size() == 3);
  CHECK(all_functors(FiniteGroupoid(), d).size() == 1);
  CHECK(all_functors(d, FiniteGroupoid()).empty());
  CHECK_THROWS_AS(all_functors(discrete_groupoid(8), discrete_groupoid(8), {}, 1000), Error);
}
