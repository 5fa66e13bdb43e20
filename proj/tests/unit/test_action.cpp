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

#include "gcep/action.hpp"
#include "gcep/error.hpp"

using namespace gcep;

namespace {

// S3 on {0,1,2} plus a fixed point 3.
GroupAction s3_plus_point() {
  const FiniteGroup g = builtin("Sym(3)");
  std::vector<Permutation> images;
  for (Elem s : g.generators()) {
    Permutation p = g.permutation(s);
    p.push_back(3);
    images.push_back(p);
  }
  return GroupAction::on_set(g, 4, images);
}

} // namespace

TEST_CASE("quotient by the trivial group is the carrier") {
  const FiniteGroupoid x = disjoint_union(chaotic_groupoid(2), delooping(builtin("Zn(3)"))).groupoid;
  const QuotientGroupoid q = homotopy_quotient(trivial_action(builtin("Zn(1)"), x));
  CHECK(q.total == x);
  CHECK(fiber_check(q));
}

TEST_CASE("quotient of a point is the delooping") {
  const FiniteGroup g = builtin("Q8");
  const QuotientGroupoid q = homotopy_quotient(trivial_action(g, terminal_groupoid()));
  CHECK(q.total == delooping(g));
  CHECK(q.projection.is_isomorphism());
  CHECK(fiber_check(q));
}

TEST_CASE("free action collapses to the orbit set") {
  const GroupAction a = GroupAction::on_set(builtin("Zn(2)"), 2, {{1, 0}});
  CHECK(is_free(a));
  const QuotientGroupoid q = homotopy_quotient(a);
  CHECK_FALSE(q.total.validate());
  const Skeleton s = skeleton(q.total);
  CHECK(s.groupoid == terminal_groupoid());
  CHECK(check_equivalence(constant_functor(q.total, terminal_groupoid(), 0)).is_equivalence());
  const StrictFiber f = strict_fiber(q.projection, 0);
  CHECK(f.groupoid == discrete_groupoid(2));
  CHECK(fiber_check(q));
}

TEST_CASE("universal bundles are contractible") {
  for (const char *name : {"Zn(1)", "Zn(2)", "Sym(3)", "A4"}) {
    const FiniteGroup g = builtin(name);
    const QuotientGroupoid eg = universal_bundle(g);
    CHECK(eg.total.num_objects() == g.order());
    for (Obj x = 0; x < g.order(); ++x)
      for (Obj y = 0; y < g.order(); ++y)
        CHECK(eg.total.hom(x, y).size() == 1);
    CHECK(check_equivalence(constant_functor(eg.total, terminal_groupoid(), 0)).is_equivalence());
    CHECK(fiber_check(eg));
  }
}

TEST_CASE("quotient invariants on S3 acting on 3 points and a fixed point") {
  const GroupAction a = s3_plus_point();
  const QuotientGroupoid q = homotopy_quotient(a);
  CHECK_FALSE(q.total.validate());
  CHECK(q.projection.is_valid());
  CHECK(q.inclusion.is_valid());
  CHECK(q.total.num_morphisms() == 6 * 4);
  const auto orb = orbits(a);
  REQUIRE(orb.size() == 2);
  CHECK(orb[0] == std::vector<Obj>{0, 1, 2});
  CHECK(orb[1] == std::vector<Obj>{3});
  for (Obj x = 0; x < 4; ++x) {
    const Subgroup st = stabilizer(a, x);
    CHECK(st.group.order() == (x == 3 ? 6 : 2));
    CHECK(isomorphic(automorphism_group(q.total, x).group, st.group));
  }
  CHECK(fiber_check(q));
}

TEST_CASE("action on a groupoid carrier") {
  // Z/2 swapping the objects of chaotic(2)
  const FiniteGroupoid x = chaotic_groupoid(2);
  const GroupoidFunctor swap(x, x, {1, 0}, {3, 2, 1, 0});
  const GroupAction a = GroupAction::from_generators(builtin("Zn(2)"), x, {swap});
  const QuotientGroupoid q = homotopy_quotient(a);
  CHECK_FALSE(q.total.validate());
  CHECK(q.total.num_morphisms() == 8);
  CHECK(fiber_check(q));
  CHECK(isomorphic(automorphism_group(q.total, 0).group, builtin("Zn(2)")));
}

TEST_CASE("invalid actions are rejected") {
  const FiniteGroup z3 = builtin("Zn(3)");
  CHECK_THROWS_AS(GroupAction::on_set(z3, 2, {{1, 0}}), Error);
  CHECK_THROWS_AS(GroupAction::on_set(z3, 3, {{1, 1, 0}}), Error);
}

TEST_CASE("homotopy fixed points of G-sets are fixed points") {
  const GroupAction swap = GroupAction::on_set(builtin("Zn(2)"), 2, {{1, 0}});
  CHECK(homotopy_fixed_points(swap).groupoid.num_objects() == 0);

  const HomotopyFixedPoints h = homotopy_fixed_points(s3_plus_point());
  CHECK(h.groupoid == discrete_groupoid(1));
  CHECK(h.points[0].base == 3);

  const FiniteGroupoid x = discrete_groupoid(3);
  const HomotopyFixedPoints t = homotopy_fixed_points(trivial_action(builtin("Sym(3)"), x));
  CHECK(t.groupoid == x);
}

TEST_CASE("homotopy fixed points of a point with trivial action on BH") {
  // Fixed points of the trivial G-action on BH are homomorphisms G -> H up to
  // conjugation, with centralizers as automorphisms.
  const FiniteGroup g = builtin("Zn(2)");
  const FiniteGroup h = builtin("Sym(3)");
  const HomotopyFixedPoints f = homotopy_fixed_points(trivial_action(g, delooping(h)));
  CHECK(f.groupoid.num_objects() == 4);
  CHECK(connected_components(f.groupoid).size() == 2);
  for (const FixedPoint &p : f.points) {
    const GroupoidFunctor phi = equivariant_functor(trivial_action(g, delooping(h)), p);
    CHECK(phi.is_valid());
  }
}

TEST_CASE("fixed points induce fixed points along equivariant families") {
  const GroupAction x = s3_plus_point();
  const FiniteGroup g = x.group();
  const GroupAction theta = trivial_action(g, discrete_groupoid(2));
  const GroupoidFunctor family(x.carrier(), theta.carrier(), {0, 0, 0, 1}, {0, 0, 0, 1});
  CHECK(is_equivariant(x, theta, family));
  const auto hx = homotopy_fixed_points(x);
  const auto ht = homotopy_fixed_points(theta);
  const GroupoidFunctor induced = induced_fixed_point_functor(x, theta, family, hx, ht);
  CHECK(induced.is_valid());
  const GroupoidFunctor bad(x.carrier(), theta.carrier(), {0, 1, 0, 1}, {0, 1, 0, 1});
  CHECK_FALSE(is_equivariant(x, theta, bad));
}
