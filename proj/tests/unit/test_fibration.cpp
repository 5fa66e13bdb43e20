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

#include "gcep/error.hpp"
#include "gcep/fibration.hpp"

using namespace gcep;

namespace {

GroupAction swap_action() { return GroupAction::on_set(builtin("Zn(2)"), 2, {{1, 0}}); }

// Z/2 acting on chaotic(2) by swapping the objects: fibers are not discrete.
GroupAction groupoid_action() {
  const FiniteGroupoid x = chaotic_groupoid(2);
  return GroupAction::from_generators(builtin("Zn(2)"), x,
                                      {GroupoidFunctor(x, x, {1, 0}, {3, 2, 1, 0})});
}

void check_round_trips(const Fibration &p) {
  const UnstraightenRoundTrip b = unstraighten_straighten(p);
  CHECK(b.witness.ok());
  const StraightenedFunctor s = straighten(p);
  CHECK_FALSE(s.validate());
  const StraightenRoundTrip a = straighten_unstraighten(s);
  CHECK_FALSE(validate_iso(s, a.round_trip, a.iso));
}

} // namespace

TEST_CASE("identity functors are fibrations") {
  const FiniteGroupoid x = disjoint_union(chaotic_groupoid(2), delooping(builtin("Sym(3)"))).groupoid;
  CHECK(is_fibration(identity_functor(x)).ok);
  const StraightenedFunctor s = straighten(identity_functor(x));
  for (Obj c = 0; c < x.num_objects(); ++c)
    CHECK(s.fiber(c) == terminal_groupoid());
  const SectionReport r = sections(Fibration::covering(identity_functor(x)));
  CHECK(r.sections.size() == 1);
  CHECK(r.bijective);
}

TEST_CASE("fold map is a double cover; collapsing is not a fibration") {
  const FiniteGroupoid x = chaotic_groupoid(2);
  const Coproduct u = disjoint_union(x, x);
  std::vector<Obj> objs{0, 1, 0, 1};
  std::vector<Mor> mors{0, 1, 2, 3, 0, 1, 2, 3};
  const GroupoidFunctor fold(u.groupoid, x, objs, mors);
  REQUIRE(fold.is_valid());
  CHECK(is_fibration(fold).ok);
  CHECK(sections(Fibration::covering(fold)).sections.size() == 2);
  const GroupoidFunctor collapse(u.groupoid, terminal_groupoid(), {0, 0, 0, 0},
                                 std::vector<Mor>(8, 0));
  const FibrationCheck c2 = is_fibration(collapse);
  CHECK_FALSE(c2.ok);
  REQUIRE(c2.counterexample);
  CHECK(c2.counterexample->lifts == 2);
  CHECK_THROWS_AS(straighten(collapse), Error);
}

TEST_CASE("quotient projections are fibrations and straighten to the action") {
  const GroupAction a = swap_action();
  const QuotientGroupoid q = homotopy_quotient(a);
  CHECK(is_fibration(q.projection).ok);
  const StraightenedFunctor s = straighten(q.projection);
  for (Elem g = 0; g < 2; ++g)
    CHECK(s.transport(g).obj_map() == a.act(g).obj_map());
  check_round_trips(Fibration::covering(q.projection));
}

TEST_CASE("universal bundle straightens to the regular set") {
  const FiniteGroup g = builtin("Zn(3)");
  const QuotientGroupoid eg = universal_bundle(g);
  const StraightenedFunctor s = straighten(eg.projection);
  const GroupAction reg = regular_action(g);
  CHECK(s.fiber(0) == reg.carrier());
  for (Elem e = 0; e < 3; ++e)
    CHECK(s.transport(e) == reg.act(e));
  CHECK(unstraighten(action_functor(reg)).total() == eg.total);
}

TEST_CASE("unstraightening an action is the homotopy quotient") {
  for (const GroupAction &a : {swap_action(), groupoid_action()}) {
    const Fibration un = unstraighten(action_functor(a));
    const QuotientGroupoid q = homotopy_quotient(a);
    CHECK(un.total() == q.total);
    CHECK(un.proj() == q.projection);
  }
}

TEST_CASE("unstraightening the constant point is the identity") {
  const FiniteGroupoid x = disjoint_union(chaotic_groupoid(3), delooping(builtin("Q8"))).groupoid;
  const Fibration un = unstraighten(constant_straightened(x, terminal_groupoid()));
  CHECK(un.total() == x);
  CHECK(un.proj() == identity_functor(x));
}

TEST_CASE("groupoid fibers survive both round trips") {
  const GroupAction a = groupoid_action();
  const QuotientGroupoid q = homotopy_quotient(a);
  CHECK_FALSE(is_fibration(q.projection).ok);
  const Fibration p = quotient_fibration(a, q);
  check_round_trips(p);
  const StraightenedFunctor s = straighten(p);
  CHECK(s.fiber(0) == a.carrier());
}

TEST_CASE("invalid cleavages are rejected") {
  const QuotientGroupoid q = homotopy_quotient(groupoid_action());
  std::vector<Mor> lifts(4, -1);
  CHECK_THROWS_AS(Fibration(q.projection, lifts), Error);
}

TEST_CASE("universal bundles have no sections") {
  for (const char *name : {"Zn(2)", "Sym(3)"}) {
    const QuotientGroupoid eg = universal_bundle(builtin(name));
    const SectionReport r = sections(Fibration::covering(eg.projection));
    CHECK(r.sections.empty());
    CHECK(r.transformations.empty());
    CHECK(r.bijective);
  }
}

TEST_CASE("sections of quotient fibrations are fixed points") {
  // a section of X//G -> BG picks a point and a compatible family, i.e. a
  // homotopy fixed point
  const FiniteGroup g = builtin("Sym(3)");
  std::vector<Permutation> images;
  for (Elem s : g.generators()) {
    Permutation p = g.permutation(s);
    p.push_back(3);
    p.push_back(4);
    images.push_back(p);
  }
  const GroupAction a = GroupAction::on_set(g, 5, images);
  const QuotientGroupoid q = homotopy_quotient(a);
  const SectionReport r = sections(quotient_fibration(a, q));
  CHECK(r.sections.size() == 2);
  CHECK(r.bijective);
  for (const auto &t : r.transformations)
    CHECK(is_pointed_transformation(straighten(quotient_fibration(a, q)), t));

  const GroupAction ga = groupoid_action();
  const QuotientGroupoid gq = homotopy_quotient(ga);
  const SectionReport gr = sections(quotient_fibration(ga, gq));
  CHECK(gr.bijective);
  CHECK(gr.sections.size() ==
        static_cast<std::size_t>(homotopy_fixed_points(ga).groupoid.num_objects()));
}

TEST_CASE("sections of trivial bundles are functors to the fiber") {
  const FiniteGroupoid bz2 = delooping(builtin("Zn(2)"));
  const std::vector<std::pair<FiniteGroupoid, FiniteGroupoid>> cases{
      {bz2, bz2},
      {chaotic_groupoid(2), discrete_groupoid(3)},
      {disjoint_union(bz2, terminal_groupoid()).groupoid, delooping(builtin("Sym(3)"))},
  };
  for (const auto &[y, f] : cases) {
    const TrivialSectionReport r = trivial_bundle_sections(y, f);
    CHECK(r.bijective);
    CHECK(r.sections.size() == r.functors.size());
    CHECK_FALSE(r.functors.empty());
  }
}

TEST_CASE("section bounds") {
  CHECK_THROWS_AS(sections(Fibration::covering(identity_functor(discrete_groupoid(13)))), Error);
  CHECK_THROWS_AS(sections(Fibration::covering(identity_functor(delooping(builtin("Sym(5)"))))),
                  Error);
}
