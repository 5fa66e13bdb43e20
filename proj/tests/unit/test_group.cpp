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
#include "gcep/group.hpp"

using namespace gcep;

namespace {

// Reference order of an element by repeated multiplication.
int naive_order(const FiniteGroup &g, Elem a) {
  int k = 1;
  for (Elem x = a; x != 0; x = g.mul(x, a))
    ++k;
  return k;
}

} // namespace

TEST_CASE("builtin orders") {
  CHECK(builtin("Zn(1)").order() == 1);
  CHECK(builtin("Zn(8)").order() == 8);
  CHECK(builtin("Sym(3)").order() == 6);
  CHECK(builtin("Sym(4)").order() == 24);
  CHECK(builtin("Dih(4)").order() == 8);
  CHECK(builtin("Dih(2)").order() == 4);
  CHECK(builtin("Q8").order() == 8);
  CHECK(builtin("Z2xZ2").order() == 4);
  CHECK(builtin("A4").order() == 12);
  CHECK_THROWS_AS(builtin("Foo(3)"), Error);
  CHECK_THROWS_AS(builtin("Sym(8)", 1000), Error);
}

TEST_CASE("identity and inverses") {
  for (const char *name : {"Zn(6)", "Sym(3)", "Dih(4)", "Q8", "A4"}) {
    const FiniteGroup g = builtin(name);
    for (Elem a = 0; a < g.order(); ++a) {
      CHECK(g.mul(0, a) == a);
      CHECK(g.mul(a, 0) == a);
      CHECK(g.mul(a, g.inv(a)) == 0);
      CHECK(g.element_order(a) == naive_order(g, a));
    }
  }
}

TEST_CASE("word tree reaches every element") {
  const FiniteGroup g = builtin("Sym(4)");
  CHECK(static_cast<int>(g.word_order().size()) == g.order());
  for (Elem a = 1; a < g.order(); ++a)
    CHECK(g.mul(g.word_parent(a), g.generators()[g.word_step(a)]) == a);
}

TEST_CASE("from_table rejects non-groups") {
  CHECK_THROWS_AS(FiniteGroup::from_table(2, {0, 1, 1, 1}), Error);
  CHECK_NOTHROW(FiniteGroup::from_table(2, {0, 1, 1, 0}));
}

TEST_CASE("conjugacy classes") {
  CHECK(conjugacy_classes(builtin("Sym(3)")).size() == 3);
  CHECK(conjugacy_classes(builtin("Q8")).size() == 5);
  CHECK(conjugacy_classes(builtin("Dih(4)")).size() == 5);
  CHECK(conjugacy_classes(builtin("A4")).size() == 4);
  CHECK(conjugacy_classes(builtin("Zn(7)")).size() == 7);
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants(builtin("Z2xZ2")) == std::vector<long>{2, 2});
  CHECK(abelian_invariants(builtin("Zn(6)")) == std::vector<long>{6});
  CHECK(abelian_invariants(abelian_group({2, 3})) == std::vector<long>{6});
  CHECK(abelianization_invariants(builtin("Sym(3)")) == std::vector<long>{2});
  CHECK(abelianization_invariants(builtin("Q8")) == std::vector<long>{2, 2});
  CHECK(abelianization_invariants(builtin("A4")) == std::vector<long>{3});
}

TEST_CASE("homomorphisms") {
  CHECK(all_homomorphisms(builtin("Zn(4)"), builtin("Zn(2)")).size() == 2);
  CHECK(all_homomorphisms(builtin("Sym(3)"), builtin("Zn(3)")).size() == 1);
  CHECK(all_homomorphisms(builtin("Z2xZ2"), builtin("Sym(3)")).size() == 10);
  CHECK(isomorphic(builtin("Dih(3)"), builtin("Sym(3)")));
  CHECK_FALSE(isomorphic(builtin("Q8"), builtin("Dih(4)")));
  CHECK(isomorphic(abelian_group({2, 3}), builtin("Zn(6)")));
  for (const GroupHom &h : all_homomorphisms(builtin("Q8"), builtin("Sym(3)")))
    CHECK(h.is_homomorphism());
}

TEST_CASE("subgroups and quotients") {
  const FiniteGroup s3 = builtin("Sym(3)");
  CHECK(center(s3).group.order() == 1);
  CHECK(derived_subgroup(s3).group.order() == 3);
  const Subgroup z = center(builtin("Q8"));
  CHECK(z.group.order() == 2);
  const Quotient q = quotient(builtin("Q8"), z.inclusion.map());
  CHECK(q.group.order() == 4);
  CHECK(q.projection.is_homomorphism());
  CHECK(isomorphic(q.group, builtin("Z2xZ2")));
  for (Elem a = 1; a < s3.order(); ++a)
    CHECK(centralizer(s3, a).group.order() == s3.element_order(a));
}

TEST_CASE("cycle notation") {
  const Permutation p = parse_cycles("(0 1 2)(3 4)", 5);
  CHECK(p == Permutation{1, 2, 0, 4, 3});
  CHECK(format_cycles(p) == "(0 1 2)(3 4)");
  CHECK(format_cycles(identity_permutation(3)) == "()");
  CHECK_THROWS_AS(parse_cycles("(0 0)", 2), Error);
  CHECK_THROWS_AS(parse_cycles("(0 5)", 3), Error);
}
