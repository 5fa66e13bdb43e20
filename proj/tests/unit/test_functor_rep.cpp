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
#include "gcep/functor_rep.hpp"

using namespace gcep;

namespace {

// Brute force: every pair of functors tested for a natural isomorphism.
int class_count_by_pairs(const FunctorCategory &c) {
  std::vector<int> label(c.functors.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < c.functors.size(); ++i) {
    if (label[i] >= 0)
      continue;
    label[i] = next;
    for (std::size_t j = i + 1; j < c.functors.size(); ++j)
      if (label[j] < 0 && find_natural_isomorphism(c.functors[i], c.functors[j]))
        label[j] = next;
    ++next;
  }
  return next;
}

void check_witnesses(const FunctorCategory &c) {
  REQUIRE(c.witness.size() == c.functors.size());
  for (std::size_t i = 0; i < c.functors.size(); ++i) {
    CHECK(c.witness[i].is_valid());
    CHECK(c.witness[i].from() == c.representative(c.class_of[i]));
    CHECK(c.witness[i].to() == c.functors[i]);
  }
}

ComplexMatrix scalar(std::complex<double> z) {
  ComplexMatrix m(1, 1);
  m(0, 0) = z;
  return m;
}

LinearRep sign_rep(const FiniteGroup &g) {
  LinearRep r{delooping(g), {1}, {}};
  for (Elem x = 0; x < g.order(); ++x) {
    const Permutation &p = g.permutation(x);
    int inversions = 0;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = i + 1; j < p.size(); ++j)
        inversions += p[i] > p[j];
    r.matrices.push_back(scalar(inversions % 2 ? -1.0 : 1.0));
  }
  return r;
}

LinearRep regular_rep(const FiniteGroup &g) {
  LinearRep r{delooping(g), {g.order()}, {}};
  for (Elem x = 0; x < g.order(); ++x) {
    ComplexMatrix m = ComplexMatrix::Zero(g.order(), g.order());
    for (Elem y = 0; y < g.order(); ++y)
      m(g.mul(x, y), y) = 1.0;
    r.matrices.push_back(m);
  }
  return r;
}

} // namespace

TEST_CASE("functor categories") {
  const Coproduct d = disjoint_union(chaotic_groupoid(2), delooping(builtin("Zn(2)")));
  const FunctorCategory from_point = enumerate_functors(terminal_groupoid(), d.groupoid);
  CHECK(from_point.functors.size() == 3);
  CHECK(from_point.num_classes() == 2);
  check_witnesses(from_point);

  const FiniteGroupoid bz2 = delooping(builtin("Zn(2)"));
  const FiniteGroupoid bz3 = delooping(builtin("Zn(3)"));
  CHECK(enumerate_functors(bz2, bz3).num_classes() == 1);
  const FunctorCategory endo = enumerate_functors(bz2, bz2);
  CHECK(endo.functors.size() == 2);
  CHECK(endo.num_classes() == 2);
  const FunctorCategory into_s3 = enumerate_functors(bz3, delooping(builtin("Sym(3)")));
  CHECK(into_s3.functors.size() == 3);
  CHECK(into_s3.num_classes() == 2);
  check_witnesses(into_s3);
}

TEST_CASE("component-wise classification matches pairwise search") {
  const GroupAction s3 = natural_action(builtin("Sym(3)"));
  const FiniteGroupoid x = disjoint_union(homotopy_quotient(s3).total,
                                          delooping(builtin("Zn(2)"))).groupoid;
  for (const FiniteGroupoid &target :
       {delooping(builtin("Zn(2)")), delooping(builtin("Sym(3)")),
        disjoint_union(chaotic_groupoid(2), delooping(builtin("Zn(2)"))).groupoid}) {
    const FunctorCategory c = enumerate_functors(x, target);
    CHECK(c.num_classes() == class_count_by_pairs(c));
    check_witnesses(c);
    for (std::size_t i = 0; i < c.functors.size(); ++i)
      CHECK(c.find(c.functors[i]) == static_cast<int>(i));
  }
}

TEST_CASE("functor classes are invariant under equivalence") {
  const QuotientGroupoid q = homotopy_quotient(natural_action(builtin("Sym(3)")));
  const Skeleton sk = skeleton(q.total);
  const FiniteGroupoid bz2 = delooping(builtin("Zn(2)"));
  const FiniteGroupoid fat = product(chaotic_groupoid(2), bz2).groupoid;
  const int base = enumerate_functors(q.total, bz2).num_classes();
  CHECK(base == 2);
  CHECK(enumerate_functors(sk.groupoid, bz2).num_classes() == base);
  CHECK(enumerate_functors(q.total, fat).num_classes() == base);
  CHECK(enumerate_functors(sk.groupoid, fat).num_classes() == base);
  CHECK_THROWS_AS(enumerate_functors(q.total, fat, 3), Error);
}

TEST_CASE("irreducible representation counts") {
  CHECK(irreducible_reps_count(terminal_groupoid()).total == 1);
  const FiniteGroupoid bz2 = delooping(builtin("Zn(2)"));
  const IrrepCount two = irreducible_reps_count(disjoint_union(bz2, bz2).groupoid);
  CHECK(two.total == 4);
  CHECK(two.per_component == std::vector<int>{2, 2});
  CHECK(irreducible_reps_count(homotopy_quotient(natural_action(builtin("Sym(3)"))).total)
            .total == 2);
  CHECK(irreducible_reps_count(FiniteGroupoid()).total == 0);
}

TEST_CASE("irreducible degrees") {
  CHECK(irreducible_degrees(builtin("Zn(4)")) == std::vector<int>{1, 1, 1, 1});
  CHECK(irreducible_degrees(builtin("Sym(3)")) == std::vector<int>{1, 1, 2});
  CHECK(irreducible_degrees(builtin("Q8")) == std::vector<int>{1, 1, 1, 1, 2});
  CHECK(irreducible_degrees(builtin("A4")) == std::vector<int>{1, 1, 1, 3});
  CHECK(irreducible_degrees(builtin("Sym(4)")) == std::vector<int>{1, 1, 2, 3, 3});
  CHECK(irreducible_degrees(builtin("Sym(5)")) == std::vector<int>{1, 1, 4, 4, 5, 5, 6});
  CHECK(irreducible_degrees(builtin("Zn(1)")) == std::vector<int>{1});
  for (const char *name : {"Dih(4)", "Dih(5)", "Dih(6)", "Z2xZ2", "Zn(7)"}) {
    const FiniteGroup g = builtin(name);
    for (std::uint64_t seed : {0u, 1u, 99u}) {
      const auto d = irreducible_degrees(g, seed);
      long squares = 0;
      for (int x : d)
        squares += x * x;
      CHECK(squares == g.order());
      CHECK(d.size() == conjugacy_classes(g).size());
    }
  }
}

TEST_CASE("linear representations") {
  const FiniteGroup s3 = builtin("Sym(3)");
  const LinearRep sign = sign_rep(s3);
  CHECK_FALSE(sign.validate());
  LinearRep trivial{delooping(s3), {1}, std::vector<ComplexMatrix>(6, scalar(1.0))};
  CHECK_FALSE(trivial.validate());
  CHECK(intertwiner_dimension(sign, trivial) == 0);
  CHECK(intertwiner_dimension(sign, sign) == 1);
  CHECK(intertwiner_dimension(regular_rep(s3), regular_rep(s3)) == 6);
  CHECK(intertwiner_dimension(trivial, regular_rep(s3)) == 1);
  LinearRep broken = sign;
  broken.matrices[1] = scalar(2.0);
  CHECK(broken.validate());
  broken.matrices[1] = ComplexMatrix::Identity(2, 2);
  CHECK(broken.validate());
}

TEST_CASE("equivariant families and linear representations") {
  const GroupAction a = natural_action(builtin("Sym(3)"));
  const QuotientGroupoid q = homotopy_quotient(a);
  CHECK_THROWS_AS(induced_character_families(natural_action(builtin("Sym(4)"))), Error);
  const GroupAction z4 = regular_action(builtin("Zn(4)"));
  const auto regular = induced_character_families(z4);
  CHECK(regular.size() == 1);
  const GroupAction fixed = trivial_action(builtin("Zn(4)"), discrete_groupoid(2));
  const auto families = induced_character_families(fixed);
  CHECK(families.size() == 8);
  const QuotientGroupoid qf = homotopy_quotient(fixed);
  for (const auto &f : families) {
    CHECK_FALSE(f.validate());
    const LinearRep r = to_linear_rep(f, qf);
    CHECK_FALSE(r.validate());
    const EquivariantFamily back = from_linear_rep(fixed, r);
    REQUIRE(back.maps.size() == f.maps.size());
    for (std::size_t i = 0; i < f.maps.size(); ++i)
      CHECK(back.maps[i].isApprox(f.maps[i]));
  }
  for (const auto &f : induced_character_families(a))
    CHECK(intertwiner_dimension(to_linear_rep(f, q), to_linear_rep(f, q)) == 1);
  EquivariantFamily bad = families[1];
  bad.maps[bad.dims.size() + 0](0, 0) *= 2.0;
  CHECK(bad.validate());
}

TEST_CASE("crystalline equivalence at n = 1") {
  const FiniteGroup trivial_group = builtin("Zn(1)");
  const CepReport pt = cep_verify(trivial_action(trivial_group, terminal_groupoid()));
  CHECK(pt.equivariant_irreps == 1);
  CHECK(pt.quotient_irreps == 1);
  CHECK(pt.verdict);

  for (const char *name : {"Sym(3)", "Q8", "Zn(5)"}) {
    const FiniteGroup g = builtin(name);
    const CepReport r = cep_verify(trivial_action(g, terminal_groupoid()));
    CHECK(r.equivariant_irreps == static_cast<int>(conjugacy_classes(g).size()));
    CHECK(r.quotient_irreps == r.equivariant_irreps);
    CHECK(r.verdict);
  }

  const CepReport s3 = cep_verify(natural_action(builtin("Sym(3)")));
  CHECK(s3.equivariant_irreps == 2);
  CHECK(s3.quotient_irreps == 2);
  CHECK(s3.bridge == true);
  CHECK(s3.verdict);
  REQUIRE(s3.targets.size() == 3);
  for (const auto &t : s3.targets) {
    CHECK(t.equivalence);
    CHECK(t.problem.empty());
    CHECK(t.over_base_classes == t.direct_classes);
  }

  const CepReport q8 = cep_verify(trivial_action(builtin("Q8"), terminal_groupoid()));
  CHECK_FALSE(q8.bridge.has_value());

  const CepReport capped = cep_verify(natural_action(builtin("Sym(3)")), default_cep_targets(), 2);
  CHECK(capped.counts_agree);
  CHECK_FALSE(capped.verdict);
  CHECK(capped.targets.front().equivalence);
  CHECK_FALSE(capped.targets.back().problem.empty());
}

TEST_CASE("families over EG") {
  const EgFamiliesReport pt = eg_families_verify(builtin("Zn(1)"), discrete_groupoid(3));
  CHECK(pt.fixed_point_classes == 3);
  CHECK(pt.ok());

  const FiniteGroup z2 = builtin("Zn(2)");
  const EgFamiliesReport b = eg_families_verify(z2, delooping(z2));
  CHECK(b.fixed_point_classes == 2);
  CHECK(b.section_classes == 2);
  CHECK(b.internal_classes == 2);
  CHECK(b.ok());

  const FiniteGroup z3 = builtin("Zn(3)");
  const EgFamiliesReport plain = eg_families_verify(z3, discrete_groupoid(3));
  const EgFamiliesReport rotated =
      eg_families_verify(GroupAction::on_set(z3, 3, {{1, 2, 0}}));
  CHECK(plain.ok());
  CHECK(rotated.ok());
  CHECK(plain.fixed_point_classes == 3);
  CHECK(rotated.fixed_point_classes == 0);
  CHECK_FALSE(rotated.internal_classes.has_value());

  const FiniteGroup s3 = builtin("Sym(3)");
  for (const FiniteGroupoid &target :
       {delooping(z2), delooping(s3), chaotic_groupoid(2), discrete_groupoid(2)}) {
    const EgFamiliesReport r = eg_families_verify(s3, target);
    CHECK(r.ok());
    CHECK(r.fixed_point_classes == r.section_classes);
  }
  const EgFamiliesReport swap = eg_families_verify(
      GroupAction::from_generators(z2, chaotic_groupoid(2),
                                   {GroupoidFunctor(chaotic_groupoid(2), chaotic_groupoid(2),
                                                    {1, 0}, {3, 2, 1, 0})}));
  CHECK(swap.ok());
  CHECK(swap.fixed_point_classes == 1);
}
