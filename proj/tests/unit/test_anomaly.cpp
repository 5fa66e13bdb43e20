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

#include <random>

#include "gcep/anomaly.hpp"
#include "gcep/error.hpp"

using namespace gcep;

namespace {

Cochain nontrivial_class(const FiniteGroup &g) {
  const auto c = classify_anomalies(delooping(g));
  REQUIRE(c.classes.size() > 1);
  return c.classes[1].class_at[0];
}

int degree_square_sum(const std::vector<ProjectiveRep> &reps) {
  int s = 0;
  for (const auto &r : reps)
    s += r.degree() * r.degree();
  return s;
}

std::vector<int> degrees(const std::vector<ProjectiveRep> &reps) {
  std::vector<int> d;
  for (const auto &r : reps)
    d.push_back(r.degree());
  return d;
}

Cochain random_one_cochain(const FiniteGroup &g, std::int64_t level, std::mt19937 &rng) {
  Cochain b = zero_cochain(g, 1, {level});
  for (Elem x = 1; x < g.order(); ++x)
    b.values[x] = static_cast<std::int64_t>(rng() % level);
  return b;
}

Cochain at_level(Cochain c, std::int64_t level) {
  const std::int64_t k = level / c.moduli[0];
  for (auto &v : c.values)
    v *= k;
  c.moduli[0] = level;
  return c;
}

} // namespace

TEST_CASE("anomaly classes") {
  CHECK(classify_anomalies(delooping(builtin("Zn(5)"))).classes.size() == 1);
  CHECK(classify_anomalies(delooping(builtin("Z2xZ2"))).classes.size() == 2);
  CHECK(classify_anomalies(delooping(builtin("Dih(4)"))).classes.size() == 2);
  CHECK(classify_anomalies(delooping(builtin("Q8"))).classes.size() == 1);

  const auto u = disjoint_union(terminal_groupoid(), delooping(builtin("Z2xZ2")));
  const auto c = classify_anomalies(u.groupoid);
  CHECK(c.classes.size() == 2);
  CHECK(c.per_component.size() == 2);
  for (const auto &a : c.classes)
    CHECK_FALSE(a.validate());

  const auto two = disjoint_union(delooping(builtin("Z2xZ2")), delooping(builtin("Z2xZ2")));
  const auto c2 = classify_anomalies(two.groupoid);
  REQUIRE(c2.classes.size() == 4);
  // trivial first
  for (const auto &alpha : c2.classes[0].class_at)
    for (auto v : alpha.values)
      CHECK(v == 0);
}

TEST_CASE("anomaly validation") {
  const FiniteGroup v4 = builtin("Z2xZ2");
  Cochain bad = zero_cochain(v4, 2, {2});
  bad.values[tuple_index(v4, {1, 2})] = 1;
  CHECK_THROWS_AS(group_anomaly(v4, bad), Error);
  CHECK_THROWS_AS(alpha_regular_classes(v4, bad), Error);
  CHECK_THROWS_AS(projective_irreps(v4, bad), Error);

  Anomaly a = trivial_anomaly(delooping(v4));
  CHECK_FALSE(a.validate());
  a.class_at.push_back(a.class_at[0]);
  CHECK(a.validate());
  try {
    twisted_algebra(a.symmetry, a);
    FAIL("expected a throw");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::not_a_cocycle);
  }
}

TEST_CASE("alpha-regular classes") {
  for (const char *name : {"Sym(3)", "Dih(4)", "Q8", "A4"}) {
    const FiniteGroup g = builtin(name);
    CHECK(alpha_regular_classes(g, zero_cochain(g, 2, {1})).size() ==
          conjugacy_classes(g).size());
  }
  const FiniteGroup v4 = builtin("Z2xZ2");
  const auto r = alpha_regular_classes(v4, nontrivial_class(v4));
  REQUIRE(r.size() == 1);
  CHECK(r[0] == std::vector<Elem>{0});

  const FiniteGroup d4 = builtin("Dih(4)");
  CHECK(alpha_regular_classes(d4, nontrivial_class(d4)).size() == 2);
}

TEST_CASE("projective irreducibles") {
  const FiniteGroup v4 = builtin("Z2xZ2");
  const auto a = projective_irreps(v4, nontrivial_class(v4));
  REQUIRE(a.size() == 1);
  CHECK(a[0].degree() == 2);
  CHECK_FALSE(a[0].validate());

  const FiniteGroup z4 = builtin("Zn(4)");
  const auto b = projective_irreps(z4, zero_cochain(z4, 2, {4}));
  CHECK(degrees(b) == std::vector<int>{1, 1, 1, 1});

  const FiniteGroup d4 = builtin("Dih(4)");
  CHECK(degrees(projective_irreps(d4, nontrivial_class(d4))) == std::vector<int>{2, 2});

  for (const char *name : {"Sym(3)", "Dih(4)", "Q8", "A4", "Sym(4)"}) {
    const FiniteGroup g = builtin(name);
    const auto reps = projective_irreps(g, zero_cochain(g, 2, {1}), 5);
    CHECK(degrees(reps) == irreducible_degrees(g));
    CHECK(degree_square_sum(reps) == g.order());
  }
}

TEST_CASE("projective irreducibles over all anomaly classes") {
  for (const char *name : {"Z2xZ2", "Dih(4)", "A4", "Zn(6)"}) {
    const FiniteGroup g = builtin(name);
    for (const auto &cls : classify_anomalies(delooping(g)).classes) {
      const Cochain &alpha = cls.class_at[0];
      const auto reps = projective_irreps(g, alpha, 11);
      CHECK(reps.size() == alpha_regular_classes(g, alpha).size());
      CHECK(degree_square_sum(reps) == g.order());
      for (const auto &r : reps)
        CHECK_FALSE(r.validate());
    }
  }
}

TEST_CASE("rescaling by a cochain") {
  std::mt19937 rng(17);
  for (const char *name : {"Z2xZ2", "Dih(4)"}) {
    const FiniteGroup g = builtin(name);
    const Cochain alpha = nontrivial_class(g);
    const auto reps = projective_irreps(g, alpha);
    for (int trial = 0; trial < 5; ++trial) {
      const Cochain beta = random_one_cochain(g, 6, rng);
      const auto moved = rescale(reps[0], beta);
      CHECK_FALSE(moved.validate());
      // Cohomologous cocycles have the same projective theory.
      CHECK(degrees(projective_irreps(g, moved.alpha)) == degrees(reps));
      CHECK(alpha_regular_classes(g, moved.alpha).size() ==
            alpha_regular_classes(g, alpha).size());
      CHECK(is_cohomologous(g, CoeffModule::rational_mod_integers(), moved.alpha,
                            at_level(alpha, moved.alpha.moduli[0])));
    }
  }
}

TEST_CASE("twisted algebra structure") {
  for (const char *name : {"Zn(3)", "Sym(3)", "Q8"}) {
    const FiniteGroup g = builtin(name);
    const FiniteGroupoid y = delooping(g);
    const TwistedAlgebra t = twisted_algebra(y, trivial_anomaly(y));
    CHECK(t.dimension() == g.order());
    CHECK(t.simple_blocks == static_cast<int>(conjugacy_classes(g).size()));
    CHECK(t.semisimple);
    CHECK(t.associative());
    CHECK(t.unital());
  }
  const FiniteGroup v4 = builtin("Z2xZ2");
  const Anomaly a = group_anomaly(v4, nontrivial_class(v4));
  const TwistedAlgebra t = twisted_algebra(a.symmetry, a);
  CHECK(t.simple_blocks == 1);
  CHECK(t.semisimple);
  CHECK(t.associative());

  for (int k : {1, 3, 5}) {
    const FiniteGroupoid d = discrete_groupoid(k);
    const TwistedAlgebra td = twisted_algebra(d, trivial_anomaly(d));
    CHECK(td.simple_blocks == k);
    CHECK(td.semisimple);
  }

  // Morita invariance: a chaotic thickening keeps the block count.
  const Product p = product(chaotic_groupoid(3), delooping(v4));
  const auto classes = classify_anomalies(p.groupoid).classes;
  REQUIRE(classes.size() == 2);
  const TwistedAlgebra tp = twisted_algebra(p.groupoid, classes[1]);
  CHECK(tp.dimension() == 36);
  CHECK(tp.simple_blocks == 1);
  CHECK(tp.associative());
  CHECK(tp.unital());
  CHECK(tp.semisimple);
}

TEST_CASE("twisted algebra multiplication") {
  const FiniteGroup v4 = builtin("Z2xZ2");
  const Anomaly a = group_anomaly(v4, nontrivial_class(v4));
  const TwistedAlgebra t = twisted_algebra(a.symmetry, a);
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> u(-1, 1);
  auto random = [&] {
    std::vector<std::complex<double>> v(t.dimension());
    for (auto &z : v)
      z = {u(rng), u(rng)};
    return v;
  };
  for (int trial = 0; trial < 10; ++trial) {
    const auto x = random(), y = random(), z = random();
    const auto l = t.multiply(t.multiply(x, y), z);
    const auto r = t.multiply(x, t.multiply(y, z));
    for (int i = 0; i < t.dimension(); ++i)
      CHECK(std::abs(l[i] - r[i]) < 1e-12);
  }
  // Nontrivial class: generators anticommute.
  std::vector<std::complex<double>> e1(4), e2(4);
  e1[1] = e2[2] = 1;
  const auto p = t.multiply(e1, e2), q = t.multiply(e2, e1);
  CHECK(std::abs(p[3] + q[3]) < 1e-12);
}

TEST_CASE("twisted modules") {
  const Product p = product(chaotic_groupoid(2), delooping(builtin("Sym(3)")));
  const auto mods = twisted_modules(twisted_algebra(p.groupoid, trivial_anomaly(p.groupoid)));
  REQUIRE(mods.size() == 3);
  int s = 0;
  for (const auto &m : mods) {
    CHECK(m.dims[0] == m.dims[1]);
    s += m.dims[0] * m.dims[0];
  }
  CHECK(s * 4 == 6 * 4);
}

TEST_CASE("sections versus projective representations") {
  const FiniteGroup v4 = builtin("Z2xZ2");
  const Anomaly a = group_anomaly(v4, nontrivial_class(v4));
  const auto two = anomalous_theories_as_sections(a.symmetry, a, {2});
  CHECK(two.projective_classes == 1);
  CHECK(two.section_classes == 1);
  CHECK(two.ok());
  CHECK_FALSE(two.functor_reduction.has_value());
  const auto one = anomalous_theories_as_sections(a.symmetry, a, {1});
  CHECK(one.projective_classes == 0);
  CHECK(one.section_classes == 0);
  CHECK(one.ok());

  const FiniteGroupoid s3 = delooping(builtin("Sym(3)"));
  const auto t = anomalous_theories_as_sections(s3, trivial_anomaly(s3), {2});
  CHECK(t.projective_classes == 4);
  CHECK(t.section_classes == 4);
  REQUIRE(t.functor_reduction.has_value());
  CHECK(*t.functor_reduction);
  CHECK(t.ok());

  const Product p = product(chaotic_groupoid(3), delooping(v4));
  const auto classes = classify_anomalies(p.groupoid).classes;
  const auto thick = anomalous_theories_as_sections(p.groupoid, classes[1],
                                                    std::vector<int>(3, 4));
  CHECK(thick.projective_classes == 1);
  CHECK(thick.ok());
  const auto uneven = anomalous_theories_as_sections(p.groupoid, classes[1], {2, 2, 4});
  CHECK(uneven.component_dims == std::vector<int>{-1});
  CHECK(uneven.projective_classes == 0);
  CHECK(uneven.ok());

  const auto u = disjoint_union(terminal_groupoid(), delooping(builtin("Dih(4)")));
  for (const auto &cls : classify_anomalies(u.groupoid).classes) {
    const auto r = anomalous_theories_as_sections(u.groupoid, cls, {3, 2});
    CHECK(r.ok());
  }
}
