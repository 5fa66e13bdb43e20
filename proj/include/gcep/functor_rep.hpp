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

#ifndef GCEP_FUNCTOR_REP_HPP
#define GCEP_FUNCTOR_REP_HPP

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gcep/action.hpp"
#include "gcep/group.hpp"
#include "gcep/groupoid.hpp"

namespace gcep {

/// Functors C -> D up to equality, partitioned by natural isomorphism.
struct FunctorCategory {
  FiniteGroupoid source;
  FiniteGroupoid target;
  std::vector<GroupoidFunctor> functors; // sorted by (obj_map, mor_map)
  std::vector<int> class_of;
  /// Members of each class, in order of first member.
  std::vector<std::vector<int>> classes;
  /// witness[i]: natural isomorphism from the first member of i's class to i.
  std::vector<NatTransformation> witness;

  int num_classes() const { return static_cast<int>(classes.size()); }
  const GroupoidFunctor &representative(int c) const { return functors[classes[c].front()]; }
  std::optional<int> find(const GroupoidFunctor &f) const;
};

using IsoFinder =
    std::function<std::optional<NatTransformation>(const GroupoidFunctor &, const GroupoidFunctor &)>;

/// Classifies an explicit list of functors C -> D. Isomorphism is decided
/// one connected component of C at a time; `find` defaults to
/// find_natural_isomorphism.
FunctorCategory classify_functors(const FiniteGroupoid &source, const FiniteGroupoid &target,
                                  std::vector<GroupoidFunctor> functors,
                                  const IsoFinder &find = {});

FunctorCategory enumerate_functors(const FiniteGroupoid &source, const FiniteGroupoid &target,
                                   std::int64_t max_candidates = kDefaultMaxEnum);

/// Functors into `total` lying strictly over `base_functor` along `p`
/// (p o F = base_functor), classified by vertical natural isomorphisms.
FunctorCategory functors_over(const FiniteGroupoid &source, const GroupoidFunctor &p,
                              const GroupoidFunctor &base_functor,
                              std::int64_t max_candidates = kDefaultMaxEnum);

struct IrrepCount {
  int total = 0;
  std::vector<int> per_component; // connected_components order
};
/// Irreducible functors Y -> Vect up to isomorphism: conjugacy classes of
/// each component's automorphism group.
IrrepCount irreducible_reps_count(const FiniteGroupoid &y);

/// Degrees of the complex irreducible representations, ascending. Central
/// characters come from a seeded random combination of the class-sum
/// multiplication matrices; throws numerical_failure on degeneracy.
std::vector<int> irreducible_degrees(const FiniteGroup &g, std::uint64_t seed = 0);

using ComplexMatrix = Eigen::MatrixXcd;
constexpr double kLinearTolerance = 1e-9;

/// A functor Y -> Vect.
struct LinearRep {
  FiniteGroupoid groupoid;
  std::vector<int> dim_at;
  std::vector<ComplexMatrix> matrices; // per morphism, dim_at[target] x dim_at[source]

  std::optional<std::string> validate(double tolerance = kLinearTolerance) const;
};

/// Dimension of the space of natural transformations a -> b.
int intertwiner_dimension(const LinearRep &a, const LinearRep &b,
                          double tolerance = kLinearTolerance);

/// A strictly G-equivariant family of vector spaces over a G-set.
struct EquivariantFamily {
  GroupAction action;
  std::vector<int> dims;             // per point
  std::vector<ComplexMatrix> maps;   // index g * |X| + x, fiber x -> fiber g.x

  const ComplexMatrix &map(Elem g, Obj x) const {
    return maps[static_cast<std::size_t>(g) * dims.size() + x];
  }
  std::optional<std::string> validate(double tolerance = kLinearTolerance) const;
};

/// The same data as a functor X//G -> Vect, and back.
LinearRep to_linear_rep(const EquivariantFamily &f, const QuotientGroupoid &q);
EquivariantFamily from_linear_rep(const GroupAction &a, const LinearRep &r);

/// Families induced from the characters of abelian stabilizers, one per
/// (orbit, character). Throws invalid_input for a non-abelian stabilizer.
std::vector<EquivariantFamily> induced_character_families(const GroupAction &a);

struct CepTargetCheck {
  std::string target;
  int over_base_functors = 0;
  int over_base_classes = 0;
  int direct_functors = 0;
  int direct_classes = 0;
  bool equivalence = false;
  std::string problem; // empty when verified
};

struct CepReport {
  /// Irreducible equivariant families: classes of each orbit's stabilizer.
  std::vector<int> per_orbit;
  int equivariant_irreps = 0;
  int quotient_irreps = 0;
  bool counts_agree = false;
  std::vector<CepTargetCheck> targets;
  /// Explicit induced families (abelian stabilizers only): irreducible,
  /// pairwise non-isomorphic and as many as quotient_irreps.
  std::optional<bool> bridge;
  bool verdict = false;
};

struct NamedGroupoid {
  std::string name;
  FiniteGroupoid groupoid;
};

/// discrete(2), BZn(2) and BZn(3).
std::vector<NamedGroupoid> default_cep_targets();

/// Crystalline equivalence at n = 1 for a G-set: the counting comparison and,
/// per target Theta, functors X//G -> Theta x BG over BG against functors
/// X//G -> Theta with the projection as explicit equivalence.
CepReport cep_verify(const GroupAction &a,
                     const std::vector<NamedGroupoid> &targets = default_cep_targets(),
                     std::int64_t max_candidates = kDefaultMaxEnum);

struct EgFamiliesReport {
  int fixed_points = 0;        // objects of Fun_G(EG, Theta)
  int fixed_point_classes = 0;
  int sections = 0;            // functors BG -> Theta//G over BG
  int section_classes = 0;
  /// Functors BG -> Theta up to isomorphism; only for trivial actions.
  std::optional<int> internal_classes;
  bool bijection = false;
  bool ok() const {
    return bijection && fixed_point_classes == section_classes &&
           (!internal_classes || *internal_classes == section_classes);
  }
};

/// Equivariant families over EG against families with internal G-symmetry,
/// matched by (x0, phi) -> (g -> (g, phi_g^-1)).
EgFamiliesReport eg_families_verify(const GroupAction &theta,
                                    std::int64_t max_candidates = kDefaultMaxEnum);
inline EgFamiliesReport eg_families_verify(const FiniteGroup &g, const FiniteGroupoid &target,
                                           std::int64_t max_candidates = kDefaultMaxEnum) {
  return eg_families_verify(trivial_action(g, target), max_candidates);
}

} // namespace gcep

#endif // GCEP_FUNCTOR_REP_HPP
