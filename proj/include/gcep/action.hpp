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

#ifndef GCEP_ACTION_HPP
#define GCEP_ACTION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcep/group.hpp"
#include "gcep/groupoid.hpp"

namespace gcep {

/// A strict action of a finite group on a finite groupoid by automorphisms.
/// Discrete carriers encode G-sets.
class GroupAction {
public:
  /// One automorphism per group element; validated exhaustively.
  GroupAction(FiniteGroup group, FiniteGroupoid carrier, std::vector<GroupoidFunctor> act);

  /// Extends automorphisms given on group.generators() along the word tree.
  static GroupAction from_generators(FiniteGroup group, FiniteGroupoid carrier,
                                     const std::vector<GroupoidFunctor> &generator_images);

  /// G-set on `points` points, one image list per generator of `group`.
  static GroupAction on_set(FiniteGroup group, int points,
                            const std::vector<Permutation> &generator_images);

  const FiniteGroup &group() const { return group_; }
  const FiniteGroupoid &carrier() const { return carrier_; }
  const GroupoidFunctor &act(Elem g) const { return act_[g]; }
  Obj act_object(Elem g, Obj x) const { return act_[g].on_object(x); }
  Mor act_morphism(Elem g, Mor f) const { return act_[g].on_morphism(f); }

  std::optional<std::string> validate() const;

private:
  FiniteGroup group_;
  FiniteGroupoid carrier_;
  std::vector<GroupoidFunctor> act_;
};

/// Permutation action of a permutation group on its points.
GroupAction natural_action(const FiniteGroup &g);
/// Left translation on the underlying set of G.
GroupAction regular_action(const FiniteGroup &g);
GroupAction trivial_action(const FiniteGroup &g, const FiniteGroupoid &carrier);

struct QuotientGroupoid {
  FiniteGroupoid total;
  GroupoidFunctor projection; // total -> BG
  GroupoidFunctor inclusion;  // carrier -> total
  /// Morphism (g, f) of the total groupoid, f : g.x -> y in the carrier.
  Mor morphism(Elem g, Mor f) const { return g * carrier_morphisms + f; }
  int carrier_morphisms = 0;
};

/// Objects are those of the carrier; morphisms x -> y are pairs (g, f) with
/// f : g.x -> y, indexed g-major. (g', f') after (g, f) = (g'g, f' g'.f).
QuotientGroupoid homotopy_quotient(const GroupAction &a);

/// G // G for the left-translation action.
QuotientGroupoid universal_bundle(const FiniteGroup &g);

/// Whether the strict fiber of the projection over the base point is
/// isomorphic to the carrier.
bool fiber_check(const QuotientGroupoid &q);

std::vector<std::vector<Obj>> orbits(const GroupAction &a);
Subgroup stabilizer(const GroupAction &a, Obj x);
bool is_free(const GroupAction &a);

/// An equivariant functor EG -> carrier: the image x0 of the identity and
/// phi[k] : x0 -> k.x0 with phi[hk] = h.phi[k] after phi[h].
struct FixedPoint {
  Obj base;
  std::vector<Mor> phi; // indexed by group element
  bool operator==(const FixedPoint &) const = default;
};

struct HomotopyFixedPoints {
  FiniteGroupoid groupoid;
  std::vector<FixedPoint> points; // object i of groupoid
  /// Component at the identity of EG of each morphism.
  std::vector<Mor> component;
  std::optional<Obj> find(const FixedPoint &p) const;
};

/// Enumerates equivariant functors EG -> carrier and equivariant natural
/// isomorphisms. Objects are in lexicographic order of (x0, generator
/// images). Throws bound_exceeded when more than `max_candidates`
/// generator assignments would be tried.
HomotopyFixedPoints homotopy_fixed_points(const GroupAction &a,
                                          std::int64_t max_candidates = 1000000);

/// EG as the chaotic groupoid on G; morphism a -> b has index a * |G| + b.
FiniteGroupoid universal_space(const FiniteGroup &g);
/// The functor EG -> carrier of a fixed point: (a -> b) maps to a.phi[a^-1 b].
GroupoidFunctor equivariant_functor(const GroupAction &a, const FixedPoint &p);

/// Post-composition with an equivariant functor `family` from the carrier of
/// `x` to that of `theta`, as a functor between homotopy fixed points.
/// Throws invalid_input if `family` is not equivariant.
GroupoidFunctor induced_fixed_point_functor(const GroupAction &x, const GroupAction &theta,
                                            const GroupoidFunctor &family,
                                            const HomotopyFixedPoints &hx,
                                            const HomotopyFixedPoints &htheta);

bool is_equivariant(const GroupAction &x, const GroupAction &theta,
                    const GroupoidFunctor &family);

} // namespace gcep

#endif // GCEP_ACTION_HPP
