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

#ifndef GCEP_FIBRATION_HPP
#define GCEP_FIBRATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "gcep/action.hpp"
#include "gcep/groupoid.hpp"

namespace gcep {

struct LiftFailure {
  Obj object;        // in the total groupoid
  Mor base_morphism; // out of proj(object)
  int lifts;         // number of lifts found (not 1)
};

struct FibrationCheck {
  bool ok = true;
  std::optional<LiftFailure> counterexample;
};

/// Star-bijectivity: every base morphism out of p(w) has exactly one lift
/// out of w. The first failure in (object, base morphism) order is reported.
FibrationCheck is_fibration(const GroupoidFunctor &p);

/// A functor together with a split cleavage: lift(f, w) is a morphism out of
/// w over f, with lift(id, w) = id and lifts composing strictly. Coverings
/// have exactly one cleavage. Fibers may be arbitrary groupoids.
class Fibration {
public:
  /// Requires is_fibration(p); the cleavage is the unique lift.
  static Fibration covering(GroupoidFunctor p);

  /// `lift_table[w * |base morphisms| + f]` for f out of p(w), -1 otherwise.
  /// Validated exhaustively.
  Fibration(GroupoidFunctor p, std::vector<Mor> lift_table);

  const FiniteGroupoid &total() const { return proj_.source(); }
  const FiniteGroupoid &base() const { return proj_.target(); }
  const GroupoidFunctor &proj() const { return proj_; }
  Mor lift(Mor base_morphism, Obj w) const;

  std::optional<std::string> validate() const;

private:
  GroupoidFunctor proj_;
  std::vector<Mor> lift_;
};

/// A functor from `base` to groupoids: one fiber per object and one
/// transport isomorphism per morphism.
class StraightenedFunctor {
public:
  StraightenedFunctor(FiniteGroupoid base, std::vector<FiniteGroupoid> fibers,
                      std::vector<GroupoidFunctor> transport);

  const FiniteGroupoid &base() const { return base_; }
  const FiniteGroupoid &fiber(Obj c) const { return fibers_[c]; }
  const GroupoidFunctor &transport(Mor f) const { return transport_[f]; }

  /// Endpoints, identities, composition, and invertibility of transports.
  std::optional<std::string> validate() const;

private:
  FiniteGroupoid base_;
  std::vector<FiniteGroupoid> fibers_;
  std::vector<GroupoidFunctor> transport_;
};

/// The constant functor at a groupoid.
StraightenedFunctor constant_straightened(const FiniteGroupoid &base, const FiniteGroupoid &fiber);
/// A G-action as a functor BG -> groupoids.
StraightenedFunctor action_functor(const GroupAction &a);

/// Fibers are strict preimages, numbered in increasing total index;
/// transport along f conjugates by the cleavage.
StraightenedFunctor straighten(const Fibration &p);
/// Throws not_a_fibration unless is_fibration(p).
StraightenedFunctor straighten(const GroupoidFunctor &p);

/// Objects (c, x) ordered by c then x. Morphisms (f, u) with
/// u : F(f)(x) -> y in the fiber over target(f), numbered by f then u.
/// (f', u') after (f, u) = (f'f, u' F(f')(u)). The cleavage is (f, id).
Fibration unstraighten(const StraightenedFunctor &f);

/// The projection X//G -> BG with cleavage (g, id).
Fibration quotient_fibration(const GroupAction &a, const QuotientGroupoid &q);

/// An isomorphism F => G of functors to groupoids: one groupoid isomorphism
/// per base object, commuting strictly with transports.
struct StraightenedIso {
  std::vector<GroupoidFunctor> components;
};
std::optional<std::string> validate_iso(const StraightenedFunctor &from,
                                        const StraightenedFunctor &to,
                                        const StraightenedIso &iso);

struct StraightenRoundTrip {
  StraightenedFunctor round_trip; // straighten(unstraighten(F))
  StraightenedIso iso;            // F => round_trip
};
StraightenRoundTrip straighten_unstraighten(const StraightenedFunctor &f);

/// Comparison functor unstraighten(straighten(p)) -> total(p) over the base.
struct OverBaseEquivalence {
  GroupoidFunctor comparison;
  EquivalenceReport report;
  bool commutes = false; // proj . comparison == round-trip projection
  bool ok() const { return report.is_equivalence() && commutes; }
};
struct UnstraightenRoundTrip {
  Fibration round_trip; // unstraighten(straighten(p))
  OverBaseEquivalence witness;
};
UnstraightenRoundTrip unstraighten_straighten(const Fibration &p);

/// A pointed transformation pt => straighten(p): an object of each fiber and
/// for each base morphism f : c -> d an isomorphism F(f)(x_c) -> x_d in the
/// fiber over d, strictly compatible with composition.
struct PointedTransformation {
  std::vector<Obj> objects;    // fiber-local, per base object
  std::vector<Mor> morphisms;  // fiber-local, per base morphism
  bool operator<(const PointedTransformation &o) const {
    return std::tie(objects, morphisms) < std::tie(o.objects, o.morphisms);
  }
  bool operator==(const PointedTransformation &) const = default;
};

bool is_pointed_transformation(const StraightenedFunctor &f, const PointedTransformation &t);

struct SectionReport {
  std::vector<GroupoidFunctor> sections;            // sorted by (obj_map, mor_map)
  std::vector<PointedTransformation> transformations; // enumerated independently, sorted
  /// transformations[correspondence[i]] is the image of sections[i].
  std::vector<int> correspondence;
  bool bijective = false;
};

inline constexpr int kMaxSectionBaseObjects = 12;
inline constexpr int kMaxSectionHomSize = 64;

/// Enumerates sections of p and pointed transformations pt => straighten(p)
/// and matches them up. Throws bound_exceeded past 12 base objects, hom-sets
/// above 64, or more than `max_candidates` assignments.
SectionReport sections(const Fibration &p, std::int64_t max_candidates = kDefaultMaxEnum);

/// The trivial fibration Y x F -> Y with cleavage (f, id).
Fibration trivial_fibration(const FiniteGroupoid &base, const FiniteGroupoid &fiber);

/// For a trivial fibration: sections of Y x F -> Y matched with functors
/// Y -> F by composing with the second projection.
struct TrivialSectionReport {
  std::vector<GroupoidFunctor> sections;
  std::vector<GroupoidFunctor> functors; // all_functors(Y, F)
  std::vector<int> correspondence;       // functors[correspondence[i]] ~ sections[i]
  bool bijective = false;
};
TrivialSectionReport trivial_bundle_sections(const FiniteGroupoid &base,
                                             const FiniteGroupoid &fiber,
                                             std::int64_t max_candidates = kDefaultMaxEnum);

} // namespace gcep

#endif // GCEP_FIBRATION_HPP
