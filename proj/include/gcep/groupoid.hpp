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

#ifndef GCEP_GROUPOID_HPP
#define GCEP_GROUPOID_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcep/group.hpp"

namespace gcep {

using Obj = int;
using Mor = int;

struct Arrow {
  Obj source;
  Obj target;
  bool operator==(const Arrow &) const = default;
};

/// A finite groupoid with its full composition table.
///
/// Composition is written "f after g": compose(f, g) is defined exactly when
/// target(g) == source(f). This convention is used everywhere in the library.
/// Like FiniteGroup this is an immutable handle over shared storage.
class FiniteGroupoid {
public:
  /// The empty groupoid.
  FiniteGroupoid();

  /// Builds the table from `compose` on every composable pair and validates
  /// the groupoid axioms. Associativity is checked exhaustively when the
  /// groupoid has at most `kAssociativityCheckLimit` morphisms; larger inputs
  /// can be checked with validate().
  static FiniteGroupoid make(int objects, std::vector<Arrow> arrows, std::vector<Mor> identities,
                             const std::function<Mor(Mor, Mor)> &compose,
                             std::vector<std::string> object_names = {});

  /// Same as make() without any axiom checks. For groupoids produced by a
  /// construction whose correctness does not depend on the input.
  static FiniteGroupoid trusted(int objects, std::vector<Arrow> arrows,
                                std::vector<Mor> identities,
                                const std::function<Mor(Mor, Mor)> &compose,
                                std::vector<std::string> object_names = {});

  static constexpr int kAssociativityCheckLimit = 256;

  int num_objects() const;
  int num_morphisms() const;
  Obj source(Mor f) const;
  Obj target(Mor f) const;
  Mor identity(Obj x) const;
  bool is_identity(Mor f) const;
  bool composable(Mor f, Mor g) const { return target(g) == source(f); }
  /// f after g; requires composable(f, g).
  Mor compose(Mor f, Mor g) const;
  Mor inverse(Mor f) const;
  /// Morphisms x -> y in increasing index order.
  const std::vector<Mor> &hom(Obj x, Obj y) const;
  const std::vector<int> &composition_table() const;
  const std::string &object_name(Obj x) const;
  bool has_object_names() const;

  bool is_discrete() const;

  /// Exhaustive axiom check; returns a description of the first violation.
  std::optional<std::string> validate() const;

  /// Structural equality of the tables (names ignored).
  bool operator==(const FiniteGroupoid &other) const;

private:
  struct Data;
  explicit FiniteGroupoid(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  std::shared_ptr<const Data> d_;
};

class GroupoidFunctor {
public:
  GroupoidFunctor(FiniteGroupoid source, FiniteGroupoid target, std::vector<Obj> obj_map,
                  std::vector<Mor> mor_map);

  const FiniteGroupoid &source() const { return source_; }
  const FiniteGroupoid &target() const { return target_; }
  const std::vector<Obj> &obj_map() const { return obj_map_; }
  const std::vector<Mor> &mor_map() const { return mor_map_; }
  Obj on_object(Obj x) const { return obj_map_[x]; }
  Mor on_morphism(Mor f) const { return mor_map_[f]; }

  /// Exhaustive check that sources, targets, identities and composition are
  /// preserved; returns the first violation.
  std::optional<std::string> validate() const;
  bool is_valid() const { return !validate().has_value(); }

  bool is_isomorphism() const;

  /// Raw equality of the maps (same source/target tables assumed).
  bool operator==(const GroupoidFunctor &other) const {
    return obj_map_ == other.obj_map_ && mor_map_ == other.mor_map_;
  }

private:
  FiniteGroupoid source_;
  FiniteGroupoid target_;
  std::vector<Obj> obj_map_;
  std::vector<Mor> mor_map_;
};

GroupoidFunctor identity_functor(const FiniteGroupoid &x);
/// outer after inner.
GroupoidFunctor compose(const GroupoidFunctor &outer, const GroupoidFunctor &inner);
/// Constant functor at object `y` of `target`.
GroupoidFunctor constant_functor(const FiniteGroupoid &source, const FiniteGroupoid &target, Obj y);

/// Natural transformation between parallel functors; every component is
/// invertible because the target is a groupoid.
class NatTransformation {
public:
  NatTransformation(GroupoidFunctor from, GroupoidFunctor to, std::vector<Mor> components);

  const GroupoidFunctor &from() const { return from_; }
  const GroupoidFunctor &to() const { return to_; }
  const std::vector<Mor> &components() const { return components_; }

  /// Checks component endpoints and every naturality square.
  std::optional<std::string> validate() const;
  bool is_valid() const { return !validate().has_value(); }

private:
  GroupoidFunctor from_;
  GroupoidFunctor to_;
  std::vector<Mor> components_;
};

/// Searches for a natural isomorphism F => G. A natural isomorphism is fixed
/// by its components at one root per component of the source, so the search
/// ranges over Hom(F r, G r) for each root.
std::optional<NatTransformation> find_natural_isomorphism(const GroupoidFunctor &f,
                                                          const GroupoidFunctor &g);

// ---------------------------------------------------------------------------
// constructions

FiniteGroupoid delooping(const FiniteGroup &g);
GroupoidFunctor delooping(const GroupHom &h);
FiniteGroupoid discrete_groupoid(int objects);
inline FiniteGroupoid terminal_groupoid() { return discrete_groupoid(1); }
/// One morphism between every ordered pair of objects.
FiniteGroupoid chaotic_groupoid(int objects);

std::vector<std::vector<Obj>> connected_components(const FiniteGroupoid &x);
std::vector<int> component_index(const FiniteGroupoid &x);

struct AutomorphismGroup {
  FiniteGroup group;
  /// Group element i is morphism morphisms[i]; identity first, then
  /// increasing morphism index.
  std::vector<Mor> morphisms;
};
AutomorphismGroup automorphism_group(const FiniteGroupoid &x, Obj object);

struct EquivalenceReport {
  bool essentially_surjective = true;
  /// Per target component (in connected_components order): a source object
  /// mapped into it, or -1.
  std::vector<Obj> component_witness;
  bool fully_faithful = true;
  /// First source pair whose hom-set map is not bijective.
  std::optional<std::pair<Obj, Obj>> failing_pair;
  bool is_equivalence() const { return essentially_surjective && fully_faithful; }
};
EquivalenceReport check_equivalence(const GroupoidFunctor &f);

struct QuasiInverse {
  GroupoidFunctor inverse;
  NatTransformation unit;   // id => inverse . f
  NatTransformation counit; // f . inverse => id
};
/// Requires check_equivalence(f).is_equivalence().
QuasiInverse quasi_inverse(const GroupoidFunctor &f);

struct Skeleton {
  FiniteGroupoid groupoid;
  GroupoidFunctor inclusion;
};
/// One object per component (its smallest object) with that object's
/// automorphisms.
Skeleton skeleton(const FiniteGroupoid &x);

struct Coproduct {
  FiniteGroupoid groupoid;
  GroupoidFunctor left;
  GroupoidFunctor right;
};
/// Objects and morphisms of `a` first, then those of `b`.
Coproduct disjoint_union(const FiniteGroupoid &a, const FiniteGroupoid &b);

struct Product {
  FiniteGroupoid groupoid;
  GroupoidFunctor left;
  GroupoidFunctor right;
  /// Object / morphism index of a pair.
  Obj object(Obj a, Obj b) const { return a * right_objects + b; }
  Mor morphism(Mor f, Mor g) const { return f * right_morphisms + g; }
  int right_objects = 0;
  int right_morphisms = 0;
};
/// Pairs in left-major order.
Product product(const FiniteGroupoid &a, const FiniteGroupoid &b);

/// Strict preimage of the object b: objects over b and morphisms over id_b.
struct StrictFiber {
  FiniteGroupoid groupoid;
  GroupoidFunctor inclusion;
};
StrictFiber strict_fiber(const GroupoidFunctor &p, Obj base_object);

/// Spanning-tree data for one connected component: root, and for every
/// object of the component a chosen morphism root -> object.
struct ComponentTree {
  Obj root;
  std::vector<Obj> objects;
  std::vector<Mor> from_root; // indexed like `objects`
};
std::vector<ComponentTree> spanning_trees(const FiniteGroupoid &x);

inline constexpr std::int64_t kDefaultMaxEnum = 1000000;

/// Optional restrictions on a functor search. A functor qualifies when every
/// object pair (x, F x) and morphism pair (f, F f) is allowed.
struct FunctorSearch {
  std::function<bool(Obj, Obj)> object_allowed;
  std::function<bool(Mor, Mor)> morphism_allowed;
};

/// Number of candidate assignments the search will try (saturating).
std::int64_t functor_search_size(const FiniteGroupoid &source, const FiniteGroupoid &target,
                                 const FunctorSearch &search = {});

/// Every functor source -> target satisfying `search`, sorted by
/// (obj_map, mor_map). A functor is fixed by its value on a spanning tree
/// and on generators of each root's automorphism group, so that is what is
/// searched. Throws bound_exceeded when functor_search_size exceeds
/// `max_candidates`.
std::vector<GroupoidFunctor> all_functors(const FiniteGroupoid &source,
                                          const FiniteGroupoid &target,
                                          const FunctorSearch &search = {},
                                          std::int64_t max_candidates = kDefaultMaxEnum);

/// Finds an isomorphism of groupoids, if any. Components are matched by
/// object count and automorphism group, then glued along spanning trees.
std::optional<GroupoidFunctor> find_groupoid_isomorphism(const FiniteGroupoid &a,
                                                         const FiniteGroupoid &b);

} // namespace gcep

#endif // GCEP_GROUPOID_HPP
