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

#ifndef GCEP_GROUP_HPP
#define GCEP_GROUP_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gcep {

/// Index of a group element. Index 0 is always the identity.
using Elem = int;

/// A permutation of {0, ..., n-1} stored as its image list.
using Permutation = std::vector<int>;

inline constexpr std::size_t kDefaultMaxOrder = 10080;

/// `a` after `b`: (a * b)(i) = a(b(i)).
Permutation compose(const Permutation &a, const Permutation &b);
Permutation identity_permutation(int degree);
Permutation inverse(const Permutation &p);
bool is_permutation(const Permutation &p);

/// Parses cycle notation such as "(0 1 2)(3 4)" or "()" on `degree` points.
Permutation parse_cycles(std::string_view text, int degree);
std::string format_cycles(const Permutation &p);

struct Subgroup;

/// A finite group as a full multiplication table.
///
/// Values are immutable and cheap to copy (shared storage). Element indices
/// are contiguous from 0 with 0 the identity. Groups closed from permutation
/// generators keep each element's permutation and a breadth-first spanning
/// tree over the generators, which is what lets a list of generator images
/// be extended to a homomorphism or action.
class FiniteGroup {
public:
  /// The trivial group.
  FiniteGroup();

  /// Validates the group axioms (exhaustively up to order 256) and moves the
  /// identity to index 0 if needed.
  static FiniteGroup from_table(int order, std::vector<Elem> table,
                                std::string name = {});

  /// Closure of `generators` under composition. Elements are numbered in
  /// breadth-first order of words over the generators sorted by image list,
  /// identity first. Throws bound_exceeded past `max_order`.
  static FiniteGroup from_permutations(int degree, std::vector<Permutation> generators,
                                       std::size_t max_order = kDefaultMaxOrder,
                                       std::string name = {});

  int order() const;
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  const std::vector<Elem> &table() const;
  const std::string &name() const;
  FiniteGroup renamed(std::string name) const;

  int element_order(Elem a) const;
  bool is_abelian() const;
  bool commute(Elem a, Elem b) const { return mul(a, b) == mul(b, a); }

  /// Declared generators in declaration order (duplicates and identities
  /// dropped). Table-built groups get a greedy generating set.
  const std::vector<Elem> &generators() const;

  /// Breadth-first word tree: parent(g) * generators()[step(g)] == g for
  /// every non-identity g, parent(g) strictly earlier in the tree order.
  Elem word_parent(Elem g) const;
  int word_step(Elem g) const;
  /// Elements in the order the spanning tree reaches them (identity first).
  const std::vector<Elem> &word_order() const;

  bool has_permutations() const;
  int degree() const;
  const Permutation &permutation(Elem a) const;
  std::optional<Elem> find_permutation(const Permutation &p) const;

  bool operator==(const FiniteGroup &other) const;

private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
  static FiniteGroup finish(Data data);
  std::shared_ptr<const Data> d_;

  friend FiniteGroup trusted_group(int order, std::vector<Elem> table, std::string name);
  friend Subgroup subgroup(const FiniteGroup &g, std::vector<Elem> elements);
};

/// Table-built group without axiom checks; for tables derived from groups.
FiniteGroup trusted_group(int order, std::vector<Elem> table, std::string name);

class GroupHom {
public:
  GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Elem> map);

  const FiniteGroup &source() const { return source_; }
  const FiniteGroup &target() const { return target_; }
  const std::vector<Elem> &map() const { return map_; }
  Elem operator()(Elem g) const { return map_[g]; }

  bool is_homomorphism() const;
  bool is_injective() const;
  bool is_bijective() const;

private:
  FiniteGroup source_;
  FiniteGroup target_;
  std::vector<Elem> map_;
};

GroupHom compose(const GroupHom &outer, const GroupHom &inner);

/// A subgroup re-indexed as a group of its own, with the inclusion.
struct Subgroup {
  FiniteGroup group;
  GroupHom inclusion;
};

/// Subgroup on a set of elements closed under multiplication. The new
/// indices follow increasing parent index.
Subgroup subgroup(const FiniteGroup &g, std::vector<Elem> elements);
Subgroup generated_subgroup(const FiniteGroup &g, const std::vector<Elem> &generators);

/// Conjugacy classes sorted by smallest member; each class sorted.
std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup &g);
/// Class id of each element under the ordering of conjugacy_classes.
std::vector<int> conjugacy_class_index(const FiniteGroup &g);

Subgroup centralizer(const FiniteGroup &g, Elem x);
Subgroup center(const FiniteGroup &g);

/// Group generated by commutators.
Subgroup derived_subgroup(const FiniteGroup &g);

/// Quotient by a normal subgroup, with the projection.
struct Quotient {
  FiniteGroup group;
  GroupHom projection;
};
Quotient quotient(const FiniteGroup &g, const std::vector<Elem> &normal);

/// Invariant factors d1 | d2 | ... (all > 1) of a finite abelian group.
std::vector<long> abelian_invariants(const FiniteGroup &g);
/// Invariant factors of G / [G, G].
std::vector<long> abelianization_invariants(const FiniteGroup &g);

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b);
FiniteGroup cyclic_group(int n);
/// Product of cyclic groups Z/n1 x Z/n2 x ..., elements in mixed-radix order
/// with the first factor varying fastest.
FiniteGroup abelian_group(const std::vector<long> &factors);

/// Builtins: Zn(n), Sym(n), Dih(n) (order 2n), Q8, Z2xZ2, A4.
FiniteGroup builtin(std::string_view name, std::size_t max_order = kDefaultMaxOrder);

/// Extends images of g.generators() along the word tree and checks the result
/// is a homomorphism.
std::optional<GroupHom> extend_homomorphism(const FiniteGroup &source,
                                            const FiniteGroup &target,
                                            const std::vector<Elem> &generator_images);

/// All homomorphisms, lexicographic in the generator images.
std::vector<GroupHom> all_homomorphisms(const FiniteGroup &source, const FiniteGroup &target);

std::optional<GroupHom> find_isomorphism(const FiniteGroup &a, const FiniteGroup &b);
inline bool isomorphic(const FiniteGroup &a, const FiniteGroup &b) {
  return find_isomorphism(a, b).has_value();
}

} // namespace gcep

#endif // GCEP_GROUP_HPP
