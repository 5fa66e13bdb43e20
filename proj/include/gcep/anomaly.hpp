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

#ifndef GCEP_ANOMALY_HPP
#define GCEP_ANOMALY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcep/cohomology.hpp"
#include "gcep/functor_rep.hpp"
#include "gcep/groupoid.hpp"

namespace gcep {

/// A class in H^2 of each component's automorphism group with C^x
/// coefficients, given by a normalized Q/Z 2-cocycle per component
/// (connected_components order, automorphisms of the component's first
/// object).
struct Anomaly {
  FiniteGroupoid symmetry;
  std::vector<Cochain> class_at;

  std::optional<std::string> validate() const;
};

Anomaly trivial_anomaly(const FiniteGroupoid &y);
/// The anomaly on BG given by one cocycle.
Anomaly group_anomaly(const FiniteGroup &g, const Cochain &alpha);

struct AnomalyClassification {
  FiniteGroupoid symmetry;
  std::vector<CohomologyGroup> per_component;
  /// Every element of the product of the component multipliers, trivial
  /// first, as sums of the multiplier representatives.
  std::vector<Anomaly> classes;
};

/// Throws bound_exceeded past 4096 classes.
AnomalyClassification classify_anomalies(const FiniteGroupoid &y,
                                         const CohomologyOptions &options = {});

/// Conjugacy classes of g with alpha(g, h) = alpha(h, g) for every h
/// commuting with g. Throws not_a_cocycle unless alpha is a normalized Q/Z
/// 2-cocycle.
std::vector<std::vector<Elem>> alpha_regular_classes(const FiniteGroup &g, const Cochain &alpha);

/// rho(g) rho(h) = exp(2 pi i alpha(g, h)) rho(gh).
struct ProjectiveRep {
  FiniteGroup group;
  Cochain alpha;
  std::vector<ComplexMatrix> matrices;

  int degree() const { return matrices.empty() ? 0 : static_cast<int>(matrices[0].rows()); }
  std::vector<std::complex<double>> character() const;
  std::optional<std::string> validate(double tolerance = kLinearTolerance) const;
};

/// One representative per isomorphism class of irreducible alpha-projective
/// representations, by degree. Split from the twisted regular
/// representation with a seeded random Hermitian element of its commutant;
/// throws numerical_failure when the split cannot be certified.
std::vector<ProjectiveRep> projective_irreps(const FiniteGroup &g, const Cochain &alpha,
                                             std::uint64_t seed = 0);

/// g -> exp(2 pi i beta(g)) rho(g), projective for alpha + d beta.
ProjectiveRep rescale(const ProjectiveRep &rho, const Cochain &beta);

/// Twisted groupoid algebra: e_f e_g = exp(2 pi i omega(f, g) / level) e_{fg}
/// when f and g compose, 0 otherwise. omega is transported from the
/// component cocycles along spanning trees.
struct TwistedAlgebra {
  FiniteGroupoid groupoid;
  std::int64_t level = 1;
  std::vector<std::int64_t> omega; // index f * |Mor| + g, 0 when not composable
  bool semisimple = false;
  int simple_blocks = 0;

  int dimension() const { return groupoid.num_morphisms(); }
  std::int64_t exponent(Mor f, Mor g) const {
    return omega[static_cast<std::size_t>(f) * dimension() + g];
  }
  /// Exhaustive exact checks of the structure constants.
  bool associative() const;
  bool unital() const;
  std::vector<std::complex<double>> multiply(const std::vector<std::complex<double>> &a,
                                             const std::vector<std::complex<double>> &b) const;
};

/// Throws not_a_cocycle for an invalid anomaly and bound_exceeded above 512
/// morphisms.
TwistedAlgebra twisted_algebra(const FiniteGroupoid &y, const Anomaly &a);

/// An irreducible module of a twisted algebra: a twisted functor Y -> Vect.
struct TwistedModule {
  std::vector<int> dims;               // per object
  std::vector<ComplexMatrix> matrices; // per morphism, on the total space
};
std::vector<TwistedModule> twisted_modules(const TwistedAlgebra &algebra, std::uint64_t seed = 0);

struct SectionCorrespondence {
  /// Requested dimension per component, or -1 when not constant on it.
  std::vector<int> component_dims;
  std::vector<std::vector<int>> projective_degrees; // per component
  /// Isomorphism classes of alpha-projective data of the requested
  /// dimensions, assembled over components.
  std::int64_t projective_classes = 0;
  /// Isomorphism classes of twisted functors Y -> Vect with those
  /// dimensions, from the irreducible modules of the twisted algebra.
  std::int64_t section_classes = 0;
  /// Restriction to the root and extension along trees match the
  /// irreducibles one to one.
  bool matched = false;
  /// Trivial anomaly only: extended representations are functors Y -> Vect.
  std::optional<bool> functor_reduction;

  bool ok() const {
    return matched && projective_classes == section_classes && functor_reduction != false;
  }
};

SectionCorrespondence anomalous_theories_as_sections(const FiniteGroupoid &y, const Anomaly &a,
                                                     const std::vector<int> &dims,
                                                     std::uint64_t seed = 0);

} // namespace gcep

#endif // GCEP_ANOMALY_HPP
