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

#ifndef GCEP_COHOMOLOGY_HPP
#define GCEP_COHOMOLOGY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcep/group.hpp"

namespace gcep {

/// Coefficients: Z, a finite abelian group given by invariant factors, or
/// Q/Z (the torsion model of C^x). A single cyclic or Z factor may carry a
/// scalar action g.a = s(g) a.
class CoeffModule {
public:
  enum class Kind { integers, finite, rational_mod_integers };

  static CoeffModule integers();
  static CoeffModule cyclic(std::int64_t n);
  static CoeffModule finite(std::vector<std::int64_t> factors);
  static CoeffModule rational_mod_integers();

  /// `scalars[g]` for every element; must be a homomorphism to the units.
  CoeffModule with_action(std::vector<std::int64_t> scalars) const;

  Kind kind() const { return kind_; }
  const std::vector<std::int64_t> &factors() const { return factors_; }
  const std::vector<std::int64_t> &action() const { return action_; }
  bool trivial_action() const { return action_.empty(); }
  std::string describe() const;

  /// Checks the action against `g`; returns the first problem.
  std::optional<std::string> validate(const FiniteGroup &g) const;

private:
  Kind kind_ = Kind::integers;
  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> action_;
};

/// A cochain G^degree -> A. Values are stored per tuple and per component of
/// A (tuple-major, first argument varying fastest); component c lives in
/// Z/moduli[c], with 0 meaning Z. For Q/Z a single component at level M
/// stores v for v/M.
struct Cochain {
  int degree = 0;
  std::vector<std::int64_t> moduli;
  std::vector<std::int64_t> values;

  int components() const { return static_cast<int>(moduli.size()); }
  std::int64_t at(std::int64_t tuple, int component = 0) const {
    return values[tuple * components() + component];
  }
  bool is_normalized(const FiniteGroup &g) const;
  bool operator==(const Cochain &) const = default;
};

/// Index of a tuple of elements in a cochain table.
std::int64_t tuple_index(const FiniteGroup &g, const std::vector<Elem> &tuple);

Cochain zero_cochain(const FiniteGroup &g, int degree, std::vector<std::int64_t> moduli);

/// Degree n+1 coboundary, the module acting on the first slot.
Cochain coboundary(const FiniteGroup &g, const CoeffModule &a, const Cochain &c);

bool is_cocycle(const FiniteGroup &g, const CoeffModule &a, const Cochain &c);

struct CohomologyOptions {
  /// Bar-complex tuples |G|^(n+1) allowed.
  std::int64_t max_tuples = 65536;
  /// Entries of any dense integer matrix assembled.
  std::int64_t max_matrix_entries = 4000000;
};

struct CohomologyGroup {
  int degree = 0;
  /// Invariant factors d1 | d2 | ... (> 1), then 0 for each Z summand.
  std::vector<std::int64_t> invariants;
  /// One normalized cocycle per invariant, generating that summand.
  std::vector<Cochain> representatives;

  std::int64_t order() const; // 0 when infinite
  std::string describe() const;
};

/// H^n(G; A) for 0 <= n <= 3 through the normalized bar complex and exact
/// Smith normal forms. Throws bound_exceeded past `options`.
CohomologyGroup cohomology_group(const FiniteGroup &g, const CoeffModule &a, int n,
                                 const CohomologyOptions &options = {});

/// H^2(G; C^x) as H^3(G; Z), from the Smith form of the degree-2
/// differential. Representatives are Q/Z cocycles at level |G|.
CohomologyGroup schur_multiplier_integral(const FiniteGroup &g,
                                          const CohomologyOptions &options = {});
/// H^2(G; C^x) as H^2(G; Z/N) modulo the connecting image of Hom(G, Q/Z),
/// N = |G|. Representatives are Q/Z cocycles at level N.
CohomologyGroup schur_multiplier_finite(const FiniteGroup &g,
                                        const CohomologyOptions &options = {});
/// Both routes; throws route_disagreement unless the invariants agree.
CohomologyGroup schur_multiplier(const FiniteGroup &g, const CohomologyOptions &options = {});

/// b with c1 - c2 = d b, when it exists. Both cochains must be normalized
/// and of the same degree and moduli.
std::optional<Cochain> is_cohomologous(const FiniteGroup &g, const CoeffModule &a,
                                       const Cochain &c1, const Cochain &c2,
                                       const CohomologyOptions &options = {});

struct Extension {
  FiniteGroup group;  // pairs (a, g) with index g * |A| + a
  GroupHom inclusion;  // A -> E
  GroupHom projection; // E -> G_b
};

/// (a, g)(b, h) = (a + b + kappa(g, h), gh) on A x G_b, A finite abelian with
/// trivial action. Throws not_a_cocycle unless kappa is a normalized
/// 2-cocycle.
Extension extension_from_cocycle(const FiniteGroup &base, const CoeffModule &a,
                                 const Cochain &kappa);

/// The isomorphism (a, g) -> (a + beta(g), g) from the extension by kappa to
/// the extension by kappa', where kappa - kappa' = d beta.
GroupHom extension_isomorphism(const Extension &from, const Extension &to, const CoeffModule &a,
                               const Cochain &beta);

} // namespace gcep

#endif // GCEP_COHOMOLOGY_HPP
