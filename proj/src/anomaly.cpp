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

#include "gcep/anomaly.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "gcep/error.hpp"

namespace gcep {

namespace {

constexpr double kSplitTolerance = 1e-8;
constexpr double kCharacterTolerance = 1e-6;
constexpr double kTraceFormTolerance = 1e-8;
constexpr int kMaxAlgebraDimension = 512;
constexpr std::int64_t kMaxAnomalyClasses = 4096;

std::int64_t mod(std::int64_t v, std::int64_t m) { return ((v % m) + m) % m; }

std::complex<double> phase(std::int64_t v, std::int64_t level) {
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(mod(v, level)) /
                             static_cast<double>(level));
}

std::optional<std::string> cocycle_problem(const FiniteGroup &g, const Cochain &alpha) {
  if (alpha.degree != 2 || alpha.components() != 1 || alpha.moduli[0] <= 0)
    return std::string("anomaly cocycle must be a Q/Z 2-cochain with a positive level");
  if (alpha.values.size() != static_cast<std::size_t>(g.order()) * g.order())
    return std::string("anomaly cocycle table has the wrong size for its group");
  if (!alpha.is_normalized(g))
    return std::string("anomaly cocycle is not normalized");
  if (!is_cocycle(g, CoeffModule::rational_mod_integers(), alpha))
    return std::string("anomaly cochain fails the cocycle identity");
  return std::nullopt;
}

void check_alpha(const FiniteGroup &g, const Cochain &alpha) {
  if (auto problem = cocycle_problem(g, alpha))
    fail(ErrorKind::not_a_cocycle, *problem);
}

double unit_interval(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

std::vector<std::complex<double>> traces(const std::vector<ComplexMatrix> &ms) {
  std::vector<std::complex<double>> out;
  out.reserve(ms.size());
  for (const auto &m : ms)
    out.push_back(m.trace());
  return out;
}

bool same_character(const std::vector<std::complex<double>> &a,
                    const std::vector<std::complex<double>> &b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > kCharacterTolerance)
      return false;
  return true;
}

struct SplitModule {
  std::vector<ComplexMatrix> matrices;
  std::vector<std::complex<double>> character;
};

// One irreducible submodule per isomorphism class of the left regular
// module. Eigenspaces of a generic Hermitian element of the right action are
// invariant under the left action.
std::vector<SplitModule> split_regular(const std::vector<ComplexMatrix> &left,
                                       const std::vector<ComplexMatrix> &right,
                                       std::uint64_t seed) {
  if (left.empty() || left.front().rows() == 0)
    return {};
  const Eigen::Index n = left.front().rows();
  std::mt19937_64 rng(seed);
  double worst_gap = std::numeric_limits<double>::infinity();
  double worst_residual = 0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    ComplexMatrix y = ComplexMatrix::Zero(n, n);
    for (const ComplexMatrix &r : right) {
      const double re = unit_interval(rng);
      const double im = unit_interval(rng);
      y += std::complex<double>(re, im) * r;
    }
    const ComplexMatrix h = (y + y.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
    if (es.info() != Eigen::Success)
      continue;
    const Eigen::VectorXd &values = es.eigenvalues();
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    std::vector<Eigen::Index> starts{0};
    double gap = std::numeric_limits<double>::infinity();
    for (Eigen::Index i = 1; i < n; ++i) {
      const double d = values[i] - values[i - 1];
      if (d > 1e-6 * scale) {
        starts.push_back(i);
        gap = std::min(gap, d);
      }
    }
    starts.push_back(n);
    worst_gap = std::min(worst_gap, gap);
    if (gap < 1e-4 * scale)
      continue;

    std::vector<SplitModule> found;
    double residual = 0;
    Eigen::Index squares = 0;
    for (std::size_t c = 0; c + 1 < starts.size(); ++c) {
      const Eigen::Index k = starts[c + 1] - starts[c];
      const ComplexMatrix q = es.eigenvectors().middleCols(starts[c], k);
      SplitModule m;
      for (const ComplexMatrix &l : left) {
        ComplexMatrix rho = q.adjoint() * l * q;
        residual = std::max(residual, (l * q - q * rho).cwiseAbs().maxCoeff());
        m.matrices.push_back(std::move(rho));
      }
      m.character = traces(m.matrices);
      const bool known = std::any_of(found.begin(), found.end(), [&](const SplitModule &f) {
        return same_character(f.character, m.character);
      });
      if (!known) {
        squares += k * k;
        found.push_back(std::move(m));
      }
    }
    worst_residual = std::max(worst_residual, residual);
    if (residual > kSplitTolerance || squares != n)
      continue;
    return found;
  }
  fail(ErrorKind::numerical_failure,
       "could not split the regular representation (smallest eigenvalue gap " +
           std::to_string(worst_gap) + ", largest invariance residual " +
           std::to_string(worst_residual) + ")");
}

// Multisets of coins (distinct kinds, repeats allowed) summing to n.
std::int64_t coin_ways(int n, const std::vector<int> &coins) {
  if (n < 0)
    return 0;
  std::vector<std::int64_t> w(static_cast<std::size_t>(n) + 1, 0);
  w[0] = 1;
  for (int c : coins)
    for (int v = c; v <= n; ++v)
      w[v] += w[v - c];
  return w[n];
}

// Per morphism f: x -> y, the loop t_y^-1 f t_x at its component root, as an
// element of that root's automorphism group.
struct Loops {
  std::vector<ComponentTree> trees;
  std::vector<AutomorphismGroup> auts;
  std::vector<int> component; // per object
  std::vector<Mor> tree;      // per object, root -> object
  std::vector<Elem> loop;     // per morphism
};

Loops loops(const FiniteGroupoid &y) {
  Loops l;
  l.trees = spanning_trees(y);
  l.component.assign(y.num_objects(), -1);
  l.tree.assign(y.num_objects(), -1);
  std::vector<Elem> local(y.num_morphisms(), -1);
  for (std::size_t c = 0; c < l.trees.size(); ++c) {
    const ComponentTree &t = l.trees[c];
    l.auts.push_back(automorphism_group(y, t.root));
    for (std::size_t i = 0; i < t.objects.size(); ++i) {
      l.component[t.objects[i]] = static_cast<int>(c);
      l.tree[t.objects[i]] = t.from_root[i];
    }
    const auto &mors = l.auts.back().morphisms;
    for (std::size_t i = 0; i < mors.size(); ++i)
      local[mors[i]] = static_cast<Elem>(i);
  }
  for (Mor f = 0; f < y.num_morphisms(); ++f) {
    const Mor m = y.compose(y.inverse(l.tree[y.target(f)]), y.compose(f, l.tree[y.source(f)]));
    l.loop.push_back(local[m]);
  }
  return l;
}

void check_anomaly(const FiniteGroupoid &y, const Anomaly &a) {
  require(a.symmetry == y, ErrorKind::invalid_input, "anomaly is defined on another groupoid");
  if (auto problem = a.validate())
    fail(ErrorKind::not_a_cocycle, *problem);
}

int numerical_rank(const ComplexMatrix &m) {
  if (m.rows() == 0 || m.cols() == 0)
    return 0;
  Eigen::FullPivLU<ComplexMatrix> lu(m);
  lu.setThreshold(1e-8);
  return static_cast<int>(lu.rank());
}

// Centre dimension of the twisted group algebra of g.
int centre_dimension(const FiniteGroup &g, const Cochain &alpha) {
  const int n = g.order();
  const std::int64_t level = alpha.moduli[0];
  // x e_h = e_h x for every h; x = sum x_b e_b.
  ComplexMatrix eq = ComplexMatrix::Zero(static_cast<Eigen::Index>(n) * n, n);
  for (Elem h = 0; h < n; ++h)
    for (Elem b = 0; b < n; ++b) {
      eq(static_cast<Eigen::Index>(h) * n + g.mul(b, h), b) +=
          phase(alpha.at(tuple_index(g, {b, h})), level);
      eq(static_cast<Eigen::Index>(h) * n + g.mul(h, b), b) -=
          phase(alpha.at(tuple_index(g, {h, b})), level);
    }
  return n - numerical_rank(eq);
}

} // namespace

std::optional<std::string> Anomaly::validate() const {
  const auto trees = spanning_trees(symmetry);
  if (class_at.size() != trees.size())
    return "anomaly lists " + std::to_string(class_at.size()) + " classes for " +
           std::to_string(trees.size()) + " components";
  for (std::size_t c = 0; c < trees.size(); ++c)
    if (auto problem =
            cocycle_problem(automorphism_group(symmetry, trees[c].root).group, class_at[c]))
      return "component " + std::to_string(c) + ": " + *problem;
  return std::nullopt;
}

Anomaly trivial_anomaly(const FiniteGroupoid &y) {
  Anomaly a{y, {}};
  for (const ComponentTree &t : spanning_trees(y))
    a.class_at.push_back(zero_cochain(automorphism_group(y, t.root).group, 2, {1}));
  return a;
}

Anomaly group_anomaly(const FiniteGroup &g, const Cochain &alpha) {
  check_alpha(g, alpha);
  return Anomaly{delooping(g), {alpha}};
}

AnomalyClassification classify_anomalies(const FiniteGroupoid &y,
                                         const CohomologyOptions &options) {
  AnomalyClassification out;
  out.symmetry = y;
  std::vector<FiniteGroup> groups;
  std::int64_t total = 1;
  for (const ComponentTree &t : spanning_trees(y)) {
    groups.push_back(automorphism_group(y, t.root).group);
    out.per_component.push_back(schur_multiplier(groups.back(), options));
    total *= out.per_component.back().order();
    require(total <= kMaxAnomalyClasses, ErrorKind::bound_exceeded,
            "more than " + std::to_string(kMaxAnomalyClasses) + " anomaly classes");
  }
  std::vector<std::int64_t> radix;
  for (const auto &h : out.per_component)
    radix.insert(radix.end(), h.invariants.begin(), h.invariants.end());
  std::vector<std::int64_t> digit(radix.size(), 0);
  for (std::int64_t k = 0; k < total; ++k) {
    Anomaly a{y, {}};
    std::size_t d = 0;
    for (std::size_t c = 0; c < groups.size(); ++c) {
      const auto &h = out.per_component[c];
      const std::int64_t level = groups[c].order();
      Cochain alpha = zero_cochain(groups[c], 2, {level});
      for (std::size_t i = 0; i < h.invariants.size(); ++i, ++d)
        for (std::size_t t = 0; t < alpha.values.size(); ++t)
          alpha.values[t] =
              mod(alpha.values[t] + digit[d] * h.representatives[i].values[t], level);
      a.class_at.push_back(std::move(alpha));
    }
    out.classes.push_back(std::move(a));
    for (std::size_t i = 0; i < digit.size(); ++i) {
      if (++digit[i] < radix[i])
        break;
      digit[i] = 0;
    }
  }
  return out;
}

std::vector<std::vector<Elem>> alpha_regular_classes(const FiniteGroup &g, const Cochain &alpha) {
  check_alpha(g, alpha);
  const std::int64_t level = alpha.moduli[0];
  auto regular = [&](Elem x) {
    for (Elem h = 0; h < g.order(); ++h)
      if (g.commute(x, h) &&
          mod(alpha.at(tuple_index(g, {x, h})) - alpha.at(tuple_index(g, {h, x})), level) != 0)
        return false;
    return true;
  };
  std::vector<std::vector<Elem>> out;
  for (const auto &cls : conjugacy_classes(g)) {
    const bool first = regular(cls.front());
    for (Elem x : cls)
      require(regular(x) == first, ErrorKind::not_a_cocycle,
              "regularity is not constant on the class of element " +
                  std::to_string(cls.front()));
    if (first)
      out.push_back(cls);
  }
  return out;
}

std::vector<std::complex<double>> ProjectiveRep::character() const { return traces(matrices); }

std::optional<std::string> ProjectiveRep::validate(double tolerance) const {
  const int n = group.order();
  if (static_cast<int>(matrices.size()) != n)
    return std::string("projective representation needs one matrix per element");
  if (auto problem = cocycle_problem(group, alpha))
    return problem;
  const int d = degree();
  for (const auto &m : matrices)
    if (m.rows() != d || m.cols() != d)
      return std::string("matrices have inconsistent shapes");
  if (d == 0)
    return std::nullopt;
  if ((matrices[0] - ComplexMatrix::Identity(d, d)).cwiseAbs().maxCoeff() > tolerance)
    return std::string("the identity element is not sent to the identity matrix");
  const std::int64_t level = alpha.moduli[0];
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      const ComplexMatrix diff = matrices[x] * matrices[y] -
                                 phase(alpha.at(tuple_index(group, {x, y})), level) *
                                     matrices[group.mul(x, y)];
      if (diff.cwiseAbs().maxCoeff() > tolerance)
        return "twisted relation fails at elements " + std::to_string(x) + ", " +
               std::to_string(y);
    }
  return std::nullopt;
}

std::vector<ProjectiveRep> projective_irreps(const FiniteGroup &g, const Cochain &alpha,
                                             std::uint64_t seed) {
  check_alpha(g, alpha);
  const int n = g.order();
  const std::int64_t level = alpha.moduli[0];
  std::vector<ComplexMatrix> left(n, ComplexMatrix::Zero(n, n));
  std::vector<ComplexMatrix> right = left;
  for (Elem x = 0; x < n; ++x)
    for (Elem h = 0; h < n; ++h) {
      left[x](g.mul(x, h), h) = phase(alpha.at(tuple_index(g, {x, h})), level);
      right[x](g.mul(h, x), h) = phase(alpha.at(tuple_index(g, {h, x})), level);
    }
  const auto modules = split_regular(left, right, seed);
  const std::size_t expected = alpha_regular_classes(g, alpha).size();
  if (modules.size() != expected)
    fail(ErrorKind::numerical_failure,
         "found " + std::to_string(modules.size()) + " projective irreducibles but " +
             std::to_string(expected) + " regular classes");
  std::vector<ProjectiveRep> out;
  for (const auto &m : modules) {
    ProjectiveRep rho{g, alpha, m.matrices};
    if (auto problem = rho.validate())
      fail(ErrorKind::numerical_failure, "split module is not projective: " + *problem);
    out.push_back(std::move(rho));
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const auto &a, const auto &b) { return a.degree() < b.degree(); });
  return out;
}

ProjectiveRep rescale(const ProjectiveRep &rho, const Cochain &beta) {
  const FiniteGroup &g = rho.group;
  require(beta.degree == 1 && beta.components() == 1 && beta.moduli[0] > 0 &&
              beta.values.size() == static_cast<std::size_t>(g.order()),
          ErrorKind::invalid_input, "rescaling needs a Q/Z 1-cochain on the same group");
  const std::int64_t a_level = rho.alpha.moduli[0];
  const std::int64_t b_level = beta.moduli[0];
  const std::int64_t level = std::lcm(a_level, b_level);
  ProjectiveRep out{g, zero_cochain(g, 2, {level}), {}};
  for (Elem x = 0; x < g.order(); ++x)
    for (Elem y = 0; y < g.order(); ++y) {
      const std::int64_t t = tuple_index(g, {x, y});
      const std::int64_t d = beta.at(y) - beta.at(g.mul(x, y)) + beta.at(x);
      out.alpha.values[t] = mod(rho.alpha.at(t) * (level / a_level) + d * (level / b_level), level);
    }
  for (Elem x = 0; x < g.order(); ++x)
    out.matrices.push_back(phase(beta.at(x), b_level) * rho.matrices[x]);
  return out;
}

bool TwistedAlgebra::associative() const {
  const FiniteGroupoid &y = groupoid;
  // (e_f e_g) e_h = e_f (e_g e_h) over every composable triple.
  for (Mor g = 0; g < dimension(); ++g) {
    const Obj in = y.source(g), out = y.target(g);
    for (Obj a = 0; a < y.num_objects(); ++a)
      for (Mor f : y.hom(out, a))
        for (Obj b = 0; b < y.num_objects(); ++b)
          for (Mor h : y.hom(b, in)) {
            const Mor fg = y.compose(f, g), gh = y.compose(g, h);
            if (mod(exponent(f, g) + exponent(fg, h) - exponent(g, h) - exponent(f, gh), level) !=
                0)
              return false;
          }
  }
  return true;
}

bool TwistedAlgebra::unital() const {
  const FiniteGroupoid &y = groupoid;
  for (Mor f = 0; f < dimension(); ++f)
    if (mod(exponent(y.identity(y.target(f)), f), level) != 0 ||
        mod(exponent(f, y.identity(y.source(f))), level) != 0)
      return false;
  return true;
}

std::vector<std::complex<double>>
TwistedAlgebra::multiply(const std::vector<std::complex<double>> &a,
                         const std::vector<std::complex<double>> &b) const {
  require(static_cast<int>(a.size()) == dimension() && static_cast<int>(b.size()) == dimension(),
          ErrorKind::invalid_input, "algebra elements need one coefficient per morphism");
  std::vector<std::complex<double>> out(dimension());
  for (Mor f = 0; f < dimension(); ++f) {
    if (a[f] == 0.0)
      continue;
    for (Mor g = 0; g < dimension(); ++g)
      if (b[g] != 0.0 && groupoid.composable(f, g))
        out[groupoid.compose(f, g)] += a[f] * b[g] * phase(exponent(f, g), level);
  }
  return out;
}

TwistedAlgebra twisted_algebra(const FiniteGroupoid &y, const Anomaly &a) {
  check_anomaly(y, a);
  const int m = y.num_morphisms();
  require(m <= kMaxAlgebraDimension, ErrorKind::bound_exceeded,
          "twisted algebra limited to " + std::to_string(kMaxAlgebraDimension) + " morphisms");
  const Loops l = loops(y);
  TwistedAlgebra out;
  out.groupoid = y;
  for (const Cochain &c : a.class_at)
    out.level = std::lcm(out.level, c.moduli[0]);
  out.omega.assign(static_cast<std::size_t>(m) * m, 0);
  for (Mor f = 0; f < m; ++f)
    for (Mor g = 0; g < m; ++g) {
      if (!y.composable(f, g))
        continue;
      const int c = l.component[y.source(f)];
      const Cochain &alpha = a.class_at[c];
      const FiniteGroup &grp = l.auts[c].group;
      out.omega[static_cast<std::size_t>(f) * m + g] =
          mod(alpha.at(tuple_index(grp, {l.loop[f], l.loop[g]})) * (out.level / alpha.moduli[0]),
              out.level);
    }

  // Regular trace form: tr(L_f L_g) vanishes unless fg is an identity, so
  // the form is monomial and nondegenerate iff each tr(L_f L_{f^-1}) is.
  out.semisimple = true;
  for (Mor f = 0; f < m && out.semisimple; ++f) {
    const Mor g = y.inverse(f);
    std::complex<double> trace = 0;
    for (Obj x = 0; x < y.num_objects(); ++x)
      for (Mor k : y.hom(x, y.source(g))) {
        const Mor gk = y.compose(g, k);
        if (y.compose(f, gk) == k)
          trace += phase(out.exponent(g, k) + out.exponent(f, gk), out.level);
      }
    out.semisimple = std::abs(trace) > kTraceFormTolerance;
  }
  // Each component is Morita equivalent to the twisted group algebra at its
  // root, so the centres agree.
  for (std::size_t c = 0; c < l.trees.size(); ++c)
    out.simple_blocks += centre_dimension(l.auts[c].group, a.class_at[c]);
  return out;
}

std::vector<TwistedModule> twisted_modules(const TwistedAlgebra &algebra, std::uint64_t seed) {
  const FiniteGroupoid &y = algebra.groupoid;
  const int m = algebra.dimension();
  std::vector<ComplexMatrix> left(m, ComplexMatrix::Zero(m, m));
  std::vector<ComplexMatrix> right = left;
  for (Mor f = 0; f < m; ++f)
    for (Mor k = 0; k < m; ++k) {
      if (y.composable(f, k))
        left[f](y.compose(f, k), k) = phase(algebra.exponent(f, k), algebra.level);
      if (y.composable(k, f))
        right[f](y.compose(k, f), k) = phase(algebra.exponent(k, f), algebra.level);
    }
  std::vector<TwistedModule> out;
  for (auto &s : split_regular(left, right, seed)) {
    TwistedModule tm;
    for (Obj x = 0; x < y.num_objects(); ++x)
      tm.dims.push_back(static_cast<int>(std::lround(s.matrices[y.identity(x)].trace().real())));
    tm.matrices = std::move(s.matrices);
    out.push_back(std::move(tm));
  }
  return out;
}

SectionCorrespondence anomalous_theories_as_sections(const FiniteGroupoid &y, const Anomaly &a,
                                                     const std::vector<int> &dims,
                                                     std::uint64_t seed) {
  check_anomaly(y, a);
  require(static_cast<int>(dims.size()) == y.num_objects(), ErrorKind::invalid_input,
          "need one dimension per object");
  require(std::all_of(dims.begin(), dims.end(), [](int d) { return d >= 0; }),
          ErrorKind::invalid_input, "dimensions must be nonnegative");
  const Loops l = loops(y);
  const std::size_t nc = l.trees.size();
  SectionCorrespondence out;
  std::vector<std::vector<ProjectiveRep>> irreps(nc);
  out.projective_classes = 1;
  for (std::size_t c = 0; c < nc; ++c) {
    int n = dims[l.trees[c].root];
    for (Obj x : l.trees[c].objects)
      if (dims[x] != n)
        n = -1;
    out.component_dims.push_back(n);
    irreps[c] = projective_irreps(l.auts[c].group, a.class_at[c], seed);
    std::vector<int> degrees;
    for (const auto &rho : irreps[c])
      degrees.push_back(rho.degree());
    out.projective_classes *= coin_ways(n, degrees);
    out.projective_degrees.push_back(std::move(degrees));
  }

  const TwistedAlgebra algebra = twisted_algebra(y, a);
  const auto modules = twisted_modules(algebra, seed);
  std::vector<std::vector<int>> module_degrees(nc);
  out.matched = true;
  std::vector<std::vector<int>> hits(nc);
  for (std::size_t c = 0; c < nc; ++c)
    hits[c].assign(irreps[c].size(), 0);
  for (const TwistedModule &tm : modules) {
    int c = -1;
    bool constant = true;
    for (Obj x = 0; x < y.num_objects(); ++x)
      if (tm.dims[x] > 0) {
        if (c >= 0 && c != l.component[x])
          constant = false;
        c = l.component[x];
      }
    if (c < 0 || !constant) {
      out.matched = false;
      continue;
    }
    const int root_dim = tm.dims[l.trees[c].root];
    for (Obj x : l.trees[c].objects)
      constant = constant && tm.dims[x] == root_dim;
    if (!constant) {
      out.matched = false;
      continue;
    }
    module_degrees[c].push_back(root_dim);

    // Restriction to the root.
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(tm.matrices[y.identity(l.trees[c].root)]);
    const ComplexMatrix p = es.eigenvectors().rightCols(root_dim);
    std::vector<ComplexMatrix> restricted;
    for (Mor f : l.auts[c].morphisms)
      restricted.push_back(p.adjoint() * tm.matrices[f] * p);
    const auto character = traces(restricted);
    int match = -1;
    for (std::size_t i = 0; i < irreps[c].size(); ++i)
      if (irreps[c][i].degree() == root_dim && same_character(irreps[c][i].character(), character))
        match = static_cast<int>(i);
    if (match < 0)
      out.matched = false;
    else
      ++hits[c][match];
  }
  for (std::size_t c = 0; c < nc; ++c)
    for (int h : hits[c])
      out.matched = out.matched && h == 1;

  // Extension along the trees: f -> rho(loop(f)) satisfies the twisted
  // relation of the algebra.
  for (std::size_t c = 0; c < nc; ++c)
    for (const ProjectiveRep &rho : irreps[c])
      for (Mor f = 0; f < y.num_morphisms(); ++f) {
        if (l.component[y.source(f)] != static_cast<int>(c))
          continue;
        for (Obj x = 0; x < y.num_objects(); ++x)
          for (Mor g : y.hom(x, y.source(f))) {
            const ComplexMatrix diff =
                rho.matrices[l.loop[f]] * rho.matrices[l.loop[g]] -
                phase(algebra.exponent(f, g), algebra.level) *
                    rho.matrices[l.loop[y.compose(f, g)]];
            if (diff.cwiseAbs().maxCoeff() > kLinearTolerance)
              out.matched = false;
          }
      }

  out.section_classes = 1;
  for (std::size_t c = 0; c < nc; ++c)
    out.section_classes *= coin_ways(out.component_dims[c], module_degrees[c]);

  const bool trivial = std::all_of(a.class_at.begin(), a.class_at.end(), [](const Cochain &c) {
    return std::all_of(c.values.begin(), c.values.end(), [&](std::int64_t v) {
      return mod(v, c.moduli[0]) == 0;
    });
  });
  if (trivial) {
    bool all_valid = true;
    for (std::size_t c = 0; c < nc; ++c)
      for (const ProjectiveRep &rho : irreps[c]) {
        LinearRep r{y, std::vector<int>(y.num_objects(), 0), {}};
        for (Obj x : l.trees[c].objects)
          r.dim_at[x] = rho.degree();
        for (Mor f = 0; f < y.num_morphisms(); ++f)
          r.matrices.push_back(l.component[y.source(f)] == static_cast<int>(c)
                                   ? rho.matrices[l.loop[f]]
                                   : ComplexMatrix(0, 0));
        all_valid = all_valid && !r.validate().has_value();
      }
    out.functor_reduction = all_valid;
  }
  return out;
}

} // namespace gcep
