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

#include "gcep/cohomology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gcep/error.hpp"
#include "gcep/intmat.hpp"
#include "gcep/kernels.hpp"

namespace gcep {

namespace {

std::int64_t reduce(std::int64_t v, std::int64_t m) {
  if (m == 0)
    return v;
  v %= m;
  return v < 0 ? v + m : v;
}

std::int64_t to_int64(const BigInt &v) {
  require(v.fits_slong_p(), ErrorKind::bound_exceeded, "cochain value exceeds 64-bit range");
  return v.get_si();
}

std::int64_t reduce_big(const BigInt &v, std::int64_t m) {
  if (m == 0)
    return to_int64(v);
  BigInt r = v % BigInt(static_cast<long>(m));
  if (r < 0)
    r += m;
  return r.get_si();
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  const BigInt l = lcm(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(b)));
  return to_int64(l);
}

// Normalized cochains of degree n are vectors over (|G|-1)^n tuples of
// non-identity elements; full tables are over |G|^n tuples.
struct Indexing {
  int order;
  int degree;
  std::int64_t full;
  std::int64_t normalized;
};

Indexing indexing(const FiniteGroup &g, int degree) {
  return {g.order(), degree, kernels::checked_pow(g.order(), degree),
          kernels::checked_pow(g.order() - 1, degree)};
}

// Full-table index of normalized index `k`.
std::int64_t full_of(const Indexing &ix, std::int64_t k) {
  std::int64_t out = 0, scale = 1;
  const int base = ix.order - 1;
  for (int i = 0; i < ix.degree; ++i) {
    out += (k % base + 1) * scale;
    k /= base;
    scale *= ix.order;
  }
  return out;
}

BigVector normalized_vector(const FiniteGroup &g, const Cochain &c, int component) {
  const Indexing ix = indexing(g, c.degree);
  BigVector v(static_cast<std::size_t>(ix.normalized));
  for (std::int64_t k = 0; k < ix.normalized; ++k)
    v[k] = static_cast<long>(c.at(full_of(ix, k), component));
  return v;
}

// Writes a normalized vector into component `component` of `c`.
void store(const FiniteGroup &g, Cochain &c, int component, const BigVector &v) {
  const Indexing ix = indexing(g, c.degree);
  for (std::int64_t k = 0; k < ix.normalized; ++k)
    c.values[full_of(ix, k) * c.components() + component] =
        reduce_big(v[k], c.moduli[component]);
}

Cochain from_vector(const FiniteGroup &g, int degree, std::int64_t modulus, const BigVector &v) {
  Cochain c = zero_cochain(g, degree, {modulus});
  store(g, c, 0, v);
  return c;
}

// Normalized differential C^degree -> C^{degree+1} with the first face
// multiplied by scalars[g1].
IntMatrix differential(const FiniteGroup &g, int degree, const std::vector<std::int64_t> &scalars,
                       const CohomologyOptions &options) {
  const std::int64_t rows = kernels::checked_pow(g.order() - 1, degree + 1);
  const std::int64_t cols = kernels::checked_pow(g.order() - 1, degree);
  require(rows * std::max<std::int64_t>(cols, 1) <= options.max_matrix_entries,
          ErrorKind::bound_exceeded,
          "differential of degree " + std::to_string(degree) + " has " +
              std::to_string(rows) + "x" + std::to_string(cols) + " entries");
  const auto bar = kernels::omp::bar_differential(g.table(), g.order(), degree);
  IntMatrix d(bar.rows, bar.cols);
  for (int r = 0; r < bar.rows; ++r)
    for (int c = 0; c < bar.cols; ++c)
      if (const int e = bar.entries[std::size_t(r) * bar.cols + c])
        d.at(r, c) = e;
  if (!scalars.empty()) {
    const int base = g.order() - 1;
    for (int r = 0; r < bar.rows; ++r) {
      const std::int64_t s = scalars[r % base + 1];
      if (s != 1)
        d.at(r, r / base) += static_cast<long>(s - 1);
    }
  }
  return d;
}

bool acts_trivially(const std::vector<std::int64_t> &scalars, std::int64_t modulus) {
  return std::all_of(scalars.begin(), scalars.end(),
                     [&](std::int64_t s) { return reduce(s - 1, modulus) == 0; });
}

BigVector unit_vector(int dim, int i) {
  BigVector e(dim);
  e[i] = 1;
  return e;
}

CohomologyGroup integral(const FiniteGroup &g, const std::vector<std::int64_t> &scalars, int n,
                         const CohomologyOptions &options) {
  CohomologyGroup out;
  out.degree = n;
  if (n == 0) {
    if (acts_trivially(scalars, 0)) {
      out.invariants = {0};
      out.representatives = {from_vector(g, 0, 0, {BigInt(1)})};
    }
    return out;
  }
  const SmithForm s = smith_normal_form(differential(g, n - 1, scalars, options));
  for (int i = 0; i < s.rank(); ++i) {
    if (s.diagonal[i] == 1)
      continue;
    BigVector e = unit_vector(s.rows, i);
    s.left_inverse(e);
    out.invariants.push_back(to_int64(s.diagonal[i]));
    out.representatives.push_back(from_vector(g, n, 0, e));
  }
  return out;
}

struct Lattices {
  int dim = 0;
  std::vector<BigVector> l;
  std::vector<BigVector> m;
};

// Z/N cocycles and coboundaries of degree n >= 1 as lattices in Z^dim
// containing N Z^dim.
Lattices cyclic_lattices(const FiniteGroup &g, std::int64_t modulus,
                         const std::vector<std::int64_t> &scalars, int n,
                         const CohomologyOptions &options) {
  Lattices out;
  const BigInt big_n = static_cast<long>(modulus);
  const SmithForm next = smith_normal_form(differential(g, n, scalars, options));
  out.dim = next.cols;
  for (int i = 0; i < next.cols; ++i) {
    BigVector e = unit_vector(next.cols, i);
    if (i < next.rank()) {
      const BigInt f = big_n / gcd(big_n, next.diagonal[i]);
      if (f == big_n)
        continue; // covered by N Z^dim below
      e[i] = f;
    }
    next.right(e);
    out.l.push_back(std::move(e));
  }
  const IntMatrix prev = differential(g, n - 1, scalars, options);
  for (int j = 0; j < prev.cols(); ++j)
    out.m.push_back(prev.column(j));
  for (int i = 0; i < out.dim; ++i) {
    BigVector e(out.dim);
    e[i] = big_n;
    out.l.push_back(e);
    out.m.push_back(std::move(e));
  }
  return out;
}

CohomologyGroup cyclic(const FiniteGroup &g, std::int64_t modulus,
                       const std::vector<std::int64_t> &scalars, int n,
                       const CohomologyOptions &options) {
  CohomologyGroup out;
  out.degree = n;
  if (n == 0) {
    std::int64_t h = modulus;
    for (std::int64_t s : scalars)
      h = std::gcd(h, reduce(s - 1, modulus));
    if (h > 1) {
      out.invariants = {h};
      out.representatives = {from_vector(g, 0, modulus, {BigInt(static_cast<long>(modulus / h))})};
    }
    return out;
  }
  const Lattices lat = cyclic_lattices(g, modulus, scalars, n, options);
  const SubquotientResult q = subquotient(lat.dim, lat.l, lat.m);
  for (std::size_t i = 0; i < q.invariants.size(); ++i) {
    out.invariants.push_back(to_int64(q.invariants[i]));
    out.representatives.push_back(from_vector(g, n, modulus, q.generators[i]));
  }
  return out;
}

// Direct sum over the factors, rewritten in invariant-factor form.
CohomologyGroup direct_sum(const FiniteGroup &g, const std::vector<std::int64_t> &factors, int n,
                           const CohomologyOptions &options) {
  struct Summand {
    std::int64_t order;
    int component;
    Cochain rep;
  };
  std::vector<Summand> parts;
  for (std::size_t c = 0; c < factors.size(); ++c) {
    const CohomologyGroup h = cyclic(g, factors[c], {}, n, options);
    for (std::size_t i = 0; i < h.invariants.size(); ++i)
      parts.push_back({h.invariants[i], static_cast<int>(c), h.representatives[i]});
  }
  CohomologyGroup out;
  out.degree = n;
  const int k = static_cast<int>(parts.size());
  std::vector<BigVector> l, m;
  for (int i = 0; i < k; ++i) {
    l.push_back(unit_vector(k, i));
    BigVector e(k);
    e[i] = static_cast<long>(parts[i].order);
    m.push_back(std::move(e));
  }
  const SubquotientResult q = subquotient(k, l, m);
  for (std::size_t t = 0; t < q.invariants.size(); ++t) {
    Cochain rep = zero_cochain(g, n, factors);
    for (int i = 0; i < k; ++i) {
      const std::int64_t coeff = reduce_big(q.generators[t][i], parts[i].order);
      if (coeff == 0)
        continue;
      const int c = parts[i].component;
      const std::int64_t mod = factors[c];
      for (std::size_t tuple = 0; tuple < parts[i].rep.values.size(); ++tuple) {
        std::int64_t &slot = rep.values[tuple * rep.components() + c];
        slot = reduce(slot + reduce(coeff * parts[i].rep.values[tuple], mod), mod);
      }
    }
    out.invariants.push_back(to_int64(q.invariants[t]));
    out.representatives.push_back(std::move(rep));
  }
  return out;
}

CohomologyGroup rational(const FiniteGroup &g, int n, const CohomologyOptions &options) {
  require(n >= 1, ErrorKind::invalid_input,
          "H^0 with Q/Z coefficients is Q/Z, which has no finite presentation");
  CohomologyGroup out;
  out.degree = n;
  const SmithForm s = smith_normal_form(differential(g, n, {}, options));
  const BigInt level = g.order();
  for (int i = 0; i < s.rank(); ++i) {
    if (s.diagonal[i] == 1)
      continue;
    BigVector e = unit_vector(s.cols, i);
    e[i] = level / s.diagonal[i];
    s.right(e);
    out.invariants.push_back(to_int64(s.diagonal[i]));
    out.representatives.push_back(from_vector(g, n, g.order(), e));
  }
  return out;
}

void check_tuples(const FiniteGroup &g, int n, const CohomologyOptions &options) {
  require(n >= 0 && n <= 3, ErrorKind::invalid_input,
          "cohomology degree must be between 0 and 3");
  const std::int64_t tuples = kernels::checked_pow(g.order(), n + 1);
  require(tuples <= options.max_tuples, ErrorKind::bound_exceeded,
          "|G|^" + std::to_string(n + 1) + " = " + std::to_string(tuples) +
              " bar tuples exceeds the limit of " + std::to_string(options.max_tuples));
}

void check_module(const FiniteGroup &g, const CoeffModule &a) {
  if (auto problem = a.validate(g))
    fail(ErrorKind::invalid_input, *problem);
}

std::string join_invariants(const std::vector<std::int64_t> &inv) {
  std::string s;
  for (std::size_t i = 0; i < inv.size(); ++i)
    s += (i ? " x " : "") + (inv[i] == 0 ? std::string("Z") : "Z/" + std::to_string(inv[i]));
  return s;
}

// Solves e_i y_i = w_i over the Smith form for one Z/N component.
std::optional<BigVector> solve_mod(const SmithForm &s, BigVector w, std::int64_t modulus) {
  const BigInt n = static_cast<long>(modulus);
  s.left(w);
  BigVector y(s.cols);
  for (int i = 0; i < s.rows; ++i) {
    BigInt wi = w[i] % n;
    if (wi < 0)
      wi += n;
    if (i >= s.rank()) {
      if (wi != 0)
        return std::nullopt;
      continue;
    }
    const BigInt d = gcd(s.diagonal[i], n);
    if (wi % d != 0)
      return std::nullopt;
    const BigInt sub = n / d;
    BigInt inv;
    const BigInt e = s.diagonal[i] / d;
    if (sub == 1) {
      y[i] = 0;
      continue;
    }
    mpz_invert(inv.get_mpz_t(), e.get_mpz_t(), sub.get_mpz_t());
    y[i] = ((wi / d) * inv) % sub;
  }
  s.right(y);
  return y;
}

} // namespace

CoeffModule CoeffModule::integers() { return CoeffModule{}; }

CoeffModule CoeffModule::cyclic(std::int64_t n) { return finite({n}); }

CoeffModule CoeffModule::finite(std::vector<std::int64_t> factors) {
  for (std::int64_t f : factors)
    require(f >= 1, ErrorKind::invalid_input, "coefficient factors must be positive");
  std::erase(factors, 1);
  CoeffModule m;
  m.kind_ = Kind::finite;
  m.factors_ = std::move(factors);
  return m;
}

CoeffModule CoeffModule::rational_mod_integers() {
  CoeffModule m;
  m.kind_ = Kind::rational_mod_integers;
  return m;
}

CoeffModule CoeffModule::with_action(std::vector<std::int64_t> scalars) const {
  require(kind_ == Kind::integers || factors_.size() == 1, ErrorKind::invalid_input,
          "a scalar action needs Z or a single cyclic factor");
  CoeffModule m = *this;
  m.action_ = std::move(scalars);
  return m;
}

std::string CoeffModule::describe() const {
  std::string s;
  switch (kind_) {
  case Kind::integers:
    s = "Z";
    break;
  case Kind::rational_mod_integers:
    s = "Q/Z";
    break;
  case Kind::finite:
    s = factors_.empty() ? "0" : join_invariants(factors_);
    break;
  }
  return action_.empty() ? s : s + " (twisted)";
}

std::optional<std::string> CoeffModule::validate(const FiniteGroup &g) const {
  if (action_.empty())
    return std::nullopt;
  const std::int64_t m = kind_ == Kind::finite ? factors_.front() : 0;
  if (static_cast<int>(action_.size()) != g.order())
    return "action lists " + std::to_string(action_.size()) + " scalars for a group of order " +
           std::to_string(g.order());
  for (int x = 0; x < g.order(); ++x) {
    const std::int64_t s = action_[x];
    if (m == 0 ? (s != 1 && s != -1) : std::gcd(reduce(s, m), m) != 1)
      return "scalar " + std::to_string(s) + " is not a unit of " + describe();
    for (int y = 0; y < g.order(); ++y)
      if (reduce(s * action_[y] - action_[g.mul(x, y)], m) != 0)
        return "scalars are not multiplicative at elements " + std::to_string(x) + ", " +
               std::to_string(y);
  }
  return std::nullopt;
}

bool Cochain::is_normalized(const FiniteGroup &g) const {
  const Indexing ix = indexing(g, degree);
  std::vector<int> digits(degree);
  for (std::int64_t t = 0; t < ix.full; ++t) {
    std::int64_t k = t;
    bool has_identity = false;
    for (int i = 0; i < degree; ++i) {
      has_identity |= (k % ix.order) == 0;
      k /= ix.order;
    }
    if (!has_identity)
      continue;
    for (int c = 0; c < components(); ++c)
      if (at(t, c) != 0)
        return false;
  }
  return true;
}

std::int64_t tuple_index(const FiniteGroup &g, const std::vector<Elem> &tuple) {
  std::int64_t index = 0;
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) {
    require(*it >= 0 && *it < g.order(), ErrorKind::invalid_input, "tuple element out of range");
    index = index * g.order() + *it;
  }
  return index;
}

Cochain zero_cochain(const FiniteGroup &g, int degree, std::vector<std::int64_t> moduli) {
  require(degree >= 0, ErrorKind::invalid_input, "cochain degree must be nonnegative");
  Cochain c;
  c.degree = degree;
  c.moduli = std::move(moduli);
  c.values.assign(
      static_cast<std::size_t>(kernels::checked_pow(g.order(), degree)) * c.moduli.size(), 0);
  return c;
}

Cochain coboundary(const FiniteGroup &g, const CoeffModule &a, const Cochain &c) {
  check_module(g, a);
  const std::int64_t full = kernels::checked_pow(g.order(), c.degree);
  require(static_cast<std::int64_t>(c.values.size()) == full * c.components(),
          ErrorKind::invalid_input, "cochain table has the wrong size");
  Cochain out = zero_cochain(g, c.degree + 1, c.moduli);
  std::vector<std::int64_t> slice(static_cast<std::size_t>(full));
  for (int k = 0; k < c.components(); ++k) {
    for (std::int64_t t = 0; t < full; ++t)
      slice[t] = c.at(t, k);
    const auto d = kernels::omp::coboundary(g.table(), g.order(), c.degree, slice, c.moduli[k],
                                            a.action());
    for (std::size_t t = 0; t < d.size(); ++t)
      out.values[t * out.components() + k] = d[t];
  }
  return out;
}

bool is_cocycle(const FiniteGroup &g, const CoeffModule &a, const Cochain &c) {
  const Cochain d = coboundary(g, a, c);
  return std::all_of(d.values.begin(), d.values.end(), [](std::int64_t v) { return v == 0; });
}

std::int64_t CohomologyGroup::order() const {
  std::int64_t n = 1;
  for (std::int64_t d : invariants) {
    if (d == 0)
      return 0;
    n *= d;
  }
  return n;
}

std::string CohomologyGroup::describe() const {
  return invariants.empty() ? "0" : join_invariants(invariants);
}

CohomologyGroup cohomology_group(const FiniteGroup &g, const CoeffModule &a, int n,
                                 const CohomologyOptions &options) {
  check_module(g, a);
  check_tuples(g, n, options);
  switch (a.kind()) {
  case CoeffModule::Kind::integers:
    return integral(g, a.action(), n, options);
  case CoeffModule::Kind::rational_mod_integers:
    return rational(g, n, options);
  case CoeffModule::Kind::finite:
    if (a.factors().size() == 1)
      return cyclic(g, a.factors().front(), a.action(), n, options);
    return direct_sum(g, a.factors(), n, options);
  }
  return {};
}

CohomologyGroup schur_multiplier_integral(const FiniteGroup &g,
                                          const CohomologyOptions &options) {
  return cohomology_group(g, CoeffModule::rational_mod_integers(), 2, options);
}

CohomologyGroup schur_multiplier_finite(const FiniteGroup &g, const CohomologyOptions &options) {
  check_tuples(g, 2, options);
  CohomologyGroup out;
  out.degree = 2;
  const std::int64_t n = g.order();
  if (n == 1)
    return out;
  Lattices lat = cyclic_lattices(g, n, {}, 2, options);
  // Connecting image of Hom(G, Q/Z) = Hom(G, Z/N): the carry of a lift.
  const CohomologyGroup h1 = cyclic(g, n, {}, 1, options);
  const int base = n - 1;
  for (const Cochain &phi : h1.representatives) {
    BigVector carry(lat.dim);
    for (int k = 0; k < lat.dim; ++k) {
      const int x = k % base + 1, y = k / base + 1;
      const std::int64_t sum = phi.at(x) + phi.at(y) - phi.at(g.mul(x, y));
      carry[k] = static_cast<long>(reduce(sum / n, n));
    }
    lat.m.push_back(std::move(carry));
  }
  const SubquotientResult q = subquotient(lat.dim, lat.l, lat.m);
  for (std::size_t i = 0; i < q.invariants.size(); ++i) {
    out.invariants.push_back(to_int64(q.invariants[i]));
    out.representatives.push_back(from_vector(g, 2, n, q.generators[i]));
  }
  return out;
}

CohomologyGroup schur_multiplier(const FiniteGroup &g, const CohomologyOptions &options) {
  CohomologyGroup a = schur_multiplier_integral(g, options);
  const CohomologyGroup b = schur_multiplier_finite(g, options);
  if (a.invariants != b.invariants)
    fail(ErrorKind::route_disagreement, "Schur multiplier routes disagree: " + a.describe() +
                                            " versus " + b.describe());
  return a;
}

std::optional<Cochain> is_cohomologous(const FiniteGroup &g, const CoeffModule &a,
                                       const Cochain &c1, const Cochain &c2,
                                       const CohomologyOptions &options) {
  check_module(g, a);
  require(c1.degree == c2.degree && c1.moduli == c2.moduli && c1.values.size() == c2.values.size(),
          ErrorKind::invalid_input, "cochains differ in degree or coefficients");
  require(c1.degree >= 1, ErrorKind::invalid_input, "degree 0 cochains have no coboundaries");
  require(c1.is_normalized(g) && c2.is_normalized(g), ErrorKind::invalid_input,
          "cochains must be normalized");
  check_tuples(g, c1.degree, options);
  const int n = c1.degree;
  const bool rational_kind = a.kind() == CoeffModule::Kind::rational_mod_integers;
  if (a.kind() == CoeffModule::Kind::finite)
    require(c1.moduli == a.factors(), ErrorKind::invalid_input,
            "cochain moduli do not match the coefficients");
  else
    require(c1.components() == 1 && (rational_kind ? c1.moduli[0] > 0 : c1.moduli[0] == 0),
            ErrorKind::invalid_input, "cochain moduli do not match the coefficients");

  const SmithForm s = smith_normal_form(differential(g, n - 1, a.action(), options));
  auto difference = [&](int k) {
    BigVector v = normalized_vector(g, c1, k);
    const BigVector w = normalized_vector(g, c2, k);
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] -= w[i];
    return v;
  };

  if (rational_kind) {
    const std::int64_t level = c1.moduli[0];
    BigVector w = difference(0);
    s.left(w);
    for (int i = s.rank(); i < s.rows; ++i)
      if (w[i] % level != 0)
        return std::nullopt;
    std::int64_t out_level = level;
    for (int i = 0; i < s.rank(); ++i)
      out_level = lcm64(out_level, level * to_int64(s.diagonal[i]));
    BigVector y(s.cols);
    for (int i = 0; i < s.rank(); ++i)
      y[i] = w[i] * (out_level / (level * s.diagonal[i]));
    s.right(y);
    return from_vector(g, n - 1, out_level, y);
  }

  Cochain b = zero_cochain(g, n - 1, c1.moduli);
  for (int k = 0; k < c1.components(); ++k) {
    std::optional<BigVector> y = c1.moduli[k] == 0 ? solve(s, difference(k))
                                                    : solve_mod(s, difference(k), c1.moduli[k]);
    if (!y)
      return std::nullopt;
    store(g, b, k, *y);
  }
  return b;
}

namespace {

struct AbelianCoords {
  std::vector<std::int64_t> factors;
  std::int64_t size = 1;

  explicit AbelianCoords(std::vector<std::int64_t> f) : factors(std::move(f)) {
    for (std::int64_t x : factors)
      size *= x;
  }
  // Index of the element with coordinates `v` (first factor fastest).
  std::int64_t encode(const std::vector<std::int64_t> &v) const {
    std::int64_t index = 0;
    for (std::size_t i = factors.size(); i-- > 0;)
      index = index * factors[i] + reduce(v[i], factors[i]);
    return index;
  }
  std::vector<std::int64_t> decode(std::int64_t index) const {
    std::vector<std::int64_t> v(factors.size());
    for (std::size_t i = 0; i < factors.size(); ++i) {
      v[i] = index % factors[i];
      index /= factors[i];
    }
    return v;
  }
};

AbelianCoords finite_coords(const CoeffModule &a) {
  require(a.kind() == CoeffModule::Kind::finite && a.trivial_action(), ErrorKind::invalid_input,
          "extensions need finite coefficients with trivial action");
  return AbelianCoords(a.factors());
}

std::vector<std::int64_t> values_at(const Cochain &c, std::int64_t tuple) {
  std::vector<std::int64_t> v(c.components());
  for (int k = 0; k < c.components(); ++k)
    v[k] = c.at(tuple, k);
  return v;
}

} // namespace

Extension extension_from_cocycle(const FiniteGroup &base, const CoeffModule &a,
                                 const Cochain &kappa) {
  const AbelianCoords coords = finite_coords(a);
  require(kappa.degree == 2 && kappa.moduli == a.factors(), ErrorKind::invalid_input,
          "extension cocycle must be a 2-cochain with values in " + a.describe());
  require(kappa.is_normalized(base) && is_cocycle(base, a, kappa), ErrorKind::not_a_cocycle,
          "extension data is not a normalized 2-cocycle");
  const std::int64_t na = coords.size, nb = base.order();
  require(na * nb <= 4096, ErrorKind::bound_exceeded, "extension order exceeds 4096");
  const int n = static_cast<int>(na * nb);
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    const auto ax = coords.decode(x % na);
    const int gx = static_cast<int>(x / na);
    for (int y = 0; y < n; ++y) {
      auto sum = coords.decode(y % na);
      const int gy = static_cast<int>(y / na);
      const auto k = values_at(kappa, tuple_index(base, {gx, gy}));
      for (std::size_t i = 0; i < sum.size(); ++i)
        sum[i] += ax[i] + k[i];
      table[std::size_t(x) * n + y] =
          static_cast<Elem>(base.mul(gx, gy) * na + coords.encode(sum));
    }
  }
  FiniteGroup e = FiniteGroup::from_table(n, std::move(table));
  const FiniteGroup ag = abelian_group(std::vector<long>(a.factors().begin(), a.factors().end()));
  std::vector<Elem> incl(static_cast<std::size_t>(na)), proj(static_cast<std::size_t>(n));
  std::iota(incl.begin(), incl.end(), 0);
  for (int x = 0; x < n; ++x)
    proj[x] = static_cast<Elem>(x / na);
  return {e, GroupHom(ag, e, std::move(incl)), GroupHom(e, base, std::move(proj))};
}

GroupHom extension_isomorphism(const Extension &from, const Extension &to, const CoeffModule &a,
                               const Cochain &beta) {
  const AbelianCoords coords = finite_coords(a);
  require(beta.degree == 1 && beta.moduli == a.factors(), ErrorKind::invalid_input,
          "isomorphism data must be a 1-cochain with values in " + a.describe());
  require(from.group.order() == to.group.order(), ErrorKind::invalid_input,
          "extensions have different orders");
  const std::int64_t na = coords.size;
  std::vector<Elem> map(static_cast<std::size_t>(from.group.order()));
  for (int x = 0; x < from.group.order(); ++x) {
    auto v = coords.decode(x % na);
    const auto b = values_at(beta, x / na);
    for (std::size_t i = 0; i < v.size(); ++i)
      v[i] += b[i];
    map[x] = static_cast<Elem>((x / na) * na + coords.encode(v));
  }
  GroupHom h(from.group, to.group, std::move(map));
  require(h.is_homomorphism(), ErrorKind::invalid_input,
          "the 1-cochain does not relate the two extension cocycles");
  return h;
}

} // namespace gcep
