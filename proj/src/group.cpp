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

#include "gcep/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "gcep/error.hpp"
#include "gcep/kernels.hpp"

namespace gcep {

const char *to_string(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::invalid_input:
    return "invalid-input";
  case ErrorKind::bound_exceeded:
    return "bound-exceeded";
  case ErrorKind::not_a_fibration:
    return "not-a-fibration";
  case ErrorKind::not_a_cocycle:
    return "not-a-cocycle";
  case ErrorKind::numerical_failure:
    return "numerical-failure";
  case ErrorKind::route_disagreement:
    return "route-disagreement";
  case ErrorKind::unknown_name:
    return "unknown-name";
  }
  return "error";
}

// ---------------------------------------------------------------------------
// permutations

Permutation compose(const Permutation &a, const Permutation &b) {
  Permutation r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] = a[b[i]];
  return r;
}

Permutation identity_permutation(int degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation inverse(const Permutation &p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_permutation(const Permutation &p) {
  std::vector<char> seen(p.size(), 0);
  for (int x : p) {
    if (x < 0 || x >= static_cast<int>(p.size()) || seen[x])
      return false;
    seen[x] = 1;
  }
  return true;
}

Permutation parse_cycles(std::string_view text, int degree) {
  Permutation p = identity_permutation(degree);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_space();
  if (i == text.size())
    fail(ErrorKind::invalid_input, "empty permutation");
  std::vector<char> used(degree, 0);
  while (i < text.size()) {
    skip_space();
    if (i == text.size())
      break;
    if (text[i] != '(')
      fail(ErrorKind::invalid_input, "expected '(' in cycle notation");
    ++i;
    std::vector<int> cycle;
    while (true) {
      skip_space();
      if (i == text.size())
        fail(ErrorKind::invalid_input, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (text[i] == ',') {
        ++i;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        fail(ErrorKind::invalid_input,
             std::string("unexpected character '") + text[i] + "' in cycle");
      long v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > 1000000)
          fail(ErrorKind::invalid_input, "point index too large");
        ++i;
      }
      if (v >= degree)
        fail(ErrorKind::invalid_input,
             "point " + std::to_string(v) + " outside 0.." + std::to_string(degree - 1));
      if (used[v])
        fail(ErrorKind::invalid_input, "point " + std::to_string(v) + " repeated in cycles");
      used[v] = 1;
      cycle.push_back(static_cast<int>(v));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      p[cycle[k]] = cycle[(k + 1) % cycle.size()];
  }
  return p;
}

std::string format_cycles(const Permutation &p) {
  std::ostringstream out;
  std::vector<char> seen(p.size(), 0);
  bool any = false;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == static_cast<int>(i))
      continue;
    out << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = 1;
      out << (first ? "" : " ") << j;
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    out << ')';
    any = true;
  }
  if (!any)
    out << "()";
  return out.str();
}

namespace {

struct PermHash {
  std::size_t operator()(const Permutation &p) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : p)
      h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

} // namespace

// ---------------------------------------------------------------------------
// FiniteGroup

struct FiniteGroup::Data {
  int n = 1;
  std::vector<Elem> table{0};
  std::vector<Elem> inv{0};
  std::string name;
  std::vector<Elem> gens;
  std::vector<Elem> parent{-1};
  std::vector<int> step{-1};
  std::vector<Elem> order{0};
  int degree = 0;
  std::vector<Permutation> perms;
  std::unordered_map<Permutation, Elem, PermHash> perm_index;
};

namespace {

std::vector<Elem> closure(const std::vector<Elem> &table, int n, const std::vector<Elem> &gens) {
  std::vector<char> in(n, 0);
  std::vector<Elem> elems{0};
  in[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (Elem s : gens) {
      const Elem p = table[elems[i] * n + s];
      if (!in[p]) {
        in[p] = 1;
        elems.push_back(p);
      }
    }
  return elems;
}

} // namespace

FiniteGroup FiniteGroup::finish(Data d) {
  const int n = d.n;
  d.inv.assign(n, -1);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (d.table[a * n + b] == 0) {
        d.inv[a] = b;
        break;
      }
  if (d.gens.empty() && n > 1) {
    std::vector<char> covered(n, 0);
    covered[0] = 1;
    for (Elem a = 1; a < n; ++a) {
      if (covered[a])
        continue;
      d.gens.push_back(a);
      for (Elem x : closure(d.table, n, d.gens))
        covered[x] = 1;
    }
  }
  d.parent.assign(n, -1);
  d.step.assign(n, -1);
  d.order.clear();
  d.order.push_back(0);
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < d.order.size(); ++i) {
    const Elem w = d.order[i];
    for (std::size_t s = 0; s < d.gens.size(); ++s) {
      const Elem p = d.table[w * n + d.gens[s]];
      if (!seen[p]) {
        seen[p] = 1;
        d.parent[p] = w;
        d.step[p] = static_cast<int>(s);
        d.order.push_back(p);
      }
    }
  }
  require(static_cast<int>(d.order.size()) == n, ErrorKind::invalid_input,
          "generators do not generate the group");
  if (!d.perms.empty()) {
    d.perm_index.clear();
    for (Elem a = 0; a < n; ++a)
      d.perm_index.emplace(d.perms[a], a);
  }
  return FiniteGroup(std::make_shared<const Data>(std::move(d)));
}

FiniteGroup::FiniteGroup() : d_(std::make_shared<const Data>()) {}

FiniteGroup trusted_group(int order, std::vector<Elem> table, std::string name) {
  FiniteGroup::Data d;
  d.n = order;
  d.table = std::move(table);
  d.name = std::move(name);
  return FiniteGroup::finish(std::move(d));
}

FiniteGroup FiniteGroup::from_table(int order, std::vector<Elem> table, std::string name) {
  require(order >= 1, ErrorKind::invalid_input, "group order must be positive");
  require(table.size() == static_cast<std::size_t>(order) * order, ErrorKind::invalid_input,
          "multiplication table has wrong size");
  for (Elem x : table)
    require(x >= 0 && x < order, ErrorKind::invalid_input, "table entry out of range");
  // Latin square rows/columns give cancellation; with associativity and a
  // two-sided identity that is the group axioms.
  for (int a = 0; a < order; ++a) {
    std::vector<char> row(order, 0), col(order, 0);
    for (int b = 0; b < order; ++b) {
      row[table[a * order + b]] = 1;
      col[table[b * order + a]] = 1;
    }
    for (int b = 0; b < order; ++b)
      require(row[b] && col[b], ErrorKind::invalid_input,
              "multiplication table is not a Latin square");
  }
  int e = -1;
  for (int a = 0; a < order && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < order && ok; ++b)
      ok = table[a * order + b] == b && table[b * order + a] == b;
    if (ok)
      e = a;
  }
  require(e >= 0, ErrorKind::invalid_input, "no two-sided identity");
  if (order <= 256) {
    auto bad = kernels::omp::find_nonassociative({order, table});
    require(!bad.has_value(), ErrorKind::invalid_input,
            bad ? "multiplication is not associative at (" + std::to_string((*bad)[0]) + ", " +
                      std::to_string((*bad)[1]) + ", " + std::to_string((*bad)[2]) + ")"
                : "");
  }
  if (e != 0) {
    auto relabel = [&](int x) { return x == e ? 0 : (x == 0 ? e : x); };
    std::vector<Elem> t(table.size());
    for (int a = 0; a < order; ++a)
      for (int b = 0; b < order; ++b)
        t[relabel(a) * order + relabel(b)] = relabel(table[a * order + b]);
    table = std::move(t);
  }
  return trusted_group(order, std::move(table), std::move(name));
}

FiniteGroup FiniteGroup::from_permutations(int degree, std::vector<Permutation> generators,
                                           std::size_t max_order, std::string name) {
  require(degree >= 1, ErrorKind::invalid_input, "degree must be positive");
  const Permutation id = identity_permutation(degree);
  std::vector<Permutation> declared;
  for (auto &g : generators) {
    require(static_cast<int>(g.size()) == degree && is_permutation(g), ErrorKind::invalid_input,
            "generator is not a bijection on 0.." + std::to_string(degree - 1));
    if (g != id && std::find(declared.begin(), declared.end(), g) == declared.end())
      declared.push_back(g);
  }
  std::vector<Permutation> sorted = declared;
  std::sort(sorted.begin(), sorted.end());

  Data d;
  d.degree = degree;
  d.name = std::move(name);
  d.perms.push_back(id);
  d.perm_index.emplace(id, 0);
  for (std::size_t i = 0; i < d.perms.size(); ++i)
    for (const auto &s : sorted) {
      Permutation p = compose(d.perms[i], s);
      if (d.perm_index.find(p) == d.perm_index.end()) {
        if (d.perms.size() >= max_order)
          fail(ErrorKind::bound_exceeded,
               "closure exceeds order bound " + std::to_string(max_order));
        d.perm_index.emplace(p, static_cast<Elem>(d.perms.size()));
        d.perms.push_back(std::move(p));
      }
    }
  const int n = static_cast<int>(d.perms.size());
  d.n = n;
  // Right multiplication by each sorted generator, then the whole table along
  // the breadth-first words: a * (w s) = (a * w) * s.
  std::vector<std::vector<Elem>> right(sorted.size(), std::vector<Elem>(n));
  for (std::size_t s = 0; s < sorted.size(); ++s)
    for (Elem a = 0; a < n; ++a)
      right[s][a] = d.perm_index.at(compose(d.perms[a], sorted[s]));
  std::vector<Elem> bfs_parent(n, -1);
  std::vector<int> bfs_step(n, -1);
  {
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    for (Elem w = 0; w < n; ++w)
      for (std::size_t s = 0; s < sorted.size(); ++s) {
        const Elem p = right[s][w];
        if (!seen[p]) {
          seen[p] = 1;
          bfs_parent[p] = w;
          bfs_step[p] = static_cast<int>(s);
        }
      }
  }
  d.table.assign(static_cast<std::size_t>(n) * n, 0);
  for (Elem a = 0; a < n; ++a) {
    Elem *row = d.table.data() + static_cast<std::size_t>(a) * n;
    row[0] = a;
    for (Elem b = 1; b < n; ++b)
      row[b] = right[bfs_step[b]][row[bfs_parent[b]]];
  }
  for (const auto &g : declared)
    d.gens.push_back(d.perm_index.at(g));
  return finish(std::move(d));
}

int FiniteGroup::order() const { return d_->n; }
Elem FiniteGroup::mul(Elem a, Elem b) const { return d_->table[a * d_->n + b]; }
Elem FiniteGroup::inv(Elem a) const { return d_->inv[a]; }
const std::vector<Elem> &FiniteGroup::table() const { return d_->table; }
const std::string &FiniteGroup::name() const { return d_->name; }

FiniteGroup FiniteGroup::renamed(std::string name) const {
  auto d = std::make_shared<Data>(*d_);
  d->name = std::move(name);
  return FiniteGroup(std::move(d));
}

int FiniteGroup::element_order(Elem a) const {
  int k = 1;
  for (Elem x = a; x != 0; x = mul(x, a))
    ++k;
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (Elem a = 0; a < order(); ++a)
    for (Elem b = a + 1; b < order(); ++b)
      if (!commute(a, b))
        return false;
  return true;
}

const std::vector<Elem> &FiniteGroup::generators() const { return d_->gens; }
Elem FiniteGroup::word_parent(Elem g) const { return d_->parent[g]; }
int FiniteGroup::word_step(Elem g) const { return d_->step[g]; }
const std::vector<Elem> &FiniteGroup::word_order() const { return d_->order; }
bool FiniteGroup::has_permutations() const { return !d_->perms.empty(); }
int FiniteGroup::degree() const { return d_->degree; }
const Permutation &FiniteGroup::permutation(Elem a) const { return d_->perms.at(a); }

std::optional<Elem> FiniteGroup::find_permutation(const Permutation &p) const {
  auto it = d_->perm_index.find(p);
  if (it == d_->perm_index.end())
    return std::nullopt;
  return it->second;
}

bool FiniteGroup::operator==(const FiniteGroup &other) const {
  return d_ == other.d_ || (d_->n == other.d_->n && d_->table == other.d_->table);
}

// ---------------------------------------------------------------------------
// homomorphisms and subgroups

GroupHom::GroupHom(FiniteGroup source, FiniteGroup target, std::vector<Elem> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  require(static_cast<int>(map_.size()) == source_.order(), ErrorKind::invalid_input,
          "homomorphism map has wrong length");
}

bool GroupHom::is_homomorphism() const {
  if (map_[0] != 0)
    return false;
  const int n = source_.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (map_[source_.mul(a, b)] != target_.mul(map_[a], map_[b]))
        return false;
  return true;
}

bool GroupHom::is_injective() const {
  std::vector<Elem> m = map_;
  std::sort(m.begin(), m.end());
  return std::adjacent_find(m.begin(), m.end()) == m.end();
}

bool GroupHom::is_bijective() const {
  return source_.order() == target_.order() && is_injective();
}

GroupHom compose(const GroupHom &outer, const GroupHom &inner) {
  std::vector<Elem> m(inner.source().order());
  for (Elem g = 0; g < inner.source().order(); ++g)
    m[g] = outer(inner(g));
  return GroupHom(inner.source(), outer.target(), std::move(m));
}

Subgroup subgroup(const FiniteGroup &g, std::vector<Elem> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  require(!elements.empty() && elements[0] == 0, ErrorKind::invalid_input,
          "subgroup must contain the identity");
  const int n = g.order();
  const int k = static_cast<int>(elements.size());
  std::vector<int> local(n, -1);
  for (int i = 0; i < k; ++i)
    local[elements[i]] = i;
  FiniteGroup::Data d;
  d.n = k;
  d.table.resize(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      const int p = local[g.mul(elements[i], elements[j])];
      require(p >= 0, ErrorKind::invalid_input, "element set is not closed");
      d.table[i * k + j] = p;
    }
  if (g.has_permutations()) {
    d.degree = g.degree();
    for (Elem x : elements)
      d.perms.push_back(g.permutation(x));
  }
  FiniteGroup h = FiniteGroup::finish(std::move(d));
  return Subgroup{h, GroupHom(h, g, std::move(elements))};
}

Subgroup generated_subgroup(const FiniteGroup &g, const std::vector<Elem> &generators) {
  return subgroup(g, closure(g.table(), g.order(), generators));
}

std::vector<std::vector<Elem>> conjugacy_classes(const FiniteGroup &g) {
  const int n = g.order();
  std::vector<char> done(n, 0);
  std::vector<std::vector<Elem>> classes;
  for (Elem x = 0; x < n; ++x) {
    if (done[x])
      continue;
    std::vector<Elem> cls;
    for (Elem h = 0; h < n; ++h) {
      const Elem y = g.mul(g.mul(h, x), g.inv(h));
      if (!done[y]) {
        done[y] = 1;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<int> conjugacy_class_index(const FiniteGroup &g) {
  std::vector<int> idx(g.order(), -1);
  const auto classes = conjugacy_classes(g);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (Elem x : classes[c])
      idx[x] = static_cast<int>(c);
  return idx;
}

Subgroup centralizer(const FiniteGroup &g, Elem x) {
  std::vector<Elem> elems;
  for (Elem h = 0; h < g.order(); ++h)
    if (g.commute(h, x))
      elems.push_back(h);
  return subgroup(g, std::move(elems));
}

Subgroup center(const FiniteGroup &g) {
  std::vector<Elem> elems;
  for (Elem h = 0; h < g.order(); ++h) {
    bool central = true;
    for (Elem k = 0; k < g.order() && central; ++k)
      central = g.commute(h, k);
    if (central)
      elems.push_back(h);
  }
  return subgroup(g, std::move(elems));
}

Subgroup derived_subgroup(const FiniteGroup &g) {
  std::vector<Elem> comms;
  std::vector<char> seen(g.order(), 0);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) {
      const Elem c = g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)));
      if (!seen[c]) {
        seen[c] = 1;
        comms.push_back(c);
      }
    }
  return generated_subgroup(g, comms);
}

Quotient quotient(const FiniteGroup &g, const std::vector<Elem> &normal) {
  const int n = g.order();
  std::vector<int> coset(n, -1);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] >= 0)
      continue;
    const int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (Elem k : normal)
      coset[g.mul(x, k)] = id;
  }
  const int q = static_cast<int>(reps.size());
  require(static_cast<long>(q) * static_cast<long>(normal.size()) == n, ErrorKind::invalid_input,
          "subgroup cosets do not partition the group");
  std::vector<Elem> table(static_cast<std::size_t>(q) * q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j)
      table[i * q + j] = coset[g.mul(reps[i], reps[j])];
  // Well-definedness on all coset members is normality.
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      require(coset[g.mul(a, b)] == table[coset[a] * q + coset[b]], ErrorKind::invalid_input,
              "subgroup is not normal");
  FiniteGroup h = trusted_group(q, std::move(table), {});
  return Quotient{h, GroupHom(g, h, coset)};
}

std::vector<long> abelian_invariants(const FiniteGroup &g) {
  require(g.is_abelian(), ErrorKind::invalid_input, "group is not abelian");
  const int n = g.order();
  std::vector<int> orders(n);
  for (Elem a = 0; a < n; ++a)
    orders[a] = g.element_order(a);
  // Per prime p: |{x : p^k x = 0}| = p^(sum_i min(lambda_i, k)).
  std::vector<std::vector<int>> exponents; // per prime, descending
  std::vector<long> primes;
  int rest = n;
  for (long p = 2; rest > 1; ++p) {
    if (rest % p != 0)
      continue;
    int total = 0;
    while (rest % p == 0) {
      rest /= p;
      ++total;
    }
    std::vector<int> log_count{0};
    for (long pk = p; log_count.back() < total; pk *= p) {
      long c = 0;
      for (Elem a = 0; a < n; ++a)
        if (pk % orders[a] == 0)
          ++c;
      int lg = 0;
      while (c > 1) {
        c /= p;
        ++lg;
      }
      log_count.push_back(lg);
    }
    std::vector<int> lambda;
    // #{i : lambda_i >= k} = s_k - s_{k-1}
    const int kmax = static_cast<int>(log_count.size()) - 1;
    std::vector<int> at_least(kmax + 2, 0);
    for (int k = 1; k <= kmax; ++k)
      at_least[k] = log_count[k] - log_count[k - 1];
    for (int k = 1; k <= kmax; ++k) {
      const int exactly = at_least[k] - at_least[k + 1];
      for (int i = 0; i < exactly; ++i)
        lambda.push_back(k);
    }
    std::sort(lambda.rbegin(), lambda.rend());
    primes.push_back(p);
    exponents.push_back(lambda);
  }
  std::size_t width = 0;
  for (const auto &e : exponents)
    width = std::max(width, e.size());
  std::vector<long> factors(width, 1);
  for (std::size_t i = 0; i < primes.size(); ++i)
    for (std::size_t j = 0; j < exponents[i].size(); ++j)
      for (int k = 0; k < exponents[i][j]; ++k)
        factors[j] *= primes[i];
  std::reverse(factors.begin(), factors.end());
  return factors;
}

std::vector<long> abelianization_invariants(const FiniteGroup &g) {
  const Subgroup d = derived_subgroup(g);
  return abelian_invariants(quotient(g, d.inclusion.map()).group);
}

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b) {
  const int na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[x * n + y] = a.mul(x % na, y % na) + na * b.mul(x / na, y / na);
  std::string name;
  if (!a.name().empty() && !b.name().empty())
    name = a.name() + "x" + b.name();
  return trusted_group(n, std::move(table), std::move(name));
}

FiniteGroup cyclic_group(int n) {
  require(n >= 1, ErrorKind::invalid_input, "cyclic group order must be positive");
  std::vector<Elem> table(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      table[x * n + y] = (x + y) % n;
  return trusted_group(n, std::move(table), "Zn(" + std::to_string(n) + ")");
}

FiniteGroup abelian_group(const std::vector<long> &factors) {
  FiniteGroup g;
  for (long f : factors)
    g = direct_product(g, cyclic_group(static_cast<int>(f)));
  std::string name;
  for (std::size_t i = 0; i < factors.size(); ++i)
    name += (i ? "x" : "") + ("Zn(" + std::to_string(factors[i]) + ")");
  return g.renamed(name.empty() ? "Zn(1)" : name);
}

namespace {

Permutation cycle_perm(int degree, int shift) {
  Permutation p(degree);
  for (int i = 0; i < degree; ++i)
    p[i] = (i + shift) % degree;
  return p;
}

// Quaternion units encoded as sign * 4 + unit with units 1, i, j, k.
int quaternion_mul(int a, int b) {
  static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const int ua = a % 4, ub = b % 4;
  const int s = (a / 4 + b / 4 + sign[ua][ub]) % 2;
  return s * 4 + unit[ua][ub];
}

int parse_parameter(std::string_view name, std::string_view prefix) {
  std::string_view inner = name.substr(prefix.size());
  if (inner.size() < 3 || inner.front() != '(' || inner.back() != ')')
    fail(ErrorKind::unknown_name, "unknown builtin group '" + std::string(name) + "'");
  inner = inner.substr(1, inner.size() - 2);
  long v = 0;
  for (char c : inner) {
    if (!std::isdigit(static_cast<unsigned char>(c)) || v > 100000)
      fail(ErrorKind::unknown_name, "bad parameter in builtin '" + std::string(name) + "'");
    v = v * 10 + (c - '0');
  }
  if (v < 1)
    fail(ErrorKind::unknown_name, "builtin parameter must be positive in '" + std::string(name) + "'");
  return static_cast<int>(v);
}

} // namespace

FiniteGroup builtin(std::string_view name, std::size_t max_order) {
  const std::string label(name);
  if (name.starts_with("Zn(")) {
    const int n = parse_parameter(name, "Zn");
    if (n == 1)
      return FiniteGroup::from_permutations(1, {}, max_order, label);
    return FiniteGroup::from_permutations(n, {cycle_perm(n, 1)}, max_order, label);
  }
  if (name.starts_with("Sym(")) {
    const int n = parse_parameter(name, "Sym");
    std::vector<Permutation> gens;
    if (n >= 2) {
      gens.push_back(cycle_perm(n, 1));
      Permutation t = identity_permutation(n);
      std::swap(t[0], t[1]);
      gens.push_back(t);
    }
    return FiniteGroup::from_permutations(n, gens, max_order, label);
  }
  if (name.starts_with("Dih(")) {
    const int n = parse_parameter(name, "Dih");
    if (n == 1)
      return FiniteGroup::from_permutations(2, {{1, 0}}, max_order, label);
    if (n == 2)
      return FiniteGroup::from_permutations(4, {{1, 0, 3, 2}, {2, 3, 0, 1}}, max_order, label);
    Permutation s(n);
    for (int i = 0; i < n; ++i)
      s[i] = (n - i) % n;
    return FiniteGroup::from_permutations(n, {cycle_perm(n, 1), s}, max_order, label);
  }
  if (name == "Q8") {
    Permutation i(8), j(8);
    for (int y = 0; y < 8; ++y) {
      i[y] = quaternion_mul(1, y);
      j[y] = quaternion_mul(2, y);
    }
    return FiniteGroup::from_permutations(8, {i, j}, max_order, label);
  }
  if (name == "Z2xZ2")
    return FiniteGroup::from_permutations(4, {{1, 0, 2, 3}, {0, 1, 3, 2}}, max_order, label);
  if (name == "A4")
    return FiniteGroup::from_permutations(4, {{1, 2, 0, 3}, {0, 2, 3, 1}}, max_order, label);
  fail(ErrorKind::unknown_name, "unknown builtin group '" + label + "'");
}

std::optional<GroupHom> extend_homomorphism(const FiniteGroup &source, const FiniteGroup &target,
                                            const std::vector<Elem> &generator_images) {
  require(generator_images.size() == source.generators().size(), ErrorKind::invalid_input,
          "expected " + std::to_string(source.generators().size()) + " generator images, got " +
              std::to_string(generator_images.size()));
  std::vector<Elem> map(source.order(), 0);
  for (Elem g : source.word_order())
    if (g != 0)
      map[g] = target.mul(map[source.word_parent(g)], generator_images[source.word_step(g)]);
  GroupHom hom(source, target, std::move(map));
  if (!hom.is_homomorphism())
    return std::nullopt;
  return hom;
}

std::vector<GroupHom> all_homomorphisms(const FiniteGroup &source, const FiniteGroup &target) {
  const auto &gens = source.generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s) {
    const int ord = source.element_order(gens[s]);
    for (Elem t = 0; t < target.order(); ++t)
      if (ord % target.element_order(t) == 0)
        candidates[s].push_back(t);
  }
  std::vector<GroupHom> homs;
  std::vector<Elem> images(gens.size());
  auto search = [&](auto &&self, std::size_t s) -> void {
    if (s == gens.size()) {
      if (auto h = extend_homomorphism(source, target, images))
        homs.push_back(std::move(*h));
      return;
    }
    for (Elem t : candidates[s]) {
      images[s] = t;
      self(self, s + 1);
    }
  };
  search(search, 0);
  return homs;
}

std::optional<GroupHom> find_isomorphism(const FiniteGroup &a, const FiniteGroup &b) {
  if (a.order() != b.order())
    return std::nullopt;
  std::map<int, int> stats_a, stats_b;
  for (Elem x = 0; x < a.order(); ++x) {
    ++stats_a[a.element_order(x)];
    ++stats_b[b.element_order(x)];
  }
  if (stats_a != stats_b)
    return std::nullopt;
  const auto &gens = a.generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t s = 0; s < gens.size(); ++s)
    for (Elem t = 0; t < b.order(); ++t)
      if (a.element_order(gens[s]) == b.element_order(t))
        candidates[s].push_back(t);
  std::vector<Elem> images(gens.size());
  std::optional<GroupHom> found;
  auto search = [&](auto &&self, std::size_t s) -> bool {
    if (s == gens.size()) {
      auto h = extend_homomorphism(a, b, images);
      if (h && h->is_bijective()) {
        found = std::move(h);
        return true;
      }
      return false;
    }
    for (Elem t : candidates[s]) {
      images[s] = t;
      if (self(self, s + 1))
        return true;
    }
    return false;
  };
  search(search, 0);
  return found;
}

} // namespace gcep
