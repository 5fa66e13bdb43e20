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

#include "gcep/functor_rep.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "gcep/error.hpp"

namespace gcep {

namespace {

// Full subgroupoid on one connected component.
struct Restriction {
  std::vector<Obj> objects;
  std::vector<Mor> morphisms; // local -> ambient
  FiniteGroupoid groupoid;
};

Restriction restrict_to(const FiniteGroupoid &x, std::vector<Obj> objects) {
  Restriction r;
  r.objects = std::move(objects);
  std::vector<int> local_obj(x.num_objects(), -1);
  for (std::size_t i = 0; i < r.objects.size(); ++i)
    local_obj[r.objects[i]] = static_cast<int>(i);
  std::vector<int> local_mor(x.num_morphisms(), -1);
  std::vector<Arrow> arrows;
  for (Obj a : r.objects)
    for (Obj b : r.objects)
      for (Mor f : x.hom(a, b)) {
        local_mor[f] = static_cast<int>(r.morphisms.size());
        r.morphisms.push_back(f);
        arrows.push_back({local_obj[a], local_obj[b]});
      }
  std::vector<Mor> ids;
  for (Obj a : r.objects)
    ids.push_back(local_mor[x.identity(a)]);
  const std::vector<Mor> &ambient = r.morphisms;
  r.groupoid = FiniteGroupoid::trusted(
      static_cast<int>(r.objects.size()), std::move(arrows), std::move(ids),
      [&](Mor f, Mor g) { return local_mor[x.compose(ambient[f], ambient[g])]; });
  return r;
}

GroupoidFunctor restrict_functor(const GroupoidFunctor &f, const Restriction &r) {
  std::vector<Obj> objs;
  std::vector<Mor> mors;
  for (Obj a : r.objects)
    objs.push_back(f.on_object(a));
  for (Mor m : r.morphisms)
    mors.push_back(f.on_morphism(m));
  return GroupoidFunctor(r.groupoid, f.target(), std::move(objs), std::move(mors));
}

NatTransformation identity_transformation(const GroupoidFunctor &f) {
  std::vector<Mor> comps;
  for (Obj x = 0; x < f.source().num_objects(); ++x)
    comps.push_back(f.target().identity(f.on_object(x)));
  return NatTransformation(f, f, std::move(comps));
}

// Natural isomorphism search along spanning trees with the root component
// restricted by `allowed`.
std::optional<NatTransformation> find_iso_with(const GroupoidFunctor &f, const GroupoidFunctor &g,
                                               const std::function<bool(Mor)> &allowed) {
  const FiniteGroupoid &c = f.source();
  const FiniteGroupoid &d = f.target();
  std::vector<Mor> comps(c.num_objects(), -1);
  for (const ComponentTree &t : spanning_trees(c)) {
    bool found = false;
    for (Mor root : d.hom(f.on_object(t.root), g.on_object(t.root))) {
      if (!allowed(root))
        continue;
      for (std::size_t i = 0; i < t.objects.size(); ++i) {
        const Mor tree = t.from_root[i];
        comps[t.objects[i]] =
            d.compose(g.on_morphism(tree), d.compose(root, d.inverse(f.on_morphism(tree))));
      }
      bool natural = true;
      for (Obj a : t.objects) {
        for (Obj b : t.objects) {
          for (Mor h : c.hom(a, b))
            if (d.compose(g.on_morphism(h), comps[a]) != d.compose(comps[b], f.on_morphism(h))) {
              natural = false;
              break;
            }
          if (!natural)
            break;
        }
        if (!natural)
          break;
      }
      if (natural) {
        found = true;
        break;
      }
    }
    if (!found)
      return std::nullopt;
  }
  return NatTransformation(f, g, std::move(comps));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    return INFINITY;
  return a.size() == 0 ? 0.0 : (a - b).cwiseAbs().maxCoeff();
}

// Uniform in [-1, 1) from the raw generator, identical across platforms.
double unit_interval(std::mt19937_64 &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-52 - 1.0;
}

int exponent(const FiniteGroup &g) {
  long e = 1;
  for (Elem x = 0; x < g.order(); ++x)
    e = std::lcm(e, static_cast<long>(g.element_order(x)));
  return static_cast<int>(e);
}

} // namespace

std::optional<int> FunctorCategory::find(const GroupoidFunctor &f) const {
  auto key = [](const GroupoidFunctor &x) { return std::tie(x.obj_map(), x.mor_map()); };
  auto it = std::lower_bound(functors.begin(), functors.end(), f,
                             [&](const GroupoidFunctor &a, const GroupoidFunctor &b) {
                               return key(a) < key(b);
                             });
  if (it == functors.end() || !(key(*it) == key(f)))
    return std::nullopt;
  return static_cast<int>(it - functors.begin());
}

FunctorCategory classify_functors(const FiniteGroupoid &source, const FiniteGroupoid &target,
                                  std::vector<GroupoidFunctor> functors, const IsoFinder &find) {
  const IsoFinder finder = find ? find : [](const GroupoidFunctor &a, const GroupoidFunctor &b) {
    return find_natural_isomorphism(a, b);
  };
  std::sort(functors.begin(), functors.end(), [](const auto &a, const auto &b) {
    return std::tie(a.obj_map(), a.mor_map()) < std::tie(b.obj_map(), b.mor_map());
  });

  struct Local {
    Restriction r;
    std::map<std::pair<std::vector<Obj>, std::vector<Mor>>, int> index;
    std::vector<int> cls;
    std::vector<GroupoidFunctor> reps;
    std::vector<NatTransformation> witness; // class rep -> local functor
  };
  std::vector<Local> locals;
  for (auto &objects : connected_components(source))
    locals.push_back({restrict_to(source, std::move(objects)), {}, {}, {}, {}});

  FunctorCategory out;
  out.source = source;
  out.target = target;
  std::map<std::vector<int>, int> global;
  std::vector<std::vector<int>> local_ids(functors.size());
  for (std::size_t i = 0; i < functors.size(); ++i) {
    std::vector<int> key;
    for (Local &l : locals) {
      GroupoidFunctor part = restrict_functor(functors[i], l.r);
      auto [it, fresh] = l.index.try_emplace({part.obj_map(), part.mor_map()},
                                             static_cast<int>(l.cls.size()));
      if (fresh) {
        int cls = -1;
        for (std::size_t c = 0; c < l.reps.size() && cls < 0; ++c)
          if (auto eta = finder(l.reps[c], part)) {
            cls = static_cast<int>(c);
            l.witness.push_back(std::move(*eta));
          }
        if (cls < 0) {
          cls = static_cast<int>(l.reps.size());
          l.witness.push_back(identity_transformation(part));
          l.reps.push_back(part);
        }
        l.cls.push_back(cls);
      }
      local_ids[i].push_back(it->second);
      key.push_back(l.cls[it->second]);
    }
    auto [g, fresh] = global.try_emplace(key, static_cast<int>(out.classes.size()));
    if (fresh)
      out.classes.emplace_back();
    out.classes[g->second].push_back(static_cast<int>(i));
    out.class_of.push_back(g->second);
  }

  for (std::size_t i = 0; i < functors.size(); ++i) {
    const int rep = out.classes[out.class_of[i]].front();
    std::vector<Mor> comps(source.num_objects());
    for (std::size_t c = 0; c < locals.size(); ++c) {
      const Local &l = locals[c];
      const auto &to_f = l.witness[local_ids[i][c]].components();
      const auto &to_rep = l.witness[local_ids[rep][c]].components();
      for (std::size_t k = 0; k < l.r.objects.size(); ++k)
        comps[l.r.objects[k]] = target.compose(to_f[k], target.inverse(to_rep[k]));
    }
    out.witness.emplace_back(functors[rep], functors[i], std::move(comps));
  }
  out.functors = std::move(functors);
  return out;
}

FunctorCategory enumerate_functors(const FiniteGroupoid &source, const FiniteGroupoid &target,
                                   std::int64_t max_candidates) {
  return classify_functors(source, target, all_functors(source, target, {}, max_candidates));
}

FunctorCategory functors_over(const FiniteGroupoid &source, const GroupoidFunctor &p,
                              const GroupoidFunctor &base_functor, std::int64_t max_candidates) {
  FunctorSearch search;
  search.object_allowed = [&](Obj x, Obj z) {
    return p.on_object(z) == base_functor.on_object(x);
  };
  search.morphism_allowed = [&](Mor f, Mor m) {
    return p.on_morphism(m) == base_functor.on_morphism(f);
  };
  const FiniteGroupoid &base = p.target();
  IsoFinder vertical = [&](const GroupoidFunctor &a, const GroupoidFunctor &b) {
    return find_iso_with(a, b, [&](Mor m) { return base.is_identity(p.on_morphism(m)); });
  };
  return classify_functors(source, p.source(),
                           all_functors(source, p.source(), search, max_candidates), vertical);
}

IrrepCount irreducible_reps_count(const FiniteGroupoid &y) {
  IrrepCount out;
  for (const auto &objects : connected_components(y)) {
    const int k =
        static_cast<int>(conjugacy_classes(automorphism_group(y, objects.front()).group).size());
    out.per_component.push_back(k);
    out.total += k;
  }
  return out;
}

std::vector<int> irreducible_degrees(const FiniteGroup &g, std::uint64_t seed) {
  const auto classes = conjugacy_classes(g);
  const auto class_of = conjugacy_class_index(g);
  const int r = static_cast<int>(classes.size());
  // Class sum C_i acting on the centre: column j holds C_i C_j in the
  // class-sum basis.
  std::vector<Eigen::MatrixXd> mult(r, Eigen::MatrixXd::Zero(r, r));
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      for (Elem x : classes[i])
        mult[i](k, class_of[g.mul(g.inv(x), classes[k].front())]) += 1.0;

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 8; ++attempt) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(r, r);
    for (int i = 0; i < r; ++i)
      m += unit_interval(rng) * mult[i];
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m.cast<std::complex<double>>());
    if (solver.info() != Eigen::Success)
      continue;
    const auto &values = solver.eigenvalues();
    double gap = INFINITY;
    for (int a = 0; a < r; ++a)
      for (int b = 0; b < a; ++b)
        gap = std::min(gap, std::abs(values[a] - values[b]));
    if (r > 1 && gap < 1e-6)
      continue;

    std::vector<int> degrees;
    for (int c = 0; c < r; ++c) {
      Eigen::VectorXcd v = solver.eigenvectors().col(c);
      if (std::abs(v[0]) < 1e-12)
        fail(ErrorKind::numerical_failure, "central character vanishes at the identity");
      v /= v[0];
      double norm = 0;
      for (int k = 0; k < r; ++k)
        norm += static_cast<double>(classes[k].size()) * std::norm(v[k]);
      const double d = std::sqrt(g.order() / norm);
      const double rounded = std::round(d);
      if (std::abs(d - rounded) >= 1e-6)
        fail(ErrorKind::numerical_failure,
             "character degree " + std::to_string(d) + " is not within 1e-6 of an integer");
      degrees.push_back(static_cast<int>(rounded));
    }
    std::sort(degrees.begin(), degrees.end());
    long squares = 0;
    for (int d : degrees)
      squares += static_cast<long>(d) * d;
    if (squares != g.order())
      fail(ErrorKind::numerical_failure, "degrees square-sum to " + std::to_string(squares) +
                                             " instead of " + std::to_string(g.order()));
    return degrees;
  }
  fail(ErrorKind::numerical_failure,
       "class-sum eigenvalues stayed degenerate for 8 random combinations");
}

std::optional<std::string> LinearRep::validate(double tolerance) const {
  const FiniteGroupoid &y = groupoid;
  if (static_cast<int>(dim_at.size()) != y.num_objects() ||
      static_cast<int>(matrices.size()) != y.num_morphisms())
    return "dimension or matrix list has the wrong length";
  for (Mor f = 0; f < y.num_morphisms(); ++f) {
    const ComplexMatrix &m = matrices[f];
    if (m.rows() != dim_at[y.target(f)] || m.cols() != dim_at[y.source(f)])
      return "matrix of morphism " + std::to_string(f) + " has the wrong shape";
  }
  for (Obj x = 0; x < y.num_objects(); ++x) {
    const int d = dim_at[x];
    if (max_abs_diff(matrices[y.identity(x)], ComplexMatrix::Identity(d, d)) > tolerance)
      return "identity at object " + std::to_string(x) + " is not the identity matrix";
  }
  for (Mor f = 0; f < y.num_morphisms(); ++f)
    for (Mor g = 0; g < y.num_morphisms(); ++g)
      if (y.composable(f, g) &&
          max_abs_diff(matrices[y.compose(f, g)], matrices[f] * matrices[g]) > tolerance)
        return "composition fails at morphisms " + std::to_string(f) + ", " + std::to_string(g);
  return std::nullopt;
}

int intertwiner_dimension(const LinearRep &a, const LinearRep &b, double tolerance) {
  const FiniteGroupoid &y = a.groupoid;
  std::vector<int> offset(y.num_objects() + 1, 0);
  for (Obj x = 0; x < y.num_objects(); ++x)
    offset[x + 1] = offset[x] + b.dim_at[x] * a.dim_at[x];
  const int unknowns = offset.back();
  if (unknowns == 0)
    return 0;
  int rows = 0;
  for (Mor f = 0; f < y.num_morphisms(); ++f)
    rows += b.dim_at[y.target(f)] * a.dim_at[y.source(f)];
  ComplexMatrix system = ComplexMatrix::Zero(rows, unknowns);
  // b(f) T_x - T_y a(f) = 0, T_x stored column-major.
  int row = 0;
  for (Mor f = 0; f < y.num_morphisms(); ++f) {
    const Obj x = y.source(f), z = y.target(f);
    const ComplexMatrix &bf = b.matrices[f];
    const ComplexMatrix &af = a.matrices[f];
    for (int c = 0; c < a.dim_at[x]; ++c)
      for (int rr = 0; rr < b.dim_at[z]; ++rr, ++row) {
        for (int k = 0; k < b.dim_at[x]; ++k)
          system(row, offset[x] + c * b.dim_at[x] + k) += bf(rr, k);
        for (int k = 0; k < a.dim_at[z]; ++k)
          system(row, offset[z] + k * b.dim_at[z] + rr) -= af(k, c);
      }
  }
  Eigen::FullPivLU<ComplexMatrix> lu(system);
  lu.setThreshold(tolerance);
  return unknowns - static_cast<int>(lu.rank());
}

std::optional<std::string> EquivariantFamily::validate(double tolerance) const {
  const FiniteGroup &g = action.group();
  const int n = static_cast<int>(dims.size());
  if (n != action.carrier().num_objects() ||
      static_cast<int>(maps.size()) != g.order() * n)
    return "family data has the wrong length";
  for (Elem a = 0; a < g.order(); ++a)
    for (Obj x = 0; x < n; ++x) {
      const ComplexMatrix &m = map(a, x);
      if (m.rows() != dims[action.act_object(a, x)] || m.cols() != dims[x])
        return "map at (" + std::to_string(a) + ", " + std::to_string(x) + ") has the wrong shape";
    }
  for (Obj x = 0; x < n; ++x)
    if (max_abs_diff(map(0, x), ComplexMatrix::Identity(dims[x], dims[x])) > tolerance)
      return "identity acts nontrivially on the fiber at " + std::to_string(x);
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      for (Obj x = 0; x < n; ++x)
        if (max_abs_diff(map(g.mul(a, b), x), map(a, action.act_object(b, x)) * map(b, x)) >
            tolerance)
          return "cocycle condition fails at (" + std::to_string(a) + ", " + std::to_string(b) +
                 ", " + std::to_string(x) + ")";
  return std::nullopt;
}

LinearRep to_linear_rep(const EquivariantFamily &f, const QuotientGroupoid &q) {
  require(f.action.carrier().is_discrete(), ErrorKind::invalid_input,
          "equivariant families live over G-sets");
  LinearRep r{q.total, f.dims, {}};
  for (Mor m = 0; m < q.total.num_morphisms(); ++m)
    r.matrices.push_back(f.map(m / q.carrier_morphisms, q.total.source(m)));
  return r;
}

EquivariantFamily from_linear_rep(const GroupAction &a, const LinearRep &r) {
  require(a.carrier().is_discrete(), ErrorKind::invalid_input,
          "equivariant families live over G-sets");
  const QuotientGroupoid q = homotopy_quotient(a);
  require(r.groupoid == q.total, ErrorKind::invalid_input,
          "representation is not over the action groupoid");
  const int n = a.carrier().num_objects();
  EquivariantFamily f{a, r.dim_at, {}};
  for (Elem g = 0; g < a.group().order(); ++g)
    for (Obj x = 0; x < n; ++x)
      f.maps.push_back(r.matrices[q.morphism(g, a.act_object(g, x))]);
  return f;
}

std::vector<EquivariantFamily> induced_character_families(const GroupAction &a) {
  require(a.carrier().is_discrete(), ErrorKind::invalid_input,
          "equivariant families live over G-sets");
  const FiniteGroup &g = a.group();
  const int n = a.carrier().num_objects();
  std::vector<EquivariantFamily> out;
  for (const auto &orbit : orbits(a)) {
    const Obj x0 = orbit.front();
    const Subgroup stab = stabilizer(a, x0);
    require(stab.group.is_abelian(), ErrorKind::invalid_input,
            "stabilizer of object " + std::to_string(x0) + " is not abelian");
    std::vector<int> local(g.order(), -1);
    for (Elem h = 0; h < stab.group.order(); ++h)
      local[stab.inclusion(h)] = h;
    std::vector<Elem> coset(n, -1);
    for (Elem t = 0; t < g.order(); ++t)
      if (Obj y = a.act_object(t, x0); coset[y] < 0)
        coset[y] = t;
    const int e = exponent(stab.group);
    for (const GroupHom &chi : all_homomorphisms(stab.group, cyclic_group(e))) {
      EquivariantFamily f{a, std::vector<int>(n, 0), {}};
      for (Obj y : orbit)
        f.dims[y] = 1;
      for (Elem t = 0; t < g.order(); ++t)
        for (Obj y = 0; y < n; ++y) {
          const Obj z = a.act_object(t, y);
          ComplexMatrix m(f.dims[z], f.dims[y]);
          if (f.dims[y] == 1) {
            const Elem h = g.mul(g.inv(coset[z]), g.mul(t, coset[y]));
            const double angle = 2.0 * std::numbers::pi * chi(local[h]) / e;
            m(0, 0) = std::polar(1.0, angle);
          }
          f.maps.push_back(std::move(m));
        }
      out.push_back(std::move(f));
    }
  }
  return out;
}

std::vector<NamedGroupoid> default_cep_targets() {
  return {{"discrete(2)", discrete_groupoid(2)},
          {"BZn(2)", delooping(cyclic_group(2))},
          {"BZn(3)", delooping(cyclic_group(3))}};
}

namespace {

CepTargetCheck cep_target(const QuotientGroupoid &q, const NamedGroupoid &theta,
                          std::int64_t max_candidates) {
  CepTargetCheck check;
  check.target = theta.name;
  const FiniteGroupoid &bg = q.projection.target();
  const Product prod = product(theta.groupoid, bg);
  const FunctorCategory over =
      functors_over(q.total, prod.right, q.projection, max_candidates);
  const FunctorCategory direct = enumerate_functors(q.total, theta.groupoid, max_candidates);
  check.over_base_functors = static_cast<int>(over.functors.size());
  check.over_base_classes = over.num_classes();
  check.direct_functors = static_cast<int>(direct.functors.size());
  check.direct_classes = direct.num_classes();

  auto forget = [&](const GroupoidFunctor &f) { return compose(prod.left, f); };
  auto pair_with_base = [&](const GroupoidFunctor &h) {
    std::vector<Obj> objs;
    std::vector<Mor> mors;
    for (Obj x = 0; x < q.total.num_objects(); ++x)
      objs.push_back(prod.object(h.on_object(x), q.projection.on_object(x)));
    for (Mor m = 0; m < q.total.num_morphisms(); ++m)
      mors.push_back(prod.morphism(h.on_morphism(m), q.projection.on_morphism(m)));
    return GroupoidFunctor(q.total, prod.groupoid, std::move(objs), std::move(mors));
  };

  if (over.functors.size() != direct.functors.size()) {
    check.problem = "functor counts differ";
    return check;
  }
  std::vector<int> image(over.functors.size());
  std::vector<char> hit(direct.functors.size(), 0);
  for (std::size_t i = 0; i < over.functors.size(); ++i) {
    const auto j = direct.find(forget(over.functors[i]));
    if (!j || hit[*j]) {
      check.problem = "forgetting the base is not a bijection on functors";
      return check;
    }
    hit[*j] = 1;
    image[i] = *j;
  }
  for (std::size_t j = 0; j < direct.functors.size(); ++j) {
    const GroupoidFunctor lifted = pair_with_base(direct.functors[j]);
    const auto i = over.find(lifted);
    if (!lifted.is_valid() || !i || image[*i] != static_cast<int>(j)) {
      check.problem = "pairing with the projection does not invert forgetting";
      return check;
    }
  }
  std::vector<int> class_image(over.num_classes(), -1);
  std::vector<char> class_hit(direct.num_classes(), 0);
  for (std::size_t i = 0; i < over.functors.size(); ++i) {
    const int a = over.class_of[i], b = direct.class_of[image[i]];
    if (class_image[a] < 0) {
      if (class_hit[b]) {
        check.problem = "two vertical classes map to one class";
        return check;
      }
      class_image[a] = b;
      class_hit[b] = 1;
    } else if (class_image[a] != b) {
      check.problem = "a vertical class splits";
      return check;
    }
    // Witnesses transport in both directions.
    const NatTransformation &w = over.witness[i];
    std::vector<Mor> down;
    for (Mor m : w.components())
      down.push_back(prod.left.on_morphism(m));
    if (!NatTransformation(forget(w.from()), forget(w.to()), down).is_valid()) {
      check.problem = "a vertical witness does not descend";
      return check;
    }
    const NatTransformation &v = direct.witness[image[i]];
    std::vector<Mor> up;
    for (std::size_t x = 0; x < v.components().size(); ++x)
      up.push_back(prod.morphism(v.components()[x], bg.identity(0)));
    if (!NatTransformation(pair_with_base(v.from()), pair_with_base(v.to()), up).is_valid()) {
      check.problem = "a witness does not lift vertically";
      return check;
    }
  }
  check.equivalence = over.num_classes() == direct.num_classes();
  if (!check.equivalence)
    check.problem = "class counts differ";
  return check;
}

} // namespace

CepReport cep_verify(const GroupAction &a, const std::vector<NamedGroupoid> &targets,
                     std::int64_t max_candidates) {
  require(a.carrier().is_discrete(), ErrorKind::invalid_input,
          "crystalline verification takes a G-set");
  CepReport report;
  for (const auto &orbit : orbits(a)) {
    const int k = static_cast<int>(conjugacy_classes(stabilizer(a, orbit.front()).group).size());
    report.per_orbit.push_back(k);
    report.equivariant_irreps += k;
  }
  const QuotientGroupoid q = homotopy_quotient(a);
  report.quotient_irreps = irreducible_reps_count(q.total).total;
  report.counts_agree = report.equivariant_irreps == report.quotient_irreps;

  bool abelian = true;
  for (const auto &orbit : orbits(a))
    abelian = abelian && stabilizer(a, orbit.front()).group.is_abelian();
  if (abelian) {
    const auto families = induced_character_families(a);
    std::vector<LinearRep> reps;
    bool ok = static_cast<int>(families.size()) == report.quotient_irreps;
    for (const auto &f : families) {
      ok = ok && !f.validate();
      reps.push_back(to_linear_rep(f, q));
      ok = ok && !reps.back().validate();
    }
    for (std::size_t i = 0; ok && i < reps.size(); ++i)
      for (std::size_t j = 0; ok && j <= i; ++j)
        ok = intertwiner_dimension(reps[i], reps[j]) == (i == j ? 1 : 0);
    report.bridge = ok;
  }

  bool targets_ok = true;
  for (const NamedGroupoid &theta : targets) {
    try {
      report.targets.push_back(cep_target(q, theta, max_candidates));
    } catch (const Error &e) {
      if (e.kind() != ErrorKind::bound_exceeded)
        throw;
      CepTargetCheck skipped;
      skipped.target = theta.name;
      skipped.problem = e.what();
      report.targets.push_back(std::move(skipped));
    }
    targets_ok = targets_ok && report.targets.back().equivalence;
  }
  report.verdict = report.counts_agree && targets_ok;
  return report;
}

EgFamiliesReport eg_families_verify(const GroupAction &theta, std::int64_t max_candidates) {
  const FiniteGroup &g = theta.group();
  const FiniteGroupoid &carrier = theta.carrier();
  EgFamiliesReport report;
  const HomotopyFixedPoints hfp = homotopy_fixed_points(theta, max_candidates);
  const QuotientGroupoid q = homotopy_quotient(theta);
  const FiniteGroupoid &bg = q.projection.target();
  const FunctorCategory secs =
      functors_over(bg, q.projection, identity_functor(bg), max_candidates);

  const auto components = connected_components(hfp.groupoid);
  report.fixed_points = hfp.groupoid.num_objects();
  report.fixed_point_classes = static_cast<int>(components.size());
  report.sections = static_cast<int>(secs.functors.size());
  report.section_classes = secs.num_classes();

  bool trivial = true;
  for (Elem x = 0; x < g.order(); ++x)
    trivial = trivial && theta.act(x) == identity_functor(carrier);
  if (trivial)
    report.internal_classes = enumerate_functors(bg, carrier, max_candidates).num_classes();

  if (report.fixed_points != report.sections)
    return report;
  std::vector<int> section_of(report.fixed_points);
  std::vector<char> hit(report.sections, 0);
  for (Obj p = 0; p < report.fixed_points; ++p) {
    const FixedPoint &fp = hfp.points[p];
    std::vector<Mor> mors(g.order());
    for (Elem x = 0; x < g.order(); ++x)
      mors[x] = q.morphism(x, carrier.inverse(fp.phi[x]));
    const GroupoidFunctor s(bg, q.total, {fp.base}, std::move(mors));
    const auto j = secs.find(s);
    if (!j || hit[*j])
      return report;
    hit[*j] = 1;
    section_of[p] = *j;
  }
  std::vector<int> class_image(components.size(), -1);
  std::vector<char> class_hit(report.section_classes, 0);
  for (std::size_t c = 0; c < components.size(); ++c)
    for (Obj p : components[c]) {
      const int b = secs.class_of[section_of[p]];
      if (class_image[c] < 0) {
        if (class_hit[b])
          return report;
        class_image[c] = b;
        class_hit[b] = 1;
      } else if (class_image[c] != b) {
        return report;
      }
    }
  report.bijection = report.fixed_point_classes == report.section_classes;
  return report;
}

} // namespace gcep
