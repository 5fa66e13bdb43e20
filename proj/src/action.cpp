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

#include "gcep/action.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "gcep/error.hpp"

namespace gcep {

namespace {

GroupAction discrete_action(const FiniteGroup &g, int points,
                            const std::function<Obj(Elem, Obj)> &image) {
  FiniteGroupoid carrier = discrete_groupoid(points);
  std::vector<GroupoidFunctor> act;
  act.reserve(g.order());
  for (Elem e = 0; e < g.order(); ++e) {
    std::vector<Obj> objs(points);
    for (Obj x = 0; x < points; ++x)
      objs[x] = image(e, x);
    act.emplace_back(carrier, carrier, objs, objs);
  }
  return GroupAction(g, carrier, std::move(act));
}

} // namespace

GroupAction::GroupAction(FiniteGroup group, FiniteGroupoid carrier,
                         std::vector<GroupoidFunctor> act)
    : group_(std::move(group)), carrier_(std::move(carrier)), act_(std::move(act)) {
  if (auto problem = validate())
    fail(ErrorKind::invalid_input, "invalid action: " + *problem);
}

std::optional<std::string> GroupAction::validate() const {
  if (static_cast<int>(act_.size()) != group_.order())
    return std::string("need one automorphism per group element");
  for (Elem g = 0; g < group_.order(); ++g) {
    if (!(act_[g].source() == carrier_) || !(act_[g].target() == carrier_))
      return "automorphism of element " + std::to_string(g) + " has the wrong carrier";
    if (auto problem = act_[g].validate())
      return "element " + std::to_string(g) + ": " + *problem;
  }
  if (!(act_[0] == identity_functor(carrier_)))
    return std::string("identity does not act trivially");
  for (Elem g = 0; g < group_.order(); ++g)
    for (Elem h = 0; h < group_.order(); ++h)
      if (!(act_[group_.mul(g, h)] == compose(act_[g], act_[h])))
        return "act(" + std::to_string(g) + " * " + std::to_string(h) +
               ") differs from the composite";
  return std::nullopt;
}

GroupAction GroupAction::from_generators(FiniteGroup group, FiniteGroupoid carrier,
                                         const std::vector<GroupoidFunctor> &generator_images) {
  const auto &gens = group.generators();
  require(generator_images.size() == gens.size(), ErrorKind::invalid_input,
          "expected " + std::to_string(gens.size()) + " generator images, got " +
              std::to_string(generator_images.size()));
  std::vector<std::optional<GroupoidFunctor>> act(group.order());
  act[0] = identity_functor(carrier);
  for (Elem g : group.word_order()) {
    if (g == 0)
      continue;
    act[g] = compose(*act[group.word_parent(g)], generator_images[group.word_step(g)]);
  }
  std::vector<GroupoidFunctor> all;
  all.reserve(act.size());
  for (auto &f : act)
    all.push_back(std::move(*f));
  return GroupAction(std::move(group), std::move(carrier), std::move(all));
}

GroupAction GroupAction::on_set(FiniteGroup group, int points,
                                const std::vector<Permutation> &generator_images) {
  FiniteGroupoid carrier = discrete_groupoid(points);
  std::vector<GroupoidFunctor> images;
  for (const Permutation &p : generator_images) {
    require(static_cast<int>(p.size()) == points && is_permutation(p),
            ErrorKind::invalid_input, "generator image is not a permutation of the points");
    images.emplace_back(carrier, carrier, p, p);
  }
  return from_generators(std::move(group), carrier, images);
}

GroupAction natural_action(const FiniteGroup &g) {
  require(g.has_permutations(), ErrorKind::invalid_input,
          "natural action needs a permutation group");
  return discrete_action(g, g.degree(), [&](Elem e, Obj x) { return g.permutation(e)[x]; });
}

GroupAction regular_action(const FiniteGroup &g) {
  return discrete_action(g, g.order(), [&](Elem e, Obj x) { return g.mul(e, x); });
}

GroupAction trivial_action(const FiniteGroup &g, const FiniteGroupoid &carrier) {
  return GroupAction(g, carrier, std::vector<GroupoidFunctor>(g.order(), identity_functor(carrier)));
}

QuotientGroupoid homotopy_quotient(const GroupAction &a) {
  const FiniteGroup &g = a.group();
  const FiniteGroupoid &x = a.carrier();
  const int m = x.num_morphisms();
  std::vector<Arrow> arrows;
  arrows.reserve(static_cast<std::size_t>(g.order()) * m);
  for (Elem e = 0; e < g.order(); ++e)
    for (Mor f = 0; f < m; ++f) {
      // f : e.s -> t, so (e, f) : s -> t with s = e^-1 . source(f)
      arrows.push_back({a.act_object(g.inv(e), x.source(f)), x.target(f)});
    }
  std::vector<Mor> ids;
  for (Obj o = 0; o < x.num_objects(); ++o)
    ids.push_back(x.identity(o));
  std::vector<std::string> names;
  if (x.has_object_names())
    for (Obj o = 0; o < x.num_objects(); ++o)
      names.push_back(x.object_name(o));
  FiniteGroupoid total = FiniteGroupoid::trusted(
      x.num_objects(), std::move(arrows), std::move(ids),
      [&](Mor outer, Mor inner) {
        const Elem g2 = outer / m, g1 = inner / m;
        const Mor f2 = outer % m, f1 = inner % m;
        return g.mul(g2, g1) * m + x.compose(f2, a.act_morphism(g2, f1));
      },
      std::move(names));
  FiniteGroupoid bg = delooping(g);
  std::vector<Mor> proj(total.num_morphisms());
  for (Mor f = 0; f < total.num_morphisms(); ++f)
    proj[f] = f / std::max(m, 1);
  std::vector<Obj> objs(x.num_objects());
  std::iota(objs.begin(), objs.end(), 0);
  std::vector<Mor> incl(m);
  std::iota(incl.begin(), incl.end(), 0);
  QuotientGroupoid q{total,
                     GroupoidFunctor(total, bg, std::vector<Obj>(x.num_objects(), 0), proj),
                     GroupoidFunctor(x, total, objs, incl)};
  q.carrier_morphisms = m;
  return q;
}

QuotientGroupoid universal_bundle(const FiniteGroup &g) {
  return homotopy_quotient(regular_action(g));
}

bool fiber_check(const QuotientGroupoid &q) {
  if (q.projection.target().num_objects() == 0)
    return true;
  const StrictFiber fiber = strict_fiber(q.projection, 0);
  return find_groupoid_isomorphism(fiber.groupoid, q.inclusion.source()).has_value();
}

std::vector<std::vector<Obj>> orbits(const GroupAction &a) {
  const int n = a.carrier().num_objects();
  std::vector<int> label(n, -1);
  std::vector<std::vector<Obj>> out;
  for (Obj x = 0; x < n; ++x) {
    if (label[x] >= 0)
      continue;
    std::vector<Obj> orbit;
    for (Elem g = 0; g < a.group().order(); ++g) {
      const Obj y = a.act_object(g, x);
      if (label[y] < 0) {
        label[y] = static_cast<int>(out.size());
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

Subgroup stabilizer(const GroupAction &a, Obj x) {
  std::vector<Elem> fixing;
  for (Elem g = 0; g < a.group().order(); ++g)
    if (a.act_object(g, x) == x)
      fixing.push_back(g);
  return subgroup(a.group(), std::move(fixing));
}

bool is_free(const GroupAction &a) {
  for (Elem g = 1; g < a.group().order(); ++g)
    for (Obj x = 0; x < a.carrier().num_objects(); ++x)
      if (a.act_object(g, x) == x)
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// homotopy fixed points

std::optional<Obj> HomotopyFixedPoints::find(const FixedPoint &p) const {
  auto it = std::lower_bound(points.begin(), points.end(), p,
                             [](const FixedPoint &l, const FixedPoint &r) {
                               return std::tie(l.base, l.phi) < std::tie(r.base, r.phi);
                             });
  if (it == points.end() || !(*it == p))
    return std::nullopt;
  return static_cast<Obj>(it - points.begin());
}

HomotopyFixedPoints homotopy_fixed_points(const GroupAction &a, std::int64_t max_candidates) {
  const FiniteGroup &g = a.group();
  const FiniteGroupoid &x = a.carrier();
  const auto &gens = g.generators();
  const int order = g.order();

  std::int64_t candidates = 0;
  for (Obj x0 = 0; x0 < x.num_objects(); ++x0) {
    std::int64_t here = 1;
    for (Elem s : gens) {
      here *= static_cast<std::int64_t>(x.hom(x0, a.act_object(s, x0)).size());
      if (here > max_candidates)
        break;
    }
    candidates += here;
    require(candidates <= max_candidates, ErrorKind::bound_exceeded,
            "homotopy fixed point enumeration exceeds " + std::to_string(max_candidates) +
                " candidates");
  }

  std::vector<FixedPoint> points;
  for (Obj x0 = 0; x0 < x.num_objects(); ++x0) {
    std::vector<const std::vector<Mor> *> choices;
    bool empty = false;
    for (Elem s : gens) {
      choices.push_back(&x.hom(x0, a.act_object(s, x0)));
      empty = empty || choices.back()->empty();
    }
    if (empty)
      continue;
    std::vector<std::size_t> digit(gens.size(), 0);
    while (true) {
      FixedPoint p{x0, std::vector<Mor>(order, -1)};
      p.phi[0] = x.identity(x0);
      for (Elem e : g.word_order()) {
        if (e == 0)
          continue;
        const Elem parent = g.word_parent(e);
        const int step = g.word_step(e);
        const Mor phi_s = (*choices[step])[digit[step]];
        p.phi[e] = x.compose(a.act_morphism(parent, phi_s), p.phi[parent]);
      }
      bool cocycle = true;
      for (Elem h = 0; h < order && cocycle; ++h)
        for (Elem k = 0; k < order; ++k)
          if (p.phi[g.mul(h, k)] != x.compose(a.act_morphism(h, p.phi[k]), p.phi[h])) {
            cocycle = false;
            break;
          }
      if (cocycle)
        points.push_back(std::move(p));
      std::size_t i = gens.size();
      while (i > 0) {
        --i;
        if (++digit[i] < choices[i]->size())
          break;
        digit[i] = 0;
        if (i == 0) {
          i = gens.size() + 1;
          break;
        }
      }
      if (gens.empty() || i == gens.size() + 1)
        break;
    }
  }
  std::sort(points.begin(), points.end(), [](const FixedPoint &l, const FixedPoint &r) {
    return std::tie(l.base, l.phi) < std::tie(r.base, r.phi);
  });

  std::vector<Arrow> arrows;
  std::vector<Mor> component;
  std::map<std::tuple<Obj, Obj, Mor>, Mor> index;
  std::vector<Mor> ids(points.size(), -1);
  for (Obj i = 0; i < static_cast<Obj>(points.size()); ++i)
    for (Obj j = 0; j < static_cast<Obj>(points.size()); ++j)
      for (Mor eta : x.hom(points[i].base, points[j].base)) {
        bool natural = true;
        for (Elem k = 0; k < order && natural; ++k)
          natural = x.compose(points[j].phi[k], eta) ==
                    x.compose(a.act_morphism(k, eta), points[i].phi[k]);
        if (!natural)
          continue;
        const Mor id = static_cast<Mor>(arrows.size());
        if (i == j && eta == x.identity(points[i].base))
          ids[i] = id;
        index[{i, j, eta}] = id;
        arrows.push_back({i, j});
        component.push_back(eta);
      }
  FiniteGroupoid groupoid = FiniteGroupoid::trusted(
      static_cast<int>(points.size()), arrows, std::move(ids), [&](Mor outer, Mor inner) {
        return index.at({arrows[inner].source, arrows[outer].target,
                         x.compose(component[outer], component[inner])});
      });
  return HomotopyFixedPoints{groupoid, std::move(points), std::move(component)};
}

FiniteGroupoid universal_space(const FiniteGroup &g) { return chaotic_groupoid(g.order()); }

GroupoidFunctor equivariant_functor(const GroupAction &a, const FixedPoint &p) {
  const FiniteGroup &g = a.group();
  const int n = g.order();
  std::vector<Obj> objs(n);
  for (Elem b = 0; b < n; ++b)
    objs[b] = a.act_object(b, p.base);
  std::vector<Mor> mors(static_cast<std::size_t>(n) * n);
  for (Elem s = 0; s < n; ++s)
    for (Elem t = 0; t < n; ++t)
      mors[s * n + t] = a.act_morphism(s, p.phi[g.mul(g.inv(s), t)]);
  return GroupoidFunctor(universal_space(g), a.carrier(), std::move(objs), std::move(mors));
}

bool is_equivariant(const GroupAction &x, const GroupAction &theta,
                    const GroupoidFunctor &family) {
  if (!(x.group() == theta.group()) || !(family.source() == x.carrier()) ||
      !(family.target() == theta.carrier()) || !family.is_valid())
    return false;
  for (Elem g = 0; g < x.group().order(); ++g)
    if (!(compose(family, x.act(g)) == compose(theta.act(g), family)))
      return false;
  return true;
}

GroupoidFunctor induced_fixed_point_functor(const GroupAction &x, const GroupAction &theta,
                                            const GroupoidFunctor &family,
                                            const HomotopyFixedPoints &hx,
                                            const HomotopyFixedPoints &htheta) {
  require(is_equivariant(x, theta, family), ErrorKind::invalid_input,
          "family is not an equivariant functor");
  std::vector<Obj> objs;
  for (const FixedPoint &p : hx.points) {
    FixedPoint image{family.on_object(p.base), {}};
    for (Mor f : p.phi)
      image.phi.push_back(family.on_morphism(f));
    auto found = htheta.find(image);
    require(found.has_value(), ErrorKind::invalid_input,
            "image of a fixed point is missing from the target enumeration");
    objs.push_back(*found);
  }
  const FiniteGroupoid &target = htheta.groupoid;
  std::vector<Mor> mors;
  for (Mor f = 0; f < hx.groupoid.num_morphisms(); ++f) {
    const Obj s = objs[hx.groupoid.source(f)], t = objs[hx.groupoid.target(f)];
    const Mor eta = family.on_morphism(hx.component[f]);
    Mor image = -1;
    for (Mor h : target.hom(s, t))
      if (htheta.component[h] == eta)
        image = h;
    require(image >= 0, ErrorKind::invalid_input, "image of a fixed point morphism is missing");
    mors.push_back(image);
  }
  return GroupoidFunctor(hx.groupoid, target, std::move(objs), std::move(mors));
}

} // namespace gcep
