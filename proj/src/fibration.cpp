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

#include "gcep/fibration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gcep/error.hpp"

namespace gcep {

FibrationCheck is_fibration(const GroupoidFunctor &p) {
  const FiniteGroupoid &e = p.source();
  const FiniteGroupoid &b = p.target();
  FibrationCheck out;
  std::vector<int> count(b.num_morphisms(), 0);
  for (Obj w = 0; w < e.num_objects(); ++w) {
    std::fill(count.begin(), count.end(), 0);
    for (Obj w2 = 0; w2 < e.num_objects(); ++w2)
      for (Mor h : e.hom(w, w2))
        ++count[p.on_morphism(h)];
    const Obj c = p.on_object(w);
    for (Mor f = 0; f < b.num_morphisms(); ++f)
      if (b.source(f) == c && count[f] != 1) {
        out.ok = false;
        out.counterexample = LiftFailure{w, f, count[f]};
        return out;
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fibration

Fibration::Fibration(GroupoidFunctor p, std::vector<Mor> lift_table)
    : proj_(std::move(p)), lift_(std::move(lift_table)) {
  if (auto problem = validate())
    fail(ErrorKind::not_a_fibration, *problem);
}

Fibration Fibration::covering(GroupoidFunctor p) {
  const FibrationCheck check = is_fibration(p);
  if (!check.ok) {
    const LiftFailure &c = *check.counterexample;
    fail(ErrorKind::not_a_fibration, "base morphism " + std::to_string(c.base_morphism) +
                                         " has " + std::to_string(c.lifts) +
                                         " lifts at object " + std::to_string(c.object));
  }
  const FiniteGroupoid &e = p.source();
  const int bm = p.target().num_morphisms();
  std::vector<Mor> table(static_cast<std::size_t>(e.num_objects()) * bm, -1);
  for (Obj w = 0; w < e.num_objects(); ++w)
    for (Obj w2 = 0; w2 < e.num_objects(); ++w2)
      for (Mor h : e.hom(w, w2))
        table[static_cast<std::size_t>(w) * bm + p.on_morphism(h)] = h;
  return Fibration(std::move(p), std::move(table));
}

Mor Fibration::lift(Mor base_morphism, Obj w) const {
  return lift_[static_cast<std::size_t>(w) * base().num_morphisms() + base_morphism];
}

std::optional<std::string> Fibration::validate() const {
  if (auto problem = proj_.validate())
    return "projection is not a functor: " + *problem;
  const FiniteGroupoid &e = total();
  const FiniteGroupoid &b = base();
  const int bm = b.num_morphisms();
  if (lift_.size() != static_cast<std::size_t>(e.num_objects()) * bm)
    return std::string("cleavage table has the wrong size");
  for (Obj w = 0; w < e.num_objects(); ++w) {
    const Obj c = proj_.on_object(w);
    for (Mor f = 0; f < bm; ++f) {
      const Mor h = lift(f, w);
      if (b.source(f) != c) {
        if (h != -1)
          return "cleavage has an entry for base morphism " + std::to_string(f) +
                 " not out of the image of object " + std::to_string(w);
        continue;
      }
      if (h < 0 || h >= e.num_morphisms() || e.source(h) != w || proj_.on_morphism(h) != f)
        return "no lift of base morphism " + std::to_string(f) + " at object " +
               std::to_string(w);
    }
    if (lift(b.identity(c), w) != e.identity(w))
      return "cleavage is not normalized at object " + std::to_string(w);
  }
  for (Obj w = 0; w < e.num_objects(); ++w) {
    const Obj c = proj_.on_object(w);
    for (Obj d = 0; d < b.num_objects(); ++d)
      for (Mor f : b.hom(c, d)) {
        const Mor first = lift(f, w);
        for (Obj d2 = 0; d2 < b.num_objects(); ++d2)
          for (Mor f2 : b.hom(d, d2))
            if (lift(b.compose(f2, f), w) != e.compose(lift(f2, e.target(first)), first))
              return "cleavage is not split at object " + std::to_string(w);
      }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// StraightenedFunctor

StraightenedFunctor::StraightenedFunctor(FiniteGroupoid base, std::vector<FiniteGroupoid> fibers,
                                         std::vector<GroupoidFunctor> transport)
    : base_(std::move(base)), fibers_(std::move(fibers)), transport_(std::move(transport)) {
  require(static_cast<int>(fibers_.size()) == base_.num_objects() &&
              static_cast<int>(transport_.size()) == base_.num_morphisms(),
          ErrorKind::invalid_input, "need one fiber per object and one transport per morphism");
}

std::optional<std::string> StraightenedFunctor::validate() const {
  for (Mor f = 0; f < base_.num_morphisms(); ++f) {
    const GroupoidFunctor &t = transport_[f];
    if (!(t.source() == fibers_[base_.source(f)]) || !(t.target() == fibers_[base_.target(f)]))
      return "transport along " + std::to_string(f) + " has the wrong fibers";
    if (auto problem = t.validate())
      return "transport along " + std::to_string(f) + ": " + *problem;
    if (!t.is_isomorphism())
      return "transport along " + std::to_string(f) + " is not an isomorphism";
  }
  for (Obj c = 0; c < base_.num_objects(); ++c)
    if (!(transport_[base_.identity(c)] == identity_functor(fibers_[c])))
      return "transport along the identity of " + std::to_string(c) + " is not the identity";
  for (Mor f = 0; f < base_.num_morphisms(); ++f)
    for (Obj c = 0; c < base_.num_objects(); ++c)
      for (Mor g : base_.hom(c, base_.source(f)))
        if (!(transport_[base_.compose(f, g)] == compose(transport_[f], transport_[g])))
          return "transport does not respect " + std::to_string(f) + " after " +
                 std::to_string(g);
  return std::nullopt;
}

StraightenedFunctor constant_straightened(const FiniteGroupoid &base,
                                          const FiniteGroupoid &fiber) {
  return StraightenedFunctor(base, std::vector<FiniteGroupoid>(base.num_objects(), fiber),
                             std::vector<GroupoidFunctor>(base.num_morphisms(),
                                                          identity_functor(fiber)));
}

StraightenedFunctor action_functor(const GroupAction &a) {
  std::vector<GroupoidFunctor> transport;
  for (Elem g = 0; g < a.group().order(); ++g)
    transport.push_back(a.act(g));
  return StraightenedFunctor(delooping(a.group()), {a.carrier()}, std::move(transport));
}

// ---------------------------------------------------------------------------
// straightening

namespace {

struct FiberIndex {
  std::vector<StrictFiber> fibers;
  std::vector<int> local_object;   // total object -> index in its fiber
  std::vector<int> local_morphism; // total morphism over an identity -> index in its fiber
};

FiberIndex index_fibers(const GroupoidFunctor &p) {
  FiberIndex idx;
  idx.local_object.assign(p.source().num_objects(), -1);
  idx.local_morphism.assign(p.source().num_morphisms(), -1);
  for (Obj c = 0; c < p.target().num_objects(); ++c) {
    idx.fibers.push_back(strict_fiber(p, c));
    const GroupoidFunctor &incl = idx.fibers.back().inclusion;
    for (Obj x = 0; x < static_cast<Obj>(incl.obj_map().size()); ++x)
      idx.local_object[incl.on_object(x)] = x;
    for (Mor u = 0; u < static_cast<Mor>(incl.mor_map().size()); ++u)
      idx.local_morphism[incl.on_morphism(u)] = u;
  }
  return idx;
}

} // namespace

StraightenedFunctor straighten(const Fibration &p) {
  const FiniteGroupoid &e = p.total();
  const FiniteGroupoid &b = p.base();
  const FiberIndex idx = index_fibers(p.proj());
  std::vector<FiniteGroupoid> fibers;
  for (const StrictFiber &f : idx.fibers)
    fibers.push_back(f.groupoid);
  std::vector<GroupoidFunctor> transport;
  for (Mor f = 0; f < b.num_morphisms(); ++f) {
    const Obj c = b.source(f), d = b.target(f);
    const GroupoidFunctor &incl = idx.fibers[c].inclusion;
    std::vector<Obj> objs;
    for (Obj w : incl.obj_map())
      objs.push_back(idx.local_object[e.target(p.lift(f, w))]);
    std::vector<Mor> mors;
    for (Mor u : incl.mor_map()) {
      const Mor moved = e.compose(p.lift(f, e.target(u)),
                                  e.compose(u, e.inverse(p.lift(f, e.source(u)))));
      mors.push_back(idx.local_morphism[moved]);
    }
    transport.emplace_back(fibers[c], fibers[d], std::move(objs), std::move(mors));
  }
  return StraightenedFunctor(b, std::move(fibers), std::move(transport));
}

StraightenedFunctor straighten(const GroupoidFunctor &p) {
  return straighten(Fibration::covering(p));
}

namespace {

struct Layout {
  std::vector<int> object_offset;   // (c, x) is object_offset[c] + x
  std::vector<int> morphism_offset; // (g, u) is morphism_offset[g] + u
};

Layout unstraighten_layout(const StraightenedFunctor &f) {
  const FiniteGroupoid &b = f.base();
  Layout l;
  l.object_offset.assign(b.num_objects() + 1, 0);
  for (Obj c = 0; c < b.num_objects(); ++c)
    l.object_offset[c + 1] = l.object_offset[c] + f.fiber(c).num_objects();
  int next = 0;
  for (Mor g = 0; g < b.num_morphisms(); ++g) {
    l.morphism_offset.push_back(next);
    next += f.fiber(b.target(g)).num_morphisms();
  }
  return l;
}

} // namespace

Fibration unstraighten(const StraightenedFunctor &f) {
  if (auto problem = f.validate())
    fail(ErrorKind::invalid_input, "not a functor to groupoids: " + *problem);
  const FiniteGroupoid &b = f.base();
  const Layout layout = unstraighten_layout(f);
  const std::vector<int> &object_offset = layout.object_offset;
  const std::vector<int> &morphism_offset = layout.morphism_offset;
  std::vector<Mor> mor_base, mor_fiber;
  std::vector<Arrow> arrows;
  for (Mor g = 0; g < b.num_morphisms(); ++g) {
    const Obj c = b.source(g), d = b.target(g);
    const FiniteGroupoid &fd = f.fiber(d);
    const GroupoidFunctor &back = f.transport(b.inverse(g));
    for (Mor u = 0; u < fd.num_morphisms(); ++u) {
      mor_base.push_back(g);
      mor_fiber.push_back(u);
      arrows.push_back({object_offset[c] + back.on_object(fd.source(u)),
                        object_offset[d] + fd.target(u)});
    }
  }
  std::vector<Mor> ids;
  for (Obj c = 0; c < b.num_objects(); ++c)
    for (Obj x = 0; x < f.fiber(c).num_objects(); ++x)
      ids.push_back(morphism_offset[b.identity(c)] + f.fiber(c).identity(x));
  std::vector<std::string> names;
  if (b.has_object_names())
    for (Obj c = 0; c < b.num_objects(); ++c)
      for (Obj x = 0; x < f.fiber(c).num_objects(); ++x)
        names.push_back("(" + b.object_name(c) + "," + std::to_string(x) + ")");
  FiniteGroupoid total = FiniteGroupoid::trusted(
      object_offset.back(), arrows, std::move(ids),
      [&](Mor outer, Mor inner) {
        const Mor g2 = mor_base[outer], g1 = mor_base[inner];
        const FiniteGroupoid &fiber = f.fiber(b.target(g2));
        const Mor u = fiber.compose(mor_fiber[outer],
                                    f.transport(g2).on_morphism(mor_fiber[inner]));
        return morphism_offset[b.compose(g2, g1)] + u;
      },
      std::move(names));
  std::vector<Obj> proj_objs;
  for (Obj c = 0; c < b.num_objects(); ++c)
    proj_objs.insert(proj_objs.end(), f.fiber(c).num_objects(), c);
  GroupoidFunctor proj(total, b, std::move(proj_objs), mor_base);
  const int bm = b.num_morphisms();
  std::vector<Mor> lifts(static_cast<std::size_t>(total.num_objects()) * bm, -1);
  for (Obj c = 0; c < b.num_objects(); ++c)
    for (Obj x = 0; x < f.fiber(c).num_objects(); ++x)
      for (Obj d = 0; d < b.num_objects(); ++d)
        for (Mor g : b.hom(c, d)) {
          const Obj moved = f.transport(g).on_object(x);
          lifts[static_cast<std::size_t>(object_offset[c] + x) * bm + g] =
              morphism_offset[g] + f.fiber(d).identity(moved);
        }
  return Fibration(std::move(proj), std::move(lifts));
}

Fibration quotient_fibration(const GroupAction &a, const QuotientGroupoid &q) {
  const int n = a.carrier().num_objects();
  const int order = a.group().order();
  std::vector<Mor> lifts(static_cast<std::size_t>(n) * order);
  for (Obj w = 0; w < n; ++w)
    for (Elem g = 0; g < order; ++g)
      lifts[static_cast<std::size_t>(w) * order + g] =
          q.morphism(g, a.carrier().identity(a.act_object(g, w)));
  return Fibration(q.projection, std::move(lifts));
}

// ---------------------------------------------------------------------------
// round trips

std::optional<std::string> validate_iso(const StraightenedFunctor &from,
                                        const StraightenedFunctor &to,
                                        const StraightenedIso &iso) {
  const FiniteGroupoid &b = from.base();
  if (!(to.base() == b))
    return std::string("functors have different bases");
  if (static_cast<int>(iso.components.size()) != b.num_objects())
    return std::string("need one component per base object");
  for (Obj c = 0; c < b.num_objects(); ++c) {
    const GroupoidFunctor &k = iso.components[c];
    if (!(k.source() == from.fiber(c)) || !(k.target() == to.fiber(c)))
      return "component at " + std::to_string(c) + " has the wrong fibers";
    if (!k.is_valid() || !k.is_isomorphism())
      return "component at " + std::to_string(c) + " is not an isomorphism";
  }
  for (Mor f = 0; f < b.num_morphisms(); ++f)
    if (!(compose(to.transport(f), iso.components[b.source(f)]) ==
          compose(iso.components[b.target(f)], from.transport(f))))
      return "naturality fails along " + std::to_string(f);
  return std::nullopt;
}

StraightenRoundTrip straighten_unstraighten(const StraightenedFunctor &f) {
  const Fibration un = unstraighten(f);
  const Layout layout = unstraighten_layout(f);
  const FiberIndex idx = index_fibers(un.proj());
  StraightenedFunctor round_trip = straighten(un);
  const FiniteGroupoid &b = f.base();
  std::vector<GroupoidFunctor> components;
  for (Obj c = 0; c < b.num_objects(); ++c) {
    const FiniteGroupoid &fc = f.fiber(c);
    std::vector<Obj> objs;
    for (Obj x = 0; x < fc.num_objects(); ++x)
      objs.push_back(idx.local_object[layout.object_offset[c] + x]);
    std::vector<Mor> mors;
    for (Mor u = 0; u < fc.num_morphisms(); ++u)
      mors.push_back(idx.local_morphism[layout.morphism_offset[b.identity(c)] + u]);
    components.emplace_back(fc, round_trip.fiber(c), std::move(objs), std::move(mors));
  }
  return StraightenRoundTrip{std::move(round_trip), StraightenedIso{std::move(components)}};
}

UnstraightenRoundTrip unstraighten_straighten(const Fibration &p) {
  const StraightenedFunctor s = straighten(p);
  Fibration round_trip = unstraighten(s);
  const Layout layout = unstraighten_layout(s);
  const FiberIndex idx = index_fibers(p.proj());
  const FiniteGroupoid &e = p.total();
  const FiniteGroupoid &b = p.base();
  const FiniteGroupoid &u = round_trip.total();
  std::vector<Obj> objs;
  for (Obj c = 0; c < b.num_objects(); ++c)
    for (Obj w : idx.fibers[c].inclusion.obj_map())
      objs.push_back(w);
  // (g, v) maps to v after the chosen lift of g at the source
  std::vector<Mor> mors(u.num_morphisms());
  for (Mor g = 0; g < b.num_morphisms(); ++g) {
    const Obj d = b.target(g);
    const GroupoidFunctor &incl = idx.fibers[d].inclusion;
    for (Mor v = 0; v < s.fiber(d).num_morphisms(); ++v) {
      const Mor h = layout.morphism_offset[g] + v;
      mors[h] = e.compose(incl.on_morphism(v), p.lift(g, objs[u.source(h)]));
    }
  }
  GroupoidFunctor comparison(u, e, std::move(objs), std::move(mors));
  OverBaseEquivalence witness{comparison, check_equivalence(comparison),
                              comparison.is_valid() &&
                                  compose(p.proj(), comparison) == round_trip.proj()};
  return UnstraightenRoundTrip{std::move(round_trip), std::move(witness)};
}

// ---------------------------------------------------------------------------
// sections

bool is_pointed_transformation(const StraightenedFunctor &f, const PointedTransformation &t) {
  const FiniteGroupoid &b = f.base();
  if (static_cast<int>(t.objects.size()) != b.num_objects() ||
      static_cast<int>(t.morphisms.size()) != b.num_morphisms())
    return false;
  for (Obj c = 0; c < b.num_objects(); ++c)
    if (t.objects[c] < 0 || t.objects[c] >= f.fiber(c).num_objects())
      return false;
  for (Mor g = 0; g < b.num_morphisms(); ++g) {
    const FiniteGroupoid &fd = f.fiber(b.target(g));
    const Mor eta = t.morphisms[g];
    if (eta < 0 || eta >= fd.num_morphisms() ||
        fd.source(eta) != f.transport(g).on_object(t.objects[b.source(g)]) ||
        fd.target(eta) != t.objects[b.target(g)])
      return false;
  }
  for (Obj c = 0; c < b.num_objects(); ++c)
    if (t.morphisms[b.identity(c)] != f.fiber(c).identity(t.objects[c]))
      return false;
  for (Mor g2 = 0; g2 < b.num_morphisms(); ++g2)
    for (Obj c = 0; c < b.num_objects(); ++c)
      for (Mor g1 : b.hom(c, b.source(g2))) {
        const FiniteGroupoid &fd = f.fiber(b.target(g2));
        if (t.morphisms[b.compose(g2, g1)] !=
            fd.compose(t.morphisms[g2], f.transport(g2).on_morphism(t.morphisms[g1])))
          return false;
      }
  return true;
}

namespace {

void check_section_bounds(const Fibration &p) {
  const FiniteGroupoid &b = p.base();
  const FiniteGroupoid &e = p.total();
  require(b.num_objects() <= kMaxSectionBaseObjects, ErrorKind::bound_exceeded,
          "section enumeration limited to " + std::to_string(kMaxSectionBaseObjects) +
              " base objects");
  for (const FiniteGroupoid *x : {&b, &e})
    for (Obj c = 0; c < x->num_objects(); ++c)
      for (Obj d = 0; d < x->num_objects(); ++d)
        require(static_cast<int>(x->hom(c, d).size()) <= kMaxSectionHomSize,
                ErrorKind::bound_exceeded,
                "section enumeration limited to hom-sets of size " +
                    std::to_string(kMaxSectionHomSize));
}

// Pointed transformations on one base component, as (objects, morphisms)
// restricted to that component's objects and morphisms.
std::vector<PointedTransformation> component_transformations(const StraightenedFunctor &f,
                                                             const ComponentTree &t) {
  const FiniteGroupoid &b = f.base();
  const AutomorphismGroup aut = automorphism_group(b, t.root);
  const FiniteGroup &a = aut.group;
  std::vector<int> aut_local(b.num_morphisms(), -1);
  for (std::size_t i = 0; i < aut.morphisms.size(); ++i)
    aut_local[aut.morphisms[i]] = static_cast<int>(i);
  std::vector<int> position(b.num_objects(), -1);
  for (std::size_t i = 0; i < t.objects.size(); ++i)
    position[t.objects[i]] = static_cast<int>(i);
  const FiniteGroupoid &fr = f.fiber(t.root);
  const auto &gens = a.generators();

  std::vector<PointedTransformation> out;
  for (Obj xr = 0; xr < fr.num_objects(); ++xr) {
    std::vector<std::vector<Mor>> choices;
    for (std::size_t i = 0; i < t.objects.size(); ++i) {
      if (t.objects[i] == t.root)
        continue;
      const FiniteGroupoid &fy = f.fiber(t.objects[i]);
      const Obj start = f.transport(t.from_root[i]).on_object(xr);
      std::vector<Mor> c;
      for (Obj y = 0; y < fy.num_objects(); ++y)
        for (Mor h : fy.hom(start, y))
          c.push_back(h);
      choices.push_back(std::move(c));
    }
    for (Elem g : gens)
      choices.push_back(fr.hom(f.transport(aut.morphisms[g]).on_object(xr), xr));
    bool empty = false;
    for (const auto &c : choices)
      empty = empty || c.empty();
    if (empty)
      continue;
    std::vector<std::size_t> digit(choices.size(), 0);
    while (true) {
      PointedTransformation tr{std::vector<Obj>(b.num_objects(), -1),
                               std::vector<Mor>(b.num_morphisms(), -1)};
      std::vector<Mor> eta_tree(t.objects.size());
      std::size_t slot = 0;
      for (std::size_t i = 0; i < t.objects.size(); ++i) {
        if (t.objects[i] == t.root) {
          eta_tree[i] = fr.identity(xr);
        } else {
          eta_tree[i] = choices[slot][digit[slot]];
          ++slot;
        }
        tr.objects[t.objects[i]] = f.fiber(t.objects[i]).target(eta_tree[i]);
      }
      // eta on the automorphisms of the root, along the word tree
      std::vector<Mor> eta_aut(a.order(), -1);
      eta_aut[0] = fr.identity(xr);
      for (Elem g : a.word_order()) {
        if (g == 0)
          continue;
        const Elem parent = a.word_parent(g);
        const Mor eta_step = choices[slot + a.word_step(g)][digit[slot + a.word_step(g)]];
        eta_aut[g] = fr.compose(eta_aut[parent],
                                f.transport(aut.morphisms[parent]).on_morphism(eta_step));
      }
      bool ok = true;
      for (Elem g = 0; g < a.order() && ok; ++g)
        for (Elem h = 0; h < a.order(); ++h)
          if (eta_aut[a.mul(g, h)] !=
              fr.compose(eta_aut[g], f.transport(aut.morphisms[g]).on_morphism(eta_aut[h]))) {
            ok = false;
            break;
          }
      if (ok) {
        for (Obj y : t.objects)
          for (Obj y2 : t.objects)
            for (Mor m : b.hom(y, y2)) {
              const int i = position[y], k = position[y2];
              const Mor ti = t.from_root[i], tk = t.from_root[k];
              const Mor loop = b.compose(b.inverse(tk), b.compose(m, ti));
              const Mor ti_inv = b.inverse(ti);
              // eta(t_i^-1) = F(t_i^-1)(eta(t_i))^-1
              const Mor eta_back = fr.inverse(f.transport(ti_inv).on_morphism(eta_tree[i]));
              const Mor eta_mid = fr.compose(eta_aut[aut_local[loop]],
                                             f.transport(loop).on_morphism(eta_back));
              tr.morphisms[m] = f.fiber(y2).compose(eta_tree[k],
                                                    f.transport(tk).on_morphism(eta_mid));
            }
        out.push_back(std::move(tr));
      }
      std::size_t i = choices.size();
      bool done = true;
      while (i > 0) {
        --i;
        if (++digit[i] < choices[i].size()) {
          done = false;
          break;
        }
        digit[i] = 0;
      }
      if (done)
        break;
    }
  }
  return out;
}

std::int64_t transformation_search_size(const StraightenedFunctor &f) {
  const FiniteGroupoid &b = f.base();
  auto mul = [](std::int64_t x, std::int64_t y) {
    if (x == 0 || y == 0)
      return std::int64_t{0};
    return x > std::numeric_limits<std::int64_t>::max() / y
               ? std::numeric_limits<std::int64_t>::max()
               : x * y;
  };
  std::int64_t total = 1;
  for (const ComponentTree &t : spanning_trees(b)) {
    std::int64_t here = f.fiber(t.root).num_objects();
    for (Obj y : t.objects)
      if (y != t.root)
        here = mul(here, f.fiber(y).num_morphisms());
    const auto gens = automorphism_group(b, t.root).group.generators().size();
    for (std::size_t k = 0; k < gens; ++k)
      here = mul(here, f.fiber(t.root).num_morphisms());
    total = mul(total, here);
  }
  return total;
}

std::vector<PointedTransformation> all_transformations(const StraightenedFunctor &f,
                                                       std::int64_t max_candidates) {
  const std::int64_t size = transformation_search_size(f);
  require(size <= max_candidates, ErrorKind::bound_exceeded,
          "transformation search space " + std::to_string(size) + " exceeds bound " +
              std::to_string(max_candidates));
  const FiniteGroupoid &b = f.base();
  const auto trees = spanning_trees(b);
  std::vector<std::vector<PointedTransformation>> parts;
  for (const ComponentTree &t : trees) {
    parts.push_back(component_transformations(f, t));
    if (parts.back().empty())
      return {};
  }
  std::vector<PointedTransformation> out;
  std::vector<std::size_t> digit(parts.size(), 0);
  while (true) {
    PointedTransformation tr{std::vector<Obj>(b.num_objects(), -1),
                             std::vector<Mor>(b.num_morphisms(), -1)};
    for (std::size_t c = 0; c < parts.size(); ++c) {
      const PointedTransformation &part = parts[c][digit[c]];
      for (Obj y : trees[c].objects) {
        tr.objects[y] = part.objects[y];
        for (Obj y2 : trees[c].objects)
          for (Mor m : b.hom(y, y2))
            tr.morphisms[m] = part.morphisms[m];
      }
    }
    out.push_back(std::move(tr));
    std::size_t i = parts.size();
    bool done = true;
    while (i > 0) {
      --i;
      if (++digit[i] < parts[i].size()) {
        done = false;
        break;
      }
      digit[i] = 0;
    }
    if (done)
      break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

template <class T>
std::vector<int> match_sorted(const std::vector<T> &images, const std::vector<T> &sorted,
                              bool &bijective) {
  std::vector<int> out;
  std::vector<char> hit(sorted.size(), 0);
  bijective = images.size() == sorted.size();
  for (const T &x : images) {
    auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    if (it == sorted.end() || !(*it == x)) {
      out.push_back(-1);
      bijective = false;
      continue;
    }
    const int k = static_cast<int>(it - sorted.begin());
    if (hit[k])
      bijective = false;
    hit[k] = 1;
    out.push_back(k);
  }
  return out;
}

} // namespace

SectionReport sections(const Fibration &p, std::int64_t max_candidates) {
  check_section_bounds(p);
  const FiniteGroupoid &b = p.base();
  const FiniteGroupoid &e = p.total();
  const GroupoidFunctor &proj = p.proj();
  FunctorSearch over_base;
  over_base.object_allowed = [&](Obj c, Obj w) { return proj.on_object(w) == c; };
  over_base.morphism_allowed = [&](Mor f, Mor h) { return proj.on_morphism(h) == f; };

  SectionReport report;
  report.sections = all_functors(b, e, over_base, max_candidates);
  const StraightenedFunctor s = straighten(p);
  report.transformations = all_transformations(s, max_candidates);

  const FiberIndex idx = index_fibers(proj);
  std::vector<PointedTransformation> images;
  for (const GroupoidFunctor &sec : report.sections) {
    PointedTransformation tr;
    for (Obj c = 0; c < b.num_objects(); ++c)
      tr.objects.push_back(idx.local_object[sec.on_object(c)]);
    for (Mor f = 0; f < b.num_morphisms(); ++f) {
      const Mor lifted = p.lift(f, sec.on_object(b.source(f)));
      tr.morphisms.push_back(
          idx.local_morphism[e.compose(sec.on_morphism(f), e.inverse(lifted))]);
    }
    images.push_back(std::move(tr));
  }
  report.correspondence = match_sorted(images, report.transformations, report.bijective);
  return report;
}

Fibration trivial_fibration(const FiniteGroupoid &base, const FiniteGroupoid &fiber) {
  const Product prod = product(base, fiber);
  const int bm = base.num_morphisms();
  std::vector<Mor> lifts(static_cast<std::size_t>(prod.groupoid.num_objects()) * bm, -1);
  for (Obj y = 0; y < base.num_objects(); ++y)
    for (Obj x = 0; x < fiber.num_objects(); ++x)
      for (Obj y2 = 0; y2 < base.num_objects(); ++y2)
        for (Mor f : base.hom(y, y2))
          lifts[static_cast<std::size_t>(prod.object(y, x)) * bm + f] =
              prod.morphism(f, fiber.identity(x));
  return Fibration(prod.left, std::move(lifts));
}

TrivialSectionReport trivial_bundle_sections(const FiniteGroupoid &base,
                                             const FiniteGroupoid &fiber,
                                             std::int64_t max_candidates) {
  const Fibration p = trivial_fibration(base, fiber);
  const Product prod = product(base, fiber);
  TrivialSectionReport report;
  report.sections = sections(p, max_candidates).sections;
  report.functors = all_functors(base, fiber, {}, max_candidates);
  using Maps = std::pair<std::vector<Obj>, std::vector<Mor>>;
  std::vector<Maps> sorted, images;
  for (const GroupoidFunctor &f : report.functors)
    sorted.emplace_back(f.obj_map(), f.mor_map());
  for (const GroupoidFunctor &s : report.sections) {
    const GroupoidFunctor g = compose(prod.right, s);
    images.emplace_back(g.obj_map(), g.mor_map());
  }
  report.correspondence = match_sorted(images, sorted, report.bijective);
  return report;
}

} // namespace gcep
