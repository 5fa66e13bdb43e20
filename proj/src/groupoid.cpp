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

#include "gcep/groupoid.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

#include "gcep/error.hpp"
#include "gcep/kernels.hpp"

namespace gcep {

struct FiniteGroupoid::Data {
  int n = 0;
  std::vector<Arrow> arrows;
  std::vector<Mor> ids;
  std::vector<int> comp;
  std::vector<Mor> inv;
  std::vector<std::vector<Mor>> homs;
  std::vector<std::string> names;
  std::vector<char> is_id;
};

namespace {

const std::string kNoName;

std::string arrow_text(Mor f, const Arrow &a) {
  std::ostringstream out;
  out << "morphism " << f << " (" << a.source << " -> " << a.target << ")";
  return out.str();
}

} // namespace

FiniteGroupoid::FiniteGroupoid() : d_(std::make_shared<const Data>()) {}

FiniteGroupoid FiniteGroupoid::trusted(int objects, std::vector<Arrow> arrows,
                                       std::vector<Mor> identities,
                                       const std::function<Mor(Mor, Mor)> &compose,
                                       std::vector<std::string> object_names) {
  auto d = std::make_shared<Data>();
  d->n = objects;
  d->arrows = std::move(arrows);
  d->ids = std::move(identities);
  d->names = std::move(object_names);
  const int m = static_cast<int>(d->arrows.size());
  d->homs.assign(static_cast<std::size_t>(objects) * objects, {});
  for (Mor f = 0; f < m; ++f)
    d->homs[d->arrows[f].source * objects + d->arrows[f].target].push_back(f);
  d->is_id.assign(m, 0);
  for (Mor i : d->ids)
    d->is_id[i] = 1;
  d->comp.assign(static_cast<std::size_t>(m) * m, -1);
  for (Mor f = 0; f < m; ++f) {
    const Obj s = d->arrows[f].source;
    for (Obj x = 0; x < objects; ++x)
      for (Mor g : d->homs[x * objects + s])
        d->comp[static_cast<std::size_t>(f) * m + g] = compose(f, g);
  }
  d->inv.assign(m, -1);
  for (Mor f = 0; f < m; ++f) {
    const Arrow a = d->arrows[f];
    for (Mor g : d->homs[a.target * objects + a.source])
      if (d->comp[static_cast<std::size_t>(g) * m + f] == d->ids[a.source]) {
        d->inv[f] = g;
        break;
      }
  }
  return FiniteGroupoid(std::move(d));
}

FiniteGroupoid FiniteGroupoid::make(int objects, std::vector<Arrow> arrows,
                                    std::vector<Mor> identities,
                                    const std::function<Mor(Mor, Mor)> &compose,
                                    std::vector<std::string> object_names) {
  require(objects >= 0, ErrorKind::invalid_input, "object count must be nonnegative");
  require(static_cast<int>(identities.size()) == objects, ErrorKind::invalid_input,
          "need one identity per object");
  const int m = static_cast<int>(arrows.size());
  for (const Arrow &a : arrows)
    require(a.source >= 0 && a.source < objects && a.target >= 0 && a.target < objects,
            ErrorKind::invalid_input, "morphism endpoint out of range");
  for (Mor i : identities)
    require(i >= 0 && i < m, ErrorKind::invalid_input, "identity index out of range");
  auto checked = [&](Mor f, Mor g) {
    const Mor h = compose(f, g);
    require(h >= 0 && h < m, ErrorKind::invalid_input,
            "composite of " + std::to_string(f) + " after " + std::to_string(g) + " out of range");
    return h;
  };
  FiniteGroupoid x = trusted(objects, std::move(arrows), std::move(identities), checked,
                             std::move(object_names));
  if (auto problem = x.validate())
    fail(ErrorKind::invalid_input, *problem);
  return x;
}

int FiniteGroupoid::num_objects() const { return d_->n; }
int FiniteGroupoid::num_morphisms() const { return static_cast<int>(d_->arrows.size()); }
Obj FiniteGroupoid::source(Mor f) const { return d_->arrows[f].source; }
Obj FiniteGroupoid::target(Mor f) const { return d_->arrows[f].target; }
Mor FiniteGroupoid::identity(Obj x) const { return d_->ids[x]; }
bool FiniteGroupoid::is_identity(Mor f) const { return d_->is_id[f] != 0; }

Mor FiniteGroupoid::compose(Mor f, Mor g) const {
  const Mor h = d_->comp[static_cast<std::size_t>(f) * d_->arrows.size() + g];
  if (h < 0)
    fail(ErrorKind::invalid_input, "composing non-composable morphisms " + std::to_string(f) +
                                       " after " + std::to_string(g));
  return h;
}

Mor FiniteGroupoid::inverse(Mor f) const { return d_->inv[f]; }

const std::vector<Mor> &FiniteGroupoid::hom(Obj x, Obj y) const {
  return d_->homs[static_cast<std::size_t>(x) * d_->n + y];
}

const std::vector<int> &FiniteGroupoid::composition_table() const { return d_->comp; }

const std::string &FiniteGroupoid::object_name(Obj x) const {
  return d_->names.empty() ? kNoName : d_->names[x];
}

bool FiniteGroupoid::has_object_names() const { return !d_->names.empty(); }

bool FiniteGroupoid::is_discrete() const { return num_morphisms() == num_objects(); }

std::optional<std::string> FiniteGroupoid::validate() const {
  const Data &d = *d_;
  const int m = num_morphisms();
  for (Obj x = 0; x < d.n; ++x) {
    const Mor i = d.ids[x];
    if (d.arrows[i].source != x || d.arrows[i].target != x)
      return "identity of object " + std::to_string(x) + " has wrong endpoints";
  }
  for (Mor f = 0; f < m; ++f) {
    const Arrow a = d.arrows[f];
    if (compose(d.ids[a.target], f) != f || compose(f, d.ids[a.source]) != f)
      return arrow_text(f, a) + " violates the unit law";
    if (d.inv[f] < 0)
      return arrow_text(f, a) + " has no inverse";
    if (compose(f, d.inv[f]) != d.ids[a.target])
      return arrow_text(f, a) + " has only a one-sided inverse";
  }
  for (Mor f = 0; f < m; ++f)
    for (Obj x = 0; x < d.n; ++x)
      for (Mor g : hom(x, source(f))) {
        const Mor h = compose(f, g);
        if (d.arrows[h].source != x || d.arrows[h].target != target(f))
          return "composite of " + std::to_string(f) + " after " + std::to_string(g) +
                 " has wrong endpoints";
      }
  if (m <= kAssociativityCheckLimit) {
    if (auto bad = kernels::omp::find_nonassociative({m, d.comp}))
      return "composition is not associative at (" + std::to_string((*bad)[0]) + ", " +
             std::to_string((*bad)[1]) + ", " + std::to_string((*bad)[2]) + ")";
  }
  return std::nullopt;
}

bool FiniteGroupoid::operator==(const FiniteGroupoid &other) const {
  if (d_ == other.d_)
    return true;
  return d_->n == other.d_->n && d_->arrows == other.d_->arrows && d_->ids == other.d_->ids &&
         d_->comp == other.d_->comp;
}

// ---------------------------------------------------------------------------
// functors and transformations

GroupoidFunctor::GroupoidFunctor(FiniteGroupoid source, FiniteGroupoid target,
                                 std::vector<Obj> obj_map, std::vector<Mor> mor_map)
    : source_(std::move(source)), target_(std::move(target)), obj_map_(std::move(obj_map)),
      mor_map_(std::move(mor_map)) {
  require(static_cast<int>(obj_map_.size()) == source_.num_objects() &&
              static_cast<int>(mor_map_.size()) == source_.num_morphisms(),
          ErrorKind::invalid_input, "functor maps have wrong length");
}

std::optional<std::string> GroupoidFunctor::validate() const {
  for (Obj y : obj_map_)
    if (y < 0 || y >= target_.num_objects())
      return std::string("object image out of range");
  for (Mor f : mor_map_)
    if (f < 0 || f >= target_.num_morphisms())
      return std::string("morphism image out of range");
  for (Mor f = 0; f < source_.num_morphisms(); ++f) {
    const Mor g = mor_map_[f];
    if (target_.source(g) != obj_map_[source_.source(f)] ||
        target_.target(g) != obj_map_[source_.target(f)])
      return "image of morphism " + std::to_string(f) + " has wrong endpoints";
  }
  for (Obj x = 0; x < source_.num_objects(); ++x)
    if (mor_map_[source_.identity(x)] != target_.identity(obj_map_[x]))
      return "identity of object " + std::to_string(x) + " not preserved";
  const int n = source_.num_objects();
  for (Mor f = 0; f < source_.num_morphisms(); ++f)
    for (Obj x = 0; x < n; ++x)
      for (Mor g : source_.hom(x, source_.source(f)))
        if (mor_map_[source_.compose(f, g)] != target_.compose(mor_map_[f], mor_map_[g]))
          return "composition " + std::to_string(f) + " after " + std::to_string(g) +
                 " not preserved";
  return std::nullopt;
}

bool GroupoidFunctor::is_isomorphism() const {
  if (source_.num_objects() != target_.num_objects() ||
      source_.num_morphisms() != target_.num_morphisms())
    return false;
  std::vector<char> hit(target_.num_morphisms(), 0);
  for (Mor f : mor_map_) {
    if (hit[f])
      return false;
    hit[f] = 1;
  }
  std::vector<char> hit_obj(target_.num_objects(), 0);
  for (Obj y : obj_map_) {
    if (hit_obj[y])
      return false;
    hit_obj[y] = 1;
  }
  return true;
}

GroupoidFunctor identity_functor(const FiniteGroupoid &x) {
  std::vector<Obj> objs(x.num_objects());
  std::iota(objs.begin(), objs.end(), 0);
  std::vector<Mor> mors(x.num_morphisms());
  std::iota(mors.begin(), mors.end(), 0);
  return GroupoidFunctor(x, x, std::move(objs), std::move(mors));
}

GroupoidFunctor compose(const GroupoidFunctor &outer, const GroupoidFunctor &inner) {
  std::vector<Obj> objs(inner.source().num_objects());
  for (Obj x = 0; x < static_cast<Obj>(objs.size()); ++x)
    objs[x] = outer.on_object(inner.on_object(x));
  std::vector<Mor> mors(inner.source().num_morphisms());
  for (Mor f = 0; f < static_cast<Mor>(mors.size()); ++f)
    mors[f] = outer.on_morphism(inner.on_morphism(f));
  return GroupoidFunctor(inner.source(), outer.target(), std::move(objs), std::move(mors));
}

GroupoidFunctor constant_functor(const FiniteGroupoid &source, const FiniteGroupoid &target,
                                 Obj y) {
  return GroupoidFunctor(source, target, std::vector<Obj>(source.num_objects(), y),
                         std::vector<Mor>(source.num_morphisms(), target.identity(y)));
}

NatTransformation::NatTransformation(GroupoidFunctor from, GroupoidFunctor to,
                                     std::vector<Mor> components)
    : from_(std::move(from)), to_(std::move(to)), components_(std::move(components)) {
  require(static_cast<int>(components_.size()) == from_.source().num_objects(),
          ErrorKind::invalid_input, "one component per source object required");
}

std::optional<std::string> NatTransformation::validate() const {
  const FiniteGroupoid &c = from_.source();
  const FiniteGroupoid &d = from_.target();
  for (Obj x = 0; x < c.num_objects(); ++x) {
    const Mor eta = components_[x];
    if (eta < 0 || eta >= d.num_morphisms() || d.source(eta) != from_.on_object(x) ||
        d.target(eta) != to_.on_object(x))
      return "component at object " + std::to_string(x) + " has wrong endpoints";
  }
  for (Mor f = 0; f < c.num_morphisms(); ++f) {
    const Obj x = c.source(f), y = c.target(f);
    if (d.compose(to_.on_morphism(f), components_[x]) !=
        d.compose(components_[y], from_.on_morphism(f)))
      return "naturality fails at morphism " + std::to_string(f);
  }
  return std::nullopt;
}

std::vector<ComponentTree> spanning_trees(const FiniteGroupoid &x) {
  std::vector<ComponentTree> trees;
  for (const auto &comp : connected_components(x)) {
    ComponentTree t{comp.front(), comp, {}};
    for (Obj y : comp)
      t.from_root.push_back(y == t.root ? x.identity(y) : x.hom(t.root, y).front());
    trees.push_back(std::move(t));
  }
  return trees;
}

std::optional<NatTransformation> find_natural_isomorphism(const GroupoidFunctor &f,
                                                          const GroupoidFunctor &g) {
  const FiniteGroupoid &c = f.source();
  const FiniteGroupoid &d = f.target();
  std::vector<Mor> components(c.num_objects(), -1);
  for (const ComponentTree &t : spanning_trees(c)) {
    bool found = false;
    for (Mor eta_root : d.hom(f.on_object(t.root), g.on_object(t.root))) {
      for (std::size_t i = 0; i < t.objects.size(); ++i) {
        const Mor tree = t.from_root[i];
        // eta_y = G(t_y) . eta_r . F(t_y)^{-1}
        components[t.objects[i]] =
            d.compose(g.on_morphism(tree),
                      d.compose(eta_root, d.inverse(f.on_morphism(tree))));
      }
      bool natural = true;
      for (std::size_t i = 0; i < t.objects.size() && natural; ++i)
        for (Obj y : t.objects) {
          for (Mor h : c.hom(t.objects[i], y))
            if (d.compose(g.on_morphism(h), components[t.objects[i]]) !=
                d.compose(components[y], f.on_morphism(h))) {
              natural = false;
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
  return NatTransformation(f, g, std::move(components));
}

// ---------------------------------------------------------------------------
// constructions

FiniteGroupoid delooping(const FiniteGroup &g) {
  std::vector<Arrow> arrows(g.order(), Arrow{0, 0});
  return FiniteGroupoid::trusted(
      1, std::move(arrows), {0}, [&](Mor a, Mor b) { return g.mul(a, b); },
      {g.name().empty() ? std::string("pt") : "B" + g.name()});
}

GroupoidFunctor delooping(const GroupHom &h) {
  return GroupoidFunctor(delooping(h.source()), delooping(h.target()), {0}, h.map());
}

FiniteGroupoid discrete_groupoid(int objects) {
  std::vector<Arrow> arrows;
  std::vector<Mor> ids;
  for (Obj x = 0; x < objects; ++x) {
    arrows.push_back({x, x});
    ids.push_back(x);
  }
  return FiniteGroupoid::trusted(objects, std::move(arrows), std::move(ids),
                                 [](Mor f, Mor) { return f; });
}

FiniteGroupoid chaotic_groupoid(int objects) {
  // morphism x -> y has index x * objects + y
  std::vector<Arrow> arrows;
  std::vector<Mor> ids;
  for (Obj x = 0; x < objects; ++x)
    for (Obj y = 0; y < objects; ++y)
      arrows.push_back({x, y});
  for (Obj x = 0; x < objects; ++x)
    ids.push_back(x * objects + x);
  return FiniteGroupoid::trusted(objects, std::move(arrows), std::move(ids),
                                 [objects](Mor f, Mor g) {
                                   return (g / objects) * objects + (f % objects);
                                 });
}

std::vector<int> component_index(const FiniteGroupoid &x) {
  const int n = x.num_objects();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int a) {
    while (parent[a] != a)
      a = parent[a] = parent[parent[a]];
    return a;
  };
  for (Mor f = 0; f < x.num_morphisms(); ++f) {
    const int a = find(x.source(f)), b = find(x.target(f));
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> label(n, -1), root_label(n, -1);
  int next = 0;
  for (Obj o = 0; o < n; ++o) {
    const int r = find(o);
    if (root_label[r] < 0)
      root_label[r] = next++;
    label[o] = root_label[r];
  }
  return label;
}

std::vector<std::vector<Obj>> connected_components(const FiniteGroupoid &x) {
  const auto label = component_index(x);
  int count = 0;
  for (int l : label)
    count = std::max(count, l + 1);
  std::vector<std::vector<Obj>> comps(count);
  for (Obj o = 0; o < x.num_objects(); ++o)
    comps[label[o]].push_back(o);
  return comps;
}

AutomorphismGroup automorphism_group(const FiniteGroupoid &x, Obj object) {
  std::vector<Mor> mors{x.identity(object)};
  for (Mor f : x.hom(object, object))
    if (f != x.identity(object))
      mors.push_back(f);
  const int k = static_cast<int>(mors.size());
  std::vector<int> local(x.num_morphisms(), -1);
  for (int i = 0; i < k; ++i)
    local[mors[i]] = i;
  std::vector<Elem> table(static_cast<std::size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[i * k + j] = local[x.compose(mors[i], mors[j])];
  return AutomorphismGroup{trusted_group(k, std::move(table), {}), std::move(mors)};
}

EquivalenceReport check_equivalence(const GroupoidFunctor &f) {
  EquivalenceReport report;
  const FiniteGroupoid &c = f.source();
  const FiniteGroupoid &d = f.target();
  const auto target_label = component_index(d);
  int target_components = 0;
  for (int l : target_label)
    target_components = std::max(target_components, l + 1);
  report.component_witness.assign(target_components, -1);
  for (Obj x = c.num_objects() - 1; x >= 0; --x)
    report.component_witness[target_label[f.on_object(x)]] = x;
  for (Obj w : report.component_witness)
    if (w < 0)
      report.essentially_surjective = false;

  std::vector<int> seen(d.num_morphisms(), -1);
  int stamp = 0;
  for (Obj x = 0; x < c.num_objects() && report.fully_faithful; ++x)
    for (Obj y = 0; y < c.num_objects(); ++y) {
      ++stamp;
      const auto &source_hom = c.hom(x, y);
      const auto &target_hom = d.hom(f.on_object(x), f.on_object(y));
      bool bijective = source_hom.size() == target_hom.size();
      for (Mor h : source_hom) {
        if (!bijective)
          break;
        const Mor image = f.on_morphism(h);
        if (seen[image] == stamp)
          bijective = false;
        seen[image] = stamp;
      }
      if (!bijective) {
        report.fully_faithful = false;
        report.failing_pair = std::make_pair(x, y);
        break;
      }
    }
  return report;
}

QuasiInverse quasi_inverse(const GroupoidFunctor &f) {
  require(check_equivalence(f).is_equivalence(), ErrorKind::invalid_input,
          "functor is not an equivalence");
  const FiniteGroupoid &c = f.source();
  const FiniteGroupoid &d = f.target();
  std::vector<Obj> chosen(d.num_objects(), -1);
  std::vector<Mor> phi(d.num_objects(), -1); // phi_d : F(chosen_d) -> d
  for (Obj y = 0; y < d.num_objects(); ++y)
    for (Obj x = 0; x < c.num_objects() && chosen[y] < 0; ++x) {
      const auto &h = d.hom(f.on_object(x), y);
      if (!h.empty()) {
        chosen[y] = x;
        phi[y] = f.on_object(x) == y ? d.identity(y) : h.front();
      }
    }
  // preimage lookup on hom-sets
  auto lift = [&](Obj x, Obj y, Mor target_mor) {
    for (Mor h : c.hom(x, y))
      if (f.on_morphism(h) == target_mor)
        return h;
    fail(ErrorKind::invalid_input, "functor is not full");
  };
  std::vector<Mor> mors(d.num_morphisms());
  for (Mor h = 0; h < d.num_morphisms(); ++h) {
    const Obj a = d.source(h), b = d.target(h);
    mors[h] = lift(chosen[a], chosen[b], d.compose(d.inverse(phi[b]), d.compose(h, phi[a])));
  }
  GroupoidFunctor g(d, c, chosen, std::move(mors));
  std::vector<Mor> unit(c.num_objects());
  for (Obj x = 0; x < c.num_objects(); ++x)
    unit[x] = lift(x, chosen[f.on_object(x)], d.inverse(phi[f.on_object(x)]));
  GroupoidFunctor gf = compose(g, f);
  GroupoidFunctor fg = compose(f, g);
  return QuasiInverse{g, NatTransformation(identity_functor(c), gf, std::move(unit)),
                      NatTransformation(fg, identity_functor(d), phi)};
}

Skeleton skeleton(const FiniteGroupoid &x) {
  const auto comps = connected_components(x);
  std::vector<Arrow> arrows;
  std::vector<Mor> ids;
  std::vector<Mor> inclusion_mors;
  std::vector<Obj> inclusion_objs;
  std::vector<int> local(x.num_morphisms(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const Obj rep = comps[i].front();
    inclusion_objs.push_back(rep);
    names.push_back(x.object_name(rep));
    for (Mor f : automorphism_group(x, rep).morphisms) {
      if (f == x.identity(rep))
        ids.push_back(static_cast<Mor>(arrows.size()));
      local[f] = static_cast<int>(arrows.size());
      arrows.push_back({static_cast<Obj>(i), static_cast<Obj>(i)});
      inclusion_mors.push_back(f);
    }
  }
  FiniteGroupoid skel = FiniteGroupoid::trusted(
      static_cast<int>(comps.size()), std::move(arrows), std::move(ids),
      [&](Mor a, Mor b) { return local[x.compose(inclusion_mors[a], inclusion_mors[b])]; },
      x.has_object_names() ? names : std::vector<std::string>{});
  return Skeleton{skel, GroupoidFunctor(skel, x, std::move(inclusion_objs),
                                        std::move(inclusion_mors))};
}

Coproduct disjoint_union(const FiniteGroupoid &a, const FiniteGroupoid &b) {
  const int na = a.num_objects(), ma = a.num_morphisms();
  std::vector<Arrow> arrows;
  std::vector<Mor> ids;
  for (Mor f = 0; f < ma; ++f)
    arrows.push_back({a.source(f), a.target(f)});
  for (Mor f = 0; f < b.num_morphisms(); ++f)
    arrows.push_back({b.source(f) + na, b.target(f) + na});
  for (Obj x = 0; x < na; ++x)
    ids.push_back(a.identity(x));
  for (Obj x = 0; x < b.num_objects(); ++x)
    ids.push_back(b.identity(x) + ma);
  std::vector<std::string> names;
  if (a.has_object_names() || b.has_object_names()) {
    for (Obj x = 0; x < na; ++x)
      names.push_back(a.object_name(x));
    for (Obj x = 0; x < b.num_objects(); ++x)
      names.push_back(b.object_name(x));
  }
  FiniteGroupoid u = FiniteGroupoid::trusted(
      na + b.num_objects(), std::move(arrows), std::move(ids),
      [&](Mor f, Mor g) { return f < ma ? a.compose(f, g) : b.compose(f - ma, g - ma) + ma; },
      std::move(names));
  std::vector<Obj> lo(na), ro(b.num_objects());
  std::iota(lo.begin(), lo.end(), 0);
  std::iota(ro.begin(), ro.end(), na);
  std::vector<Mor> lm(ma), rm(b.num_morphisms());
  std::iota(lm.begin(), lm.end(), 0);
  std::iota(rm.begin(), rm.end(), ma);
  return Coproduct{u, GroupoidFunctor(a, u, std::move(lo), std::move(lm)),
                   GroupoidFunctor(b, u, std::move(ro), std::move(rm))};
}

Product product(const FiniteGroupoid &a, const FiniteGroupoid &b) {
  const int nb = b.num_objects(), mb = b.num_morphisms();
  std::vector<Arrow> arrows;
  for (Mor f = 0; f < a.num_morphisms(); ++f)
    for (Mor g = 0; g < mb; ++g)
      arrows.push_back({a.source(f) * nb + b.source(g), a.target(f) * nb + b.target(g)});
  std::vector<Mor> ids;
  for (Obj x = 0; x < a.num_objects(); ++x)
    for (Obj y = 0; y < nb; ++y)
      ids.push_back(a.identity(x) * mb + b.identity(y));
  std::vector<std::string> names;
  if (a.has_object_names() || b.has_object_names())
    for (Obj x = 0; x < a.num_objects(); ++x)
      for (Obj y = 0; y < nb; ++y)
        names.push_back("(" + a.object_name(x) + "," + b.object_name(y) + ")");
  FiniteGroupoid p = FiniteGroupoid::trusted(
      a.num_objects() * nb, std::move(arrows), std::move(ids),
      [&](Mor f, Mor g) {
        return a.compose(f / mb, g / mb) * mb + b.compose(f % mb, g % mb);
      },
      std::move(names));
  std::vector<Obj> lo(p.num_objects()), ro(p.num_objects());
  for (Obj o = 0; o < p.num_objects(); ++o) {
    lo[o] = o / nb;
    ro[o] = o % nb;
  }
  std::vector<Mor> lm(p.num_morphisms()), rm(p.num_morphisms());
  for (Mor f = 0; f < p.num_morphisms(); ++f) {
    lm[f] = f / mb;
    rm[f] = f % mb;
  }
  Product out{p, GroupoidFunctor(p, a, std::move(lo), std::move(lm)),
              GroupoidFunctor(p, b, std::move(ro), std::move(rm))};
  out.right_objects = nb;
  out.right_morphisms = mb;
  return out;
}

StrictFiber strict_fiber(const GroupoidFunctor &p, Obj base_object) {
  const FiniteGroupoid &e = p.source();
  const Mor id = p.target().identity(base_object);
  std::vector<Obj> objs;
  std::vector<int> local_obj(e.num_objects(), -1);
  for (Obj w = 0; w < e.num_objects(); ++w)
    if (p.on_object(w) == base_object) {
      local_obj[w] = static_cast<int>(objs.size());
      objs.push_back(w);
    }
  std::vector<Mor> mors;
  std::vector<int> local_mor(e.num_morphisms(), -1);
  std::vector<Arrow> arrows;
  for (Mor f = 0; f < e.num_morphisms(); ++f)
    if (p.on_morphism(f) == id) {
      local_mor[f] = static_cast<int>(mors.size());
      mors.push_back(f);
      arrows.push_back({local_obj[e.source(f)], local_obj[e.target(f)]});
    }
  std::vector<Mor> ids;
  for (Obj w : objs)
    ids.push_back(local_mor[e.identity(w)]);
  std::vector<std::string> names;
  if (e.has_object_names())
    for (Obj w : objs)
      names.push_back(e.object_name(w));
  FiniteGroupoid fiber = FiniteGroupoid::trusted(
      static_cast<int>(objs.size()), std::move(arrows), std::move(ids),
      [&](Mor f, Mor g) { return local_mor[e.compose(mors[f], mors[g])]; }, std::move(names));
  return StrictFiber{fiber, GroupoidFunctor(fiber, e, std::move(objs), std::move(mors))};
}

std::optional<GroupoidFunctor> find_groupoid_isomorphism(const FiniteGroupoid &a,
                                                         const FiniteGroupoid &b) {
  if (a.num_objects() != b.num_objects() || a.num_morphisms() != b.num_morphisms())
    return std::nullopt;
  const auto ta = spanning_trees(a);
  const auto tb = spanning_trees(b);
  if (ta.size() != tb.size())
    return std::nullopt;
  std::vector<Obj> objs(a.num_objects(), -1);
  std::vector<Mor> mors(a.num_morphisms(), -1);
  std::vector<char> used(tb.size(), 0);
  for (const ComponentTree &ca : ta) {
    const AutomorphismGroup aut_a = automorphism_group(a, ca.root);
    bool matched = false;
    for (std::size_t j = 0; j < tb.size() && !matched; ++j) {
      const ComponentTree &cb = tb[j];
      if (used[j] || cb.objects.size() != ca.objects.size())
        continue;
      const AutomorphismGroup aut_b = automorphism_group(b, cb.root);
      auto iso = find_isomorphism(aut_a.group, aut_b.group);
      if (!iso)
        continue;
      used[j] = 1;
      matched = true;
      std::vector<int> aut_index(a.num_morphisms(), -1);
      for (std::size_t k = 0; k < aut_a.morphisms.size(); ++k)
        aut_index[aut_a.morphisms[k]] = static_cast<int>(k);
      for (std::size_t i = 0; i < ca.objects.size(); ++i)
        objs[ca.objects[i]] = cb.objects[i];
      // f : x -> y maps through the root: t_y^{-1} f t_x is an automorphism.
      for (std::size_t i = 0; i < ca.objects.size(); ++i)
        for (std::size_t k = 0; k < ca.objects.size(); ++k)
          for (Mor f : a.hom(ca.objects[i], ca.objects[k])) {
            const Mor loop = a.compose(a.inverse(ca.from_root[k]), a.compose(f, ca.from_root[i]));
            const Mor image_loop = aut_b.morphisms[(*iso)(aut_index[loop])];
            mors[f] = b.compose(cb.from_root[k], b.compose(image_loop, b.inverse(cb.from_root[i])));
          }
    }
    if (!matched)
      return std::nullopt;
  }
  GroupoidFunctor f(a, b, std::move(objs), std::move(mors));
  if (!f.is_valid() || !f.is_isomorphism())
    return std::nullopt;
  return f;
}

// ---------------------------------------------------------------------------
// functor search

namespace {

struct ComponentPlan {
  ComponentTree tree;
  AutomorphismGroup aut;
  std::vector<Mor> generators; // morphisms of aut.group.generators()
};

std::vector<ComponentPlan> plan(const FiniteGroupoid &source) {
  std::vector<ComponentPlan> plans;
  for (ComponentTree &t : spanning_trees(source)) {
    AutomorphismGroup aut = automorphism_group(source, t.root);
    std::vector<Mor> gens;
    for (Elem e : aut.group.generators())
      gens.push_back(aut.morphisms[e]);
    plans.push_back(ComponentPlan{std::move(t), std::move(aut), std::move(gens)});
  }
  return plans;
}

bool object_ok(const FunctorSearch &s, Obj x, Obj y) {
  return !s.object_allowed || s.object_allowed(x, y);
}

bool morphism_ok(const FunctorSearch &s, Mor f, Mor g) {
  return !s.morphism_allowed || s.morphism_allowed(f, g);
}

std::int64_t saturating_mul(std::int64_t a, std::int64_t b) {
  if (a == 0 || b == 0)
    return 0;
  if (a > std::numeric_limits<std::int64_t>::max() / b)
    return std::numeric_limits<std::int64_t>::max();
  return a * b;
}

std::int64_t saturating_add(std::int64_t a, std::int64_t b) {
  return a > std::numeric_limits<std::int64_t>::max() - b
             ? std::numeric_limits<std::int64_t>::max()
             : a + b;
}

// Choices for the tree arrow root -> y once the root image z is fixed.
std::vector<Mor> tree_choices(const FiniteGroupoid &target, const FunctorSearch &search, Obj y,
                              Mor tree_arrow, Obj z) {
  std::vector<Mor> out;
  for (Obj w = 0; w < target.num_objects(); ++w) {
    if (!object_ok(search, y, w))
      continue;
    for (Mor h : target.hom(z, w))
      if (morphism_ok(search, tree_arrow, h))
        out.push_back(h);
  }
  return out;
}

std::vector<Mor> loop_choices(const FiniteGroupoid &target, const FunctorSearch &search,
                              Mor generator, Obj z) {
  std::vector<Mor> out;
  for (Mor h : target.hom(z, z))
    if (morphism_ok(search, generator, h))
      out.push_back(h);
  return out;
}

// Per component, the partial (obj, mor) assignments on that component.
using Partial = std::pair<std::vector<Obj>, std::vector<Mor>>;

std::vector<Partial> component_functors(const FiniteGroupoid &source,
                                        const FiniteGroupoid &target,
                                        const FunctorSearch &search, const ComponentPlan &p) {
  const ComponentTree &t = p.tree;
  std::vector<Partial> out;
  std::vector<Mor> component_morphisms;
  for (Obj y : t.objects)
    for (Obj y2 : t.objects)
      for (Mor f : source.hom(y, y2))
        component_morphisms.push_back(f);
  std::vector<int> position(source.num_objects(), -1);
  for (std::size_t i = 0; i < t.objects.size(); ++i)
    position[t.objects[i]] = static_cast<int>(i);

  for (Obj z = 0; z < target.num_objects(); ++z) {
    if (!object_ok(search, t.root, z))
      continue;
    // slots: non-root tree arrows, then automorphism generators
    std::vector<std::vector<Mor>> choices;
    for (std::size_t i = 0; i < t.objects.size(); ++i)
      if (t.objects[i] != t.root)
        choices.push_back(tree_choices(target, search, t.objects[i], t.from_root[i], z));
    for (Mor g : p.generators)
      choices.push_back(loop_choices(target, search, g, z));
    bool empty = false;
    for (const auto &c : choices)
      empty = empty || c.empty();
    if (empty)
      continue;
    const AutomorphismGroup target_aut = automorphism_group(target, z);
    std::vector<int> target_local(target.num_morphisms(), -1);
    for (std::size_t i = 0; i < target_aut.morphisms.size(); ++i)
      target_local[target_aut.morphisms[i]] = static_cast<int>(i);

    std::vector<std::size_t> digit(choices.size(), 0);
    while (true) {
      std::vector<Mor> tree_image(t.objects.size());
      std::size_t slot = 0;
      for (std::size_t i = 0; i < t.objects.size(); ++i) {
        if (t.objects[i] == t.root) {
          tree_image[i] = target.identity(z);
        } else {
          tree_image[i] = choices[slot][digit[slot]];
          ++slot;
        }
      }
      std::vector<Elem> gen_images;
      for (std::size_t k = 0; k < p.generators.size(); ++k, ++slot)
        gen_images.push_back(target_local[choices[slot][digit[slot]]]);
      if (auto hom = extend_homomorphism(p.aut.group, target_aut.group, gen_images)) {
        std::vector<int> aut_local(source.num_morphisms(), -1);
        for (std::size_t i = 0; i < p.aut.morphisms.size(); ++i)
          aut_local[p.aut.morphisms[i]] = static_cast<int>(i);
        Partial part;
        bool ok = true;
        for (std::size_t i = 0; i < t.objects.size() && ok; ++i) {
          part.first.push_back(target.target(tree_image[i]));
          ok = object_ok(search, t.objects[i], part.first.back());
        }
        for (Mor f : component_morphisms) {
          if (!ok)
            break;
          const int i = position[source.source(f)], k = position[source.target(f)];
          const Mor loop =
              source.compose(source.inverse(t.from_root[k]), source.compose(f, t.from_root[i]));
          const Mor image_loop = target_aut.morphisms[(*hom)(aut_local[loop])];
          const Mor image = target.compose(
              tree_image[k], target.compose(image_loop, target.inverse(tree_image[i])));
          ok = morphism_ok(search, f, image);
          part.second.push_back(image);
        }
        if (ok)
          out.push_back(std::move(part));
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

} // namespace

std::int64_t functor_search_size(const FiniteGroupoid &source, const FiniteGroupoid &target,
                                 const FunctorSearch &search) {
  std::int64_t total = 1;
  for (const ComponentPlan &p : plan(source)) {
    std::int64_t component = 0;
    for (Obj z = 0; z < target.num_objects(); ++z) {
      if (!object_ok(search, p.tree.root, z))
        continue;
      std::int64_t here = 1;
      for (std::size_t i = 0; i < p.tree.objects.size(); ++i)
        if (p.tree.objects[i] != p.tree.root)
          here = saturating_mul(here, static_cast<std::int64_t>(
                                          tree_choices(target, search, p.tree.objects[i],
                                                       p.tree.from_root[i], z)
                                              .size()));
      for (Mor g : p.generators)
        here = saturating_mul(here,
                              static_cast<std::int64_t>(loop_choices(target, search, g, z).size()));
      component = saturating_add(component, here);
    }
    total = saturating_mul(total, component);
  }
  return total;
}

std::vector<GroupoidFunctor> all_functors(const FiniteGroupoid &source,
                                          const FiniteGroupoid &target,
                                          const FunctorSearch &search,
                                          std::int64_t max_candidates) {
  const std::int64_t size = functor_search_size(source, target, search);
  require(size <= max_candidates, ErrorKind::bound_exceeded,
          "functor search space " + std::to_string(size) + " exceeds bound " +
              std::to_string(max_candidates));
  const auto plans = plan(source);
  std::vector<std::vector<Partial>> parts;
  for (const ComponentPlan &p : plans) {
    parts.push_back(component_functors(source, target, search, p));
    if (parts.back().empty())
      return {};
  }
  std::vector<std::pair<std::vector<Obj>, std::vector<Mor>>> maps;
  std::vector<std::size_t> digit(parts.size(), 0);
  while (true) {
    std::vector<Obj> objs(source.num_objects());
    std::vector<Mor> mors(source.num_morphisms());
    for (std::size_t c = 0; c < parts.size(); ++c) {
      const ComponentTree &t = plans[c].tree;
      const Partial &part = parts[c][digit[c]];
      for (std::size_t i = 0; i < t.objects.size(); ++i)
        objs[t.objects[i]] = part.first[i];
      std::size_t k = 0;
      for (Obj y : t.objects)
        for (Obj y2 : t.objects)
          for (Mor f : source.hom(y, y2))
            mors[f] = part.second[k++];
    }
    maps.emplace_back(std::move(objs), std::move(mors));
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
  std::sort(maps.begin(), maps.end());
  std::vector<GroupoidFunctor> out;
  out.reserve(maps.size());
  for (auto &[objs, mors] : maps)
    out.emplace_back(source, target, std::move(objs), std::move(mors));
  return out;
}

} // namespace gcep
