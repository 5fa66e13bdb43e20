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

#include "gcep/cli/report.hpp"

#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

#include "gcep/action.hpp"
#include "gcep/anomaly.hpp"
#include "gcep/cohomology.hpp"
#include "gcep/error.hpp"
#include "gcep/fibration.hpp"
#include "gcep/functor_rep.hpp"

namespace gcep::cli {

namespace {

using Args = std::vector<std::string>;

Tree groupoid_summary(const FiniteGroupoid &y) {
  Tree t;
  t["objects"] = y.num_objects();
  t["morphisms"] = y.num_morphisms();
  t["components"] = connected_components(y).size();
  return t;
}

CoeffModule coefficients(const std::string &s) {
  if (s == "Z")
    return CoeffModule::integers();
  if (s == "Q/Z")
    return CoeffModule::rational_mod_integers();
  std::vector<std::int64_t> factors;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, 'x'))
    factors.push_back(std::stoll(part.substr(part.find('/') + 1)));
  return CoeffModule::finite(factors);
}

const CocycleEntry &rational_cocycle(const Workspace &ws, const std::string &name) {
  const CocycleEntry &e = ws.cocycles.at(name);
  require(e.module.kind() == CoeffModule::Kind::rational_mod_integers && e.cochain.degree == 2,
          ErrorKind::invalid_input, "cocycle " + name + " must be a Q/Z 2-cocycle");
  return e;
}

Anomaly anomaly_from(const Workspace &ws, const FiniteGroupoid &y, const Args &args,
                     std::size_t from) {
  if (args.size() <= from)
    return trivial_anomaly(y);
  if (args[from].starts_with("class=")) {
    const auto classes = classify_anomalies(y).classes;
    const std::size_t k = std::stoul(args[from].substr(6));
    require(k < classes.size(), ErrorKind::invalid_input,
            "only " + std::to_string(classes.size()) + " anomaly classes");
    return classes[k];
  }
  const auto trees = spanning_trees(y);
  require(args.size() - from == trees.size(), ErrorKind::invalid_input,
          "need one cocycle per component (" + std::to_string(trees.size()) + ")");
  Anomaly a{y, {}};
  for (std::size_t c = 0; c < trees.size(); ++c) {
    const CocycleEntry &e = rational_cocycle(ws, args[from + c]);
    require(e.group == automorphism_group(y, trees[c].root).group, ErrorKind::invalid_input,
            "cocycle " + args[from + c] + " is not on the automorphism group of component " +
                std::to_string(c));
    a.class_at.push_back(e.cochain);
  }
  return a;
}

Tree quotient_task(const Workspace &ws, const Args &args) {
  const GroupAction &a = ws.actions.at(args[0]);
  const QuotientGroupoid q = homotopy_quotient(a);
  Tree t = groupoid_summary(q.total);
  std::vector<int> aut_orders;
  for (const auto &tree : spanning_trees(q.total))
    aut_orders.push_back(automorphism_group(q.total, tree.root).group.order());
  t["automorphism_orders"] = aut_orders;
  t["orbits"] = orbits(a);
  t["free"] = is_free(a);
  bool verdict = true;
  if (a.carrier().is_discrete()) {
    bool match = true;
    for (Obj x = 0; x < a.carrier().num_objects(); ++x) {
      std::set<Elem> from_aut, from_stab;
      for (Mor m : automorphism_group(q.total, x).morphisms)
        from_aut.insert(m / q.carrier_morphisms);
      const Subgroup stab = stabilizer(a, x);
      for (Elem g : stab.inclusion.map())
        from_stab.insert(g);
      match = match && from_aut == from_stab;
    }
    t["stabilizers_match"] = match;
    verdict = match;
    if (is_free(a)) {
      bool collapsed = q.total.num_morphisms() == q.total.num_objects() * a.group().order();
      for (int o : aut_orders)
        collapsed = collapsed && o == 1;
      t["free_collapses_to_orbits"] = collapsed;
      verdict = verdict && collapsed;
    }
  }
  t["verdict"] = verdict;
  return t;
}

Tree fiber_check_task(const Workspace &ws, const Args &args) {
  const bool ok = fiber_check(homotopy_quotient(ws.actions.at(args[0])));
  return Tree{{"fiber_check", ok}, {"verdict", ok}};
}

Tree fixed_points_task(const Workspace &ws, const Args &args, const RunOptions &o) {
  const GroupAction &a = ws.actions.at(args[0]);
  const HomotopyFixedPoints h = homotopy_fixed_points(a, o.max_enum);
  Tree t = groupoid_summary(h.groupoid);
  bool verdict = true;
  if (a.carrier().is_discrete()) {
    int fixed = 0;
    for (Obj x = 0; x < a.carrier().num_objects(); ++x) {
      bool all = true;
      for (Elem g = 0; g < a.group().order(); ++g)
        all = all && a.act_object(g, x) == x;
      fixed += all;
    }
    t["strict_fixed_points"] = fixed;
    verdict = h.groupoid.num_objects() == fixed && h.groupoid.is_discrete();
  }
  t["verdict"] = verdict;
  return t;
}

Tree straighten_task(const Workspace &ws, const Args &args) {
  const GroupAction &a = ws.actions.at(args[0]);
  const QuotientGroupoid q = homotopy_quotient(a);
  const Fibration p = quotient_fibration(a, q);
  const StraightenedFunctor f = straighten(p);
  Tree t;
  std::vector<Tree> fibers;
  for (Obj c = 0; c < f.base().num_objects(); ++c)
    fibers.push_back(groupoid_summary(f.fiber(c)));
  t["fibers"] = fibers;
  const auto back = unstraighten_straighten(p);
  const auto round = straighten_unstraighten(f);
  const bool iso = !validate_iso(f, round.round_trip, round.iso).has_value();
  t["unstraighten_straighten_equivalence"] = back.witness.ok();
  t["straighten_unstraighten_iso"] = iso;
  t["verdict"] = back.witness.ok() && iso;
  return t;
}

Tree unstraighten_task(const Workspace &ws, const Args &args) {
  const StraightenedFunctor f = action_functor(ws.actions.at(args[0]));
  const Fibration p = unstraighten(f);
  Tree t;
  t["total"] = groupoid_summary(p.total());
  const bool fib = is_fibration(p.proj()).ok;
  const auto round = straighten_unstraighten(f);
  const bool iso = !validate_iso(f, round.round_trip, round.iso).has_value();
  const bool eq = unstraighten_straighten(p).witness.ok();
  t["is_fibration"] = fib;
  t["straighten_unstraighten_iso"] = iso;
  t["unstraighten_straighten_equivalence"] = eq;
  t["verdict"] = fib && iso && eq;
  return t;
}

Tree sections_task(const Workspace &ws, const Args &args, const RunOptions &o) {
  Tree t;
  if (args.size() == 1) {
    const GroupAction &a = ws.actions.at(args[0]);
    const SectionReport r = sections(quotient_fibration(a, homotopy_quotient(a)), o.max_enum);
    t["sections"] = r.sections.size();
    t["pointed_transformations"] = r.transformations.size();
    t["bijective"] = r.bijective;
    t["verdict"] = r.bijective;
  } else {
    const TrivialSectionReport r = trivial_bundle_sections(ws.groupoids.at(args[0]),
                                                           ws.groupoids.at(args[1]), o.max_enum);
    t["sections"] = r.sections.size();
    t["functors"] = r.functors.size();
    t["bijective"] = r.bijective;
    t["verdict"] = r.bijective;
  }
  return t;
}

Tree functors_task(const Workspace &ws, const Args &args, const RunOptions &o) {
  const FunctorCategory c =
      enumerate_functors(ws.groupoids.at(args[0]), ws.groupoids.at(args[1]), o.max_enum);
  std::vector<int> sizes;
  for (const auto &cls : c.classes)
    sizes.push_back(static_cast<int>(cls.size()));
  return Tree{{"functors", c.functors.size()}, {"classes", c.num_classes()}, {"class_sizes", sizes}};
}

Tree irreps_task(const Workspace &ws, const Args &args) {
  const IrrepCount c = irreducible_reps_count(ws.groupoids.at(args[0]));
  return Tree{{"total", c.total}, {"per_component", c.per_component}};
}

Tree degrees_task(const Workspace &ws, const Args &args, const RunOptions &o) {
  const FiniteGroup &g = ws.groups.at(args[0]);
  const auto d = irreducible_degrees(g, o.seed);
  long squares = 0;
  for (int x : d)
    squares += static_cast<long>(x) * x;
  return Tree{{"order", g.order()},
              {"degrees", d},
              {"sum_of_squares", squares},
              {"verdict", squares == g.order()}};
}

Tree cep_task(const Workspace &ws, const Args &args, const RunOptions &o) {
  const CepReport r = cep_verify(ws.actions.at(args[0]), default_cep_targets(), o.max_enum);
  Tree t;
  t["per_orbit"] = r.per_orbit;
  t["equivariant_irreps"] = r.equivariant_irreps;
  t["quotient_irreps"] = r.quotient_irreps;
  t["counts_agree"] = r.counts_agree;
  std::vector<Tree> targets;
  for (const auto &c : r.targets) {
    Tree x{{"target", c.target},
           {"over_base_functors", c.over_base_functors},
           {"over_base_classes", c.over_base_classes},
           {"direct_functors", c.direct_functors},
           {"direct_classes", c.direct_classes},
           {"equivalence", c.equivalence}};
    if (!c.problem.empty())
      x["problem"] = c.problem;
    targets.push_back(std::move(x));
  }
  t["targets"] = targets;
  if (r.bridge)
    t["bridge"] = *r.bridge;
  t["verdict"] = r.verdict;
  return t;
}

Tree eg_report(const std::string &target, const EgFamiliesReport &r) {
  Tree t{{"target", target},
         {"fixed_points", r.fixed_points},
         {"fixed_point_classes", r.fixed_point_classes},
         {"sections", r.sections},
         {"section_classes", r.section_classes}};
  if (r.internal_classes)
    t["internal_classes"] = *r.internal_classes;
  t["bijection"] = r.bijection;
  t["ok"] = r.ok();
  return t;
}

Tree eg_task(const Workspace &ws, const Args &args, const RunOptions &o) {
  std::vector<Tree> checks;
  bool verdict = true;
  if (ws.groups.count(args[0])) {
    const FiniteGroup &g = ws.groups.at(args[0]);
    for (const auto &target : default_cep_targets()) {
      const auto r = eg_families_verify(g, target.groupoid, o.max_enum);
      verdict = verdict && r.ok();
      checks.push_back(eg_report(target.name, r));
    }
  } else {
    const auto r = eg_families_verify(ws.actions.at(args[0]), o.max_enum);
    verdict = r.ok();
    checks.push_back(eg_report(args[0], r));
  }
  return Tree{{"checks", checks}, {"verdict", verdict}};
}

Tree cohomology_tree(const CohomologyGroup &h) {
  return Tree{{"degree", h.degree},
              {"invariants", h.invariants},
              {"order", h.order()},
              {"description", h.describe()}};
}

Tree cohomology_task(const Workspace &ws, const Args &args) {
  const CoeffModule a = coefficients(args[2]);
  Tree t = cohomology_tree(cohomology_group(ws.groups.at(args[0]), a, std::stoi(args[1])));
  t["coefficients"] = a.describe();
  return t;
}

Tree schur_task(const Workspace &ws, const Args &args) {
  return cohomology_tree(schur_multiplier(ws.groups.at(args[0])));
}

Tree extension_task(const Workspace &ws, const Args &args) {
  const CocycleEntry &e = ws.cocycles.at(args[0]);
  require(e.module.kind() == CoeffModule::Kind::finite && e.cochain.degree == 2,
          ErrorKind::invalid_input, "extension needs a 2-cocycle with finite coefficients");
  const Extension x = extension_from_cocycle(e.group, e.module, e.cochain);
  Tree t{{"order", x.group.order()},
         {"abelian", x.group.is_abelian()},
         {"abelianization", abelianization_invariants(x.group)},
         {"center_order", center(x.group).group.order()},
         {"conjugacy_classes", conjugacy_classes(x.group).size()}};
  t["inclusion_injective"] = x.inclusion.is_injective();
  t["projection_homomorphism"] = x.projection.is_homomorphism();
  t["verdict"] = x.inclusion.is_injective() && x.inclusion.is_homomorphism() &&
                 x.projection.is_homomorphism();
  return t;
}

Tree classify_task(const Workspace &ws, const Args &args) {
  const FiniteGroupoid &y = ws.groupoids.at(args[0]);
  const AnomalyClassification c = classify_anomalies(y);
  std::vector<Tree> comps;
  const auto trees = spanning_trees(y);
  for (std::size_t i = 0; i < trees.size(); ++i)
    comps.push_back(Tree{{"root", trees[i].root},
                         {"automorphism_order", automorphism_group(y, trees[i].root).group.order()},
                         {"multiplier", c.per_component[i].invariants},
                         {"description", c.per_component[i].describe()}});
  return Tree{{"per_component", comps}, {"classes", c.classes.size()}};
}

Tree alpha_regular_task(const Workspace &ws, const Args &args) {
  const CocycleEntry &e = rational_cocycle(ws, args[0]);
  const auto r = alpha_regular_classes(e.group, e.cochain);
  return Tree{{"conjugacy_classes", conjugacy_classes(e.group).size()},
              {"regular_classes", r.size()},
              {"classes", r}};
}

Tree proj_irreps_task(const Workspace &ws, const Args &args, const RunOptions &o) {
  const CocycleEntry &e = rational_cocycle(ws, args[0]);
  const auto reps = projective_irreps(e.group, e.cochain, o.seed);
  std::vector<int> degrees;
  long squares = 0;
  for (const auto &r : reps) {
    degrees.push_back(r.degree());
    squares += static_cast<long>(r.degree()) * r.degree();
  }
  const std::size_t regular = alpha_regular_classes(e.group, e.cochain).size();
  return Tree{{"degrees", degrees},
              {"count", reps.size()},
              {"regular_classes", regular},
              {"sum_of_squares", squares},
              {"verdict", reps.size() == regular && squares == e.group.order()}};
}

Tree twisted_task(const Workspace &ws, const Args &args) {
  const FiniteGroupoid &y = ws.groupoids.at(args[0]);
  const TwistedAlgebra t = twisted_algebra(y, anomaly_from(ws, y, args, 1));
  const bool assoc = t.associative(), unital = t.unital();
  return Tree{{"dimension", t.dimension()}, {"level", t.level},
              {"associative", assoc},       {"unital", unital},
              {"semisimple", t.semisimple}, {"simple_blocks", t.simple_blocks},
              {"verdict", assoc && unital && t.semisimple}};
}

Tree sections_vs_task(const Workspace &ws, const Args &args, const RunOptions &o) {
  const FiniteGroupoid &y = ws.groupoids.at(args[0]);
  std::vector<int> dims;
  std::istringstream in(args[1].substr(5));
  std::string d;
  while (std::getline(in, d, ','))
    dims.push_back(std::stoi(d));
  require(static_cast<int>(dims.size()) == y.num_objects(), ErrorKind::invalid_input,
          "dims lists " + std::to_string(dims.size()) + " values for " +
              std::to_string(y.num_objects()) + " objects");
  const auto r = anomalous_theories_as_sections(y, anomaly_from(ws, y, args, 2), dims, o.seed);
  Tree t{{"component_dims", r.component_dims},
         {"projective_degrees", r.projective_degrees},
         {"projective_classes", r.projective_classes},
         {"section_classes", r.section_classes},
         {"matched", r.matched}};
  if (r.functor_reduction)
    t["functor_reduction"] = *r.functor_reduction;
  t["verdict"] = r.ok();
  return t;
}

Tree dispatch(const Workspace &ws, const TaskSpec &task, const RunOptions &o) {
  const std::string &c = task.command;
  const Args &a = task.args;
  if (c == "quotient")
    return quotient_task(ws, a);
  if (c == "fiber-check")
    return fiber_check_task(ws, a);
  if (c == "fixed-points")
    return fixed_points_task(ws, a, o);
  if (c == "straighten")
    return straighten_task(ws, a);
  if (c == "unstraighten")
    return unstraighten_task(ws, a);
  if (c == "sections")
    return sections_task(ws, a, o);
  if (c == "functors")
    return functors_task(ws, a, o);
  if (c == "irreps")
    return irreps_task(ws, a);
  if (c == "degrees")
    return degrees_task(ws, a, o);
  if (c == "cep-verify")
    return cep_task(ws, a, o);
  if (c == "eg-families")
    return eg_task(ws, a, o);
  if (c == "cohomology")
    return cohomology_task(ws, a);
  if (c == "schur")
    return schur_task(ws, a);
  if (c == "extension")
    return extension_task(ws, a);
  if (c == "classify-anomalies")
    return classify_task(ws, a);
  if (c == "alpha-regular")
    return alpha_regular_task(ws, a);
  if (c == "proj-irreps")
    return proj_irreps_task(ws, a, o);
  if (c == "twisted-algebra")
    return twisted_task(ws, a);
  if (c == "sections-vs-projreps")
    return sections_vs_task(ws, a, o);
  fail(ErrorKind::unknown_name, "unknown task '" + c + "'");
}

void render_tree(std::ostringstream &out, const Tree &t, int indent) {
  const std::string pad(indent, ' ');
  for (const auto &[key, value] : t.items()) {
    const bool nested_array =
        value.is_array() && std::any_of(value.begin(), value.end(),
                                        [](const Tree &v) { return v.is_object(); });
    if (value.is_object()) {
      out << pad << key << ":\n";
      render_tree(out, value, indent + 2);
    } else if (nested_array) {
      out << pad << key << ":\n";
      for (const Tree &item : value) {
        out << pad << "  -\n";
        render_tree(out, item, indent + 4);
      }
    } else {
      out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
          << "\n";
    }
  }
}

} // namespace

const char *to_string(TaskStatus s) {
  switch (s) {
  case TaskStatus::ok:
    return "ok";
  case TaskStatus::failed:
    return "failed";
  case TaskStatus::error:
    return "error";
  }
  return "?";
}

TaskReport run_task(const Workspace &ws, const TaskSpec &task, const RunOptions &options) {
  TaskReport r;
  r.task = task;
  const auto start = std::chrono::steady_clock::now();
  try {
    r.result = dispatch(ws, task, options);
    if (r.result.contains("verdict") && !r.result["verdict"].get<bool>())
      r.status = TaskStatus::failed;
  } catch (const Error &e) {
    r.status = TaskStatus::error;
    r.error_kind = to_string(e.kind());
    r.error_message = e.what();
  } catch (const std::exception &e) {
    r.status = TaskStatus::error;
    r.error_kind = "internal";
    r.error_message = e.what();
  }
  r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                 .count();
  return r;
}

std::vector<TaskReport> run(const Workspace &ws, const RunOptions &options) {
  std::vector<TaskReport> out;
  for (const TaskSpec &t : ws.doc.tasks)
    out.push_back(run_task(ws, t, options));
  return out;
}

int Report::exit_code() const {
  if (!diagnostics.empty())
    return 2;
  int code = 0;
  for (const auto &t : tasks) {
    if (t.status == TaskStatus::error)
      return 2;
    if (t.status == TaskStatus::failed)
      code = 1;
  }
  return code;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Report run_document(std::string_view text, std::string input_name, const RunOptions &options,
                    const LoadOptions &load_options) {
  Report r;
  r.input_name = std::move(input_name);
  r.input_digest = fnv1a_hex(text);
  r.options = options;
  ParseResult p = parse(text);
  if (!p.ok()) {
    r.diagnostics = std::move(p.diagnostics);
    return r;
  }
  LoadResult l = load(*p.doc, load_options);
  if (!l.ok()) {
    r.diagnostics = std::move(l.diagnostics);
    return r;
  }
  r.tasks = run(*l.workspace, options);
  return r;
}

Tree to_tree(const Report &r) {
  Tree t;
  t["tool"] = "gcep";
  t["version"] = kToolVersion;
  t["input"] = r.input_name;
  t["input_digest"] = "fnv1a64:" + r.input_digest;
  t["seed"] = r.options.seed;
  if (!r.diagnostics.empty()) {
    std::vector<Tree> ds;
    for (const auto &d : r.diagnostics)
      ds.push_back(Tree{{"line", d.pos.line}, {"column", d.pos.column}, {"message", d.message}});
    t["diagnostics"] = ds;
  }
  std::vector<Tree> tasks;
  int counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < r.tasks.size(); ++i) {
    const TaskReport &x = r.tasks[i];
    ++counts[static_cast<int>(x.status)];
    Tree e{{"index", i + 1},
           {"task", x.task.text()},
           {"line", x.task.pos.line},
           {"status", to_string(x.status)}};
    if (x.status == TaskStatus::error)
      e["error"] = Tree{{"kind", x.error_kind}, {"message", x.error_message}};
    else
      e["result"] = x.result;
    if (r.options.timing)
      e["millis"] = x.millis;
    tasks.push_back(std::move(e));
  }
  t["tasks"] = tasks;
  t["summary"] = Tree{{"tasks", r.tasks.size()},
                      {"ok", counts[0]},
                      {"failed", counts[1]},
                      {"errors", counts[2]},
                      {"exit_code", r.exit_code()}};
  return t;
}

std::string render_json(const Report &r) { return to_tree(r).dump(2) + "\n"; }

std::string render_text(const Report &r, bool color) {
  auto paint = [&](const std::string &s, const char *code) {
    return color ? std::string("\x1b[") + code + "m" + s + "\x1b[0m" : s;
  };
  std::ostringstream out;
  out << "gcep " << kToolVersion << "\n";
  out << "input " << r.input_name << " fnv1a64:" << r.input_digest << "\n";
  out << "seed " << r.options.seed << "\n";
  for (const auto &d : r.diagnostics)
    out << paint("error", "31") << " " << r.input_name << ":" << to_string(d) << "\n";
  int counts[3] = {0, 0, 0};
  for (std::size_t i = 0; i < r.tasks.size(); ++i) {
    const TaskReport &x = r.tasks[i];
    ++counts[static_cast<int>(x.status)];
    const char *code = x.status == TaskStatus::ok ? "32" : x.status == TaskStatus::failed ? "33" : "31";
    out << "\n[" << i + 1 << "] " << x.task.text() << " (line " << x.task.pos.line << "): "
        << paint(to_string(x.status), code);
    if (r.options.timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, " %.3f ms", x.millis);
      out << buf;
    }
    out << "\n";
    if (x.status == TaskStatus::error)
      out << "  " << x.error_kind << ": " << x.error_message << "\n";
    else
      render_tree(out, x.result, 2);
  }
  out << "\nsummary: " << r.tasks.size() << " tasks, " << counts[0] << " ok, " << counts[1]
      << " failed, " << counts[2] << " errors, exit " << r.exit_code() << "\n";
  return out.str();
}

} // namespace gcep::cli
