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

#include <doctest.h>

#include <random>

#include "gcep/cli/report.hpp"

using namespace gcep;
using namespace gcep::cli;

namespace {

const char *kDemo = R"(version = 1
[group G] builtin = Sym(3)
[action A] group = G  points = 3  images: (0 1 2), (0 1)
[group V]
builtin = Z2xZ2
[action T]
group = G
kind = trivial
points = 2
[cocycle alpha]
group = V
schur-class = 1
[groupoid BV]
delooping = V
[task] cep-verify A
[task]
schur V
quotient T
proj-irreps alpha
sections-vs-projreps BV dims=2 alpha
)";

WorkspaceDoc must_parse(std::string_view text) {
  const ParseResult r = parse(text);
  for (const auto &d : r.diagnostics)
    INFO(to_string(d));
  REQUIRE(r.ok());
  return *r.doc;
}

const TaskReport &task(const Report &r, std::size_t i) {
  REQUIRE(r.tasks.size() > i);
  return r.tasks[i];
}

} // namespace

TEST_CASE("workspace parsing") {
  const WorkspaceDoc one = must_parse("version = 1\n[group G] builtin = Sym(3)\n");
  REQUIRE(one.declarations.size() == 1);
  const LoadResult l = load(one);
  REQUIRE(l.ok());
  CHECK(l.workspace->groups.at("G").order() == 6);

  const WorkspaceDoc doc = must_parse(kDemo);
  CHECK(doc.declarations.size() == 6);
  REQUIRE(doc.tasks.size() == 5);
  CHECK(doc.tasks[0].command == "cep-verify");
  CHECK(doc.tasks[0].args == std::vector<std::string>{"A"});
  const Declaration *a = doc.find("A");
  REQUIRE(a);
  CHECK(a->find("images")->value == "(0 1 2), (0 1)");
  CHECK(a->find("points")->pos.column == 23);

  const LoadResult ws = load(doc);
  REQUIRE(ws.ok());
  const GroupAction &act = ws.workspace->actions.at("A");
  CHECK(act.group().order() == 6);
  CHECK(orbits(act).size() == 1);
}

TEST_CASE("workspace diagnostics carry positions") {
  auto first = [](std::string_view text) {
    const ParseResult r = parse(text);
    REQUIRE_FALSE(r.ok());
    REQUIRE_FALSE(r.diagnostics.empty());
    return r.diagnostics.front();
  };
  CHECK(first("[group G]\nbuiltin = Q8\n").pos.line == 1);
  CHECK(first("version = 2\n").pos.column == 11);

  const Diagnostic unresolved = first("version = 1\n[action A]\ngroup = H\npoints = 1\nimages = ()\n");
  CHECK(unresolved.pos.line == 3);
  CHECK(unresolved.pos.column == 9);
  CHECK(unresolved.message.find("'H'") != std::string::npos);

  const Diagnostic cycle = first("version = 1\n[groupoid X]\nunion = Y\n[groupoid Y]\nunion = X\n");
  CHECK(cycle.message.find("cycle") != std::string::npos);

  const Diagnostic kind = first("version = 1\n[group G] builtin = Zn(2)\n[task]\nirreps G\n");
  CHECK(kind.pos.line == 4);
  CHECK(kind.pos.column == 8);

  CHECK(first("version = 1\n[task]\nschur\n").message.find("usage") != std::string::npos);
  CHECK(first("version = 1\n[group G]\ndegree = 3\n").message.find("exactly one") !=
        std::string::npos);

  // Construction failures are positioned at the offending value.
  const WorkspaceDoc bad = must_parse(
      "version = 1\n[group G] builtin = Zn(2)\n[cocycle c]\ngroup = G\ndegree = 1\n"
      "coefficients = Z/2\nvalues = 0 1 1\n");
  const LoadResult l = load(bad);
  REQUIRE_FALSE(l.ok());
  CHECK(l.diagnostics.front().pos.line == 7);
  CHECK(l.diagnostics.front().pos.column == 10);

  const WorkspaceDoc not_cocycle = must_parse(
      "version = 1\n[group G] builtin = Zn(2)\n[cocycle c]\ngroup = G\ndegree = 1\n"
      "coefficients = Z/4\nvalues = 0 1\n");
  const LoadResult l2 = load(not_cocycle);
  REQUIRE_FALSE(l2.ok());
  CHECK(l2.diagnostics.front().message.find("not a cocycle") != std::string::npos);

  const WorkspaceDoc big = must_parse("version = 1\n[group G] builtin = Sym(8)\n");
  LoadOptions small;
  small.max_order = 100;
  CHECK_FALSE(load(big, small).ok());
}

TEST_CASE("explicit groupoid tables") {
  // The chaotic groupoid on two objects written out by hand.
  const WorkspaceDoc doc = must_parse(R"(version = 1
[groupoid C]
objects = 2
arrows = 0>0, 0>1, 1>0, 1>1
identities = 0, 3
compose = 0 - 2 -, 1 - 3 -, - 0 - 2, - 1 - 3
[groupoid D] chaotic = 2
[task]
functors C D
)");
  const LoadResult l = load(doc);
  REQUIRE(l.ok());
  const FiniteGroupoid &c = l.workspace->groupoids.at("C");
  CHECK(c.num_morphisms() == 4);
  CHECK(connected_components(c).size() == 1);
  CHECK(find_groupoid_isomorphism(c, chaotic_groupoid(2)).has_value());

  const WorkspaceDoc broken = must_parse(R"(version = 1
[groupoid C]
objects = 1
arrows = 0>0, 0>0
identities = 0
compose = 0 1 1 1
)");
  CHECK_FALSE(load(broken).ok());
}

TEST_CASE("parse print parse is idempotent") {
  const WorkspaceDoc doc = must_parse(kDemo);
  const std::string printed = format(doc);
  const WorkspaceDoc again = must_parse(printed);
  CHECK(again == doc);
  CHECK(format(again) == printed);

  // Random workspaces over the grammar.
  std::mt19937 rng(9);
  const std::vector<std::string> builtins{"Zn(2)", "Zn(5)", "Sym(3)", "Dih(4)", "Q8", "A4"};
  for (int trial = 0; trial < 40; ++trial) {
    std::string text = "version = 1\n";
    const int groups = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < groups; ++i) {
      text += "[group G" + std::to_string(i) + "]";
      text += (rng() % 2 ? "\n" : "   ");
      text += "builtin =   " + builtins[rng() % builtins.size()] + "\n";
      text += "[groupoid B" + std::to_string(i) + "] delooping:G" + std::to_string(i) + "\n";
    }
    text += "[groupoid U] union = B0," + std::string(rng() % 2 ? " " : "") + "B" +
            std::to_string(rng() % groups) + "   # comment\n";
    text += "[task]\n";
    for (int k = 0; k < 3; ++k)
      text += "  schur   G" + std::to_string(rng() % groups) + "\n";
    text += "irreps U\n";
    const WorkspaceDoc d = must_parse(text);
    const WorkspaceDoc e = must_parse(format(d));
    CHECK(d == e);
    CHECK(format(e) == format(d));
  }
}

TEST_CASE("malformed input never throws") {
  std::mt19937 rng(4);
  const std::string base = kDemo;
  const std::string alphabet = "[]=:#,()> \n\t0123456789abcxyzGAV-/";
  for (int trial = 0; trial < 400; ++trial) {
    std::string text = base;
    const int edits = 1 + static_cast<int>(rng() % 6);
    for (int e = 0; e < edits; ++e) {
      const std::size_t at = rng() % text.size();
      switch (rng() % 3) {
      case 0:
        text.erase(at, 1 + rng() % 4);
        break;
      case 1:
        text.insert(at, 1, alphabet[rng() % alphabet.size()]);
        break;
      default:
        text[at] = alphabet[rng() % alphabet.size()];
      }
    }
    ParseResult p;
    CHECK_NOTHROW(p = parse(text));
    for (const auto &d : p.diagnostics) {
      CHECK(d.pos.line >= 1);
      CHECK(d.pos.column >= 1);
    }
    if (p.ok())
      CHECK_NOTHROW(load(*p.doc));
  }
  CHECK_FALSE(parse(std::string("version = 1\n\x01\n")).ok());
  CHECK_FALSE(parse("").ok());
}

TEST_CASE("task reports") {
  const Report r = run_document(kDemo, "demo", {});
  CHECK(r.diagnostics.empty());
  CHECK(r.exit_code() == 0);

  const TaskReport &cep = task(r, 0);
  CHECK(cep.status == TaskStatus::ok);
  CHECK(cep.result["verdict"] == true);
  CHECK(cep.result["equivariant_irreps"] == 2);
  CHECK(cep.result["quotient_irreps"] == 2);

  const TaskReport &schur = task(r, 1);
  CHECK(schur.result["invariants"] == Tree::array({2}));

  const TaskReport &quotient = task(r, 2);
  CHECK(quotient.result["components"] == 2);
  CHECK(quotient.result["automorphism_orders"] == Tree::array({6, 6}));

  CHECK(task(r, 3).result["degrees"] == Tree::array({2}));
  CHECK(task(r, 4).result["projective_classes"] == 1);
}

TEST_CASE("task errors are isolated") {
  const Report r = run_document(R"(version = 1
[group G] builtin = Zn(3)
[groupoid Y] delooping = G
[cocycle z]
group = G
coefficients = Z/3
values = 0 0 0 0 1 2 0 2 1
check = none
[task]
proj-irreps z
schur G
twisted-algebra Y class=5
)",
                                "errors", {});
  REQUIRE(r.tasks.size() == 3);
  CHECK(r.tasks[0].status == TaskStatus::error);
  CHECK(r.tasks[0].error_kind == "invalid-input");
  CHECK(r.tasks[1].status == TaskStatus::ok);
  CHECK(r.tasks[2].status == TaskStatus::error);
  CHECK(r.exit_code() == 2);
}

TEST_CASE("false verdicts set exit code 1") {
  Report r;
  TaskReport t;
  t.status = TaskStatus::failed;
  r.tasks.push_back(t);
  CHECK(r.exit_code() == 1);
  r.diagnostics.push_back({{1, 1}, "x"});
  CHECK(r.exit_code() == 2);
}

TEST_CASE("reports are deterministic") {
  RunOptions o;
  o.seed = 3;
  const Report a = run_document(kDemo, "demo", o);
  const Report b = run_document(kDemo, "demo", o);
  CHECK(render_text(a) == render_text(b));
  CHECK(render_json(a) == render_json(b));
  CHECK(render_json(a).find("millis") == std::string::npos);
  const Tree t = to_tree(a);
  std::vector<std::string> keys;
  for (const auto &[k, v] : t.items())
    keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"tool", "version", "input", "input_digest", "seed",
                                         "tasks", "summary"});
}

TEST_CASE("fnv1a digest") {
  CHECK(fnv1a_hex("") == "cbf29ce484222325");
  CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
  CHECK(fnv1a_hex("foobar") == "85944171f73967e8");
}
