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

#include "gcep/cli/workspace.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <regex>
#include <set>
#include <sstream>

#include "gcep/anomaly.hpp"
#include "gcep/error.hpp"

namespace gcep::cli {

namespace {

std::string with_article(DeclKind kind) {
  return std::string(kind == DeclKind::action ? "an " : "a ") + to_string(kind);
}

bool is_space(char c) { return c == ' ' || c == '\t'; }

std::string collapse(std::string_view s) {
  std::string out;
  bool gap = false;
  for (char c : s) {
    if (is_space(c)) {
      gap = !out.empty();
      continue;
    }
    if (gap)
      out += ' ';
    gap = false;
    out += c;
  }
  return out;
}

std::vector<std::string> split_list(const std::string &value, char sep = ',') {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(value);
  while (std::getline(in, item, sep))
    out.push_back(collapse(item));
  if (!value.empty() && value.back() == sep)
    out.push_back("");
  return out;
}

std::optional<long long> parse_int(std::string_view s) {
  long long v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty())
    return std::nullopt;
  return v;
}

bool valid_name(std::string_view s) {
  static const std::regex re("[A-Za-z_][A-Za-z0-9_.']*");
  return std::regex_match(s.begin(), s.end(), re);
}

// End of "key =" / "key:" starting at i, or npos.
std::size_t key_at(std::string_view s, std::size_t i) {
  if (i >= s.size() || !std::islower(static_cast<unsigned char>(s[i])))
    return std::string_view::npos;
  std::size_t j = i;
  while (j < s.size() && (std::islower(static_cast<unsigned char>(s[j])) ||
                          std::isdigit(static_cast<unsigned char>(s[j])) || s[j] == '-'))
    ++j;
  std::size_t k = j;
  while (k < s.size() && is_space(s[k]))
    ++k;
  if (k < s.size() && (s[k] == '=' || s[k] == ':'))
    return j;
  return std::string_view::npos;
}

enum class Section { none, decl, task };

struct Keys {
  std::vector<std::string> allowed;
  std::vector<std::string> forms; // exactly one required (empty: none)
};

const Keys &keys_for(DeclKind k) {
  static const Keys group{{"builtin", "degree", "generators", "product", "abelian"},
                          {"builtin", "generators", "product", "abelian"}};
  static const Keys action{{"group", "points", "images", "kind", "carrier"}, {}};
  static const Keys groupoid{{"delooping", "quotient", "universal", "product", "union", "discrete",
                              "chaotic", "objects", "arrows", "identities", "compose"},
                             {"delooping", "quotient", "universal", "product", "union",
                              "discrete", "chaotic", "objects"}};
  static const Keys cocycle{
      {"group", "degree", "coefficients", "level", "values", "schur-class", "check"},
      {"values", "schur-class"}};
  switch (k) {
  case DeclKind::group:
    return group;
  case DeclKind::action:
    return action;
  case DeclKind::groupoid:
    return groupoid;
  case DeclKind::cocycle:
    return cocycle;
  }
  return group;
}

struct Ref {
  std::string name;
  DeclKind kind;
  Position pos;
};

// Names referenced by a declaration's fields.
std::vector<Ref> references(const Declaration &d) {
  std::vector<Ref> out;
  auto add = [&](const char *key, DeclKind kind, bool list) {
    if (const Field *f = d.find(key)) {
      if (list)
        for (const auto &n : split_list(f->value))
          out.push_back({n, kind, f->value_pos});
      else
        out.push_back({f->value, kind, f->value_pos});
    }
  };
  switch (d.kind) {
  case DeclKind::group:
    add("product", DeclKind::group, true);
    break;
  case DeclKind::action:
    add("group", DeclKind::group, false);
    add("carrier", DeclKind::groupoid, false);
    break;
  case DeclKind::groupoid:
    add("delooping", DeclKind::group, false);
    add("universal", DeclKind::group, false);
    add("quotient", DeclKind::action, false);
    add("product", DeclKind::groupoid, true);
    add("union", DeclKind::groupoid, true);
    break;
  case DeclKind::cocycle:
    add("group", DeclKind::group, false);
    break;
  }
  return out;
}

bool is_coefficients(const std::string &s) {
  static const std::regex re("Z|Q/Z|Z/[0-9]+( ?x ?Z/[0-9]+)*");
  return std::regex_match(s, re);
}

class Parser {
public:
  ParseResult run(std::string_view text);

private:
  void diag(Position p, std::string m) { diags_.push_back({p, std::move(m)}); }
  void body(std::string_view s, int line, int col);
  void header(std::string_view s, int line, int col);
  void check_declaration(const Declaration &d);
  void check_task(const TaskSpec &t);
  void check_cycles();

  WorkspaceDoc doc_;
  std::vector<Diagnostic> diags_;
  Section section_ = Section::none;
  bool have_version_ = false;
};

void Parser::header(std::string_view s, int line, int col) {
  const std::size_t close = s.find(']');
  if (close == std::string_view::npos) {
    diag({line, col}, "unterminated section header");
    section_ = Section::none;
    return;
  }
  if (!have_version_) {
    diag({line, col}, "missing 'version = 1' header before the first section");
    have_version_ = true;
  }
  const std::string inner = collapse(s.substr(1, close - 1));
  const std::size_t sp = inner.find(' ');
  const std::string kind = inner.substr(0, sp);
  if (kind == "task") {
    if (sp != std::string::npos)
      diag({line, col}, "[task] takes no name");
    section_ = Section::task;
  } else {
    static const std::map<std::string, DeclKind> kinds{{"group", DeclKind::group},
                                                        {"action", DeclKind::action},
                                                        {"groupoid", DeclKind::groupoid},
                                                        {"cocycle", DeclKind::cocycle}};
    const auto it = kinds.find(kind);
    const std::string name = sp == std::string::npos ? "" : inner.substr(sp + 1);
    if (it == kinds.end()) {
      diag({line, col + 1}, "unknown section kind '" + kind + "'");
      section_ = Section::none;
      return;
    }
    if (!valid_name(name)) {
      diag({line, col}, "section [" + kind + "] needs a name such as [" + kind + " X]");
      section_ = Section::none;
      return;
    }
    if (doc_.find(name))
      diag({line, col}, "duplicate name '" + name + "'");
    doc_.declarations.push_back({it->second, name, {}, {line, col}});
    section_ = Section::decl;
  }
  std::size_t rest = close + 1;
  while (rest < s.size() && is_space(s[rest]))
    ++rest;
  if (rest < s.size())
    body(s.substr(rest), line, col + static_cast<int>(rest));
}

void Parser::body(std::string_view s, int line, int col) {
  if (section_ == Section::task) {
    TaskSpec t;
    t.pos = {line, col};
    std::size_t i = 0;
    bool first = true;
    while (i < s.size()) {
      while (i < s.size() && is_space(s[i]))
        ++i;
      if (i >= s.size())
        break;
      std::size_t j = i;
      while (j < s.size() && !is_space(s[j]))
        ++j;
      std::string tok(s.substr(i, j - i));
      if (first)
        t.command = tok;
      else {
        t.args.push_back(tok);
        t.arg_pos.push_back({line, col + static_cast<int>(i)});
      }
      first = false;
      i = j;
    }
    doc_.tasks.push_back(std::move(t));
    return;
  }
  // Split at "  key =" boundaries so several fields may share a line.
  std::vector<std::size_t> starts{0};
  for (std::size_t i = 2; i < s.size(); ++i)
    if (is_space(s[i - 1]) && is_space(s[i - 2]) && !is_space(s[i]) &&
        key_at(s, i) != std::string_view::npos)
      starts.push_back(i);
  starts.push_back(s.size());
  for (std::size_t k = 0; k + 1 < starts.size(); ++k) {
    const std::string_view seg = s.substr(starts[k], starts[k + 1] - starts[k]);
    const Position pos{line, col + static_cast<int>(starts[k])};
    const std::size_t key_end = key_at(seg, 0);
    if (key_end == std::string_view::npos) {
      diag(pos, "expected 'key = value'");
      continue;
    }
    std::size_t v = seg.find_first_of("=:", key_end) + 1;
    while (v < seg.size() && is_space(seg[v]))
      ++v;
    Field f{std::string(seg.substr(0, key_end)), collapse(seg.substr(v)), pos,
            {line, pos.column + static_cast<int>(v)}};
    if (section_ == Section::none) {
      if (f.key != "version") {
        diag(pos, "expected 'version = 1' before any section");
      } else if (have_version_) {
        diag(pos, "duplicate version header");
      } else {
        have_version_ = true;
        const auto v = parse_int(f.value);
        if (v != 1)
          diag(f.value_pos, "unsupported workspace version '" + f.value + "'");
      }
      continue;
    }
    Declaration &d = doc_.declarations.back();
    if (d.find(f.key))
      diag(pos, "duplicate key '" + f.key + "'");
    else
      d.fields.push_back(std::move(f));
  }
}

void Parser::check_declaration(const Declaration &d) {
  const Keys &keys = keys_for(d.kind);
  for (const Field &f : d.fields) {
    if (std::find(keys.allowed.begin(), keys.allowed.end(), f.key) == keys.allowed.end())
      diag(f.pos, std::string("unknown key '") + f.key + "' in " + to_string(d.kind) + " " +
                      d.name);
    else if (f.value.empty())
      diag(f.pos, "empty value for '" + f.key + "'");
  }
  if (!keys.forms.empty()) {
    int found = 0;
    for (const auto &k : keys.forms)
      found += d.find(k) != nullptr;
    if (found != 1) {
      std::string list;
      for (const auto &k : keys.forms)
        list += (list.empty() ? "" : ", ") + k;
      diag(d.pos, std::string(to_string(d.kind)) + " " + d.name + " needs exactly one of: " + list);
    }
  }
  auto need = [&](const char *key, const char *why) {
    if (!d.find(key))
      diag(d.pos, d.name + ": missing '" + key + "' (" + why + ")");
  };
  auto integer = [&](const char *key, long long lo) {
    if (const Field *f = d.find(key)) {
      const auto v = parse_int(f->value);
      if (!v || *v < lo)
        diag(f->value_pos, "'" + f->value + "' is not an integer >= " + std::to_string(lo));
    }
  };
  switch (d.kind) {
  case DeclKind::group:
    if (d.find("generators"))
      need("degree", "generators are permutations of 0..degree-1");
    integer("degree", 1);
    break;
  case DeclKind::action: {
    need("group", "the acting group");
    const Field *kf = d.find("kind");
    const std::string kind = kf ? kf->value : "images";
    if (kind == "images") {
      need("points", "size of the G-set");
      need("images", "one permutation per group generator");
    } else if (kind == "trivial") {
      if (!d.find("points") == !d.find("carrier"))
        diag(d.pos, d.name + ": trivial action needs exactly one of points, carrier");
    } else if (kind != "regular" && kind != "natural") {
      diag(kf->value_pos, "unknown action kind '" + kind +
                              "' (images, regular, natural, trivial)");
    }
    if (d.find("carrier") && kind != "trivial")
      diag(d.find("carrier")->pos, "carrier is only used by trivial actions");
    integer("points", 0);
    break;
  }
  case DeclKind::groupoid:
    if (d.find("objects")) {
      need("arrows", "source>target per morphism");
      need("identities", "identity morphism per object");
      need("compose", "composition table");
    }
    integer("discrete", 0);
    integer("chaotic", 0);
    integer("objects", 0);
    break;
  case DeclKind::cocycle: {
    need("group", "the group the cochain lives on");
    integer("degree", 0);
    if (const Field *f = d.find("degree"); f && parse_int(f->value) > 3)
      diag(f->value_pos, "degree must be at most 3");
    integer("level", 1);
    integer("schur-class", 0);
    const Field *c = d.find("coefficients");
    if (c && !is_coefficients(c->value))
      diag(c->value_pos, "coefficients must be Z, Q/Z or Z/n (x Z/m ...)");
    if (d.find("level") && c && c->value != "Q/Z")
      diag(d.find("level")->pos, "level only applies to Q/Z coefficients");
    if (const Field *f = d.find("check"); f && f->value != "cocycle" && f->value != "none")
      diag(f->value_pos, "check must be 'cocycle' or 'none'");
    if (d.find("schur-class")) {
      if (c && c->value != "Q/Z")
        diag(d.find("schur-class")->pos, "schur-class needs Q/Z coefficients");
      if (const Field *f = d.find("degree"); f && f->value != "2")
        diag(f->pos, "schur-class cocycles have degree 2");
    }
    break;
  }
  }
  for (const Ref &r : references(d)) {
    const Declaration *target = doc_.find(r.name);
    if (!target)
      diag(r.pos, "unresolved name '" + r.name + "'");
    else if (target->kind != r.kind)
      diag(r.pos, "'" + r.name + "' is " + with_article(target->kind) + ", expected " +
                      with_article(r.kind));
  }
}

void Parser::check_task(const TaskSpec &t) {
  const auto &commands = task_commands();
  if (std::find(commands.begin(), commands.end(), t.command) == commands.end()) {
    diag(t.pos, "unknown task '" + t.command + "'");
    return;
  }
  auto kind_of = [&](std::size_t i) -> std::optional<DeclKind> {
    if (const Declaration *d = doc_.find(t.args[i]))
      return d->kind;
    return std::nullopt;
  };
  auto expect = [&](std::size_t i, std::initializer_list<DeclKind> kinds) {
    if (i >= t.args.size())
      return false;
    const auto k = kind_of(i);
    if (!k) {
      diag(t.arg_pos[i], "unresolved name '" + t.args[i] + "'");
      return false;
    }
    if (std::find(kinds.begin(), kinds.end(), *k) == kinds.end()) {
      std::string want;
      for (DeclKind w : kinds)
        want += (want.empty() ? "" : " or ") + with_article(w);
      diag(t.arg_pos[i], "'" + t.args[i] + "' is " + with_article(*k) + ", expected " + want);
      return false;
    }
    return true;
  };
  auto arity = [&](std::size_t lo, std::size_t hi, const char *usage) {
    if (t.args.size() < lo || t.args.size() > hi) {
      diag(t.pos, t.command + " usage: " + t.command + " " + usage);
      return false;
    }
    return true;
  };
  // Anomaly tail: nothing, class=K, or one cocycle per component.
  auto anomaly_tail = [&](std::size_t from) {
    for (std::size_t i = from; i < t.args.size(); ++i) {
      if (t.args[i].starts_with("class=")) {
        const auto v = parse_int(std::string_view(t.args[i]).substr(6));
        if (!v || *v < 0)
          diag(t.arg_pos[i], "class=K needs a nonnegative integer");
        if (t.args.size() != from + 1)
          diag(t.arg_pos[i], "class=K cannot be combined with cocycles");
      } else {
        expect(i, {DeclKind::cocycle});
      }
    }
  };
  const std::string &c = t.command;
  if (c == "quotient" || c == "fiber-check" || c == "fixed-points" || c == "straighten" ||
      c == "unstraighten" || c == "cep-verify") {
    if (arity(1, 1, "ACTION"))
      expect(0, {DeclKind::action});
  } else if (c == "sections") {
    if (arity(1, 2, "ACTION | BASE FIBER")) {
      if (t.args.size() == 1)
        expect(0, {DeclKind::action});
      else {
        expect(0, {DeclKind::groupoid});
        expect(1, {DeclKind::groupoid});
      }
    }
  } else if (c == "functors") {
    if (arity(2, 2, "SOURCE TARGET")) {
      expect(0, {DeclKind::groupoid});
      expect(1, {DeclKind::groupoid});
    }
  } else if (c == "irreps" || c == "classify-anomalies") {
    if (arity(1, 1, "GROUPOID"))
      expect(0, {DeclKind::groupoid});
  } else if (c == "degrees" || c == "schur") {
    if (arity(1, 1, "GROUP"))
      expect(0, {DeclKind::group});
  } else if (c == "eg-families") {
    if (arity(1, 1, "GROUP | ACTION"))
      expect(0, {DeclKind::group, DeclKind::action});
  } else if (c == "cohomology") {
    if (arity(3, 3, "GROUP DEGREE COEFFICIENTS")) {
      expect(0, {DeclKind::group});
      const auto n = parse_int(t.args[1]);
      if (!n || *n < 0 || *n > 3)
        diag(t.arg_pos[1], "degree must be 0..3");
      if (!is_coefficients(t.args[2]))
        diag(t.arg_pos[2], "coefficients must be Z, Q/Z, Z/n or Z/nxZ/m");
    }
  } else if (c == "extension" || c == "alpha-regular" || c == "proj-irreps") {
    if (arity(1, 1, "COCYCLE"))
      expect(0, {DeclKind::cocycle});
  } else if (c == "twisted-algebra") {
    if (arity(1, 64, "GROUPOID [class=K | COCYCLE...]")) {
      expect(0, {DeclKind::groupoid});
      anomaly_tail(1);
    }
  } else if (c == "sections-vs-projreps") {
    if (arity(2, 64, "GROUPOID dims=D1,D2,... [class=K | COCYCLE...]")) {
      expect(0, {DeclKind::groupoid});
      bool ok = t.args[1].starts_with("dims=");
      if (ok)
        for (const auto &d : split_list(t.args[1].substr(5))) {
          const auto v = parse_int(d);
          ok = ok && v && *v >= 0;
        }
      if (!ok)
        diag(t.arg_pos[1], "expected dims=D1,D2,... with one nonnegative integer per object");
      anomaly_tail(2);
    }
  }
}

void Parser::check_cycles() {
  std::map<std::string, int> state; // 1 visiting, 2 done
  std::function<bool(const Declaration &)> visit = [&](const Declaration &d) {
    int &s = state[d.name];
    if (s == 2)
      return true;
    if (s == 1) {
      diag(d.pos, "declaration cycle through '" + d.name + "'");
      return false;
    }
    s = 1;
    for (const Ref &r : references(d))
      if (const Declaration *t = doc_.find(r.name); t && t->kind == r.kind)
        if (!visit(*t))
          return false;
    state[d.name] = 2;
    return true;
  };
  for (const auto &d : doc_.declarations)
    if (!visit(d))
      return;
}

ParseResult Parser::run(std::string_view text) {
  int line = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view s = text.substr(start, end - start);
    ++line;
    start = end + 1;
    if (!s.empty() && s.back() == '\r')
      s.remove_suffix(1);
    if (const auto hash = s.find('#'); hash != std::string_view::npos)
      s = s.substr(0, hash);
    std::size_t i = 0;
    while (i < s.size() && is_space(s[i]))
      ++i;
    while (!s.empty() && is_space(s.back()))
      s.remove_suffix(1);
    if (i >= s.size()) {
      if (end == text.size())
        break;
      continue;
    }
    const bool ascii = std::all_of(s.begin(), s.end(), [](char c) {
      return static_cast<unsigned char>(c) >= 0x20 || c == '\t';
    });
    if (!ascii) {
      diag({line, 1}, "control character in input");
    } else if (s[i] == '[') {
      header(s.substr(i), line, static_cast<int>(i) + 1);
    } else {
      body(s.substr(i), line, static_cast<int>(i) + 1);
    }
    if (end == text.size())
      break;
  }
  if (!have_version_)
    diag({1, 1}, "missing 'version = 1' header");
  for (const auto &d : doc_.declarations)
    check_declaration(d);
  for (const auto &t : doc_.tasks)
    check_task(t);
  check_cycles();
  ParseResult r;
  std::stable_sort(diags_.begin(), diags_.end(), [](const Diagnostic &a, const Diagnostic &b) {
    return std::tie(a.pos.line, a.pos.column) < std::tie(b.pos.line, b.pos.column);
  });
  r.diagnostics = std::move(diags_);
  if (r.diagnostics.empty())
    r.doc = std::move(doc_);
  return r;
}

// ---------------------------------------------------------------------------
// load

class Loader {
public:
  Loader(const WorkspaceDoc &doc, const LoadOptions &options) : options_(options) {
    ws_.doc = doc;
  }
  LoadResult run();

private:
  bool build(const Declaration &d);
  void build_group(const Declaration &d);
  void build_action(const Declaration &d);
  void build_groupoid(const Declaration &d);
  void build_cocycle(const Declaration &d);
  [[noreturn]] void fail_at(Position p, const std::string &m) { throw Diagnostic{p, m}; }
  const Field &field(const Declaration &d, const char *key) { return *d.find(key); }
  long long integer(const Field &f) { return *parse_int(f.value); }
  std::vector<long long> integers(const Field &f);

  Workspace ws_;
  LoadOptions options_;
  std::vector<Diagnostic> diags_;
  std::set<std::string> failed_;
};

std::vector<long long> Loader::integers(const Field &f) {
  std::vector<long long> out;
  std::string v = f.value;
  std::replace(v.begin(), v.end(), ',', ' ');
  std::istringstream in(v);
  std::string tok;
  while (in >> tok) {
    const auto x = parse_int(tok);
    if (!x)
      fail_at(f.value_pos, "'" + tok + "' is not an integer");
    out.push_back(*x);
  }
  return out;
}

std::vector<Permutation> permutations(const std::string &value, int degree) {
  std::vector<Permutation> out;
  for (const auto &item : split_list(value))
    out.push_back(parse_cycles(item, degree));
  return out;
}

void Loader::build_group(const Declaration &d) {
  FiniteGroup g;
  if (const Field *f = d.find("builtin")) {
    g = builtin(f->value, options_.max_order);
  } else if (const Field *f = d.find("generators")) {
    const int degree = static_cast<int>(integer(field(d, "degree")));
    g = FiniteGroup::from_permutations(degree, permutations(f->value, degree), options_.max_order,
                                       d.name);
  } else if (const Field *f = d.find("product")) {
    for (const auto &n : split_list(f->value))
      g = direct_product(g, ws_.groups.at(n));
    require(static_cast<std::size_t>(g.order()) <= options_.max_order, ErrorKind::bound_exceeded,
            "product exceeds the order bound");
  } else {
    const Field &a = field(d, "abelian");
    std::vector<long> factors;
    std::int64_t order = 1;
    for (long long x : integers(a)) {
      if (x < 1)
        fail_at(a.value_pos, "factors must be positive");
      factors.push_back(static_cast<long>(x));
      order *= x;
      if (order > static_cast<std::int64_t>(options_.max_order))
        fail_at(a.value_pos, "abelian group exceeds the order bound");
    }
    g = abelian_group(factors);
  }
  ws_.groups.emplace(d.name, g.renamed(d.name));
}

void Loader::build_action(const Declaration &d) {
  const FiniteGroup &g = ws_.groups.at(field(d, "group").value);
  const Field *kf = d.find("kind");
  const std::string kind = kf ? kf->value : "images";
  std::optional<GroupAction> a;
  if (kind == "regular") {
    a = regular_action(g);
  } else if (kind == "natural") {
    if (!g.has_permutations())
      fail_at(kf->value_pos, "group " + g.name() + " has no permutation representation");
    a = natural_action(g);
  } else if (kind == "trivial") {
    if (const Field *c = d.find("carrier"))
      a = trivial_action(g, ws_.groupoids.at(c->value));
    else
      a = trivial_action(g, discrete_groupoid(static_cast<int>(integer(field(d, "points")))));
  } else {
    const Field &images = field(d, "images");
    const int points = static_cast<int>(integer(field(d, "points")));
    const auto perms = permutations(images.value, points);
    if (perms.size() != g.generators().size())
      fail_at(images.value_pos, "group " + g.name() + " has " +
                                    std::to_string(g.generators().size()) + " generators but " +
                                    std::to_string(perms.size()) + " images were given");
    try {
      a = GroupAction::on_set(g, points, perms);
    } catch (const Error &e) {
      fail_at(images.value_pos, e.what());
    }
  }
  ws_.actions.emplace(d.name, *a);
}

void Loader::build_groupoid(const Declaration &d) {
  FiniteGroupoid y;
  auto fold = [&](const Field &f, auto op) {
    const auto names = split_list(f.value);
    FiniteGroupoid acc = ws_.groupoids.at(names.front());
    for (std::size_t i = 1; i < names.size(); ++i)
      acc = op(acc, ws_.groupoids.at(names[i]));
    return acc;
  };
  if (const Field *f = d.find("delooping")) {
    y = delooping(ws_.groups.at(f->value));
  } else if (const Field *f = d.find("universal")) {
    y = universal_bundle(ws_.groups.at(f->value)).total;
  } else if (const Field *f = d.find("quotient")) {
    y = homotopy_quotient(ws_.actions.at(f->value)).total;
  } else if (const Field *f = d.find("product")) {
    y = fold(*f, [](const FiniteGroupoid &a, const FiniteGroupoid &b) {
      return product(a, b).groupoid;
    });
  } else if (const Field *f = d.find("union")) {
    y = fold(*f, [](const FiniteGroupoid &a, const FiniteGroupoid &b) {
      return disjoint_union(a, b).groupoid;
    });
  } else if (const Field *f = d.find("discrete")) {
    y = discrete_groupoid(static_cast<int>(integer(*f)));
  } else if (const Field *f = d.find("chaotic")) {
    y = chaotic_groupoid(static_cast<int>(integer(*f)));
  } else {
    const int objects = static_cast<int>(integer(field(d, "objects")));
    const Field &af = field(d, "arrows");
    std::vector<Arrow> arrows;
    for (const auto &item : split_list(af.value)) {
      const auto gt = item.find('>');
      const auto s = gt == std::string::npos ? std::nullopt : parse_int(collapse(item.substr(0, gt)));
      const auto t = gt == std::string::npos ? std::nullopt : parse_int(collapse(item.substr(gt + 1)));
      if (!s || !t || *s < 0 || *t < 0 || *s >= objects || *t >= objects)
        fail_at(af.value_pos, "bad arrow '" + item + "' (expected source>target)");
      arrows.push_back({static_cast<Obj>(*s), static_cast<Obj>(*t)});
    }
    const int m = static_cast<int>(arrows.size());
    std::vector<Mor> ids;
    const Field &idf = field(d, "identities");
    for (long long v : integers(idf)) {
      if (v < 0 || v >= m)
        fail_at(idf.value_pos, "identity index out of range");
      ids.push_back(static_cast<Mor>(v));
    }
    const Field &cf = field(d, "compose");
    std::vector<Mor> table;
    {
      std::string v = cf.value;
      std::replace(v.begin(), v.end(), ',', ' ');
      std::istringstream in(v);
      std::string tok;
      while (in >> tok) {
        if (tok == "-") {
          table.push_back(-1);
          continue;
        }
        const auto x = parse_int(tok);
        if (!x || *x < 0 || *x >= m)
          fail_at(cf.value_pos, "bad composition entry '" + tok + "'");
        table.push_back(static_cast<Mor>(*x));
      }
    }
    if (table.size() != static_cast<std::size_t>(m) * m)
      fail_at(cf.value_pos, "composition table needs " + std::to_string(m * m) +
                                " entries (row f, column g gives f after g; '-' if undefined)");
    try {
      y = FiniteGroupoid::make(objects, arrows, ids, [&](Mor f, Mor g) {
        const Mor h = table[static_cast<std::size_t>(f) * m + g];
        require(h >= 0, ErrorKind::invalid_input,
                "composite of " + std::to_string(f) + " after " + std::to_string(g) + " missing");
        return h;
      });
      if (auto problem = y.validate())
        fail_at(d.pos, *problem);
    } catch (const Error &e) {
      fail_at(cf.value_pos, e.what());
    }
  }
  ws_.groupoids.emplace(d.name, y);
}

void Loader::build_cocycle(const Declaration &d) {
  const FiniteGroup &g = ws_.groups.at(field(d, "group").value);
  const int degree = d.find("degree") ? static_cast<int>(integer(field(d, "degree"))) : 2;
  const std::string coeffs = d.find("coefficients") ? field(d, "coefficients").value : "Q/Z";
  CocycleEntry e{g, CoeffModule::rational_mod_integers(), {}};
  std::vector<std::int64_t> moduli;
  if (coeffs == "Q/Z") {
    moduli = {d.find("level") ? integer(field(d, "level")) : g.order()};
  } else if (coeffs == "Z") {
    e.module = CoeffModule::integers();
    moduli = {0};
  } else {
    std::vector<std::int64_t> factors;
    std::string v = coeffs;
    v.erase(std::remove(v.begin(), v.end(), ' '), v.end());
    for (const auto &part : split_list(v, 'x'))
      factors.push_back(*parse_int(part.substr(2)));
    for (auto f : factors)
      if (f < 1)
        fail_at(field(d, "coefficients").value_pos, "cyclic factors must be positive");
    e.module = CoeffModule::finite(factors);
    moduli = factors;
  }
  if (const Field *f = d.find("schur-class")) {
    const auto c = classify_anomalies(delooping(g));
    const long long k = integer(*f);
    if (k >= static_cast<long long>(c.classes.size()))
      fail_at(f->value_pos, "schur multiplier of " + g.name() + " has " +
                                std::to_string(c.classes.size()) + " classes");
    e.cochain = c.classes[k].class_at[0];
  } else {
    const Field &vf = field(d, "values");
    std::int64_t tuples = 1;
    for (int i = 0; i < degree; ++i)
      tuples *= g.order();
    const auto values = integers(vf);
    const std::size_t width = moduli.size();
    if (values.size() != static_cast<std::size_t>(tuples) * width)
      fail_at(vf.value_pos, "expected " + std::to_string(tuples * width) + " values (|G|^" +
                                std::to_string(degree) + " tuples, first argument fastest), got " +
                                std::to_string(values.size()));
    e.cochain = zero_cochain(g, degree, moduli);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const std::int64_t m = moduli[i % width];
      e.cochain.values[i] = m == 0 ? values[i] : ((values[i] % m) + m) % m;
    }
    const bool check = !d.find("check") || field(d, "check").value == "cocycle";
    if (check && !is_cocycle(g, e.module, e.cochain))
      fail_at(vf.value_pos, "cochain " + d.name + " is not a cocycle");
  }
  ws_.cocycles.emplace(d.name, std::move(e));
}

bool Loader::build(const Declaration &d) {
  if (failed_.count(d.name))
    return false;
  const bool done = ws_.groups.count(d.name) || ws_.actions.count(d.name) ||
                    ws_.groupoids.count(d.name) || ws_.cocycles.count(d.name);
  if (done)
    return true;
  for (const Ref &r : references(d))
    if (!build(*ws_.doc.find(r.name))) {
      failed_.insert(d.name);
      return false;
    }
  try {
    switch (d.kind) {
    case DeclKind::group:
      build_group(d);
      break;
    case DeclKind::action:
      build_action(d);
      break;
    case DeclKind::groupoid:
      build_groupoid(d);
      break;
    case DeclKind::cocycle:
      build_cocycle(d);
      break;
    }
    return true;
  } catch (const Diagnostic &diag) {
    diags_.push_back(diag);
  } catch (const Error &e) {
    const Position p = d.fields.empty() ? d.pos : d.fields.front().value_pos;
    diags_.push_back({p, std::string(to_string(e.kind())) + ": " + e.what()});
  }
  failed_.insert(d.name);
  return false;
}

LoadResult Loader::run() {
  for (const auto &d : ws_.doc.declarations)
    build(d);
  LoadResult r;
  std::stable_sort(diags_.begin(), diags_.end(), [](const Diagnostic &a, const Diagnostic &b) {
    return std::tie(a.pos.line, a.pos.column) < std::tie(b.pos.line, b.pos.column);
  });
  r.diagnostics = std::move(diags_);
  if (r.diagnostics.empty())
    r.workspace = std::move(ws_);
  return r;
}

} // namespace

std::string to_string(const Diagnostic &d) {
  return std::to_string(d.pos.line) + ":" + std::to_string(d.pos.column) + ": " + d.message;
}

const char *to_string(DeclKind kind) {
  switch (kind) {
  case DeclKind::group:
    return "group";
  case DeclKind::action:
    return "action";
  case DeclKind::groupoid:
    return "groupoid";
  case DeclKind::cocycle:
    return "cocycle";
  }
  return "?";
}

const Field *Declaration::find(std::string_view key) const {
  for (const Field &f : fields)
    if (f.key == key)
      return &f;
  return nullptr;
}

std::string TaskSpec::text() const {
  std::string s = command;
  for (const auto &a : args)
    s += " " + a;
  return s;
}

const Declaration *WorkspaceDoc::find(std::string_view name) const {
  for (const Declaration &d : declarations)
    if (d.name == name)
      return &d;
  return nullptr;
}

const std::vector<std::string> &task_commands() {
  static const std::vector<std::string> c{
      "quotient",      "fiber-check",        "fixed-points", "straighten",
      "unstraighten",  "sections",           "functors",     "irreps",
      "degrees",       "cep-verify",         "eg-families",  "cohomology",
      "schur",         "extension",          "classify-anomalies",
      "alpha-regular", "proj-irreps",        "twisted-algebra",
      "sections-vs-projreps"};
  return c;
}

ParseResult parse(std::string_view text) {
  try {
    return Parser().run(text);
  } catch (const std::exception &e) {
    ParseResult r;
    r.diagnostics.push_back({{1, 1}, std::string("internal parser error: ") + e.what()});
    return r;
  }
}

std::string format(const WorkspaceDoc &doc) {
  std::ostringstream out;
  out << "version = " << doc.version << "\n";
  for (const Declaration &d : doc.declarations) {
    out << "\n[" << to_string(d.kind) << " " << d.name << "]\n";
    for (const Field &f : d.fields)
      out << f.key << " = " << f.value << "\n";
  }
  if (!doc.tasks.empty()) {
    out << "\n[task]\n";
    for (const TaskSpec &t : doc.tasks)
      out << t.text() << "\n";
  }
  return out.str();
}

LoadResult load(const WorkspaceDoc &doc, const LoadOptions &options) {
  return Loader(doc, options).run();
}

} // namespace gcep::cli
