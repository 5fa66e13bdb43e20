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

#ifndef GCEP_CLI_WORKSPACE_HPP
#define GCEP_CLI_WORKSPACE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gcep/action.hpp"
#include "gcep/cohomology.hpp"
#include "gcep/group.hpp"
#include "gcep/groupoid.hpp"

namespace gcep::cli {

/// 1-based line and column.
struct Position {
  int line = 0;
  int column = 0;
};

struct Diagnostic {
  Position pos;
  std::string message;
};
/// "line:column: message"
std::string to_string(const Diagnostic &d);

/// A `key = value` line. Values are trimmed with inner whitespace collapsed.
struct Field {
  std::string key;
  std::string value;
  Position pos;
  Position value_pos;
  bool operator==(const Field &o) const { return key == o.key && value == o.value; }
};

enum class DeclKind { group, action, groupoid, cocycle };
const char *to_string(DeclKind kind);

struct Declaration {
  DeclKind kind = DeclKind::group;
  std::string name;
  std::vector<Field> fields;
  Position pos;

  const Field *find(std::string_view key) const;
  bool operator==(const Declaration &o) const {
    return kind == o.kind && name == o.name && fields == o.fields;
  }
};

struct TaskSpec {
  std::string command;
  std::vector<std::string> args;
  Position pos;
  std::vector<Position> arg_pos;

  std::string text() const;
  bool operator==(const TaskSpec &o) const { return command == o.command && args == o.args; }
};

struct WorkspaceDoc {
  int version = 1;
  std::vector<Declaration> declarations;
  std::vector<TaskSpec> tasks;

  const Declaration *find(std::string_view name) const;
  bool operator==(const WorkspaceDoc &o) const {
    return version == o.version && declarations == o.declarations && tasks == o.tasks;
  }
};

struct ParseResult {
  std::optional<WorkspaceDoc> doc;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return doc.has_value(); }
};

/// Syntax, known keys, name resolution, task signatures and acyclicity.
/// Never throws on malformed text.
ParseResult parse(std::string_view text);

/// Canonical text: header, one field per line, one task per line.
std::string format(const WorkspaceDoc &doc);

/// Supported task commands in documentation order.
const std::vector<std::string> &task_commands();

struct CocycleEntry {
  FiniteGroup group;
  CoeffModule module;
  Cochain cochain;
};

struct Workspace {
  WorkspaceDoc doc;
  std::map<std::string, FiniteGroup> groups;
  std::map<std::string, GroupAction> actions;
  std::map<std::string, FiniteGroupoid> groupoids;
  std::map<std::string, CocycleEntry> cocycles;
};

struct LoadOptions {
  std::size_t max_order = kDefaultMaxOrder;
};

struct LoadResult {
  std::optional<Workspace> workspace;
  std::vector<Diagnostic> diagnostics;
  bool ok() const { return workspace.has_value(); }
};

/// Builds every declaration in dependency order. Construction failures
/// (closure bounds, bad actions, cocycle checks) become positioned
/// diagnostics.
LoadResult load(const WorkspaceDoc &doc, const LoadOptions &options = {});

} // namespace gcep::cli

#endif // GCEP_CLI_WORKSPACE_HPP
