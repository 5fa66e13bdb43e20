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

#ifndef GCEP_CLI_REPORT_HPP
#define GCEP_CLI_REPORT_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gcep/cli/workspace.hpp"
#include "gcep/groupoid.hpp"

namespace gcep::cli {

inline constexpr const char *kToolVersion = "0.1.0";

using Tree = nlohmann::ordered_json;

enum class TaskStatus { ok, failed, error };
const char *to_string(TaskStatus s);

struct TaskReport {
  TaskSpec task;
  TaskStatus status = TaskStatus::ok;
  Tree result = Tree::object();
  std::string error_kind;
  std::string error_message;
  double millis = 0;
};

struct RunOptions {
  std::uint64_t seed = 0;
  std::int64_t max_enum = kDefaultMaxEnum;
  bool timing = false;
};

/// Runs one task; errors are captured in the report.
TaskReport run_task(const Workspace &ws, const TaskSpec &task, const RunOptions &options);
/// Tasks in declaration order.
std::vector<TaskReport> run(const Workspace &ws, const RunOptions &options);

struct Report {
  std::string input_name;
  std::string input_digest;
  RunOptions options;
  std::vector<Diagnostic> diagnostics; // parse or load failures
  std::vector<TaskReport> tasks;

  /// 0 all verdicts true, 1 some verdict false, 2 structural error.
  int exit_code() const;
};

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

/// Parses, loads and runs a workspace text.
Report run_document(std::string_view text, std::string input_name, const RunOptions &options,
                    const LoadOptions &load_options = {});

Tree to_tree(const Report &r);
std::string render_text(const Report &r, bool color = false);
std::string render_json(const Report &r);

} // namespace gcep::cli

#endif // GCEP_CLI_REPORT_HPP
