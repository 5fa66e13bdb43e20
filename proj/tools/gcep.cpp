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

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <unistd.h>

#include <CLI11.hpp>

#include "gcep/cli/report.hpp"

int main(int argc, char **argv) {
  CLI::App app{"Finite groupoid, cohomology and anomaly computations over a workspace file"};
  std::string input;
  std::uint64_t seed = 0;
  std::size_t max_order = gcep::kDefaultMaxOrder;
  std::int64_t max_enum = gcep::kDefaultMaxEnum;
  std::string format = "text";
  bool timing = false;
  bool print = false;
  app.add_option("workspace", input, "workspace file, or - for stdin")->required();
  app.add_option("--seed", seed, "seed for randomized numerical steps")->default_val(0);
  app.add_option("--max-order", max_order, "largest group order built")->default_val(max_order);
  app.add_option("--max-enum", max_enum, "functor and section enumeration bound")
      ->default_val(max_enum);
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"text", "json-like"}))
      ->default_val(format);
  app.add_flag("--timing", timing, "include per-task wall time (not reproducible)");
  app.add_flag("--print", print, "print the canonical form of the workspace and exit");
  app.set_version_flag("--version", std::string("gcep ") + gcep::cli::kToolVersion);
  CLI11_PARSE(app, argc, argv);

  std::string text;
  if (input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(input, std::ios::binary);
    if (!in) {
      std::cerr << "gcep: cannot read " << input << "\n";
      return 2;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }

  if (print) {
    const auto parsed = gcep::cli::parse(text);
    for (const auto &d : parsed.diagnostics)
      std::cerr << input << ":" << gcep::cli::to_string(d) << "\n";
    if (!parsed.ok())
      return 2;
    std::cout << gcep::cli::format(*parsed.doc);
    return 0;
  }

  gcep::cli::RunOptions options;
  options.seed = seed;
  options.max_enum = max_enum;
  options.timing = timing;
  gcep::cli::LoadOptions load_options;
  load_options.max_order = max_order;
  const auto report = gcep::cli::run_document(text, input, options, load_options);
  if (format == "json-like") {
    std::cout << gcep::cli::render_json(report);
  } else {
    const bool color = std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO);
    std::cout << gcep::cli::render_text(report, color);
  }
  return report.exit_code();
}
