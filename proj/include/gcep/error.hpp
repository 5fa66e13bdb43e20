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

#ifndef GCEP_ERROR_HPP
#define GCEP_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gcep {

enum class ErrorKind {
  invalid_input,
  bound_exceeded,
  not_a_fibration,
  not_a_cocycle,
  numerical_failure,
  route_disagreement,
  unknown_name,
};

const char *to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string &what) {
  throw Error(kind, what);
}

inline void require(bool condition, ErrorKind kind, const std::string &what) {
  if (!condition)
    fail(kind, what);
}

} // namespace gcep

#endif // GCEP_ERROR_HPP
