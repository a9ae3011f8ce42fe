/* Copyright 2026 The Proofscope Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef PROOFSCOPE_DIAGNOSTICS_HPP_
#define PROOFSCOPE_DIAGNOSTICS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace proofscope {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Lexical or grammatical problem in a corpus file. Carries the 1-based
// position of the offending token.
class ParseError : public Error {
 public:
  ParseError(const std::string& msg, int line, int col)
      : Error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)),
        line_(line),
        col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

 private:
  int line_;
  int col_;
};

// One finding from corpus validation. `rule` is a stable machine-readable
// tag, `entry` names the offender (empty for corpus-level findings).
struct Diagnostic {
  std::string entry;
  std::string rule;
  std::string message;
};

// Thrown by the strict parse path when validation finds problems.
class CorpusError : public Error {
 public:
  CorpusError(const std::string& msg, std::vector<Diagnostic> diags)
      : Error(msg), diagnostics_(std::move(diags)) {}

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// Anything else a pipeline stage refuses to do: unknown entry, grid
// overflow, cyclic dependency graph, empty cluster, and so on.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& msg) : Error(msg) {}
};

}  // namespace proofscope

#endif  // PROOFSCOPE_DIAGNOSTICS_HPP_
