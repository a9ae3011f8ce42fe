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

#ifndef PROOFSCOPE_CORPUS_HPP_
#define PROOFSCOPE_CORPUS_HPP_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "proofscope/diagnostics.hpp"
#include "proofscope/term.hpp"

namespace proofscope {

enum class EntryKind {
  kTheorem,
  kDefinition,
  kInductive,
  kConstructor,
  kInnerConstructor,
};

const char* EntryKindName(EntryKind k);                 // "theorem", ...
std::optional<EntryKind> EntryKindFromName(const std::string& s);

// One recorded tactic invocation. `goal_before` is the proof state the
// corpus recorded for the step; consecutive steps that share it belong to
// the same interaction with one goal.
struct TacticStep {
  std::string tactic;
  std::vector<TermPtr> args;
  TermPtr goal_before;
  int subgoals_after = 0;
};

struct CorpusEntry {
  std::string name;     // qualified; the dotted prefix names the library
  EntryKind kind = EntryKind::kDefinition;
  std::string library;  // derived from `name`, "" for unqualified entries
  TermPtr statement;
  std::optional<std::vector<TacticStep>> proof;
  std::optional<std::vector<std::string>> declared_deps;
};

struct Library {
  std::string name;
  std::vector<std::string> imports;
};

// A constant the corpus treats as given: resolvable everywhere, carrying a
// fixed encoder code that recurrent clustering never rewrites.
struct Primitive {
  std::string name;
  int code = 0;  // must be >= 10 to stay inside the constant code range
};

struct Corpus {
  std::vector<Library> libraries;
  std::vector<Primitive> primitives;
  std::vector<CorpusEntry> entries;  // file order; references only go back

  const CorpusEntry* FindEntry(const std::string& name) const;
  const Primitive* FindPrimitive(const std::string& name) const;
  int EntryIndex(const std::string& name) const;  // -1 when absent
};

// Strict parse: syntax, reference resolution and every validation rule.
// Throws ParseError (with position) or CorpusError (with diagnostics).
Corpus ParseCorpus(const std::string& text);

// Lenient parse: only syntax errors throw. Semantic findings are left for
// ValidateCorpus, which is what the `validate` subcommand reports.
Corpus ParseCorpusLenient(const std::string& text);

// Checks the model invariants on an in-memory corpus: unique names, no
// forward references, resolvable constants and imports, closed statements,
// theorems carry non-empty proofs, non-negative subgoal counts.
std::vector<Diagnostic> ValidateCorpus(const Corpus& corpus);

// Canonical text form. ParseCorpus(SerializeCorpus(c)) reproduces `c`
// structurally, and serializing again reproduces the exact bytes.
std::string SerializeCorpus(const Corpus& corpus);

// Every constant name referenced by the entry: statement, proof arguments,
// recorded goals, declared deps. Duplicates removed, order of first mention.
std::vector<std::string> ReferencedNames(const CorpusEntry& entry);

}  // namespace proofscope

#endif  // PROOFSCOPE_CORPUS_HPP_
