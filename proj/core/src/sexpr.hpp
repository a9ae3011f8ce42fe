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

// Minimal s-expression reader for the corpus format. Internal to the
// corpus module; the public surface is ParseCorpus and friends.

#ifndef PROOFSCOPE_SEXPR_HPP_
#define PROOFSCOPE_SEXPR_HPP_

#include <string>
#include <vector>

namespace proofscope {

struct Sexp {
  bool is_atom = false;
  std::string atom;          // valid when is_atom
  std::vector<Sexp> items;   // valid when !is_atom
  int line = 0, col = 0;     // position of the atom / opening paren

  bool IsList() const { return !is_atom; }
  size_t Size() const { return items.size(); }
};

// Reads every top-level form. `;` starts a comment running to end of line.
// Throws ParseError on malformed input.
std::vector<Sexp> ReadSexps(const std::string& text);

}  // namespace proofscope

#endif  // PROOFSCOPE_SEXPR_HPP_
