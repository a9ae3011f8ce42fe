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

#ifndef PROOFSCOPE_TERM_HPP_
#define PROOFSCOPE_TERM_HPP_

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace proofscope {

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class TermKind {
  kVar,     // bound variable occurrence
  kConst,   // qualified constant
  kSort,    // Type | Prop | Set
  kApp,     // head applied to one or more arguments
  kBinder,  // forall | lambda | let
  kArrow,   // non-dependent function space
  kMeta,    // placeholder for a missing argument; never parsed, only
            // synthesized while labelling trees
};

enum class BinderKind { kForall, kLambda, kLet };

// Immutable term node. Terms are shared freely; nothing ever mutates one
// after construction, so plain shared_ptr aliasing is safe.
struct Term {
  TermKind kind;

  // kVar / kConst / kSort / kMeta: the symbol. For kBinder: the bound name.
  std::string name;

  BinderKind binder = BinderKind::kForall;  // kBinder only
  TermPtr bound_type;                       // kBinder: declared type of name
  TermPtr body;                             // kBinder
  TermPtr head;                             // kApp; always an atom or binder
  std::vector<TermPtr> args;                // kApp, size >= 1
  TermPtr from, to;                         // kArrow

  static TermPtr Var(std::string n);
  static TermPtr Const(std::string n);
  static TermPtr Sort(std::string n);  // n in {Type, Prop, Set}
  static TermPtr Meta(std::string n);
  // Collapses an application head that is itself an application, so the
  // stored head is never kApp.
  static TermPtr App(TermPtr h, std::vector<TermPtr> a);
  static TermPtr Binder(BinderKind k, std::string n, TermPtr type,
                        TermPtr body);
  static TermPtr Arrow(TermPtr a, TermPtr b);
};

// Structural equality, names included. Used for goal segmentation and the
// round-trip tests; alpha-equivalence is deliberately not what this means.
bool StructurallyEqual(const TermPtr& a, const TermPtr& b);

// Canonical rendering with minimal parentheses and single spaces. The result
// doubles as a display string and as a stable key, so the format must not
// drift: applications are `head a1 a2`, arrows are right-associative
// `a -> b -> c`, binders render as `forall x : T, b`, `fun x : T => b` and
// `let x := T in b`. Constants render with their library prefix stripped.
std::string RenderTerm(const TermPtr& t);

// Last dotted segment of a qualified identifier (`Paths.foo` -> `foo`).
std::string DisplayName(const std::string& qualified);
// Everything before the last dot, or "" for unqualified names.
std::string LibraryPrefix(const std::string& qualified);

// Capture-aware substitution of free variables by terms. Bindings shadow.
TermPtr Substitute(const TermPtr& t, const std::map<std::string, TermPtr>& s);

// Appends the qualified name of every kConst in `t` to `out`, in pre-order,
// duplicates included.
void CollectConsts(const TermPtr& t, std::vector<std::string>* out);

// Number of parameters a constant with this declared statement accepts:
// the length of the leading spine of forall/lambda binders and arrows.
int ParamSpineLength(const TermPtr& statement);

}  // namespace proofscope

#endif  // PROOFSCOPE_TERM_HPP_
