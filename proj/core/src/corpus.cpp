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

#include "proofscope/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "sexpr.hpp"

namespace proofscope {

const char* EntryKindName(EntryKind k) {
  switch (k) {
    case EntryKind::kTheorem:
      return "theorem";
    case EntryKind::kDefinition:
      return "definition";
    case EntryKind::kInductive:
      return "inductive";
    case EntryKind::kConstructor:
      return "constructor";
    case EntryKind::kInnerConstructor:
      return "inner-constructor";
  }
  return "?";
}

std::optional<EntryKind> EntryKindFromName(const std::string& s) {
  if (s == "theorem") return EntryKind::kTheorem;
  if (s == "definition") return EntryKind::kDefinition;
  if (s == "inductive") return EntryKind::kInductive;
  if (s == "constructor") return EntryKind::kConstructor;
  if (s == "inner-constructor") return EntryKind::kInnerConstructor;
  return std::nullopt;
}

const CorpusEntry* Corpus::FindEntry(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

const Primitive* Corpus::FindPrimitive(const std::string& name) const {
  for (const auto& p : primitives)
    if (p.name == name) return &p;
  return nullptr;
}

int Corpus::EntryIndex(const std::string& name) const {
  for (size_t i = 0; i < entries.size(); ++i)
    if (entries[i].name == name) return static_cast<int>(i);
  return -1;
}

namespace {

[[noreturn]] void Fail(const Sexp& at, const std::string& msg) {
  throw ParseError(msg, at.line, at.col);
}

const Sexp& Expect(const Sexp& s, size_t i, const char* what) {
  if (i >= s.items.size())
    Fail(s, std::string("missing ") + what);
  return s.items[i];
}

std::string ExpectAtom(const Sexp& s, const char* what) {
  if (!s.is_atom) Fail(s, std::string("expected ") + what);
  return s.atom;
}

bool ValidIdent(const std::string& s) {
  if (s.empty()) return false;
  auto seg_ok = [](const std::string& seg) {
    if (seg.empty()) return false;
    char c0 = seg[0];
    if (!(std::isalpha(static_cast<unsigned char>(c0)) || c0 == '_'))
      return false;
    for (char c : seg)
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
            c == '\''))
        return false;
    return true;
  };
  size_t start = 0;
  for (;;) {
    size_t dot = s.find('.', start);
    std::string seg =
        dot == std::string::npos ? s.substr(start) : s.substr(start, dot - start);
    if (!seg_ok(seg)) return false;
    if (dot == std::string::npos) return true;
    start = dot + 1;
  }
}

std::string ExpectIdent(const Sexp& s, const char* what) {
  std::string a = ExpectAtom(s, what);
  if (!ValidIdent(a))
    Fail(s, std::string("invalid identifier `") + a + "` for " + what);
  return a;
}

int ExpectInt(const Sexp& s, const char* what) {
  std::string a = ExpectAtom(s, what);
  size_t i = (a.size() > 1 && a[0] == '-') ? 1 : 0;
  if (i >= a.size()) Fail(s, std::string("expected integer for ") + what);
  for (; i < a.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(a[i])))
      Fail(s, std::string("expected integer for ") + what);
  return std::stoi(a);
}

TermPtr ParseTerm(const Sexp& s) {
  if (s.is_atom) Fail(s, "expected a term form, got bare atom");
  if (s.items.empty()) Fail(s, "empty term form");
  std::string tag = ExpectAtom(Expect(s, 0, "term tag"), "term tag");
  if (tag == "var") {
    if (s.Size() != 2) Fail(s, "var takes exactly one name");
    return Term::Var(ExpectIdent(s.items[1], "variable name"));
  }
  if (tag == "const") {
    if (s.Size() != 2) Fail(s, "const takes exactly one name");
    return Term::Const(ExpectIdent(s.items[1], "constant name"));
  }
  if (tag == "sort") {
    if (s.Size() != 2) Fail(s, "sort takes exactly one name");
    std::string n = ExpectAtom(s.items[1], "sort name");
    if (n != "Type" && n != "Prop" && n != "Set")
      Fail(s.items[1], "sort must be Type, Prop or Set");
    return Term::Sort(n);
  }
  if (tag == "app") {
    if (s.Size() < 3) Fail(s, "app needs a head and at least one argument");
    TermPtr head = ParseTerm(s.items[1]);
    std::vector<TermPtr> args;
    for (size_t i = 2; i < s.Size(); ++i) args.push_back(ParseTerm(s.items[i]));
    return Term::App(std::move(head), std::move(args));
  }
  if (tag == "forall" || tag == "lambda" || tag == "let") {
    if (s.Size() != 3) Fail(s, tag + " takes a (name type) pair and a body");
    const Sexp& bind = s.items[1];
    if (bind.is_atom || bind.Size() != 2)
      Fail(bind, "binder needs a (name type) pair");
    std::string name = ExpectIdent(bind.items[0], "bound name");
    TermPtr type = ParseTerm(bind.items[1]);
    TermPtr body = ParseTerm(s.items[2]);
    BinderKind k = tag == "forall"  ? BinderKind::kForall
                   : tag == "lambda" ? BinderKind::kLambda
                                     : BinderKind::kLet;
    return Term::Binder(k, std::move(name), std::move(type), std::move(body));
  }
  if (tag == "arrow") {
    if (s.Size() != 3) Fail(s, "arrow takes exactly two terms");
    return Term::Arrow(ParseTerm(s.items[1]), ParseTerm(s.items[2]));
  }
  Fail(s, "unknown term tag `" + tag + "`");
}

TacticStep ParseStep(const Sexp& s) {
  if (s.is_atom || s.items.empty() ||
      !(s.items[0].is_atom && s.items[0].atom == "step"))
    Fail(s, "expected (step ...)");
  if (s.Size() != 5)
    Fail(s, "step takes tactic, (args ...), (goal ...), (subgoals n)");
  TacticStep step;
  step.tactic = ExpectIdent(s.items[1], "tactic name");
  const Sexp& args = s.items[2];
  if (args.is_atom || args.items.empty() ||
      !(args.items[0].is_atom && args.items[0].atom == "args"))
    Fail(args, "expected (args ...)");
  for (size_t i = 1; i < args.Size(); ++i)
    step.args.push_back(ParseTerm(args.items[i]));
  const Sexp& goal = s.items[3];
  if (goal.is_atom || goal.Size() != 2 ||
      !(goal.items[0].is_atom && goal.items[0].atom == "goal"))
    Fail(goal, "expected (goal <term>)");
  step.goal_before = ParseTerm(goal.items[1]);
  const Sexp& sub = s.items[4];
  if (sub.is_atom || sub.Size() != 2 ||
      !(sub.items[0].is_atom && sub.items[0].atom == "subgoals"))
    Fail(sub, "expected (subgoals <n>)");
  step.subgoals_after = ExpectInt(sub.items[1], "subgoal count");
  if (step.subgoals_after < 0)
    Fail(sub.items[1], "subgoal count must be non-negative");
  return step;
}

}  // namespace

Corpus ParseCorpusLenient(const std::string& text) {
  Corpus corpus;
  bool seen_entry = false;
  for (const Sexp& form : ReadSexps(text)) {
    if (form.is_atom) Fail(form, "expected a top-level form");
    if (form.items.empty()) Fail(form, "empty top-level form");
    std::string tag = ExpectAtom(Expect(form, 0, "form tag"), "form tag");
    if (tag == "library") {
      if (seen_entry)
        Fail(form, "library declarations must precede all entries");
      if (form.Size() < 2) Fail(form, "library needs a name");
      Library lib;
      lib.name = ExpectIdent(form.items[1], "library name");
      if (form.Size() > 3) Fail(form, "library takes a name and an import list");
      if (form.Size() == 3) {
        const Sexp& imp = form.items[2];
        if (imp.is_atom || imp.items.empty() ||
            !(imp.items[0].is_atom && imp.items[0].atom == "imports"))
          Fail(imp, "expected (imports ...)");
        for (size_t i = 1; i < imp.Size(); ++i)
          lib.imports.push_back(ExpectIdent(imp.items[i], "import name"));
      }
      corpus.libraries.push_back(std::move(lib));
    } else if (tag == "primitive") {
      if (seen_entry)
        Fail(form, "primitive declarations must precede all entries");
      if (form.Size() != 3) Fail(form, "primitive takes a name and a code");
      Primitive prim;
      prim.name = ExpectIdent(form.items[1], "primitive name");
      prim.code = ExpectInt(form.items[2], "primitive code");
      corpus.primitives.push_back(std::move(prim));
    } else if (tag == "entry") {
      seen_entry = true;
      if (form.Size() < 4) Fail(form, "entry needs kind, name and statement");
      CorpusEntry entry;
      std::string kind = ExpectAtom(form.items[1], "entry kind");
      auto k = EntryKindFromName(kind);
      if (!k) Fail(form.items[1], "unknown entry kind `" + kind + "`");
      entry.kind = *k;
      entry.name = ExpectIdent(form.items[2], "entry name");
      entry.library = LibraryPrefix(entry.name);
      bool have_statement = false;
      for (size_t i = 3; i < form.Size(); ++i) {
        const Sexp& part = form.items[i];
        if (part.is_atom || part.items.empty() || !part.items[0].is_atom)
          Fail(part, "expected (statement|proof|deps ...)");
        const std::string& ptag = part.items[0].atom;
        if (ptag == "statement") {
          if (part.Size() != 2) Fail(part, "statement takes one term");
          if (have_statement) Fail(part, "duplicate statement");
          entry.statement = ParseTerm(part.items[1]);
          have_statement = true;
        } else if (ptag == "proof") {
          if (entry.proof) Fail(part, "duplicate proof");
          std::vector<TacticStep> steps;
          for (size_t j = 1; j < part.Size(); ++j)
            steps.push_back(ParseStep(part.items[j]));
          entry.proof = std::move(steps);
        } else if (ptag == "deps") {
          if (entry.declared_deps) Fail(part, "duplicate deps");
          std::vector<std::string> deps;
          for (size_t j = 1; j < part.Size(); ++j)
            deps.push_back(ExpectIdent(part.items[j], "dep name"));
          entry.declared_deps = std::move(deps);
        } else {
          Fail(part, "unknown entry part `" + ptag + "`");
        }
      }
      if (!have_statement) Fail(form, "entry has no statement");
      corpus.entries.push_back(std::move(entry));
    } else {
      Fail(form, "unknown top-level form `" + tag + "`");
    }
  }
  return corpus;
}

namespace {

// Free variables of `t` that are not bound by an enclosing binder and not
// present in `bound`.
void FreeVars(const TermPtr& t, std::set<std::string>& bound,
              std::vector<std::string>* out) {
  switch (t->kind) {
    case TermKind::kVar:
      if (!bound.count(t->name)) out->push_back(t->name);
      return;
    case TermKind::kConst:
    case TermKind::kSort:
    case TermKind::kMeta:
      return;
    case TermKind::kApp:
      FreeVars(t->head, bound, out);
      for (const auto& a : t->args) FreeVars(a, bound, out);
      return;
    case TermKind::kBinder: {
      FreeVars(t->bound_type, bound, out);
      bool inserted = bound.insert(t->name).second;
      FreeVars(t->body, bound, out);
      if (inserted) bound.erase(t->name);
      return;
    }
    case TermKind::kArrow:
      FreeVars(t->from, bound, out);
      FreeVars(t->to, bound, out);
      return;
  }
}

}  // namespace

std::vector<std::string> ReferencedNames(const CorpusEntry& entry) {
  std::vector<std::string> raw;
  CollectConsts(entry.statement, &raw);
  if (entry.proof) {
    for (const auto& step : *entry.proof) {
      for (const auto& a : step.args) CollectConsts(a, &raw);
      CollectConsts(step.goal_before, &raw);
    }
  }
  if (entry.declared_deps)
    raw.insert(raw.end(), entry.declared_deps->begin(),
               entry.declared_deps->end());
  std::vector<std::string> out;
  std::unordered_set<std::string> seen;
  for (auto& n : raw)
    if (seen.insert(n).second) out.push_back(n);
  return out;
}

std::vector<Diagnostic> ValidateCorpus(const Corpus& corpus) {
  std::vector<Diagnostic> diags;
  auto report = [&](const std::string& entry, const std::string& rule,
                    const std::string& msg) {
    diags.push_back({entry, rule, msg});
  };

  std::set<std::string> lib_names;
  for (const auto& lib : corpus.libraries) {
    if (!lib_names.insert(lib.name).second)
      report("", "duplicate-library", "library `" + lib.name +
                                           "` declared more than once");
  }
  for (const auto& lib : corpus.libraries) {
    for (const auto& imp : lib.imports) {
      if (!lib_names.count(imp))
        report("", "import-undeclared",
               "library `" + lib.name + "` imports undeclared `" + imp + "`");
      if (imp == lib.name)
        report("", "import-self",
               "library `" + lib.name + "` imports itself");
    }
  }

  std::unordered_map<std::string, int> position;  // entry name -> index
  std::set<std::string> names;
  for (const auto& p : corpus.primitives) {
    if (!names.insert(p.name).second)
      report(p.name, "duplicate-name",
             "`" + p.name + "` declared more than once");
    if (p.code < 10)
      report(p.name, "primitive-code-range",
             "primitive `" + p.name + "` has code " + std::to_string(p.code) +
                 "; fixed codes must be >= 10");
  }
  for (size_t i = 0; i < corpus.entries.size(); ++i) {
    const auto& e = corpus.entries[i];
    if (!names.insert(e.name).second)
      report(e.name, "duplicate-name",
             "`" + e.name + "` declared more than once");
    else
      position[e.name] = static_cast<int>(i);
  }

  for (size_t i = 0; i < corpus.entries.size(); ++i) {
    const auto& e = corpus.entries[i];

    if (!e.library.empty() && !lib_names.count(e.library))
      report(e.name, "undeclared-library",
             "entry `" + e.name + "` names undeclared library `" + e.library +
                 "`");

    if (e.kind == EntryKind::kTheorem && (!e.proof || e.proof->empty()))
      report(e.name, "theorem-without-proof",
             "theorem `" + e.name + "` has no proof steps");

    // Statements must be closed.
    std::set<std::string> bound;
    std::vector<std::string> free;
    FreeVars(e.statement, bound, &free);
    for (const auto& v : free)
      report(e.name, "unbound-variable",
             "statement of `" + e.name + "` has unbound variable `" + v + "`");

    for (const auto& ref : ReferencedNames(e)) {
      auto it = position.find(ref);
      if (it != position.end()) {
        if (it->second > static_cast<int>(i))
          report(e.name, "forward-reference",
                 "`" + e.name + "` references later entry `" + ref + "`");
        continue;
      }
      if (corpus.FindPrimitive(ref)) continue;
      report(e.name, "unresolved-reference",
             "`" + e.name + "` references unknown name `" + ref + "`");
    }

    if (e.proof) {
      for (const auto& step : *e.proof) {
        if (step.subgoals_after < 0)
          report(e.name, "negative-subgoals",
                 "step `" + step.tactic + "` in `" + e.name +
                     "` records a negative subgoal count");
      }
    }
  }
  return diags;
}

Corpus ParseCorpus(const std::string& text) {
  Corpus corpus = ParseCorpusLenient(text);
  auto diags = ValidateCorpus(corpus);
  if (!diags.empty()) {
    std::ostringstream msg;
    msg << "corpus failed validation with " << diags.size() << " finding"
        << (diags.size() == 1 ? "" : "s") << "; first: "
        << diags.front().message;
    throw CorpusError(msg.str(), std::move(diags));
  }
  return corpus;
}

namespace {

void WriteTerm(const TermPtr& t, std::ostringstream& out) {
  switch (t->kind) {
    case TermKind::kVar:
      out << "(var " << t->name << ")";
      return;
    case TermKind::kConst:
      out << "(const " << t->name << ")";
      return;
    case TermKind::kSort:
      out << "(sort " << t->name << ")";
      return;
    case TermKind::kMeta:
      // Metas are synthesized after parsing; a corpus never contains them.
      out << "(var " << t->name << ")";
      return;
    case TermKind::kApp:
      out << "(app ";
      WriteTerm(t->head, out);
      for (const auto& a : t->args) {
        out << ' ';
        WriteTerm(a, out);
      }
      out << ")";
      return;
    case TermKind::kBinder: {
      const char* tag = t->binder == BinderKind::kForall  ? "forall"
                        : t->binder == BinderKind::kLambda ? "lambda"
                                                           : "let";
      out << '(' << tag << " (" << t->name << ' ';
      WriteTerm(t->bound_type, out);
      out << ") ";
      WriteTerm(t->body, out);
      out << ")";
      return;
    }
    case TermKind::kArrow:
      out << "(arrow ";
      WriteTerm(t->from, out);
      out << ' ';
      WriteTerm(t->to, out);
      out << ")";
      return;
  }
}

}  // namespace

std::string SerializeCorpus(const Corpus& corpus) {
  std::ostringstream out;
  for (const auto& lib : corpus.libraries) {
    out << "(library " << lib.name << " (imports";
    for (const auto& imp : lib.imports) out << ' ' << imp;
    out << "))\n";
  }
  for (const auto& p : corpus.primitives)
    out << "(primitive " << p.name << ' ' << p.code << ")\n";
  for (const auto& e : corpus.entries) {
    out << "(entry " << EntryKindName(e.kind) << ' ' << e.name << "\n";
    out << "  (statement ";
    WriteTerm(e.statement, out);
    out << ")";
    if (e.proof) {
      out << "\n  (proof";
      for (const auto& step : *e.proof) {
        out << "\n    (step " << step.tactic << " (args";
        for (const auto& a : step.args) {
          out << ' ';
          WriteTerm(a, out);
        }
        out << ") (goal ";
        WriteTerm(step.goal_before, out);
        out << ") (subgoals " << step.subgoals_after << "))";
      }
      out << ")";
    }
    if (e.declared_deps) {
      out << "\n  (deps";
      for (const auto& d : *e.declared_deps) out << ' ' << d;
      out << ")";
    }
    out << ")\n";
  }
  return out.str();
}

}  // namespace proofscope
