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

#include "proofscope/term.hpp"

#include <cassert>
#include <sstream>

namespace proofscope {

namespace {

std::shared_ptr<Term> Make(TermKind k) {
  auto t = std::make_shared<Term>();
  t->kind = k;
  return t;
}

}  // namespace

TermPtr Term::Var(std::string n) {
  auto t = Make(TermKind::kVar);
  t->name = std::move(n);
  return t;
}

TermPtr Term::Const(std::string n) {
  auto t = Make(TermKind::kConst);
  t->name = std::move(n);
  return t;
}

TermPtr Term::Sort(std::string n) {
  auto t = Make(TermKind::kSort);
  t->name = std::move(n);
  return t;
}

TermPtr Term::Meta(std::string n) {
  auto t = Make(TermKind::kMeta);
  t->name = std::move(n);
  return t;
}

TermPtr Term::App(TermPtr h, std::vector<TermPtr> a) {
  assert(!a.empty());
  if (h->kind == TermKind::kApp) {
    // (app (app f x) y) and (app f x y) denote the same application.
    std::vector<TermPtr> merged = h->args;
    merged.insert(merged.end(), a.begin(), a.end());
    return App(h->head, std::move(merged));
  }
  auto t = Make(TermKind::kApp);
  t->head = std::move(h);
  t->args = std::move(a);
  return t;
}

TermPtr Term::Binder(BinderKind k, std::string n, TermPtr type, TermPtr body) {
  auto t = Make(TermKind::kBinder);
  t->binder = k;
  t->name = std::move(n);
  t->bound_type = std::move(type);
  t->body = std::move(body);
  return t;
}

TermPtr Term::Arrow(TermPtr a, TermPtr b) {
  auto t = Make(TermKind::kArrow);
  t->from = std::move(a);
  t->to = std::move(b);
  return t;
}

bool StructurallyEqual(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TermKind::kVar:
    case TermKind::kConst:
    case TermKind::kSort:
    case TermKind::kMeta:
      return a->name == b->name;
    case TermKind::kApp: {
      if (a->args.size() != b->args.size()) return false;
      if (!StructurallyEqual(a->head, b->head)) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!StructurallyEqual(a->args[i], b->args[i])) return false;
      return true;
    }
    case TermKind::kBinder:
      return a->binder == b->binder && a->name == b->name &&
             StructurallyEqual(a->bound_type, b->bound_type) &&
             StructurallyEqual(a->body, b->body);
    case TermKind::kArrow:
      return StructurallyEqual(a->from, b->from) &&
             StructurallyEqual(a->to, b->to);
  }
  return false;
}

std::string DisplayName(const std::string& qualified) {
  auto pos = qualified.rfind('.');
  return pos == std::string::npos ? qualified : qualified.substr(pos + 1);
}

std::string LibraryPrefix(const std::string& qualified) {
  auto pos = qualified.rfind('.');
  return pos == std::string::npos ? std::string() : qualified.substr(0, pos);
}

namespace {

// An argument of an application needs parentheses unless it is an atom.
bool NeedsParens(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::kApp:
    case TermKind::kBinder:
    case TermKind::kArrow:
      return true;
    default:
      return false;
  }
}

void Render(const TermPtr& t, std::ostringstream& out) {
  switch (t->kind) {
    case TermKind::kVar:
    case TermKind::kSort:
    case TermKind::kMeta:
      out << t->name;
      return;
    case TermKind::kConst:
      out << DisplayName(t->name);
      return;
    case TermKind::kApp: {
      if (NeedsParens(t->head)) {
        out << '(';
        Render(t->head, out);
        out << ')';
      } else {
        Render(t->head, out);
      }
      for (const auto& a : t->args) {
        out << ' ';
        if (NeedsParens(a)) {
          out << '(';
          Render(a, out);
          out << ')';
        } else {
          Render(a, out);
        }
      }
      return;
    }
    case TermKind::kArrow: {
      // Right-associative; only the left side ever needs parentheses.
      bool parens = t->from->kind == TermKind::kArrow ||
                    t->from->kind == TermKind::kBinder;
      if (parens) out << '(';
      Render(t->from, out);
      if (parens) out << ')';
      out << " -> ";
      Render(t->to, out);
      return;
    }
    case TermKind::kBinder: {
      switch (t->binder) {
        case BinderKind::kForall:
          out << "forall " << t->name << " : ";
          Render(t->bound_type, out);
          out << ", ";
          Render(t->body, out);
          return;
        case BinderKind::kLambda:
          out << "fun " << t->name << " : ";
          Render(t->bound_type, out);
          out << " => ";
          Render(t->body, out);
          return;
        case BinderKind::kLet:
          out << "let " << t->name << " := ";
          Render(t->bound_type, out);
          out << " in ";
          Render(t->body, out);
          return;
      }
    }
  }
}

}  // namespace

std::string RenderTerm(const TermPtr& t) {
  std::ostringstream out;
  Render(t, out);
  return out.str();
}

TermPtr Substitute(const TermPtr& t, const std::map<std::string, TermPtr>& s) {
  if (s.empty()) return t;
  switch (t->kind) {
    case TermKind::kVar: {
      auto it = s.find(t->name);
      return it == s.end() ? t : it->second;
    }
    case TermKind::kConst:
    case TermKind::kSort:
    case TermKind::kMeta:
      return t;
    case TermKind::kApp: {
      std::vector<TermPtr> args;
      args.reserve(t->args.size());
      for (const auto& a : t->args) args.push_back(Substitute(a, s));
      return Term::App(Substitute(t->head, s), std::move(args));
    }
    case TermKind::kBinder: {
      TermPtr type = Substitute(t->bound_type, s);
      if (s.count(t->name)) {
        // The binder shadows the substituted name inside its body.
        std::map<std::string, TermPtr> inner = s;
        inner.erase(t->name);
        return Term::Binder(t->binder, t->name, std::move(type),
                            Substitute(t->body, inner));
      }
      return Term::Binder(t->binder, t->name, std::move(type),
                          Substitute(t->body, s));
    }
    case TermKind::kArrow:
      return Term::Arrow(Substitute(t->from, s), Substitute(t->to, s));
  }
  return t;
}

void CollectConsts(const TermPtr& t, std::vector<std::string>* out) {
  switch (t->kind) {
    case TermKind::kConst:
      out->push_back(t->name);
      return;
    case TermKind::kVar:
    case TermKind::kSort:
    case TermKind::kMeta:
      return;
    case TermKind::kApp:
      CollectConsts(t->head, out);
      for (const auto& a : t->args) CollectConsts(a, out);
      return;
    case TermKind::kBinder:
      CollectConsts(t->bound_type, out);
      CollectConsts(t->body, out);
      return;
    case TermKind::kArrow:
      CollectConsts(t->from, out);
      CollectConsts(t->to, out);
      return;
  }
}

int ParamSpineLength(const TermPtr& statement) {
  int n = 0;
  const Term* cur = statement.get();
  for (;;) {
    if (cur->kind == TermKind::kBinder &&
        (cur->binder == BinderKind::kForall ||
         cur->binder == BinderKind::kLambda)) {
      ++n;
      cur = cur->body.get();
    } else if (cur->kind == TermKind::kArrow) {
      ++n;
      cur = cur->to.get();
    } else {
      return n;
    }
  }
}

}  // namespace proofscope
