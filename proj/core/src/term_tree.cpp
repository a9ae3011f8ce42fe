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

#include "proofscope/term_tree.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <sstream>

#include "proofscope/diagnostics.hpp"

namespace proofscope {

const char* KeywordName(Keyword k) {
  switch (k) {
    case Keyword::kForall:
      return "forall";
    case Keyword::kLambda:
      return "lambda";
    case Keyword::kLet:
      return "let";
    case Keyword::kArrow:
      return "arrow";
    case Keyword::kType:
      return "Type";
    case Keyword::kProp:
      return "Prop";
    case Keyword::kSet:
      return "Set";
  }
  return "?";
}

int TermTree::At(int depth, int level) const {
  for (size_t i = 0; i < nodes.size(); ++i)
    if (nodes[i].depth == depth && nodes[i].level_index == level)
      return static_cast<int>(i);
  return -1;
}

namespace {

Keyword BinderKeyword(BinderKind k) {
  switch (k) {
    case BinderKind::kForall:
      return Keyword::kForall;
    case BinderKind::kLambda:
      return Keyword::kLambda;
    case BinderKind::kLet:
      return Keyword::kLet;
  }
  return Keyword::kForall;
}

Keyword SortKeyword(const std::string& name) {
  if (name == "Type") return Keyword::kType;
  if (name == "Prop") return Keyword::kProp;
  return Keyword::kSet;
}

// Successive placeholder names: ?X ?Y ?Z ?X2 ?Y2 ?Z2 ?X3 ...
std::string MetaName(int index) {
  static const char letters[3] = {'X', 'Y', 'Z'};
  int i = index - 1;
  std::string name = "?";
  name.push_back(letters[i % 3]);
  if (i >= 3) name += std::to_string(i / 3 + 1);
  return name;
}

struct Binding {
  TermPtr type;
  int intro_index;  // 1-based, order of introduction
};

// Bindings visible to one pending subtree. Scopes are snapshots shared
// between work items, extended copy-on-write at each binder.
using Scope = std::map<std::string, Binding>;
using ScopePtr = std::shared_ptr<const Scope>;

// Construction is breadth-first so that metavariable numbers read in level
// order, matching how the grid rows are read.
class Builder {
 public:
  Builder(const Corpus& corpus, TermTree* tree) : corpus_(corpus), tree_(tree) {}

  void Run(const TermPtr& term, const TypeContext& ctx) {
    Scope seed;
    for (const auto& [name, type] : ctx)
      seed[name] = {type, ++intro_counter_};
    queue_.push_back(Item{term, nullptr, -1, 0,
                          std::make_shared<const Scope>(std::move(seed))});
    while (!queue_.empty()) {
      Item item = std::move(queue_.front());
      queue_.pop_front();
      Process(item);
    }
  }

 private:
  // One pending node. Either a term to translate or a variable introduced
  // by an already-processed binder run (`intro` set).
  struct Item {
    TermPtr term;
    const Term* intro = nullptr;  // binder that introduced this variable
    int parent = -1;
    int intro_index = 0;
    ScopePtr scope;
  };

  int NewNode(int parent) {
    tree_->nodes.emplace_back();
    int idx = static_cast<int>(tree_->nodes.size()) - 1;
    tree_->nodes[idx].parent = parent;
    if (parent >= 0) tree_->nodes[parent].children.push_back(idx);
    return idx;
  }

  void Enqueue(const TermPtr& t, int parent, const ScopePtr& scope) {
    queue_.push_back(Item{t, nullptr, parent, 0, scope});
  }

  static const Binding* Lookup(const Scope& scope, const std::string& name) {
    auto it = scope.find(name);
    return it == scope.end() ? nullptr : &it->second;
  }

  // Semantic descriptor of an arbitrary label term: head symbol plus the
  // number of displayed arguments. Variables inside compound labels do not
  // matter, only the head does.
  LabelSem SemOf(const TermPtr& t, const Scope& scope) const {
    LabelSem sem;
    switch (t->kind) {
      case TermKind::kVar: {
        const Binding* b = Lookup(scope, t->name);
        if (!b)
          throw DomainError("unbound variable `" + t->name + "` in label");
        sem.tag = LabelSem::Tag::kVar;
        sem.index = b->intro_index;
        return sem;
      }
      case TermKind::kConst:
        sem.tag = LabelSem::Tag::kConst;
        sem.constant = t->name;
        return sem;
      case TermKind::kSort:
        sem.tag = LabelSem::Tag::kKeyword;
        sem.keyword = SortKeyword(t->name);
        return sem;
      case TermKind::kMeta:
        sem.tag = LabelSem::Tag::kMeta;
        sem.index = meta_indices_.at(t->name);
        return sem;
      case TermKind::kApp: {
        sem = SemOf(t->head, scope);
        sem.arg_count = static_cast<int>(t->args.size());
        return sem;
      }
      case TermKind::kArrow:
        sem.tag = LabelSem::Tag::kKeyword;
        sem.keyword = Keyword::kArrow;
        sem.arg_count = 2;
        return sem;
      case TermKind::kBinder:
        sem.tag = LabelSem::Tag::kKeyword;
        sem.keyword = BinderKeyword(t->binder);
        sem.arg_count = 2;
        return sem;
    }
    return sem;
  }

  void Process(const Item& item) {
    if (item.intro) {
      BuildIntroVar(item);
      return;
    }
    const TermPtr& t = item.term;
    switch (t->kind) {
      case TermKind::kBinder:
        BuildBinderRun(t, item.parent, item.scope, /*extra_args=*/{});
        return;
      case TermKind::kApp:
        BuildApp(t, item.parent, item.scope);
        return;
      case TermKind::kArrow:
        BuildArrow(t, item.parent, item.scope, /*extra_args=*/{});
        return;
      case TermKind::kVar:
        BuildVarLeaf(t, item.parent, item.scope, /*arg_count=*/0);
        return;
      case TermKind::kConst:
        BuildConstNode(t, {}, item.parent, t, item.scope);
        return;
      case TermKind::kSort:
        BuildSortLeaf(t, item.parent, item.scope, /*arg_count=*/0);
        return;
      case TermKind::kMeta:
        throw DomainError("metavariable in source term");
    }
  }

  void BuildIntroVar(const Item& item) {
    int node = NewNode(item.parent);
    TermTreeNode& n = tree_->nodes[node];
    n.term_label = item.intro->name;
    n.term_sem.tag = LabelSem::Tag::kVar;
    n.term_sem.index = item.intro_index;
    n.type_label = RenderTerm(item.intro->bound_type);
    n.type_sem = SemOf(item.intro->bound_type, *item.scope);
    n.origin = item.intro->bound_type;
  }

  int BuildKeywordNode(Keyword keyword, int parent, const TermPtr& origin) {
    int node = NewNode(parent);
    TermTreeNode& n = tree_->nodes[node];
    n.term_label = KeywordName(keyword);
    n.type_label = kKeywordTypeLabel;
    n.term_sem.tag = LabelSem::Tag::kKeyword;
    n.term_sem.keyword = keyword;
    n.type_sem.tag = LabelSem::Tag::kSentinel;
    n.keyword_node = true;
    n.origin = origin;
    return node;
  }

  // A binder opens a maximal same-kind run: one keyword node whose children
  // are the introduced variables followed by the run body (and, when the
  // binder sits in application head position, the application arguments).
  void BuildBinderRun(const TermPtr& t, int parent, const ScopePtr& scope,
                      const std::vector<TermPtr>& extra_args) {
    int node = BuildKeywordNode(BinderKeyword(t->binder), parent, t);

    std::vector<const Term*> run;
    const Term* cur = t.get();
    while (cur->kind == TermKind::kBinder && cur->binder == t->binder) {
      run.push_back(cur);
      cur = cur->body.get();
    }

    auto extended = std::make_shared<Scope>(*scope);
    std::vector<int> indices;
    for (const Term* b : run) {
      (*extended)[b->name] = Binding{b->bound_type, ++intro_counter_};
      indices.push_back(intro_counter_);
    }
    ScopePtr inner = std::move(extended);

    for (size_t i = 0; i < run.size(); ++i) {
      Item var_item;
      var_item.intro = run[i];
      var_item.parent = node;
      var_item.intro_index = indices[i];
      var_item.scope = inner;
      queue_.push_back(std::move(var_item));
    }
    Enqueue(run.back()->body, node, inner);
    for (const auto& a : extra_args) Enqueue(a, node, scope);
  }

  void BuildApp(const TermPtr& t, int parent, const ScopePtr& scope) {
    const TermPtr& head = t->head;
    switch (head->kind) {
      case TermKind::kConst:
        BuildConstNode(head, t->args, parent, t, scope);
        return;
      case TermKind::kVar: {
        int node = BuildVarLeaf(head, parent, scope,
                                static_cast<int>(t->args.size()));
        for (const auto& a : t->args) Enqueue(a, node, scope);
        return;
      }
      case TermKind::kSort: {
        int node = BuildSortLeaf(head, parent, scope,
                                 static_cast<int>(t->args.size()));
        for (const auto& a : t->args) Enqueue(a, node, scope);
        return;
      }
      case TermKind::kBinder:
        // The arguments hang off the keyword node of the head run.
        BuildBinderRun(head, parent, scope, t->args);
        return;
      case TermKind::kArrow:
        BuildArrow(head, parent, scope, t->args);
        return;
      default:
        throw DomainError("application head cannot be translated");
    }
  }

  void BuildArrow(const TermPtr& t, int parent, const ScopePtr& scope,
                  const std::vector<TermPtr>& extra_args) {
    int node = BuildKeywordNode(Keyword::kArrow, parent, t);
    Enqueue(t->from, node, scope);
    Enqueue(t->to, node, scope);
    for (const auto& a : extra_args) Enqueue(a, node, scope);
  }

  int BuildVarLeaf(const TermPtr& t, int parent, const ScopePtr& scope,
                   int arg_count) {
    const Binding* b = Lookup(*scope, t->name);
    if (!b)
      throw DomainError("unbound variable `" + t->name + "` in term");
    int node = NewNode(parent);
    TermTreeNode& n = tree_->nodes[node];
    n.term_label = t->name;
    n.term_sem.tag = LabelSem::Tag::kVar;
    n.term_sem.index = b->intro_index;
    n.term_sem.arg_count = arg_count;
    n.type_label = RenderTerm(b->type);
    n.type_sem = SemOf(b->type, *scope);
    n.origin = t;
    return node;
  }

  int BuildSortLeaf(const TermPtr& t, int parent, const ScopePtr& scope,
                    int arg_count) {
    (void)scope;
    int node = NewNode(parent);
    TermTreeNode& n = tree_->nodes[node];
    n.term_label = t->name;
    n.term_sem.tag = LabelSem::Tag::kKeyword;
    n.term_sem.keyword = SortKeyword(t->name);
    n.term_sem.arg_count = arg_count;
    n.type_label = kKeywordTypeLabel;
    n.type_sem.tag = LabelSem::Tag::kSentinel;
    n.keyword_node = true;
    n.origin = t;
    return node;
  }

  // A constant node, either a leaf (`args` empty and the constant stands
  // alone) or an application head. Missing leading parameters, relative to
  // the declared statement of the constant, display as metavariables.
  void BuildConstNode(const TermPtr& head, const std::vector<TermPtr>& args,
                      int parent, const TermPtr& origin,
                      const ScopePtr& scope) {
    const CorpusEntry* decl = corpus_.FindEntry(head->name);
    const Primitive* prim =
        decl ? nullptr : corpus_.FindPrimitive(head->name);
    if (!decl && !prim)
      throw DomainError("unresolved constant `" + head->name + "`");

    int node = NewNode(parent);
    int declared = decl ? ParamSpineLength(decl->statement) : 0;
    int given = static_cast<int>(args.size());
    int pending = std::max(0, declared - given);

    std::vector<TermPtr> metas;
    for (int i = 0; i < pending; ++i) {
      std::string name = MetaName(++meta_counter_);
      meta_indices_[name] = meta_counter_;
      metas.push_back(Term::Meta(name));
    }

    {
      TermTreeNode& n = tree_->nodes[node];
      std::string label = DisplayName(head->name);
      for (const auto& m : metas) label += " " + m->name;
      n.term_label = std::move(label);
      n.term_sem.tag = LabelSem::Tag::kConst;
      n.term_sem.constant = head->name;
      n.term_sem.arg_count = pending;
      n.origin = origin;
      if (decl) {
        // Consume the pending leading parameters of the declared type,
        // substituting the metavariables for the names they bind.
        TermPtr remainder = decl->statement;
        std::map<std::string, TermPtr> subst;
        for (int i = 0; i < pending; ++i) {
          if (remainder->kind == TermKind::kBinder) {
            subst[remainder->name] = metas[i];
            remainder = remainder->body;
          } else if (remainder->kind == TermKind::kArrow) {
            remainder = remainder->to;
          }
        }
        remainder = Substitute(remainder, subst);
        n.type_label = RenderTerm(remainder);
        n.type_sem = SemOf(remainder, *scope);
      } else {
        // Primitives carry no declared type; the slot stays absent.
        n.type_label = "";
        n.type_sem.tag = LabelSem::Tag::kAbsent;
      }
    }

    for (const auto& a : args) Enqueue(a, node, scope);
  }

  const Corpus& corpus_;
  TermTree* tree_;
  std::deque<Item> queue_;
  std::map<std::string, int> meta_indices_;
  int intro_counter_ = 0;
  int meta_counter_ = 0;
};

}  // namespace

TermTree TreeBuilder::Build(const TermPtr& term, const TypeContext& ctx) const {
  TermTree tree;
  Builder builder(corpus_, &tree);
  builder.Run(term, ctx);

  // Depths from the parent links, then level indices left to right. The
  // nodes vector is in level order, so within one depth the construction
  // order is already the left-to-right order.
  std::vector<int> width;
  for (auto& n : tree.nodes) {
    n.depth = n.parent < 0 ? 0 : tree.nodes[n.parent].depth + 1;
    if (static_cast<size_t>(n.depth) >= width.size()) width.resize(n.depth + 1);
    n.level_index = width[n.depth]++;
  }
  for (auto& n : tree.nodes)
    n.parent_level_index = n.parent < 0 ? -1 : tree.nodes[n.parent].level_index;
  tree.depth_count = static_cast<int>(width.size());
  tree.max_width = *std::max_element(width.begin(), width.end());
  return tree;
}

std::string TermTreeDot(const TermTree& tree, const std::string& title) {
  std::ostringstream out;
  out << "digraph termtree {\n";
  out << "  label=\"" << title << "\";\n";
  out << "  node [shape=record];\n";
  for (const auto& n : tree.nodes) {
    out << "  n" << n.depth << "_" << n.level_index << " [label=\"";
    out << n.term_label;
    if (!n.keyword_node && !n.type_label.empty()) out << " : " << n.type_label;
    out << "\"];\n";
  }
  for (const auto& n : tree.nodes) {
    if (n.parent < 0) continue;
    const auto& p = tree.nodes[n.parent];
    out << "  n" << p.depth << "_" << p.level_index << " -> n" << n.depth
        << "_" << n.level_index << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string TermTreeText(const TermTree& tree) {
  std::ostringstream out;
  // Indent by depth, one node per line, grid coordinates up front.
  for (const auto& n : tree.nodes) {
    out << "(" << n.depth << "," << n.level_index << ") ";
    for (int i = 0; i < n.depth; ++i) out << "  ";
    out << n.term_label;
    if (!n.keyword_node && !n.type_label.empty()) out << " : " << n.type_label;
    out << "\n";
  }
  return out.str();
}

}  // namespace proofscope
