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

// Term trees: the depth/level grid a statement is flattened onto before
// numeric encoding.
//
// Construction rules:
//   - A maximal run of same-kind binders becomes one keyword node whose
//     children are the bound variables in order, followed by the body
//     subtree's root as the last child. A different binder kind starts a
//     new keyword node.
//   - An application becomes a node for its head with one child per
//     argument. When the head is a constant applied to fewer arguments
//     than its declared parameter count, the missing leading parameters
//     are displayed as metavariables (?X, ?Y, ... numbered across the
//     tree in level order, the order the grid is read) and the node's
//     type label is the declared type with those leading parameters
//     consumed.
//   - Variables, constants and sorts are leaves.
//
// Labels are canonical render strings; alongside each label the node keeps
// a small semantic descriptor (LabelSem) that the feature encoder turns
// into a number without re-parsing the string.

#ifndef PROOFSCOPE_TERM_TREE_HPP_
#define PROOFSCOPE_TERM_TREE_HPP_

#include <string>
#include <utility>
#include <vector>

#include "proofscope/corpus.hpp"
#include "proofscope/term.hpp"

namespace proofscope {

enum class Keyword { kForall, kLambda, kLet, kArrow, kType, kProp, kSet };

const char* KeywordName(Keyword k);

// Type label used for keyword nodes; encodes as the sentinel -1.
inline constexpr const char* kKeywordTypeLabel = "#Gallina";

// What a label denotes, reduced to the bits the encoder needs: the head
// symbol and how many arguments are displayed with it. `arg_count` == 0
// means a bare symbol.
struct LabelSem {
  enum class Tag {
    kAbsent,    // no information; encodes as 0
    kSentinel,  // keyword-node type slot; encodes as -1
    kKeyword,
    kVar,
    kMeta,
    kConst,
  };
  Tag tag = Tag::kAbsent;
  Keyword keyword = Keyword::kForall;  // kKeyword
  int index = 0;                       // kVar / kMeta, 1-based
  std::string constant;                // kConst, qualified name
  int arg_count = 0;
};

struct TermTreeNode {
  std::string term_label;
  std::string type_label;
  LabelSem term_sem;
  LabelSem type_sem;
  bool keyword_node = false;  // binder keywords and sorts
  int depth = 0;
  int level_index = 0;
  int parent = -1;            // index into TermTree::nodes, -1 for the root
  int parent_level_index = -1;
  std::vector<int> children;
  TermPtr origin;             // subterm this node was built from (may be a
                              // synthesized label term for head nodes)
};

struct TermTree {
  std::vector<TermTreeNode> nodes;  // level order; nodes[0] is the root
  int depth_count = 0;
  int max_width = 0;

  // Node index at (depth, level_index), or -1.
  int At(int depth, int level) const;
};

// Binder-type environment for free variables of the term being built.
// Order matters: context variables take the first occurrence indices.
using TypeContext = std::vector<std::pair<std::string, TermPtr>>;

// Builds trees against a corpus, which supplies declared statements (for
// parameter counts and type labels) and primitives. Throws DomainError on
// variables that are bound neither by the term nor by `ctx`.
class TreeBuilder {
 public:
  explicit TreeBuilder(const Corpus& corpus) : corpus_(corpus) {}

  TermTree Build(const TermPtr& term, const TypeContext& ctx = {}) const;

 private:
  const Corpus& corpus_;
};

// Graphviz rendering of a tree, one node per grid cell.
std::string TermTreeDot(const TermTree& tree, const std::string& title);

// Plain indented text rendering.
std::string TermTreeText(const TermTree& tree);

}  // namespace proofscope

#endif  // PROOFSCOPE_TERM_TREE_HPP_
