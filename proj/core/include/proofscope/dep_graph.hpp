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

// Dependency graphs between entries and between libraries.
//
// An edge (a, b) means a uses b: b appears as a constant in a's statement,
// a proof argument, a recorded goal, or a's declared dependency list.
// Primitives are encoding fodder, not graph nodes. Both graph flavors are
// emitted after exact transitive reduction, which is unique on DAGs.

#ifndef PROOFSCOPE_DEP_GRAPH_HPP_
#define PROOFSCOPE_DEP_GRAPH_HPP_

#include <string>
#include <utility>
#include <vector>

#include "proofscope/corpus.hpp"

namespace proofscope {

using EdgeSet = std::vector<std::pair<std::string, std::string>>;

struct DepNode {
  std::string name;
  EntryKind kind = EntryKind::kDefinition;
  std::string library;
};

struct DepGraph {
  std::vector<DepNode> nodes;  // sorted by name
  EdgeSet edges;               // transitively reduced, sorted
  std::vector<std::string> roots;  // nodes with no predecessor
};

struct LibGraph {
  std::vector<std::string> nodes;  // sorted
  EdgeSet edges;  // (importer, imported), transitively reduced, sorted
};

// Raw (unreduced) uses edges. Empty root means the whole corpus; a named
// root restricts to entries reachable from it. Unknown roots fail.
EdgeSet UsesRelation(const Corpus& corpus, const std::string& root = "");

// Unique minimal edge set with the same reachability. Fails on a cycle,
// naming one.
EdgeSet TransitiveReduction(const EdgeSet& edges);

// Reachable dependency graph of one entry; `roots` is always exactly that
// entry.
DepGraph BuildDg1(const Corpus& corpus, const std::string& root);

// Library import graph. Fails on an import cycle.
LibGraph BuildDg2(const Corpus& corpus);

// One cluster box per library, kind-colored filled nodes, double periphery
// on roots. Deterministic: everything sorted.
std::string DepGraphDot(const DepGraph& graph);

std::string LibGraphDot(const LibGraph& graph);

// theorem=orange, definition=green, inductive=lightpink, constructor=blue,
// inner-constructor=deeppink.
std::string KindColor(EntryKind kind);

}  // namespace proofscope

#endif  // PROOFSCOPE_DEP_GRAPH_HPP_
