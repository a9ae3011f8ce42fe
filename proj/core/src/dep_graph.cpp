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

#include "proofscope/dep_graph.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "proofscope/diagnostics.hpp"

namespace proofscope {

namespace {

std::map<std::string, std::vector<std::string>> Adjacency(
    const EdgeSet& edges) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& e : edges) {
    adj[e.first].push_back(e.second);
    adj.try_emplace(e.second);
  }
  return adj;
}

// Returns a cycle as a node path (first == last) or empty when acyclic.
std::vector<std::string> FindCycle(
    const std::map<std::string, std::vector<std::string>>& adj) {
  std::map<std::string, int> state;  // 0 new, 1 on stack, 2 done
  std::vector<std::string> stack;
  std::vector<std::string> cycle;

  auto visit = [&](auto&& self, const std::string& node) -> bool {
    state[node] = 1;
    stack.push_back(node);
    auto it = adj.find(node);
    if (it != adj.end()) {
      for (const std::string& next : it->second) {
        int s = state.count(next) ? state[next] : 0;
        if (s == 1) {
          auto from = std::find(stack.begin(), stack.end(), next);
          cycle.assign(from, stack.end());
          cycle.push_back(next);
          return true;
        }
        if (s == 0 && self(self, next)) return true;
      }
    }
    stack.pop_back();
    state[node] = 2;
    return false;
  };

  for (const auto& [node, targets] : adj) {
    (void)targets;
    if ((state.count(node) ? state[node] : 0) == 0) {
      if (visit(visit, node)) return cycle;
    }
  }
  return {};
}

std::set<std::string> ReachableFrom(
    const std::map<std::string, std::vector<std::string>>& adj,
    const std::string& start) {
  std::set<std::string> seen;
  std::vector<std::string> todo{start};
  while (!todo.empty()) {
    std::string node = todo.back();
    todo.pop_back();
    if (!seen.insert(node).second) continue;
    auto it = adj.find(node);
    if (it == adj.end()) continue;
    for (const std::string& next : it->second) todo.push_back(next);
  }
  return seen;
}

std::string QuoteId(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string ClusterId(const std::string& library) {
  std::string out = "cluster_";
  for (char c : library) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) ? c : '_');
  }
  return out;
}

}  // namespace

EdgeSet UsesRelation(const Corpus& corpus, const std::string& root) {
  if (!root.empty() && corpus.FindEntry(root) == nullptr) {
    throw DomainError("no entry named " + root);
  }

  EdgeSet all;
  for (const CorpusEntry& entry : corpus.entries) {
    for (const std::string& name : ReferencedNames(entry)) {
      if (name == entry.name) continue;
      if (corpus.FindEntry(name) == nullptr) continue;  // primitive
      all.emplace_back(entry.name, name);
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  if (root.empty()) return all;

  std::set<std::string> keep = ReachableFrom(Adjacency(all), root);
  EdgeSet restricted;
  for (const auto& e : all) {
    if (keep.count(e.first) && keep.count(e.second)) restricted.push_back(e);
  }
  return restricted;
}

EdgeSet TransitiveReduction(const EdgeSet& edges) {
  auto adj = Adjacency(edges);
  std::vector<std::string> cycle = FindCycle(adj);
  if (!cycle.empty()) {
    std::ostringstream msg;
    msg << "dependency cycle:";
    for (size_t i = 0; i < cycle.size(); ++i) {
      msg << (i ? " -> " : " ") << cycle[i];
    }
    throw DomainError(msg.str());
  }

  std::map<std::string, std::set<std::string>> reach;
  auto reachable = [&](auto&& self,
                       const std::string& node) -> const std::set<std::string>& {
    auto found = reach.find(node);
    if (found != reach.end()) return found->second;
    std::set<std::string> r;
    auto it = adj.find(node);
    if (it != adj.end()) {
      for (const std::string& next : it->second) {
        r.insert(next);
        const std::set<std::string>& sub = self(self, next);
        r.insert(sub.begin(), sub.end());
      }
    }
    return reach.emplace(node, std::move(r)).first->second;
  };

  EdgeSet reduced;
  for (const auto& [a, c] : edges) {
    bool redundant = false;
    for (const std::string& b : adj[a]) {
      if (b == c) continue;
      if (reachable(reachable, b).count(c)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) reduced.push_back({a, c});
  }
  std::sort(reduced.begin(), reduced.end());
  reduced.erase(std::unique(reduced.begin(), reduced.end()), reduced.end());
  return reduced;
}

DepGraph BuildDg1(const Corpus& corpus, const std::string& root) {
  const CorpusEntry* root_entry = corpus.FindEntry(root);
  if (root_entry == nullptr) {
    throw DomainError("no entry named " + root);
  }

  EdgeSet raw = UsesRelation(corpus, root);
  std::set<std::string> names = ReachableFrom(Adjacency(raw), root);
  names.insert(root);

  DepGraph graph;
  graph.edges = TransitiveReduction(raw);
  for (const std::string& name : names) {
    const CorpusEntry* entry = corpus.FindEntry(name);
    graph.nodes.push_back(DepNode{entry->name, entry->kind, entry->library});
  }
  std::sort(graph.nodes.begin(), graph.nodes.end(),
            [](const DepNode& a, const DepNode& b) { return a.name < b.name; });

  std::set<std::string> has_predecessor;
  for (const auto& e : graph.edges) has_predecessor.insert(e.second);
  for (const DepNode& node : graph.nodes) {
    if (!has_predecessor.count(node.name)) graph.roots.push_back(node.name);
  }
  return graph;
}

LibGraph BuildDg2(const Corpus& corpus) {
  LibGraph graph;
  EdgeSet raw;
  for (const Library& lib : corpus.libraries) {
    graph.nodes.push_back(lib.name);
    for (const std::string& import : lib.imports) {
      raw.emplace_back(lib.name, import);
    }
  }
  std::sort(graph.nodes.begin(), graph.nodes.end());
  std::sort(raw.begin(), raw.end());
  raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
  try {
    graph.edges = TransitiveReduction(raw);
  } catch (const DomainError& e) {
    throw DomainError(std::string("import cycle between libraries (") +
                      e.what() + ")");
  }
  return graph;
}

std::string KindColor(EntryKind kind) {
  switch (kind) {
    case EntryKind::kTheorem:
      return "orange";
    case EntryKind::kDefinition:
      return "green";
    case EntryKind::kInductive:
      return "lightpink";
    case EntryKind::kConstructor:
      return "blue";
    case EntryKind::kInnerConstructor:
      return "deeppink";
  }
  throw DomainError("unknown entry kind");
}

std::string DepGraphDot(const DepGraph& graph) {
  std::set<std::string> roots(graph.roots.begin(), graph.roots.end());

  std::map<std::string, std::vector<const DepNode*>> by_library;
  for (const DepNode& node : graph.nodes) {
    by_library[node.library].push_back(&node);
  }

  std::ostringstream out;
  out << "digraph dependencies {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=ellipse, style=filled];\n";
  for (const auto& [library, nodes] : by_library) {
    out << "  subgraph " << ClusterId(library) << " {\n";
    out << "    label=" << QuoteId(library) << ";\n";
    for (const DepNode* node : nodes) {
      out << "    " << QuoteId(node->name) << " [fillcolor=\""
          << KindColor(node->kind) << "\"";
      if (roots.count(node->name)) out << ", peripheries=2";
      out << "];\n";
    }
    out << "  }\n";
  }
  for (const auto& [from, to] : graph.edges) {
    out << "  " << QuoteId(from) << " -> " << QuoteId(to) << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string LibGraphDot(const LibGraph& graph) {
  std::ostringstream out;
  out << "digraph libraries {\n";
  out << "  node [shape=box];\n";
  for (const std::string& node : graph.nodes) {
    out << "  " << QuoteId(node) << ";\n";
  }
  for (const auto& [from, to] : graph.edges) {
    out << "  " << QuoteId(from) << " -> " << QuoteId(to) << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace proofscope
