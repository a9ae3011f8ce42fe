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

#include "proofscope/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "proofscope/diagnostics.hpp"

namespace proofscope {

namespace {

std::string QuoteId(const std::string& name) {
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string TextReport(const Partition& partition, const Corpus& corpus) {
  if (partition.clusters.empty()) {
    throw DomainError("nothing clustered");
  }
  std::ostringstream out;
  if (partition.granularity > 0) {
    out << "Granularity " << partition.granularity << ": " << partition.k
        << (partition.k == 1 ? " cluster" : " clusters") << "\n";
  } else {
    out << partition.k << (partition.k == 1 ? " cluster" : " clusters")
        << "\n";
  }
  for (size_t c = 0; c < partition.clusters.size(); ++c) {
    out << "\nCluster " << (c + 1) << "\n";
    for (const std::string& name : partition.clusters[c]) {
      const CorpusEntry* entry = corpus.FindEntry(name);
      if (entry == nullptr) {
        throw DomainError("clustered name is not a corpus entry: " + name);
      }
      out << "  " << name << " (" << entry->library << ")\n";
    }
  }
  for (const Diagnostic& d : partition.diagnostics) {
    out << "\nnote: " << d.message << "\n";
  }
  return out.str();
}

std::string SimilarityDot(const Partition& outer, const Partition& inner) {
  if (!inner.Refines(outer)) {
    throw DomainError("inner partition does not refine the outer one");
  }
  std::ostringstream out;
  out << "digraph similarity {\n";
  out << "  node [shape=ellipse];\n";
  for (size_t oc = 0; oc < outer.clusters.size(); ++oc) {
    const std::vector<std::string>& members = outer.clusters[oc];
    std::set<std::string> member_set(members.begin(), members.end());
    out << "  subgraph cluster_" << oc << " {\n";
    out << "    label=\"Cluster " << (oc + 1) << "\";\n";

    // Nested boxes: inner clusters strictly smaller than this box, with at
    // least two members. Everything else renders as a bare node.
    std::set<std::string> boxed;
    int nested = 0;
    for (size_t ic = 0; ic < inner.clusters.size(); ++ic) {
      const std::vector<std::string>& sub = inner.clusters[ic];
      if (sub.size() < 2 || sub.size() >= member_set.size()) continue;
      if (!member_set.count(sub.front())) continue;
      out << "    subgraph cluster_" << oc << "_" << nested++ << " {\n";
      out << "      label=\"\";\n";
      for (const std::string& name : sub) {
        out << "      " << QuoteId(name) << ";\n";
        boxed.insert(name);
      }
      out << "    }\n";
    }
    for (const std::string& name : members) {
      if (!boxed.count(name)) out << "    " << QuoteId(name) << ";\n";
    }
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

std::string ArgKindName(ArgKind kind) {
  switch (kind) {
    case ArgKind::kNone:
      return "none";
    case ArgKind::kHypothesis:
      return "hypothesis";
    case ArgKind::kTerm:
      return "proof-term";
  }
  throw DomainError("unknown argument kind");
}

std::vector<AbstractStep> AbstractTrace(const CorpusEntry& entry,
                                        const TacticRegistry& registry,
                                        bool allow_unknown_tactics) {
  if (!entry.proof.has_value() || entry.proof->empty()) {
    throw DomainError(entry.name + " has no proof");
  }
  std::vector<AbstractStep> trace;
  for (const TacticStep& step : *entry.proof) {
    const TacticInfo* info = registry.Find(step.tactic);
    AbstractStep abstract;
    abstract.tactic = step.tactic;
    if (info != nullptr) {
      abstract.arg_kind = info->arg_kind;
    } else if (allow_unknown_tactics) {
      abstract.arg_kind = step.args.empty() ? ArgKind::kNone : ArgKind::kTerm;
    } else {
      throw DomainError("unknown tactic " + step.tactic + " in proof of " +
                        entry.name);
    }
    trace.push_back(abstract);
  }
  return trace;
}

Automaton BuildAutomaton(const Corpus& corpus,
                         const std::vector<std::string>& members,
                         const TacticRegistry& registry,
                         bool allow_unknown_tactics) {
  if (members.empty()) {
    throw DomainError("cannot build an automaton for an empty cluster");
  }

  Automaton automaton;
  Automaton::State start;
  start.id = 0;
  automaton.states.push_back(start);

  // (position, tactic, kind) -> state id
  std::map<std::tuple<int, std::string, int>, int> state_ids;
  std::map<std::pair<int, int>, int> edge_counts;

  for (const std::string& name : members) {
    const CorpusEntry* entry = corpus.FindEntry(name);
    if (entry == nullptr) {
      throw DomainError("no entry named " + name);
    }
    std::vector<AbstractStep> trace =
        AbstractTrace(*entry, registry, allow_unknown_tactics);
    int current = 0;
    for (size_t pos = 0; pos < trace.size(); ++pos) {
      auto key = std::make_tuple(static_cast<int>(pos), trace[pos].tactic,
                                 static_cast<int>(trace[pos].arg_kind));
      auto it = state_ids.find(key);
      int next;
      if (it != state_ids.end()) {
        next = it->second;
      } else {
        next = static_cast<int>(automaton.states.size());
        Automaton::State state;
        state.id = next;
        state.position = static_cast<int>(pos);
        state.tactic = trace[pos].tactic;
        state.arg_kind = trace[pos].arg_kind;
        automaton.states.push_back(state);
        state_ids.emplace(key, next);
      }
      ++edge_counts[{current, next}];
      current = next;
    }
    automaton.states[current].accept = true;
  }

  for (const auto& [edge, count] : edge_counts) {
    automaton.transitions.push_back(
        Automaton::Transition{edge.first, edge.second, count});
  }
  return automaton;
}

bool AutomatonAccepts(const Automaton& automaton,
                      const std::vector<AbstractStep>& trace) {
  auto has_edge = [&](int from, int to) {
    for (const Automaton::Transition& t : automaton.transitions) {
      if (t.from == from && t.to == to) return true;
    }
    return false;
  };

  int current = 0;
  for (size_t pos = 0; pos < trace.size(); ++pos) {
    int next = -1;
    for (const Automaton::State& state : automaton.states) {
      if (state.position == static_cast<int>(pos) &&
          state.tactic == trace[pos].tactic &&
          state.arg_kind == trace[pos].arg_kind) {
        next = state.id;
        break;
      }
    }
    if (next < 0 || !has_edge(current, next)) return false;
    current = next;
  }
  return current != 0 && automaton.states[current].accept;
}

std::string AutomatonDot(const Automaton& automaton) {
  std::ostringstream out;
  out << "digraph proof_flow {\n";
  out << "  rankdir=LR;\n";
  out << "  s0 [shape=point, label=\"\"];\n";
  for (size_t i = 1; i < automaton.states.size(); ++i) {
    const Automaton::State& state = automaton.states[i];
    // Tactic names are plain identifiers, so the label is built by hand to
    // keep the \n line break DOT-visible.
    out << "  s" << state.id << " [shape="
        << (state.accept ? "doublecircle" : "circle") << ", label=\""
        << state.tactic << "\\n" << ArgKindName(state.arg_kind) << "\"];\n";
  }
  for (const Automaton::Transition& t : automaton.transitions) {
    out << "  s" << t.from << " -> s" << t.to;
    if (t.multiplicity > 1) out << " [label=\"" << t.multiplicity << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace proofscope
