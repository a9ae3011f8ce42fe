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

// Renderings of clustering output: plain-text cluster listings, nested-box
// similarity graphs, and per-cluster proof-flow automata.

#ifndef PROOFSCOPE_REPORT_HPP_
#define PROOFSCOPE_REPORT_HPP_

#include <string>
#include <vector>

#include "proofscope/clustering.hpp"
#include "proofscope/corpus.hpp"
#include "proofscope/proof_features.hpp"

namespace proofscope {

// One block per cluster: member names (sorted) with their libraries.
// Fails on an empty partition.
std::string TextReport(const Partition& partition, const Corpus& corpus);

// Boxes inside boxes: one box per outer cluster; an inner cluster that is a
// strict subset with at least two members gets a nested box, everything
// else is a plain node. Fails unless `inner` refines `outer`.
std::string SimilarityDot(const Partition& outer, const Partition& inner);

// "none" | "hypothesis" | "proof-term".
std::string ArgKindName(ArgKind kind);

// A proof step with the concrete arguments dropped.
struct AbstractStep {
  std::string tactic;
  ArgKind arg_kind = ArgKind::kNone;

  bool operator==(const AbstractStep& other) const {
    return tactic == other.tactic && arg_kind == other.arg_kind;
  }
};

std::vector<AbstractStep> AbstractTrace(const CorpusEntry& entry,
                                        const TacticRegistry& registry,
                                        bool allow_unknown_tactics = false);

// Merged rendering of the traces of one cluster. Traces align by step
// position: equal abstracted steps at the same position share a state, so a
// cluster whose members all follow one strategy renders as a single chain.
struct Automaton {
  struct State {
    int id = 0;
    int position = -1;  // -1 only for the start state
    std::string tactic;
    ArgKind arg_kind = ArgKind::kNone;
    bool accept = false;
  };
  struct Transition {
    int from = 0;
    int to = 0;
    int multiplicity = 0;
  };

  std::vector<State> states;  // states[0] is the start state
  std::vector<Transition> transitions;  // sorted by (from, to)
};

// Fails on an empty member list or a member without a proof.
Automaton BuildAutomaton(const Corpus& corpus,
                         const std::vector<std::string>& members,
                         const TacticRegistry& registry,
                         bool allow_unknown_tactics = false);

// True when the trace walks existing transitions from the start state and
// stops in an accept state.
bool AutomatonAccepts(const Automaton& automaton,
                      const std::vector<AbstractStep>& trace);

// Start state drawn as a point, accept states double-circled, multiplicity
// labels on edges taken by more than one proof.
std::string AutomatonDot(const Automaton& automaton);

}  // namespace proofscope

#endif  // PROOFSCOPE_REPORT_HPP_
