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

#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "proofscope/clustering.hpp"
#include "proofscope/corpus.hpp"
#include "proofscope/report.hpp"
#include "test_util.hpp"

namespace {

using namespace proofscope;
using namespace proofscope_test;

TEST_CASE("text report lists clusters with libraries") {
  Corpus corpus = LoadBundled(kPathsCorpus);
  RecurrentOptions options;
  options.granularity = 3;
  RecurrentResult rec = RecurrentCluster(corpus, options);
  std::string report = TextReport(rec.partition, corpus);

  CHECK(report.rfind("Granularity 3: 4 clusters\n", 0) == 0);
  CHECK(report.find("Cluster 1\n") != std::string::npos);
  CHECK(report.find("  Paths.dpath_path_l (Paths)\n") != std::string::npos);
  CheckGolden("report_paths_terms_g3.txt", report);
}

TEST_CASE("text report copes with explicit cuts and bad input") {
  Corpus corpus = LoadBundled(kPathsCorpus);

  // An explicit-k partition has no granularity line prefix.
  Partition p;
  p.k = 1;
  p.clusters = {{"Overture.paths"}};
  std::string report = TextReport(p, corpus);
  CHECK(report.rfind("1 cluster\n", 0) == 0);

  Partition empty;
  CHECK_THROWS_AS(TextReport(empty, corpus), DomainError);

  Partition alien;
  alien.k = 1;
  alien.clusters = {{"Nowhere.name"}};
  CHECK_THROWS_AS(TextReport(alien, corpus), DomainError);
}

TEST_CASE("similarity graph nests refined clusters as boxes") {
  Corpus corpus = LoadBundled(kFamiliesCorpus);
  Encoder enc = Encoder::Initial(corpus);
  std::vector<NamedVector> vectors = StatementVectors(corpus, enc);
  std::vector<Partition> cuts = NestedPartitions(vectors, {1, 5});
  REQUIRE(cuts[1].Refines(cuts[0]));

  std::string dot = SimilarityDot(cuts[0], cuts[1]);
  CHECK(dot.rfind("digraph similarity {", 0) == 0);
  // One outer box per coarse cluster.
  size_t outer = 0;
  for (size_t pos = dot.find("label=\"Cluster ");
       pos != std::string::npos;
       pos = dot.find("label=\"Cluster ", pos + 1)) {
    ++outer;
  }
  CHECK(outer == cuts[0].clusters.size());
  CheckGolden("similarity_families_g1_g5.dot", dot);

  // Swapping the operands breaks refinement and must fail.
  if (!cuts[0].SameClusters(cuts[1])) {
    CHECK_THROWS_AS(SimilarityDot(cuts[1], cuts[0]), DomainError);
  }
}

TEST_CASE("argument kinds render by name") {
  CHECK(ArgKindName(ArgKind::kNone) == "none");
  CHECK(ArgKindName(ArgKind::kHypothesis) == "hypothesis");
  CHECK(ArgKindName(ArgKind::kTerm) == "proof-term");
}

TEST_CASE("abstract traces keep tactic and argument kind only") {
  Corpus corpus = LoadBundled(kPathsCorpus);
  TacticRegistry reg = TacticRegistry::Builtin();
  const CorpusEntry* entry = corpus.FindEntry("Paths.dpath_path_l");
  REQUIRE(entry != nullptr);

  std::vector<AbstractStep> trace = AbstractTrace(*entry, reg);
  REQUIRE(trace.size() == 3);
  CHECK(trace[0] == AbstractStep{"destruct", ArgKind::kHypothesis});
  CHECK(trace[1] == AbstractStep{"simpl", ArgKind::kNone});
  CHECK(trace[2] == AbstractStep{"exact", ArgKind::kTerm});

  const CorpusEntry* def = corpus.FindEntry("Overture.paths");
  REQUIRE(def != nullptr);
  CHECK_THROWS_AS(AbstractTrace(*def, reg), DomainError);
}

TEST_CASE("unknown tactics in traces respect the allow flag") {
  Corpus corpus = ParseCorpus(
      "(library L (imports))\n"
      "(entry inductive L.T (statement (sort Type)))\n"
      "(entry theorem L.thm (statement (const L.T))\n"
      "  (proof (step blast (args (const L.T)) (goal (const L.T))\n"
      "    (subgoals 0))))\n");
  TacticRegistry reg = TacticRegistry::Builtin();
  const CorpusEntry& entry = corpus.entries[1];
  CHECK_THROWS_AS(AbstractTrace(entry, reg), DomainError);
  std::vector<AbstractStep> trace = AbstractTrace(entry, reg, true);
  REQUIRE(trace.size() == 1);
  CHECK(trace[0].tactic == "blast");
  CHECK(trace[0].arg_kind == ArgKind::kTerm);
}

TEST_CASE("a uniform cluster renders as a single chain") {
  Corpus corpus = LoadBundled(kFamiliesCorpus);
  TacticRegistry reg = TacticRegistry::Builtin();
  // Strategy 2 members across the four families: identical traces.
  std::vector<std::string> members = {
      "Families.fam1_lemma2", "Families.fam2_lemma2", "Families.fam3_lemma2",
      "Families.fam4_lemma2"};
  Automaton automaton = BuildAutomaton(corpus, members, reg);

  std::vector<AbstractStep> trace =
      AbstractTrace(*corpus.FindEntry(members[0]), reg);
  // One state per step plus the start state; every edge taken four times.
  CHECK(automaton.states.size() == trace.size() + 1);
  CHECK(automaton.transitions.size() == trace.size());
  for (const Automaton::Transition& t : automaton.transitions) {
    CHECK(t.multiplicity == 4);
  }
  // Only the final state accepts.
  int accepts = 0;
  for (const Automaton::State& s : automaton.states) {
    if (s.accept) ++accepts;
  }
  CHECK(accepts == 1);
  CHECK(automaton.states.back().accept);

  // Every member trace replays; a strict prefix does not end in an accept
  // state, and a permuted trace leaves the walked edges.
  for (const std::string& name : members) {
    CHECK(AutomatonAccepts(automaton,
                           AbstractTrace(*corpus.FindEntry(name), reg)));
  }
  std::vector<AbstractStep> prefix(trace.begin(), trace.end() - 1);
  CHECK(!AutomatonAccepts(automaton, prefix));
  // Steps 0 and 1 abstract identically here, so swap the last two, which
  // differ, to get a genuinely reordered trace.
  std::vector<AbstractStep> swapped = trace;
  REQUIRE(!(swapped[1] == swapped[2]));
  std::swap(swapped[1], swapped[2]);
  CHECK(!AutomatonAccepts(automaton, swapped));
  CHECK(!AutomatonAccepts(automaton, {}));
}

TEST_CASE("mixed strategies fork the automaton") {
  Corpus corpus = LoadBundled(kPathsCorpus);
  TacticRegistry reg = TacticRegistry::Builtin();
  std::vector<std::string> members = {"Paths.dpath_path_l",
                                      "Paths.transport_1"};
  Automaton automaton = BuildAutomaton(corpus, members, reg);

  // Position 0 hosts two distinct opening tactics.
  int at_zero = 0;
  for (const Automaton::State& s : automaton.states) {
    if (s.position == 0) ++at_zero;
  }
  CHECK(at_zero == 2);

  std::vector<AbstractStep> a =
      AbstractTrace(*corpus.FindEntry("Paths.dpath_path_l"), reg);
  std::vector<AbstractStep> b =
      AbstractTrace(*corpus.FindEntry("Paths.transport_1"), reg);
  CHECK(AutomatonAccepts(automaton, a));
  CHECK(AutomatonAccepts(automaton, b));

  // Crossing the two traces never walks existing edges to acceptance.
  std::vector<AbstractStep> crossed = {a[0], b[1]};
  CHECK(!AutomatonAccepts(automaton, crossed));
}

TEST_CASE("automaton construction rejects bad clusters") {
  Corpus corpus = LoadBundled(kPathsCorpus);
  TacticRegistry reg = TacticRegistry::Builtin();
  CHECK_THROWS_AS(BuildAutomaton(corpus, {}, reg), DomainError);
  CHECK_THROWS_AS(BuildAutomaton(corpus, {"Overture.paths"}, reg),
                  DomainError);
  CHECK_THROWS_AS(BuildAutomaton(corpus, {"Paths.nope"}, reg), DomainError);
}

TEST_CASE("automaton dot rendering is frozen") {
  Corpus corpus = LoadBundled(kFamiliesCorpus);
  TacticRegistry reg = TacticRegistry::Builtin();
  std::vector<std::string> members = {
      "Families.fam1_lemma2", "Families.fam2_lemma2", "Families.fam3_lemma2",
      "Families.fam4_lemma2"};
  Automaton automaton = BuildAutomaton(corpus, members, reg);
  std::string dot = AutomatonDot(automaton);
  CHECK(dot.rfind("digraph proof_flow {", 0) == 0);
  CHECK(dot.find("rankdir=LR") != std::string::npos);
  CHECK(dot.find("s0 [shape=point") != std::string::npos);
  CHECK(dot.find("doublecircle") != std::string::npos);
  // All four proofs share each edge.
  CHECK(dot.find("[label=\"4\"]") != std::string::npos);
  CheckGolden("automaton_families_strategy2.dot", dot);

  // A single proof draws no multiplicity labels.
  Automaton solo = BuildAutomaton(corpus, {"Families.fam1_lemma2"}, reg);
  std::string solo_dot = AutomatonDot(solo);
  CHECK(solo_dot.find("[label=\"1\"]") == std::string::npos);
}

}  // namespace
