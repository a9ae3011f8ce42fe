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

// Numeric encoding of tactic proofs.
//
// A trace is cut into goal segments (consecutive steps sharing the same
// recorded goal, at most four per segment); each segment becomes one row:
//
//   4 tactic slots | count | 4 arg-type slots | 4 arg slots | 3 top
//   symbols of the goal | subgoal count of the last step
//
// Arguments fill the type/arg slot pairs in order. A hypothesis-manipulating
// tactic (destruct) records the declared type of the hypothesis in the type
// slot and leaves the arg slot 0; a term-supplying tactic (exact, refine,
// apply) records the Prop code in the type slot and the term's head code in
// the arg slot.

#ifndef PROOFSCOPE_PROOF_FEATURES_HPP_
#define PROOFSCOPE_PROOF_FEATURES_HPP_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "proofscope/corpus.hpp"
#include "proofscope/diagnostics.hpp"
#include "proofscope/features.hpp"

namespace proofscope {

inline constexpr int kDefaultMaxGoalRows = 8;
inline constexpr int kProofRowLength = 4 + 1 + 4 + 4 + 3 + 1;

enum class ArgKind { kNone, kHypothesis, kTerm };

struct TacticInfo {
  int code = 0;
  ArgKind arg_kind = ArgKind::kNone;
};

// Fixed codes for the tactics the encoder knows about. Extensions load from
// a JSON file mapping names to {"code": int >= 1, "args": "none" |
// "hypothesis" | "term"}; code 99 is reserved for unknown tactics.
class TacticRegistry {
 public:
  static constexpr int kUnknownCode = 99;

  static TacticRegistry Builtin();

  // Merges the JSON text into the table. A listed name overrides any
  // earlier meaning; a code may not be shared between two names.
  void MergeJson(const std::string& json_text);
  void MergeFile(const std::string& path);

  const TacticInfo* Find(const std::string& name) const;

  const std::map<std::string, TacticInfo>& tactics() const { return tactics_; }

 private:
  std::map<std::string, TacticInfo> tactics_;
};

struct GoalSegment {
  TermPtr goal;
  std::vector<TacticStep> steps;  // 1 to 4 of them
};

// Cuts the trace at every goal change; runs longer than four steps split
// into consecutive segments over the same goal.
std::vector<GoalSegment> SegmentTrace(const std::vector<TacticStep>& proof);

struct ProofFeatureRow {
  std::array<double, 4> tactic_codes{};
  int tactic_count = 0;
  std::array<double, 4> arg_type_codes{};
  std::array<double, 4> arg_codes{};
  std::array<double, 3> top_symbol_codes{};
  int subgoal_count = 0;
};

struct ProofFeatureMatrix {
  std::vector<ProofFeatureRow> rows;  // one per segment, in trace order
  std::string source;
  int max_rows = kDefaultMaxGoalRows;
  std::vector<Diagnostic> diagnostics;  // argument truncation and the like

  // Row-major, zero rows padding up to max_rows; length max_rows * 17.
  std::vector<double> Flatten() const;

  std::string Csv() const;
};

struct ProofEncodeOptions {
  int max_rows = kDefaultMaxGoalRows;
  bool allow_unknown_tactics = false;
};

// Fails loudly when the entry has no proof, a tactic is unknown (unless
// allowed), or the trace has more segments than max_rows.
ProofFeatureMatrix EncodeProof(const CorpusEntry& entry,
                               const Encoder& encoder,
                               const TacticRegistry& registry,
                               const ProofEncodeOptions& options = {});

}  // namespace proofscope

#endif  // PROOFSCOPE_PROOF_FEATURES_HPP_
