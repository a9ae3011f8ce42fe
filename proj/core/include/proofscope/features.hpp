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

// Numeric encoding of term trees.
//
// Code ranges, fixed by design so they never collide:
//   keywords      integers in [-8, -2]
//   sentinel      -1 (type slot of keyword nodes, parent slot of the root)
//   absent        0
//   variables     1/(1+i) for introduction index i >= 1, inside (0, 1)
//   metavariables midpoints between consecutive variable codes
//   constants     [10(1+c), 10(1+c)+1) for cluster id c, ordered inside a
//                 cluster by name, so same-cluster constants sit close and
//                 different clusters at least 9 apart
// Compound labels (an application, arrow or binder rendered as a label)
// encode as their head's code plus 1/(1+argcount).

#ifndef PROOFSCOPE_FEATURES_HPP_
#define PROOFSCOPE_FEATURES_HPP_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "proofscope/corpus.hpp"
#include "proofscope/term_tree.hpp"

namespace proofscope {

inline constexpr int kDefaultDepth = 10;
inline constexpr int kDefaultWidth = 10;

class Encoder {
 public:
  static double KeywordCode(Keyword k);

  // Variable with introduction index i (1-based): 1/(1+i).
  static double VarCode(int index);

  // j-th metavariable: halfway between variable codes j and j+1.
  static double MetaCode(int index);

  // Pass-0 table: every entry gets a band of its own, by corpus ordinal;
  // primitives keep their declared fixed codes.
  static Encoder Initial(const Corpus& corpus);

  // Rebuild from a clustering pass: entries in cluster c (ids as assigned
  // by the partition) get 10(1+c) plus their lexicographic ordinal divided
  // by the cluster size. Primitives keep their fixed codes.
  static Encoder FromClusters(
      const Corpus& corpus,
      const std::vector<std::vector<std::string>>& clusters);

  double ConstCode(const std::string& qualified) const;  // throws if unknown
  double Code(const LabelSem& sem) const;

  const std::map<std::string, double>& const_codes() const {
    return const_codes_;
  }

 private:
  std::map<std::string, double> const_codes_;
};

// Dense D x L grid of (term, type, parent) triples; unpopulated cells are
// exactly (0, 0, 0).
struct TermFeatureMatrix {
  int depth = 0;
  int width = 0;
  std::string source;  // entry name or empty
  std::vector<std::array<double, 3>> cells;  // row-major

  const std::array<double, 3>& At(int d, int l) const {
    return cells[static_cast<size_t>(d) * width + l];
  }

  // Row-major (term, type, parent) triples; length 3 * depth * width.
  std::vector<double> Flatten() const;

  std::string Csv() const;
};

// Fails loudly (with the sizes that would fit) when the tree exceeds the
// grid.
TermFeatureMatrix EncodeTree(const TermTree& tree, const Encoder& encoder,
                             int depth = kDefaultDepth,
                             int width = kDefaultWidth);

}  // namespace proofscope

#endif  // PROOFSCOPE_FEATURES_HPP_
