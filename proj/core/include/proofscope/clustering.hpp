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

// Deterministic clustering over feature vectors.
//
// Agglomerative average linkage on Euclidean distance builds one dendrogram;
// granularity cuts take k(g) = max(2, floor(n / (10 - g))) clusters from it,
// so cuts at increasing granularity always refine each other. Ties are
// broken by the lexicographically smallest member name, never by chance: the
// seed parameter is accepted for interface stability but nothing here is
// randomized.

#ifndef PROOFSCOPE_CLUSTERING_HPP_
#define PROOFSCOPE_CLUSTERING_HPP_

#include <memory>
#include <string>
#include <vector>

#include "proofscope/corpus.hpp"
#include "proofscope/diagnostics.hpp"
#include "proofscope/features.hpp"
#include "proofscope/proof_features.hpp"

namespace proofscope {

struct NamedVector {
  std::string name;
  std::vector<double> values;
};

// Merge history; leaf ids 0..n-1 index the input order, merge i creates
// node n+i from two live nodes.
struct Dendrogram {
  struct Merge {
    int left = 0;
    int right = 0;
    double height = 0.0;
  };

  std::vector<std::string> leaves;
  std::vector<Merge> merges;  // exactly n-1, heights non-decreasing
};

struct Partition {
  int granularity = 0;  // 0 when the cut was taken at an explicit k
  int k = 0;
  // Each cluster sorted by name; clusters ordered by their first member.
  // Cluster ids are positions in this list.
  std::vector<std::vector<std::string>> clusters;
  std::shared_ptr<const Partition> parent;  // next-coarser cut, if any
  std::vector<Diagnostic> diagnostics;

  int ClusterOf(const std::string& name) const;  // -1 when absent
  bool SameClusters(const Partition& other) const;
  // True when every cluster here sits inside one cluster of `coarser`.
  bool Refines(const Partition& coarser) const;
};

struct ClusterOptions {
  int granularity = 3;
  unsigned seed = 0;
  bool normalize = false;  // per-dimension min-max scaling before distances
};

int GranularityK(int n, int granularity);

// Requires >= 2 items, distinct names, equal vector lengths.
Dendrogram Agglomerate(const std::vector<NamedVector>& items,
                       bool normalize = false);

// Undoes the last k-1 merges; 1 <= k <= n.
Partition CutAtK(const Dendrogram& dendrogram, int k);

// Granularity cut. All-identical vectors collapse to a single cluster with
// a no_separation diagnostic instead of an arbitrary split.
Partition Cluster(const std::vector<NamedVector>& items,
                  const ClusterOptions& options);

// Cuts of one shared dendrogram at strictly increasing granularities; each
// partition links to the previous one via `parent`.
std::vector<Partition> NestedPartitions(const std::vector<NamedVector>& items,
                                        const std::vector<int>& granularities,
                                        const ClusterOptions& options = {});

struct RecurrentOptions {
  int granularity = 3;
  int max_iters = 10;
  unsigned seed = 0;
  bool normalize = false;
  int depth = kDefaultDepth;
  int width = kDefaultWidth;
};

struct RecurrentResult {
  Encoder encoder;
  Partition partition;
  bool converged = false;
  int passes = 0;
};

// Statement feature vectors for every entry, with the given encoder.
std::vector<NamedVector> StatementVectors(const Corpus& corpus,
                                          const Encoder& encoder,
                                          int depth = kDefaultDepth,
                                          int width = kDefaultWidth);

// Proof feature vectors for every entry that has a proof.
std::vector<NamedVector> ProofVectors(const Corpus& corpus,
                                      const Encoder& encoder,
                                      const TacticRegistry& registry,
                                      const ProofEncodeOptions& options = {});

// Encode statements, cluster, fold cluster ids back into constant codes,
// repeat until two passes agree or max_iters runs out.
RecurrentResult RecurrentCluster(const Corpus& corpus,
                                 const RecurrentOptions& options = {});

// One clustering pass over proof vectors built with term-cluster codes.
Partition ClusterProofs(const Corpus& corpus, const Encoder& encoder,
                        const TacticRegistry& registry,
                        const ClusterOptions& options,
                        const ProofEncodeOptions& proof_options = {});

// {granularity, k, clusters: [{id, members}], converged, passes} as
// 2-space-indented JSON with a trailing newline.
std::string PartitionJson(const Partition& partition, bool converged,
                          int passes);

}  // namespace proofscope

#endif  // PROOFSCOPE_CLUSTERING_HPP_
