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

#include "proofscope/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "json.hpp"
#include "proofscope/term_tree.hpp"

namespace proofscope {

namespace {

double EuclideanDistance(const std::vector<double>& a,
                         const std::vector<double>& b) {
  double sum = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    double d = a[i] - b[i];
    sum += d * d;
  }
  return std::sqrt(sum);
}

std::vector<NamedVector> MinMaxScaled(const std::vector<NamedVector>& items) {
  std::vector<NamedVector> scaled = items;
  if (items.empty()) return scaled;
  size_t dims = items[0].values.size();
  for (size_t d = 0; d < dims; ++d) {
    double lo = items[0].values[d];
    double hi = lo;
    for (const NamedVector& item : items) {
      lo = std::min(lo, item.values[d]);
      hi = std::max(hi, item.values[d]);
    }
    for (NamedVector& item : scaled) {
      item.values[d] = (hi > lo) ? (item.values[d] - lo) / (hi - lo) : 0.0;
    }
  }
  return scaled;
}

void ValidateItems(const std::vector<NamedVector>& items) {
  if (items.size() < 2) {
    throw DomainError("clustering needs at least 2 vectors");
  }
  std::set<std::string> seen;
  for (const NamedVector& item : items) {
    if (!seen.insert(item.name).second) {
      throw DomainError("duplicate vector name: " + item.name);
    }
    if (item.values.size() != items[0].values.size()) {
      throw DomainError("feature vectors differ in length (" + item.name +
                        ")");
    }
  }
}

bool AllIdentical(const std::vector<NamedVector>& items) {
  for (size_t i = 1; i < items.size(); ++i) {
    if (items[i].values != items[0].values) return false;
  }
  return true;
}

void ValidateGranularity(int granularity) {
  if (granularity < 1 || granularity > 5) {
    std::ostringstream msg;
    msg << "granularity must be in [1, 5], got " << granularity;
    throw DomainError(msg.str());
  }
}

Partition SingleClusterPartition(const std::vector<NamedVector>& items,
                                 int granularity) {
  Partition p;
  p.granularity = granularity;
  p.k = 1;
  std::vector<std::string> names;
  names.reserve(items.size());
  for (const NamedVector& item : items) names.push_back(item.name);
  std::sort(names.begin(), names.end());
  p.clusters.push_back(std::move(names));
  p.diagnostics.push_back(Diagnostic{
      "", "no_separation",
      "all feature vectors are identical; returning a single cluster"});
  return p;
}

}  // namespace

int Partition::ClusterOf(const std::string& name) const {
  for (size_t c = 0; c < clusters.size(); ++c) {
    if (std::find(clusters[c].begin(), clusters[c].end(), name) !=
        clusters[c].end()) {
      return static_cast<int>(c);
    }
  }
  return -1;
}

bool Partition::SameClusters(const Partition& other) const {
  return clusters == other.clusters;
}

bool Partition::Refines(const Partition& coarser) const {
  for (const std::vector<std::string>& cluster : clusters) {
    if (cluster.empty()) return false;
    int home = coarser.ClusterOf(cluster.front());
    if (home < 0) return false;
    const std::vector<std::string>& target = coarser.clusters[home];
    for (const std::string& name : cluster) {
      if (std::find(target.begin(), target.end(), name) == target.end()) {
        return false;
      }
    }
  }
  return true;
}

int GranularityK(int n, int granularity) {
  ValidateGranularity(granularity);
  return std::max(2, n / (10 - granularity));
}

Dendrogram Agglomerate(const std::vector<NamedVector>& items, bool normalize) {
  ValidateItems(items);
  std::vector<NamedVector> data = normalize ? MinMaxScaled(items) : items;

  int n = static_cast<int>(data.size());
  int total = 2 * n - 1;
  std::vector<std::vector<double>> dist(
      total, std::vector<double>(total, 0.0));
  std::vector<bool> active(total, false);
  std::vector<int> size(total, 0);
  std::vector<std::string> rep(total);

  Dendrogram out;
  for (int i = 0; i < n; ++i) {
    out.leaves.push_back(data[i].name);
    active[i] = true;
    size[i] = 1;
    rep[i] = data[i].name;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      dist[i][j] = dist[j][i] = EuclideanDistance(data[i].values,
                                                  data[j].values);
    }
  }

  double last_height = 0.0;
  for (int step = 0; step < n - 1; ++step) {
    int best_a = -1;
    int best_b = -1;
    double best_d = 0.0;
    for (int a = 0; a < total; ++a) {
      if (!active[a]) continue;
      for (int b = a + 1; b < total; ++b) {
        if (!active[b]) continue;
        double d = dist[a][b];
        bool better;
        if (best_a < 0 || d < best_d) {
          better = true;
        } else if (d > best_d) {
          better = false;
        } else {
          auto key = std::minmax(rep[a], rep[b]);
          auto best_key = std::minmax(rep[best_a], rep[best_b]);
          better = key < best_key;
        }
        if (better) {
          best_a = a;
          best_b = b;
          best_d = d;
        }
      }
    }

    int merged = n + step;
    last_height = std::max(last_height, best_d);
    out.merges.push_back(Dendrogram::Merge{best_a, best_b, last_height});

    active[best_a] = false;
    active[best_b] = false;
    active[merged] = true;
    size[merged] = size[best_a] + size[best_b];
    rep[merged] = std::min(rep[best_a], rep[best_b]);
    for (int k = 0; k < merged; ++k) {
      if (!active[k]) continue;
      double d = (size[best_a] * dist[best_a][k] +
                  size[best_b] * dist[best_b][k]) /
                 size[merged];
      dist[merged][k] = dist[k][merged] = d;
    }
  }
  return out;
}

Partition CutAtK(const Dendrogram& dendrogram, int k) {
  int n = static_cast<int>(dendrogram.leaves.size());
  if (k < 1 || k > n) {
    std::ostringstream msg;
    msg << "cannot cut " << n << " leaves into " << k << " clusters";
    throw DomainError(msg.str());
  }

  std::set<int> live;
  for (int i = 0; i < n; ++i) live.insert(i);
  for (int i = 0; i < n - k; ++i) {
    const Dendrogram::Merge& m = dendrogram.merges[i];
    live.erase(m.left);
    live.erase(m.right);
    live.insert(n + i);
  }

  std::vector<std::string> names;
  auto collect = [&](auto&& self, int node) -> void {
    if (node < n) {
      names.push_back(dendrogram.leaves[node]);
      return;
    }
    const Dendrogram::Merge& m = dendrogram.merges[node - n];
    self(self, m.left);
    self(self, m.right);
  };

  Partition p;
  p.k = k;
  for (int node : live) {
    names.clear();
    collect(collect, node);
    std::sort(names.begin(), names.end());
    p.clusters.push_back(names);
  }
  std::sort(p.clusters.begin(), p.clusters.end(),
            [](const std::vector<std::string>& a,
               const std::vector<std::string>& b) {
              return a.front() < b.front();
            });
  return p;
}

Partition Cluster(const std::vector<NamedVector>& items,
                  const ClusterOptions& options) {
  ValidateItems(items);
  ValidateGranularity(options.granularity);
  if (AllIdentical(items)) {
    return SingleClusterPartition(items, options.granularity);
  }
  Dendrogram dendrogram = Agglomerate(items, options.normalize);
  int k = GranularityK(static_cast<int>(items.size()), options.granularity);
  Partition p = CutAtK(dendrogram, k);
  p.granularity = options.granularity;
  return p;
}

std::vector<Partition> NestedPartitions(const std::vector<NamedVector>& items,
                                        const std::vector<int>& granularities,
                                        const ClusterOptions& options) {
  if (granularities.empty()) {
    throw DomainError("nested clustering needs at least one granularity");
  }
  for (size_t i = 0; i < granularities.size(); ++i) {
    ValidateGranularity(granularities[i]);
    if (i > 0 && granularities[i] <= granularities[i - 1]) {
      throw DomainError("granularities must be strictly increasing");
    }
  }
  ValidateItems(items);

  std::vector<Partition> result;
  if (AllIdentical(items)) {
    for (int g : granularities) {
      Partition p = SingleClusterPartition(items, g);
      if (!result.empty()) {
        p.parent = std::make_shared<const Partition>(result.back());
      }
      result.push_back(std::move(p));
    }
    return result;
  }

  Dendrogram dendrogram = Agglomerate(items, options.normalize);
  int n = static_cast<int>(items.size());
  for (int g : granularities) {
    Partition p = CutAtK(dendrogram, GranularityK(n, g));
    p.granularity = g;
    if (!result.empty()) {
      p.parent = std::make_shared<const Partition>(result.back());
    }
    result.push_back(std::move(p));
  }
  return result;
}

std::vector<NamedVector> StatementVectors(const Corpus& corpus,
                                          const Encoder& encoder, int depth,
                                          int width) {
  TreeBuilder builder(corpus);
  std::vector<NamedVector> vectors;
  vectors.reserve(corpus.entries.size());
  for (const CorpusEntry& entry : corpus.entries) {
    TermTree tree = builder.Build(entry.statement);
    vectors.push_back(
        NamedVector{entry.name, EncodeTree(tree, encoder, depth, width)
                                    .Flatten()});
  }
  return vectors;
}

std::vector<NamedVector> ProofVectors(const Corpus& corpus,
                                      const Encoder& encoder,
                                      const TacticRegistry& registry,
                                      const ProofEncodeOptions& options) {
  std::vector<NamedVector> vectors;
  for (const CorpusEntry& entry : corpus.entries) {
    if (!entry.proof.has_value() || entry.proof->empty()) continue;
    vectors.push_back(NamedVector{
        entry.name, EncodeProof(entry, encoder, registry, options).Flatten()});
  }
  return vectors;
}

RecurrentResult RecurrentCluster(const Corpus& corpus,
                                 const RecurrentOptions& options) {
  if (corpus.entries.size() < 2) {
    throw DomainError("recurrent clustering needs at least 2 entries");
  }
  if (options.max_iters < 1) {
    throw DomainError("max_iters must be >= 1");
  }
  ValidateGranularity(options.granularity);

  // Tree shapes never change between passes; only the codes do.
  TreeBuilder builder(corpus);
  std::vector<TermTree> trees;
  trees.reserve(corpus.entries.size());
  for (const CorpusEntry& entry : corpus.entries) {
    trees.push_back(builder.Build(entry.statement));
  }

  ClusterOptions cluster_options;
  cluster_options.granularity = options.granularity;
  cluster_options.seed = options.seed;
  cluster_options.normalize = options.normalize;

  Encoder encoder = Encoder::Initial(corpus);
  Partition previous;
  bool have_previous = false;

  RecurrentResult result;
  for (int pass = 1; pass <= options.max_iters; ++pass) {
    std::vector<NamedVector> vectors;
    vectors.reserve(trees.size());
    for (size_t i = 0; i < trees.size(); ++i) {
      vectors.push_back(NamedVector{
          corpus.entries[i].name,
          EncodeTree(trees[i], encoder, options.depth, options.width)
              .Flatten()});
    }
    Partition partition = Cluster(vectors, cluster_options);
    encoder = Encoder::FromClusters(corpus, partition.clusters);
    result.passes = pass;
    if (have_previous && partition.SameClusters(previous)) {
      result.converged = true;
      result.partition = std::move(partition);
      result.encoder = std::move(encoder);
      return result;
    }
    previous = std::move(partition);
    have_previous = true;
  }
  result.converged = false;
  result.partition = std::move(previous);
  result.encoder = std::move(encoder);
  return result;
}

Partition ClusterProofs(const Corpus& corpus, const Encoder& encoder,
                        const TacticRegistry& registry,
                        const ClusterOptions& options,
                        const ProofEncodeOptions& proof_options) {
  std::vector<NamedVector> vectors =
      ProofVectors(corpus, encoder, registry, proof_options);
  if (vectors.empty()) {
    throw DomainError("no entries with proofs to cluster");
  }
  return Cluster(vectors, options);
}

std::string PartitionJson(const Partition& partition, bool converged,
                          int passes) {
  nlohmann::ordered_json doc;
  doc["granularity"] = partition.granularity;
  doc["k"] = partition.k;
  doc["clusters"] = nlohmann::ordered_json::array();
  for (size_t c = 0; c < partition.clusters.size(); ++c) {
    nlohmann::ordered_json cluster;
    cluster["id"] = c;
    cluster["members"] = partition.clusters[c];
    doc["clusters"].push_back(cluster);
  }
  doc["converged"] = converged;
  doc["passes"] = passes;
  return doc.dump(2) + "\n";
}

}  // namespace proofscope
