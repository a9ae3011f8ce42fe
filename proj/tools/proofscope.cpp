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

// Command-line front end: parse a corpus, derive features, cluster, and
// emit graphs and reports.
//
// Exit codes: 0 success, 1 domain error (bad corpus, unknown entry, grid
// overflow, ...), 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "proofscope/clustering.hpp"
#include "proofscope/corpus.hpp"
#include "proofscope/dep_graph.hpp"
#include "proofscope/diagnostics.hpp"
#include "proofscope/features.hpp"
#include "proofscope/proof_features.hpp"
#include "proofscope/report.hpp"
#include "proofscope/term_tree.hpp"

#ifndef PROOFSCOPE_VERSION
#define PROOFSCOPE_VERSION "0.0.0"
#endif

namespace {

using proofscope::ArgKind;
using proofscope::Corpus;
using proofscope::CorpusEntry;
using proofscope::Encoder;
using proofscope::Partition;
using proofscope::TacticRegistry;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw proofscope::Error("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// Empty path means stdout.
void WriteOutput(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw proofscope::Error("cannot write file: " + path);
  out << content;
  if (!out) throw proofscope::Error("write failed: " + path);
}

// Options shared by every subcommand that loads a corpus.
struct CommonOpts {
  std::string corpus_path;
  std::string registry_path;
  bool allow_unknown_tactics = false;
  bool json_diagnostics = false;
  int depth = proofscope::kDefaultDepth;
  int width = proofscope::kDefaultWidth;
  int max_goal_rows = proofscope::kDefaultMaxGoalRows;
};

void AddCommonOptions(CLI::App* cmd, CommonOpts* opts) {
  cmd->add_option("corpus", opts->corpus_path, "Corpus file to load")
      ->required();
  cmd->add_option("--registry", opts->registry_path,
                  "JSON file with extra tactic definitions");
  cmd->add_flag("--allow-unknown-tactics", opts->allow_unknown_tactics,
                "Encode unknown tactics with a reserved code instead of "
                "failing");
  cmd->add_flag("--json-diagnostics", opts->json_diagnostics,
                "Print diagnostics as JSON");
  cmd->add_option("-D,--depth", opts->depth, "Feature grid depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("-L,--width", opts->width, "Feature grid width")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("-G,--max-goal-rows", opts->max_goal_rows,
                  "Maximum goal segments per proof")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

Corpus LoadCorpus(const CommonOpts& opts) {
  return proofscope::ParseCorpus(ReadFile(opts.corpus_path));
}

TacticRegistry LoadRegistry(const CommonOpts& opts) {
  TacticRegistry registry = TacticRegistry::Builtin();
  if (!opts.registry_path.empty()) registry.MergeFile(opts.registry_path);
  return registry;
}

proofscope::ProofEncodeOptions ProofOptions(const CommonOpts& opts) {
  proofscope::ProofEncodeOptions po;
  po.max_rows = opts.max_goal_rows;
  po.allow_unknown_tactics = opts.allow_unknown_tactics;
  return po;
}

const CorpusEntry& RequireEntry(const Corpus& corpus, const std::string& name) {
  const CorpusEntry* entry = corpus.FindEntry(name);
  if (!entry) throw proofscope::DomainError("no entry named `" + name + "`");
  return *entry;
}

std::string DiagnosticsJson(const std::vector<proofscope::Diagnostic>& diags) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& d : diags) {
    arr.push_back({{"entry", d.entry}, {"rule", d.rule}, {"message", d.message}});
  }
  return arr.dump(2) + "\n";
}

// The statement pipeline: recurrent clustering fixes the constant codes, and
// the proof pipeline reuses that converged encoder so proof features see
// cluster-derived codes rather than raw declaration ordinals.
proofscope::RecurrentResult RunRecurrent(const Corpus& corpus,
                                         const CommonOpts& common,
                                         int granularity, int iters,
                                         unsigned seed, bool normalize) {
  proofscope::RecurrentOptions ro;
  ro.granularity = granularity;
  ro.max_iters = iters;
  ro.seed = seed;
  ro.normalize = normalize;
  ro.depth = common.depth;
  ro.width = common.width;
  return proofscope::RecurrentCluster(corpus, ro);
}

Partition RunProofClustering(const Corpus& corpus, const Encoder& encoder,
                             const TacticRegistry& registry,
                             const CommonOpts& common, int granularity,
                             unsigned seed, bool normalize) {
  proofscope::ClusterOptions co;
  co.granularity = granularity;
  co.seed = seed;
  co.normalize = normalize;
  return proofscope::ClusterProofs(corpus, encoder, registry, co,
                                   ProofOptions(common));
}

int RunValidate(const CommonOpts& common) {
  Corpus corpus = proofscope::ParseCorpusLenient(ReadFile(common.corpus_path));
  auto diags = proofscope::ValidateCorpus(corpus);
  if (common.json_diagnostics) {
    std::cout << DiagnosticsJson(diags);
  } else {
    for (const auto& d : diags) {
      std::cerr << (d.entry.empty() ? std::string("corpus") : d.entry) << ": "
                << d.rule << ": " << d.message << "\n";
    }
  }
  if (!diags.empty()) return 1;
  if (!common.json_diagnostics) {
    std::cout << "ok: " << corpus.entries.size() << " entries, "
              << corpus.primitives.size() << " primitives, "
              << corpus.libraries.size() << " libraries\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"proofscope: statement and proof clustering over s-expression "
               "proof corpora"};
  app.set_version_flag("--version", PROOFSCOPE_VERSION);
  app.set_config("--config", "", "Read options from a config file");
  app.require_subcommand(1);

  // validate
  CommonOpts validate_opts;
  CLI::App* validate =
      app.add_subcommand("validate", "Check a corpus and report findings");
  AddCommonOptions(validate, &validate_opts);

  // termtree
  CommonOpts termtree_opts;
  std::string termtree_name;
  std::string termtree_out;
  bool termtree_dot = false;
  CLI::App* termtree = app.add_subcommand(
      "termtree", "Render the term tree of one entry's statement");
  AddCommonOptions(termtree, &termtree_opts);
  termtree->add_option("name", termtree_name, "Entry name")->required();
  termtree->add_flag("--dot", termtree_dot, "Emit Graphviz DOT instead of text");
  termtree->add_option("--out", termtree_out, "Output file (default stdout)");

  // features
  CommonOpts features_opts;
  std::string features_name;
  std::string features_out;
  bool features_csv = false;
  CLI::App* features = app.add_subcommand(
      "features", "Dump the statement feature matrix of one entry as CSV");
  AddCommonOptions(features, &features_opts);
  features->add_option("name", features_name, "Entry name")->required();
  features->add_flag("--csv", features_csv,
                     "Emit CSV (the default and only format)");
  features->add_option("--out", features_out, "Output file (default stdout)");

  // proof-features
  CommonOpts pf_opts;
  std::string pf_name;
  std::string pf_out;
  bool pf_csv = false;
  CLI::App* pf = app.add_subcommand(
      "proof-features", "Dump the proof feature matrix of one entry as CSV");
  AddCommonOptions(pf, &pf_opts);
  pf->add_option("name", pf_name, "Entry name")->required();
  pf->add_flag("--csv", pf_csv, "Emit CSV (the default and only format)");
  pf->add_option("--out", pf_out, "Output file (default stdout)");

  // cluster
  CommonOpts cluster_opts;
  std::string cluster_kind;
  std::string cluster_out;
  int cluster_granularity = 3;
  int cluster_iters = 10;
  unsigned cluster_seed = 0;
  bool cluster_normalize = false;
  CLI::App* cluster =
      app.add_subcommand("cluster", "Cluster statements or proofs");
  AddCommonOptions(cluster, &cluster_opts);
  cluster->add_option("--kind", cluster_kind, "What to cluster")
      ->required()
      ->check(CLI::IsMember({"terms", "proofs"}));
  cluster->add_option("--granularity", cluster_granularity,
                      "Cut granularity, 1 (coarse) to 5 (fine)")
      ->check(CLI::Range(1, 5))
      ->capture_default_str();
  cluster->add_option("--iters", cluster_iters,
                      "Maximum recurrent encoding passes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cluster->add_option("--seed", cluster_seed, "Seed (accepted, unused)")
      ->capture_default_str();
  cluster->add_flag("--normalize", cluster_normalize,
                    "Min-max scale feature dimensions before distances");
  cluster->add_option("--out", cluster_out, "Output file (default stdout)");

  // depgraph
  CommonOpts depgraph_opts;
  std::string depgraph_root;
  std::string depgraph_out;
  CLI::App* depgraph = app.add_subcommand(
      "depgraph", "Entry-level dependency graph as Graphviz DOT");
  AddCommonOptions(depgraph, &depgraph_opts);
  depgraph->add_option("root", depgraph_root,
                       "Restrict to entries reachable from this entry");
  depgraph->add_option("--dot,--out", depgraph_out,
                       "Output file (default stdout)");

  // libgraph
  CommonOpts libgraph_opts;
  std::string libgraph_out;
  CLI::App* libgraph = app.add_subcommand(
      "libgraph", "Library import graph as Graphviz DOT");
  AddCommonOptions(libgraph, &libgraph_opts);
  libgraph->add_option("--dot,--out", libgraph_out,
                       "Output file (default stdout)");

  // report
  CommonOpts report_opts;
  std::string report_kind = "terms";
  std::string report_format = "text";
  std::string report_out;
  int report_granularity = 3;
  std::optional<int> report_nested;
  int report_iters = 10;
  unsigned report_seed = 0;
  bool report_normalize = false;
  std::optional<int> report_cluster;
  CLI::App* report = app.add_subcommand(
      "report", "Cluster and render text, similarity DOT, or automata");
  AddCommonOptions(report, &report_opts);
  report->add_option("--kind", report_kind, "What to cluster")
      ->check(CLI::IsMember({"terms", "proofs"}))
      ->capture_default_str();
  report->add_option("--granularity", report_granularity,
                     "Cut granularity, 1 (coarse) to 5 (fine)")
      ->check(CLI::Range(1, 5))
      ->capture_default_str();
  report
      ->add_option("--nested", report_nested,
                   "Second, finer granularity for nested output")
      ->check(CLI::Range(1, 5));
  report->add_option("--format", report_format, "Output format")
      ->check(CLI::IsMember({"text", "dot", "automaton"}))
      ->capture_default_str();
  report->add_option("--iters", report_iters,
                     "Maximum recurrent encoding passes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  report->add_option("--seed", report_seed, "Seed (accepted, unused)")
      ->capture_default_str();
  report->add_flag("--normalize", report_normalize,
                   "Min-max scale feature dimensions before distances");
  report->add_option("--cluster", report_cluster,
                     "Automaton format: render only this cluster (1-based)");
  report->add_option("--out", report_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*validate) return RunValidate(validate_opts);

    if (*termtree) {
      Corpus corpus = LoadCorpus(termtree_opts);
      const CorpusEntry& entry = RequireEntry(corpus, termtree_name);
      proofscope::TermTree tree =
          proofscope::TreeBuilder(corpus).Build(entry.statement);
      WriteOutput(termtree_out,
                  termtree_dot ? proofscope::TermTreeDot(tree, termtree_name)
                               : proofscope::TermTreeText(tree));
      return 0;
    }

    if (*features) {
      (void)features_csv;
      Corpus corpus = LoadCorpus(features_opts);
      const CorpusEntry& entry = RequireEntry(corpus, features_name);
      proofscope::TermTree tree =
          proofscope::TreeBuilder(corpus).Build(entry.statement);
      Encoder encoder = Encoder::Initial(corpus);
      proofscope::TermFeatureMatrix matrix = proofscope::EncodeTree(
          tree, encoder, features_opts.depth, features_opts.width);
      matrix.source = features_name;
      WriteOutput(features_out, matrix.Csv());
      return 0;
    }

    if (*pf) {
      (void)pf_csv;
      Corpus corpus = LoadCorpus(pf_opts);
      const CorpusEntry& entry = RequireEntry(corpus, pf_name);
      TacticRegistry registry = LoadRegistry(pf_opts);
      Encoder encoder = Encoder::Initial(corpus);
      proofscope::ProofFeatureMatrix matrix = proofscope::EncodeProof(
          entry, encoder, registry, ProofOptions(pf_opts));
      WriteOutput(pf_out, matrix.Csv());
      if (pf_opts.json_diagnostics && !matrix.diagnostics.empty())
        std::cerr << DiagnosticsJson(matrix.diagnostics);
      return 0;
    }

    if (*cluster) {
      Corpus corpus = LoadCorpus(cluster_opts);
      std::string json;
      if (cluster_kind == "terms") {
        auto rec = RunRecurrent(corpus, cluster_opts, cluster_granularity,
                                cluster_iters, cluster_seed, cluster_normalize);
        json = proofscope::PartitionJson(rec.partition, rec.converged,
                                         rec.passes);
      } else {
        TacticRegistry registry = LoadRegistry(cluster_opts);
        auto rec = RunRecurrent(corpus, cluster_opts, cluster_granularity,
                                cluster_iters, cluster_seed, cluster_normalize);
        Partition part = RunProofClustering(
            corpus, rec.encoder, registry, cluster_opts, cluster_granularity,
            cluster_seed, cluster_normalize);
        json = proofscope::PartitionJson(part, true, 1);
      }
      WriteOutput(cluster_out, json);
      return 0;
    }

    if (*depgraph) {
      Corpus corpus = LoadCorpus(depgraph_opts);
      proofscope::DepGraph graph =
          proofscope::BuildDg1(corpus, depgraph_root);
      WriteOutput(depgraph_out, proofscope::DepGraphDot(graph));
      return 0;
    }

    if (*libgraph) {
      Corpus corpus = LoadCorpus(libgraph_opts);
      proofscope::LibGraph graph = proofscope::BuildDg2(corpus);
      WriteOutput(libgraph_out, proofscope::LibGraphDot(graph));
      return 0;
    }

    if (*report) {
      if (report_nested && *report_nested <= report_granularity)
        throw UsageError("--nested must be finer than --granularity");
      if (report_format == "dot" && !report_nested)
        throw UsageError("--format dot needs --nested for the inner boxes");
      if (report_format == "automaton" && report_kind != "proofs")
        throw UsageError("--format automaton needs --kind proofs");
      if (report_cluster && report_format != "automaton")
        throw UsageError("--cluster only applies to --format automaton");

      Corpus corpus = LoadCorpus(report_opts);
      TacticRegistry registry = LoadRegistry(report_opts);
      auto rec = RunRecurrent(corpus, report_opts, report_granularity,
                              report_iters, report_seed, report_normalize);

      // Base partition for the requested kind.
      Partition base = rec.partition;
      if (report_kind == "proofs")
        base = RunProofClustering(corpus, rec.encoder, registry, report_opts,
                                  report_granularity, report_seed,
                                  report_normalize);

      std::string out;
      if (report_format == "text") {
        out = proofscope::TextReport(base, corpus);
        if (report_nested) {
          Partition fine =
              report_kind == "proofs"
                  ? RunProofClustering(corpus, rec.encoder, registry,
                                       report_opts, *report_nested,
                                       report_seed, report_normalize)
                  : RunRecurrent(corpus, report_opts, *report_nested,
                                 report_iters, report_seed, report_normalize)
                        .partition;
          out += "\n" + proofscope::TextReport(fine, corpus);
        }
      } else if (report_format == "dot") {
        // Both cuts must come from one dendrogram for the refinement
        // guarantee, so re-cluster the converged vectors at both
        // granularities instead of reusing `base`.
        proofscope::ClusterOptions co;
        co.seed = report_seed;
        co.normalize = report_normalize;
        std::vector<proofscope::NamedVector> vectors =
            report_kind == "proofs"
                ? proofscope::ProofVectors(corpus, rec.encoder, registry,
                                           ProofOptions(report_opts))
                : proofscope::StatementVectors(corpus, rec.encoder,
                                               report_opts.depth,
                                               report_opts.width);
        std::vector<Partition> cuts = proofscope::NestedPartitions(
            vectors, {report_granularity, *report_nested}, co);
        out = proofscope::SimilarityDot(cuts[0], cuts[1]);
      } else {
        // One automaton per cluster, or a single cluster via --cluster.
        std::ostringstream dot;
        int id = 0;
        for (const auto& members : base.clusters) {
          ++id;
          if (report_cluster && *report_cluster != id) continue;
          proofscope::Automaton automaton = proofscope::BuildAutomaton(
              corpus, members, registry, report_opts.allow_unknown_tactics);
          dot << "// Cluster " << id << "\n"
              << proofscope::AutomatonDot(automaton);
        }
        if (report_cluster && (*report_cluster < 1 ||
                               *report_cluster > static_cast<int>(
                                                     base.clusters.size())))
          throw UsageError("--cluster out of range; partition has " +
                           std::to_string(base.clusters.size()) +
                           " clusters");
        out = dot.str();
      }
      WriteOutput(report_out, out);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const proofscope::CorpusError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const proofscope::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
