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

// End-to-end checks against the installed command-line binary.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "test_util.hpp"

namespace {

using namespace proofscope_test;
namespace fs = std::filesystem;

struct CliResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

fs::path ScratchDir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("proofscope_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string Slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

CliResult RunCli(const std::string& args) {
  static int counter = 0;
  fs::path out = ScratchDir() / ("out" + std::to_string(counter));
  fs::path err = ScratchDir() / ("err" + std::to_string(counter));
  ++counter;

  std::string cmd = std::string("'") + PROOFSCOPE_CLI_PATH + "' " + args +
                    " > '" + out.string() + "' 2> '" + err.string() + "'";
  int rc = std::system(cmd.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  result.out = Slurp(out);
  result.err = Slurp(err);
  return result;
}

std::string Corpus(const std::string& name) {
  return "'" + CorpusPath(name) + "'";
}

fs::path WriteTemp(const std::string& name, const std::string& text) {
  fs::path path = ScratchDir() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path;
}

TEST_CASE("validate accepts the bundled corpora") {
  CliResult paths = RunCli("validate " + Corpus(kPathsCorpus));
  CHECK(paths.exit_code == 0);
  CHECK(paths.out == "ok: 28 entries, 0 primitives, 4 libraries\n");

  CliResult families = RunCli("validate " + Corpus(kFamiliesCorpus));
  CHECK(families.exit_code == 0);
  CHECK(families.out == "ok: 20 entries, 41 primitives, 1 libraries\n");
}

TEST_CASE("validate reports findings and exits nonzero") {
  fs::path bad = WriteTemp("bad.corpus",
                           "(library L (imports))\n"
                           "(entry theorem L.t (statement (sort Type)))\n");
  CliResult plain = RunCli("validate '" + bad.string() + "'");
  CHECK(plain.exit_code == 1);
  CHECK(plain.err.find("theorem-without-proof") != std::string::npos);

  CliResult json = RunCli("validate --json-diagnostics '" + bad.string() +
                          "'");
  CHECK(json.exit_code == 1);
  nlohmann::json doc = nlohmann::json::parse(json.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["entry"] == "L.t");
  CHECK(doc[0]["rule"] == "theorem-without-proof");
  CHECK(doc[0].contains("message"));
}

TEST_CASE("syntax errors and missing files exit 1") {
  fs::path broken = WriteTemp("broken.corpus", "(library L (imports)\n");
  CliResult r = RunCli("validate '" + broken.string() + "'");
  CHECK(r.exit_code == 1);
  CHECK(!r.err.empty());

  CliResult missing = RunCli("validate /nonexistent/nope.corpus");
  CHECK(missing.exit_code == 1);
}

TEST_CASE("usage problems exit 2") {
  CHECK(RunCli("").exit_code == 2);
  CHECK(RunCli("frobnicate x").exit_code == 2);
  CHECK(RunCli("cluster " + Corpus(kPathsCorpus) +
               " --kind terms --granularity 6")
            .exit_code == 2);
  CHECK(RunCli("cluster " + Corpus(kPathsCorpus) + " --kind sideways")
            .exit_code == 2);
  CHECK(RunCli("report " + Corpus(kPathsCorpus) +
               " --kind terms --granularity 3 --nested 2")
            .exit_code == 2);
  CHECK(RunCli("report " + Corpus(kPathsCorpus) +
               " --kind terms --format dot")
            .exit_code == 2);
  CHECK(RunCli("report " + Corpus(kPathsCorpus) +
               " --kind terms --format automaton")
            .exit_code == 2);
}

TEST_CASE("version prints and exits clean") {
  CliResult r = RunCli("--version");
  CHECK(r.exit_code == 0);
  CHECK(!r.out.empty());
}

TEST_CASE("termtree renders text and dot") {
  CliResult text = RunCli("termtree " + Corpus(kPathsCorpus) +
                          " Paths.dpath_path_l");
  CHECK(text.exit_code == 0);
  CHECK(text.out.rfind("(0,0) forall\n", 0) == 0);
  CHECK(text.out.find("paths ?X : ?X -> ?X -> Type") != std::string::npos);

  CliResult dot = RunCli("termtree " + Corpus(kPathsCorpus) +
                         " Paths.dpath_path_l --dot");
  CHECK(dot.exit_code == 0);
  CHECK(dot.out.rfind("digraph termtree {", 0) == 0);

  CliResult unknown = RunCli("termtree " + Corpus(kPathsCorpus) +
                             " Paths.nope");
  CHECK(unknown.exit_code == 1);
}

TEST_CASE("feature tables come out as csv") {
  CliResult features = RunCli("features " + Corpus(kPathsCorpus) +
                              " Paths.dpath_path_l");
  CHECK(features.exit_code == 0);
  CHECK(features.out.rfind("depth,level,term,type,parent\n", 0) == 0);

  CliResult proof = RunCli("proof-features " + Corpus(kPathsCorpus) +
                           " Paths.dpath_path_l");
  CHECK(proof.exit_code == 0);
  CHECK(proof.out.rfind("segment,tactic1,", 0) == 0);

  // Entries without proofs cannot provide proof features.
  CliResult unproved = RunCli("proof-features " + Corpus(kPathsCorpus) +
                              " Overture.paths");
  CHECK(unproved.exit_code == 1);

  // A grid the statement cannot fit is a domain failure, not a crash.
  CliResult tiny = RunCli("features " + Corpus(kPathsCorpus) +
                          " Paths.dpath_path_l -D 3 -L 3");
  CHECK(tiny.exit_code == 1);
}

TEST_CASE("the out flag writes the same bytes the pipe carries") {
  fs::path out_file = ScratchDir() / "tree.txt";
  CliResult piped = RunCli("termtree " + Corpus(kPathsCorpus) +
                           " Paths.dpath_path_l");
  CliResult filed = RunCli("termtree " + Corpus(kPathsCorpus) +
                           " Paths.dpath_path_l --out '" +
                           out_file.string() + "'");
  CHECK(filed.exit_code == 0);
  CHECK(Slurp(out_file) == piped.out);
}

TEST_CASE("clustering runs are byte-identical") {
  std::string cmd = "cluster " + Corpus(kPathsCorpus) +
                    " --kind terms --granularity 3";
  CliResult first = RunCli(cmd);
  CliResult second = RunCli(cmd);
  CHECK(first.exit_code == 0);
  CHECK(first.out == second.out);

  nlohmann::json doc = nlohmann::json::parse(first.out);
  CHECK(doc["granularity"] == 3);
  CHECK(doc["k"] == 4);
  CHECK(doc["converged"].is_boolean());
  CHECK(doc["passes"].is_number_integer());
  REQUIRE(doc["clusters"].is_array());
  REQUIRE(doc["clusters"].size() == 4);
  CHECK(doc["clusters"][0].contains("id"));
  CHECK(doc["clusters"][0].contains("members"));

  // Proof-side clustering shares the interface.
  CliResult proofs = RunCli("cluster " + Corpus(kPathsCorpus) +
                            " --kind proofs --granularity 3");
  CHECK(proofs.exit_code == 0);
  nlohmann::json pdoc = nlohmann::json::parse(proofs.out);
  CHECK(pdoc["clusters"].is_array());
}

TEST_CASE("graphs and reports drive end to end") {
  CliResult dep = RunCli("depgraph " + Corpus(kPathsCorpus) +
                         " Paths.dpath_path_l");
  CHECK(dep.exit_code == 0);
  CHECK(dep.out.rfind("digraph dependencies {", 0) == 0);

  CliResult lib = RunCli("libgraph " + Corpus(kPathsCorpus));
  CHECK(lib.exit_code == 0);
  CHECK(lib.out.rfind("digraph libraries {", 0) == 0);

  CliResult report = RunCli("report " + Corpus(kPathsCorpus) +
                            " --kind proofs --granularity 3");
  CHECK(report.exit_code == 0);
  CHECK(report.out.rfind("Granularity 3:", 0) == 0);

  CliResult nested = RunCli("report " + Corpus(kFamiliesCorpus) +
                            " --kind terms --granularity 1 --nested 5" +
                            " --format dot");
  CHECK(nested.exit_code == 0);
  CHECK(nested.out.rfind("digraph similarity {", 0) == 0);

  CliResult automaton = RunCli("report " + Corpus(kFamiliesCorpus) +
                               " --kind proofs --granularity 5" +
                               " --format automaton");
  CHECK(automaton.exit_code == 0);
  CHECK(automaton.out.find("digraph proof_flow {") != std::string::npos);
  CHECK(automaton.out.find("// Cluster 1") != std::string::npos);
}

}  // namespace
