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
#include "proofscope/corpus.hpp"
#include "proofscope/diagnostics.hpp"
#include "proofscope/term.hpp"
#include "test_util.hpp"

using namespace proofscope;
using proofscope_test::kFamiliesCorpus;
using proofscope_test::kPathsCorpus;
using proofscope_test::LoadBundled;

namespace {

bool HasRule(const std::vector<Diagnostic>& diags, const std::string& rule) {
  return std::any_of(diags.begin(), diags.end(),
                     [&](const Diagnostic& d) { return d.rule == rule; });
}

}  // namespace

TEST_CASE("corpus: minimal library with one definition") {
  Corpus c = ParseCorpus(
      "(library Lib)\n"
      "(entry definition Lib.id\n"
      "  (statement (forall (A (sort Type)) (arrow (var A) (var A)))))\n");
  REQUIRE(c.libraries.size() == 1);
  CHECK(c.libraries[0].name == "Lib");
  REQUIRE(c.entries.size() == 1);
  CHECK(c.entries[0].name == "Lib.id");
  CHECK(c.entries[0].kind == EntryKind::kDefinition);
  CHECK(c.entries[0].library == "Lib");
  CHECK_FALSE(c.entries[0].proof.has_value());
  CHECK(c.FindEntry("Lib.id") != nullptr);
  CHECK(c.FindEntry("Lib.missing") == nullptr);
  CHECK(c.EntryIndex("Lib.id") == 0);
  CHECK(c.EntryIndex("nope") == -1);
}

TEST_CASE("corpus: comments and whitespace are ignored") {
  Corpus c = ParseCorpus(
      "; leading comment\n"
      "(library L) ; trailing comment\n"
      "  (entry definition L.a ; mid-form comment\n"
      "    (statement (sort Prop)))\n");
  CHECK(c.entries.size() == 1);
}

TEST_CASE("corpus: identifiers may carry digits, underscores, primes, dots") {
  Corpus c = ParseCorpus(
      "(library L2)\n"
      "(entry definition L2.foo_bar'1 (statement (sort Prop)))\n");
  CHECK(c.entries[0].name == "L2.foo_bar'1");
  CHECK(c.entries[0].library == "L2");
}

TEST_CASE("corpus: parse errors carry positions") {
  CHECK_THROWS_AS(ParseCorpus("(library"), ParseError);
  CHECK_THROWS_AS(ParseCorpus(")"), ParseError);
  CHECK_THROWS_AS(ParseCorpus("(frobnicate x)"), ParseError);
  CHECK_THROWS_AS(ParseCorpus("(entry theorem T)"), ParseError);
  try {
    ParseCorpus("(library L)\n(entry definition L.a (statement (var)))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.col() > 0);
    CHECK(std::string(e.what()).find("2:") != std::string::npos);
  }
}

TEST_CASE("corpus: app needs at least one argument") {
  CHECK_THROWS_AS(
      ParseCorpus("(library L)\n"
                  "(entry definition L.a (statement (app (var x))))"),
      ParseError);
}

TEST_CASE("corpus: nested app heads are flattened") {
  Corpus c = ParseCorpus(
      "(library L)\n"
      "(entry definition L.f (statement (sort Type)))\n"
      "(entry definition L.a\n"
      "  (statement (forall (x (sort Type))\n"
      "    (app (app (const L.f) (var x)) (var x)))))\n");
  const TermPtr& body = c.entries[1].statement->body;
  REQUIRE(body->kind == TermKind::kApp);
  CHECK(body->head->kind == TermKind::kConst);
  CHECK(body->args.size() == 2);
}

TEST_CASE("corpus: validation findings") {
  SUBCASE("duplicate names") {
    Corpus c = ParseCorpusLenient(
        "(library L)\n"
        "(entry definition L.a (statement (sort Prop)))\n"
        "(entry definition L.a (statement (sort Prop)))\n");
    CHECK(HasRule(ValidateCorpus(c), "duplicate-name"));
  }
  SUBCASE("unresolved reference") {
    Corpus c = ParseCorpusLenient(
        "(library L)\n"
        "(entry definition L.a (statement (const L.ghost)))\n");
    CHECK(HasRule(ValidateCorpus(c), "unresolved-reference"));
  }
  SUBCASE("forward reference") {
    Corpus c = ParseCorpusLenient(
        "(library L)\n"
        "(entry definition L.a (statement (const L.b)))\n"
        "(entry definition L.b (statement (sort Prop)))\n");
    CHECK(HasRule(ValidateCorpus(c), "forward-reference"));
  }
  SUBCASE("theorem without proof") {
    Corpus c = ParseCorpusLenient(
        "(library L)\n(entry theorem L.t (statement (sort Prop)))\n");
    CHECK(HasRule(ValidateCorpus(c), "theorem-without-proof"));
  }
  SUBCASE("unbound variable in statement") {
    Corpus c = ParseCorpusLenient(
        "(library L)\n(entry definition L.a (statement (var x)))\n");
    CHECK(HasRule(ValidateCorpus(c), "unbound-variable"));
  }
  SUBCASE("binders close their own variables") {
    Corpus c = ParseCorpusLenient(
        "(library L)\n"
        "(entry definition L.a\n"
        "  (statement (forall (x (sort Type))\n"
        "    (lambda (y (var x)) (var y)))))\n");
    CHECK(ValidateCorpus(c).empty());
  }
  SUBCASE("primitive code below the fixed range") {
    Corpus c = ParseCorpusLenient(
        "(library L)\n(primitive L.p 3)\n"
        "(entry definition L.a (statement (sort Prop)))\n");
    CHECK(HasRule(ValidateCorpus(c), "primitive-code-range"));
  }
  SUBCASE("undeclared import and self import") {
    Corpus c = ParseCorpusLenient(
        "(library A (imports A Ghost))\n"
        "(entry definition A.x (statement (sort Prop)))\n");
    auto diags = ValidateCorpus(c);
    CHECK(HasRule(diags, "import-self"));
    CHECK(HasRule(diags, "import-undeclared"));
  }
  SUBCASE("entry in an undeclared library") {
    Corpus c = ParseCorpusLenient(
        "(entry definition Ghost.a (statement (sort Prop)))\n");
    CHECK(HasRule(ValidateCorpus(c), "undeclared-library"));
  }
}

TEST_CASE("corpus: strict parse throws CorpusError with findings") {
  try {
    ParseCorpus("(library L)\n(entry definition L.a (statement (var x)))\n");
    FAIL("expected CorpusError");
  } catch (const CorpusError& e) {
    CHECK(std::string(e.what()).find("unbound") != std::string::npos);
  }
}

TEST_CASE("corpus: declarations cannot follow entries") {
  CHECK_THROWS_AS(
      ParseCorpus("(entry definition L.a (statement (sort Prop)))\n"
                  "(library L)\n"),
      ParseError);
  CHECK_THROWS_AS(
      ParseCorpus("(library L)\n"
                  "(entry definition L.a (statement (sort Prop)))\n"
                  "(primitive L.p 10)\n"),
      ParseError);
}

TEST_CASE("corpus: proof steps parse fully") {
  Corpus c = ParseCorpus(
      "(library L)\n"
      "(primitive L.P 10)\n"
      "(entry theorem L.t\n"
      "  (statement (forall (h (const L.P)) (const L.P)))\n"
      "  (proof\n"
      "    (step destruct (args (var h)) (goal (const L.P)) (subgoals 1))\n"
      "    (step reflexivity (args) (goal (const L.P)) (subgoals 0)))\n"
      "  (deps L.P))\n");
  REQUIRE(c.entries[0].proof.has_value());
  const auto& steps = *c.entries[0].proof;
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].tactic == "destruct");
  REQUIRE(steps[0].args.size() == 1);
  CHECK(steps[0].args[0]->kind == TermKind::kVar);
  CHECK(steps[0].subgoals_after == 1);
  CHECK(steps[1].args.empty());
  REQUIRE(c.entries[0].declared_deps.has_value());
  CHECK(c.entries[0].declared_deps->size() == 1);
}

TEST_CASE("corpus: negative subgoal counts rejected at parse time") {
  CHECK_THROWS_AS(
      ParseCorpus("(library L)\n"
                  "(entry theorem L.t (statement (sort Prop))\n"
                  "  (proof (step simpl (args) (goal (sort Prop))"
                  " (subgoals -1))))\n"),
      ParseError);
}

TEST_CASE("corpus: ReferencedNames covers statement, proof and deps") {
  Corpus c = ParseCorpus(
      "(library L)\n"
      "(primitive L.P 10)\n"
      "(primitive L.Q 11)\n"
      "(primitive L.R 12)\n"
      "(entry theorem L.t\n"
      "  (statement (arrow (const L.P) (const L.P)))\n"
      "  (proof (step exact (args (const L.Q)) (goal (const L.P))"
      " (subgoals 0)))\n"
      "  (deps L.R))\n");
  auto refs = ReferencedNames(c.entries[0]);
  // First-mention order, duplicates removed.
  REQUIRE(refs.size() == 3);
  CHECK(refs[0] == "L.P");
  CHECK(refs[1] == "L.Q");
  CHECK(refs[2] == "L.R");
}

TEST_CASE("corpus: serialize then parse is the identity on the text form") {
  auto roundtrip = [](const std::string& file) {
    Corpus c = LoadBundled(file);
    std::string once = SerializeCorpus(c);
    Corpus c2 = ParseCorpus(once);
    std::string twice = SerializeCorpus(c2);
    CHECK(once == twice);
    CHECK(c2.entries.size() == c.entries.size());
    for (size_t i = 0; i < c.entries.size(); ++i) {
      CHECK(c2.entries[i].name == c.entries[i].name);
      CHECK(c2.entries[i].kind == c.entries[i].kind);
      CHECK(StructurallyEqual(c2.entries[i].statement,
                              c.entries[i].statement));
    }
  };
  roundtrip(kPathsCorpus);
  roundtrip(kFamiliesCorpus);
}

TEST_CASE("corpus: bundled corpora validate cleanly") {
  CHECK(ValidateCorpus(LoadBundled(kPathsCorpus)).empty());
  CHECK(ValidateCorpus(LoadBundled(kFamiliesCorpus)).empty());
}

TEST_CASE("corpus: bundled shapes match their documented layout") {
  Corpus paths = LoadBundled(kPathsCorpus);
  CHECK(paths.libraries.size() == 4);
  CHECK(paths.entries.size() == 28);
  int proved = 0;
  for (const auto& e : paths.entries)
    if (e.proof && !e.proof->empty()) ++proved;
  CHECK(proved == 15);

  Corpus fam = LoadBundled(kFamiliesCorpus);
  CHECK(fam.libraries.size() == 1);
  CHECK(fam.entries.size() == 20);
  for (const auto& e : fam.entries) {
    CHECK(e.kind == EntryKind::kTheorem);
    REQUIRE(e.proof.has_value());
    CHECK_FALSE(e.proof->empty());
  }
}
