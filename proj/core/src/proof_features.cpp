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

#include "proofscope/proof_features.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "proofscope/term.hpp"

namespace proofscope {

namespace {

constexpr int kMaxArgSlots = 4;
constexpr int kMaxTacticSlots = 4;

// Statement binders indexed in the order they appear in the statement
// text; the declared types of bound variables do not introduce anything
// themselves.
class BinderEnv {
 public:
  explicit BinderEnv(const TermPtr& statement) { Walk(statement); }

  struct Binding {
    int index = 0;
    TermPtr type;
  };

  const Binding* Find(const std::string& name) const {
    auto it = bindings_.find(name);
    if (it == bindings_.end() || it->second.empty()) return nullptr;
    return &it->second.back();
  }

 private:
  void Walk(const TermPtr& t) {
    if (t == nullptr) return;
    switch (t->kind) {
      case TermKind::kVar:
      case TermKind::kConst:
      case TermKind::kSort:
      case TermKind::kMeta:
        return;
      case TermKind::kBinder:
        bindings_[t->name].push_back(Binding{++counter_, t->bound_type});
        Walk(t->body);
        return;
      case TermKind::kApp:
        Walk(t->head);
        for (const TermPtr& a : t->args) Walk(a);
        return;
      case TermKind::kArrow:
        Walk(t->from);
        Walk(t->to);
        return;
    }
  }

  std::map<std::string, std::vector<Binding>> bindings_;
  int counter_ = 0;
};

Keyword SortKeyword(const std::string& name) {
  if (name == "Type") return Keyword::kType;
  if (name == "Prop") return Keyword::kProp;
  return Keyword::kSet;
}

Keyword BinderKeyword(BinderKind kind) {
  switch (kind) {
    case BinderKind::kForall:
      return Keyword::kForall;
    case BinderKind::kLambda:
      return Keyword::kLambda;
    case BinderKind::kLet:
      return Keyword::kLet;
  }
  throw DomainError("unknown binder kind");
}

LabelSem SemOfTerm(const TermPtr& t, const BinderEnv& env,
                   const std::string& context) {
  LabelSem sem;
  switch (t->kind) {
    case TermKind::kVar: {
      const BinderEnv::Binding* b = env.Find(t->name);
      if (b == nullptr) {
        throw DomainError("variable " + t->name +
                          " is not bound by the statement of " + context);
      }
      sem.tag = LabelSem::Tag::kVar;
      sem.index = b->index;
      return sem;
    }
    case TermKind::kConst:
      sem.tag = LabelSem::Tag::kConst;
      sem.constant = t->name;
      return sem;
    case TermKind::kSort:
      sem.tag = LabelSem::Tag::kKeyword;
      sem.keyword = SortKeyword(t->name);
      return sem;
    case TermKind::kMeta:
      throw DomainError("metavariable in a proof of " + context);
    case TermKind::kApp:
      sem = SemOfTerm(t->head, env, context);
      sem.arg_count = static_cast<int>(t->args.size());
      return sem;
    case TermKind::kArrow:
      sem.tag = LabelSem::Tag::kKeyword;
      sem.keyword = Keyword::kArrow;
      sem.arg_count = 2;
      return sem;
    case TermKind::kBinder:
      sem.tag = LabelSem::Tag::kKeyword;
      sem.keyword = BinderKeyword(t->binder);
      sem.arg_count = 2;
      return sem;
  }
  throw DomainError("unknown term kind");
}

double BareHeadCode(const TermPtr& t, const Encoder& encoder,
                    const BinderEnv& env, const std::string& context) {
  LabelSem sem = SemOfTerm(t, env, context);
  sem.arg_count = 0;
  return encoder.Code(sem);
}

std::vector<TermPtr> ImmediateSubterms(const TermPtr& t) {
  switch (t->kind) {
    case TermKind::kApp:
      return t->args;
    case TermKind::kArrow:
      return {t->from, t->to};
    case TermKind::kBinder:
      return {t->bound_type, t->body};
    default:
      return {};
  }
}

ArgKind ArgKindFromName(const std::string& name) {
  if (name == "none") return ArgKind::kNone;
  if (name == "hypothesis") return ArgKind::kHypothesis;
  if (name == "term") return ArgKind::kTerm;
  throw DomainError("tactic registry argument kind must be none, hypothesis "
                    "or term, got: " +
                    name);
}

std::string FormatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

TacticRegistry TacticRegistry::Builtin() {
  TacticRegistry r;
  r.tactics_["destruct"] = {1, ArgKind::kHypothesis};
  r.tactics_["simpl"] = {2, ArgKind::kNone};
  r.tactics_["exact"] = {3, ArgKind::kTerm};
  r.tactics_["refine"] = {4, ArgKind::kTerm};
  r.tactics_["apply"] = {5, ArgKind::kTerm};
  r.tactics_["reflexivity"] = {6, ArgKind::kNone};
  return r;
}

void TacticRegistry::MergeJson(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError(std::string("tactic registry is not valid JSON: ") +
                      e.what());
  }
  if (!doc.is_object()) {
    throw DomainError("tactic registry must be a JSON object keyed by "
                      "tactic name");
  }
  std::map<std::string, TacticInfo> merged = tactics_;
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    const std::string& name = it.key();
    if (name.empty()) throw DomainError("tactic registry has an empty name");
    const nlohmann::json& value = it.value();
    if (!value.is_object() || !value.contains("code") ||
        !value["code"].is_number_integer() || !value.contains("args") ||
        !value["args"].is_string()) {
      throw DomainError("tactic registry entry for " + name +
                        " must look like {\"code\": 7, \"args\": \"term\"}");
    }
    TacticInfo info;
    info.code = value["code"].get<int>();
    info.arg_kind = ArgKindFromName(value["args"].get<std::string>());
    if (info.code < 1) {
      throw DomainError("tactic code for " + name + " must be >= 1");
    }
    if (info.code == kUnknownCode) {
      std::ostringstream msg;
      msg << "tactic code " << kUnknownCode << " is reserved (" << name << ")";
      throw DomainError(msg.str());
    }
    merged[name] = info;
  }
  for (auto a = merged.begin(); a != merged.end(); ++a) {
    for (auto b = std::next(a); b != merged.end(); ++b) {
      if (a->second.code == b->second.code) {
        std::ostringstream msg;
        msg << "tactics " << a->first << " and " << b->first
            << " share code " << a->second.code;
        throw DomainError(msg.str());
      }
    }
  }
  tactics_ = std::move(merged);
}

void TacticRegistry::MergeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read tactic registry: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  MergeJson(buf.str());
}

const TacticInfo* TacticRegistry::Find(const std::string& name) const {
  auto it = tactics_.find(name);
  return it == tactics_.end() ? nullptr : &it->second;
}

std::vector<GoalSegment> SegmentTrace(const std::vector<TacticStep>& proof) {
  std::vector<GoalSegment> segments;
  for (const TacticStep& step : proof) {
    bool fresh = segments.empty() ||
                 segments.back().steps.size() >= kMaxTacticSlots ||
                 !StructurallyEqual(segments.back().goal, step.goal_before);
    if (fresh) {
      segments.push_back(GoalSegment{step.goal_before, {}});
    }
    segments.back().steps.push_back(step);
  }
  return segments;
}

std::vector<double> ProofFeatureMatrix::Flatten() const {
  std::vector<double> flat;
  flat.reserve(static_cast<size_t>(max_rows) * kProofRowLength);
  for (int i = 0; i < max_rows; ++i) {
    ProofFeatureRow row;
    if (i < static_cast<int>(rows.size())) row = rows[i];
    for (double v : row.tactic_codes) flat.push_back(v);
    flat.push_back(row.tactic_count);
    for (double v : row.arg_type_codes) flat.push_back(v);
    for (double v : row.arg_codes) flat.push_back(v);
    for (double v : row.top_symbol_codes) flat.push_back(v);
    flat.push_back(row.subgoal_count);
  }
  return flat;
}

std::string ProofFeatureMatrix::Csv() const {
  std::ostringstream out;
  out << "segment,tactic1,tactic2,tactic3,tactic4,n,arg_type1,arg_type2,"
         "arg_type3,arg_type4,arg1,arg2,arg3,arg4,symbol1,symbol2,symbol3,"
         "subgoals\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const ProofFeatureRow& row = rows[i];
    out << 'g' << (i + 1);
    for (double v : row.tactic_codes) out << ',' << FormatNumber(v);
    out << ',' << row.tactic_count;
    for (double v : row.arg_type_codes) out << ',' << FormatNumber(v);
    for (double v : row.arg_codes) out << ',' << FormatNumber(v);
    for (double v : row.top_symbol_codes) out << ',' << FormatNumber(v);
    out << ',' << row.subgoal_count << '\n';
  }
  return out.str();
}

ProofFeatureMatrix EncodeProof(const CorpusEntry& entry,
                               const Encoder& encoder,
                               const TacticRegistry& registry,
                               const ProofEncodeOptions& options) {
  if (!entry.proof.has_value() || entry.proof->empty()) {
    throw DomainError(entry.name + " has no proof to encode");
  }
  if (options.max_rows < 1) throw DomainError("max goal rows must be >= 1");

  std::vector<GoalSegment> segments = SegmentTrace(*entry.proof);
  if (static_cast<int>(segments.size()) > options.max_rows) {
    std::ostringstream msg;
    msg << "proof of " << entry.name << " has " << segments.size()
        << " goal segments; the configured maximum is " << options.max_rows;
    throw DomainError(msg.str());
  }

  BinderEnv env(entry.statement);
  ProofFeatureMatrix matrix;
  matrix.source = entry.name;
  matrix.max_rows = options.max_rows;

  for (const GoalSegment& segment : segments) {
    ProofFeatureRow row;
    row.tactic_count = static_cast<int>(segment.steps.size());
    int arg_slot = 0;
    bool overflow_reported = false;
    for (size_t i = 0; i < segment.steps.size(); ++i) {
      const TacticStep& step = segment.steps[i];
      const TacticInfo* info = registry.Find(step.tactic);
      TacticInfo resolved;
      if (info != nullptr) {
        resolved = *info;
      } else if (options.allow_unknown_tactics) {
        resolved.code = TacticRegistry::kUnknownCode;
        resolved.arg_kind =
            step.args.empty() ? ArgKind::kNone : ArgKind::kTerm;
      } else {
        throw DomainError("unknown tactic " + step.tactic + " in proof of " +
                          entry.name +
                          " (extend the registry or allow unknown tactics)");
      }
      row.tactic_codes[i] = resolved.code;

      if (resolved.arg_kind == ArgKind::kNone && !step.args.empty()) {
        throw DomainError("tactic " + step.tactic + " in proof of " +
                          entry.name + " takes no arguments");
      }
      for (const TermPtr& arg : step.args) {
        if (arg_slot >= kMaxArgSlots) {
          if (!overflow_reported) {
            matrix.diagnostics.push_back(Diagnostic{
                entry.name, "argument-overflow",
                "goal segment supplies more than 4 tactic arguments; extras "
                "dropped"});
            overflow_reported = true;
          }
          break;
        }
        if (resolved.arg_kind == ArgKind::kHypothesis) {
          if (arg->kind != TermKind::kVar) {
            throw DomainError("tactic " + step.tactic + " in proof of " +
                              entry.name +
                              " expects a hypothesis name as argument");
          }
          const BinderEnv::Binding* binding = env.Find(arg->name);
          if (binding == nullptr) {
            throw DomainError("hypothesis " + arg->name + " in proof of " +
                              entry.name +
                              " is not bound by the statement");
          }
          row.arg_type_codes[arg_slot] =
              encoder.Code(SemOfTerm(binding->type, env, entry.name));
          row.arg_codes[arg_slot] = 0.0;
        } else {
          row.arg_type_codes[arg_slot] =
              Encoder::KeywordCode(Keyword::kProp);
          row.arg_codes[arg_slot] =
              encoder.Code(SemOfTerm(arg, env, entry.name));
        }
        ++arg_slot;
      }
    }

    row.top_symbol_codes[0] =
        BareHeadCode(segment.goal, encoder, env, entry.name);
    std::vector<TermPtr> subterms = ImmediateSubterms(segment.goal);
    for (size_t s = 0; s < subterms.size() && s < 2; ++s) {
      row.top_symbol_codes[s + 1] =
          BareHeadCode(subterms[s], encoder, env, entry.name);
    }
    row.subgoal_count = segment.steps.back().subgoals_after;
    matrix.rows.push_back(row);
  }
  return matrix;
}

}  // namespace proofscope
