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

#include "proofscope/features.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "proofscope/diagnostics.hpp"

namespace proofscope {

double Encoder::KeywordCode(Keyword k) {
  switch (k) {
    case Keyword::kForall:
      return -2.0;
    case Keyword::kLambda:
      return -3.0;
    case Keyword::kLet:
      return -4.0;
    case Keyword::kArrow:
      return -5.0;
    case Keyword::kType:
      return -6.0;
    case Keyword::kProp:
      return -7.0;
    case Keyword::kSet:
      return -8.0;
  }
  throw DomainError("unknown keyword");
}

double Encoder::VarCode(int index) {
  if (index < 1) throw DomainError("variable introduction index must be >= 1");
  return 1.0 / (1.0 + index);
}

double Encoder::MetaCode(int index) {
  if (index < 1) throw DomainError("metavariable index must be >= 1");
  return (VarCode(index) + VarCode(index + 1)) / 2.0;
}

Encoder Encoder::Initial(const Corpus& corpus) {
  Encoder e;
  for (const Primitive& p : corpus.primitives) {
    e.const_codes_[p.name] = static_cast<double>(p.code);
  }
  for (size_t i = 0; i < corpus.entries.size(); ++i) {
    e.const_codes_[corpus.entries[i].name] = 10.0 * (1.0 + i);
  }
  return e;
}

Encoder Encoder::FromClusters(
    const Corpus& corpus,
    const std::vector<std::vector<std::string>>& clusters) {
  Encoder e;
  for (const Primitive& p : corpus.primitives) {
    e.const_codes_[p.name] = static_cast<double>(p.code);
  }
  for (size_t c = 0; c < clusters.size(); ++c) {
    std::vector<std::string> members = clusters[c];
    std::sort(members.begin(), members.end());
    for (size_t j = 0; j < members.size(); ++j) {
      if (corpus.FindEntry(members[j]) == nullptr) {
        throw DomainError("cluster member is not a corpus entry: " +
                          members[j]);
      }
      e.const_codes_[members[j]] =
          10.0 * (1.0 + c) +
          static_cast<double>(j) / static_cast<double>(members.size());
    }
  }
  for (const CorpusEntry& entry : corpus.entries) {
    if (e.const_codes_.find(entry.name) == e.const_codes_.end()) {
      throw DomainError("clustering left entry without a code: " + entry.name);
    }
  }
  return e;
}

double Encoder::ConstCode(const std::string& qualified) const {
  auto it = const_codes_.find(qualified);
  if (it == const_codes_.end()) {
    throw DomainError("no code assigned to constant: " + qualified);
  }
  return it->second;
}

double Encoder::Code(const LabelSem& sem) const {
  double base = 0.0;
  switch (sem.tag) {
    case LabelSem::Tag::kAbsent:
      return 0.0;
    case LabelSem::Tag::kSentinel:
      return -1.0;
    case LabelSem::Tag::kKeyword:
      base = KeywordCode(sem.keyword);
      break;
    case LabelSem::Tag::kVar:
      base = VarCode(sem.index);
      break;
    case LabelSem::Tag::kMeta:
      base = MetaCode(sem.index);
      break;
    case LabelSem::Tag::kConst:
      base = ConstCode(sem.constant);
      break;
  }
  if (sem.arg_count > 0) base += 1.0 / (1.0 + sem.arg_count);
  return base;
}

std::vector<double> TermFeatureMatrix::Flatten() const {
  std::vector<double> flat;
  flat.reserve(cells.size() * 3);
  for (const auto& cell : cells) {
    flat.push_back(cell[0]);
    flat.push_back(cell[1]);
    flat.push_back(cell[2]);
  }
  return flat;
}

namespace {

std::string FormatNumber(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

std::string TermFeatureMatrix::Csv() const {
  std::ostringstream out;
  out << "depth,level,term,type,parent\n";
  for (int d = 0; d < depth; ++d) {
    for (int l = 0; l < width; ++l) {
      const auto& cell = At(d, l);
      out << d << ',' << l << ',' << FormatNumber(cell[0]) << ','
          << FormatNumber(cell[1]) << ',' << FormatNumber(cell[2]) << '\n';
    }
  }
  return out.str();
}

TermFeatureMatrix EncodeTree(const TermTree& tree, const Encoder& encoder,
                             int depth, int width) {
  if (depth < 1 || width < 1) {
    throw DomainError("feature grid must be at least 1 x 1");
  }
  if (tree.depth_count > depth || tree.max_width > width) {
    std::ostringstream msg;
    msg << "term tree does not fit the " << depth << " x " << width
        << " feature grid; needs at least " << tree.depth_count << " x "
        << tree.max_width;
    throw DomainError(msg.str());
  }
  TermFeatureMatrix m;
  m.depth = depth;
  m.width = width;
  m.cells.assign(static_cast<size_t>(depth) * width, {0.0, 0.0, 0.0});
  for (size_t i = 0; i < tree.nodes.size(); ++i) {
    const TermTreeNode& node = tree.nodes[i];
    auto& cell =
        m.cells[static_cast<size_t>(node.depth) * width + node.level_index];
    cell[0] = encoder.Code(node.term_sem);
    cell[1] = node.keyword_node ? -1.0 : encoder.Code(node.type_sem);
    cell[2] = (i == 0) ? -1.0 : static_cast<double>(node.parent_level_index);
  }
  return m;
}

}  // namespace proofscope
