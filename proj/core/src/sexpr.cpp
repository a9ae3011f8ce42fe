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

#include "sexpr.hpp"

#include "proofscope/diagnostics.hpp"

namespace proofscope {

namespace {

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  std::vector<Sexp> ReadAll() {
    std::vector<Sexp> out;
    SkipSpace();
    while (!AtEnd()) {
      out.push_back(ReadOne());
      SkipSpace();
    }
    return out;
  }

 private:
  bool AtEnd() const { return pos_ >= text_.size(); }
  char Peek() const { return text_[pos_]; }

  void Advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void SkipSpace() {
    while (!AtEnd()) {
      char c = Peek();
      if (c == ';') {
        while (!AtEnd() && Peek() != '\n') Advance();
      } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance();
      } else {
        return;
      }
    }
  }

  Sexp ReadOne() {
    char c = Peek();
    if (c == '(') {
      Sexp list;
      list.line = line_;
      list.col = col_;
      Advance();
      SkipSpace();
      while (!AtEnd() && Peek() != ')') {
        list.items.push_back(ReadOne());
        SkipSpace();
      }
      if (AtEnd())
        throw ParseError("unterminated list, expected ')'", list.line,
                         list.col);
      Advance();  // ')'
      return list;
    }
    if (c == ')') throw ParseError("unexpected ')'", line_, col_);
    Sexp atom;
    atom.is_atom = true;
    atom.line = line_;
    atom.col = col_;
    while (!AtEnd()) {
      c = Peek();
      if (c == '(' || c == ')' || c == ';' || c == ' ' || c == '\t' ||
          c == '\r' || c == '\n')
        break;
      atom.atom.push_back(c);
      Advance();
    }
    return atom;
  }

  const std::string& text_;
  size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

}  // namespace

std::vector<Sexp> ReadSexps(const std::string& text) {
  return Reader(text).ReadAll();
}

}  // namespace proofscope
