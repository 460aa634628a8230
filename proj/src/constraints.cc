// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "abcc/constraints.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <set>

#include "abcc/error.h"

namespace abcc {
namespace {

enum class Tok {
  kIdent,
  kInt,
  kString,
  kLParen,
  kRParen,
  kComma,
  kAmp,
  kArrow,
  kDot,
  kColon,
  kOp,
  kEnd,
};

struct Token {
  Tok kind;
  std::string text;
  int column;
  CompareOp op = CompareOp::kEq;
};

bool IsVariableName(std::string_view s) {
  if (s.empty() || !(s[0] >= 'a' && s[0] <= 'z')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

class LineParser {
 public:
  LineParser(std::string_view line, int line_number, const Schema& schema)
      : line_(line), line_number_(line_number), schema_(schema) {
    Tokenize();
  }

  // Parses one constraint and appends it to `out`.
  void Parse(ConstraintSet& out) {
    const Token& head = Next();
    if (head.kind != Tok::kIdent || (head.text != "DC" && head.text != "TGD")) {
      Fail(head, "expected 'DC:' or 'TGD:'");
    }
    Expect(Tok::kColon, "':'");
    if (head.text == "DC") {
      out.dcs.push_back(ParseDc());
    } else {
      out.tgds.push_back(ParseTgd());
    }
    if (Peek().kind != Tok::kEnd) Fail(Peek(), "unexpected trailing input");
  }

 private:
  [[noreturn]] void Fail(const Token& at, const std::string& message,
                         ErrorCode code = ErrorCode::kSyntaxError) const {
    throw Error(code, "line " + std::to_string(line_number_) + ", column " +
                          std::to_string(at.column) + ": " + message);
  }

  void Tokenize() {
    std::size_t i = 0;
    while (i < line_.size()) {
      const char c = line_[i];
      const int column = static_cast<int>(i) + 1;
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
        continue;
      }
      auto push = [&](Tok kind, std::size_t len, CompareOp op = CompareOp::kEq) {
        tokens_.push_back({kind, std::string(line_.substr(i, len)), column, op});
        i += len;
      };
      auto next_is = [&](char n) {
        return i + 1 < line_.size() && line_[i + 1] == n;
      };
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < line_.size() &&
               (std::isalnum(static_cast<unsigned char>(line_[j])) ||
                line_[j] == '_')) {
          ++j;
        }
        push(Tok::kIdent, j - i);
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && i + 1 < line_.size() &&
                  std::isdigit(static_cast<unsigned char>(line_[i + 1])))) {
        std::size_t j = i + 1;
        while (j < line_.size() &&
               std::isdigit(static_cast<unsigned char>(line_[j]))) {
          ++j;
        }
        push(Tok::kInt, j - i);
      } else if (c == '"') {
        std::string text;
        std::size_t j = i + 1;
        bool closed = false;
        while (j < line_.size()) {
          if (line_[j] == '\\' && j + 1 < line_.size()) {
            text += line_[j + 1];
            j += 2;
          } else if (line_[j] == '"') {
            closed = true;
            ++j;
            break;
          } else {
            text += line_[j++];
          }
        }
        if (!closed) {
          Fail({Tok::kString, "", column}, "unterminated string literal");
        }
        tokens_.push_back({Tok::kString, std::move(text), column});
        i = j;
      } else if (c == '(') {
        push(Tok::kLParen, 1);
      } else if (c == ')') {
        push(Tok::kRParen, 1);
      } else if (c == ',') {
        push(Tok::kComma, 1);
      } else if (c == '&') {
        push(Tok::kAmp, 1);
      } else if (c == '.') {
        push(Tok::kDot, 1);
      } else if (c == ':') {
        push(Tok::kColon, 1);
      } else if (c == '-' && next_is('>')) {
        push(Tok::kArrow, 2);
      } else if (c == '!' && next_is('=')) {
        push(Tok::kOp, 2, CompareOp::kNe);
      } else if (c == '<' && next_is('=')) {
        push(Tok::kOp, 2, CompareOp::kLe);
      } else if (c == '>' && next_is('=')) {
        push(Tok::kOp, 2, CompareOp::kGe);
      } else if (c == '<') {
        push(Tok::kOp, 1, CompareOp::kLt);
      } else if (c == '>') {
        push(Tok::kOp, 1, CompareOp::kGt);
      } else if (c == '=') {
        push(Tok::kOp, 1, CompareOp::kEq);
      } else {
        Fail({Tok::kEnd, "", column},
             std::string("unexpected character '") + c + "'");
      }
    }
    tokens_.push_back({Tok::kEnd, "", static_cast<int>(line_.size()) + 1});
  }

  const Token& Peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& Next() {
    const Token& t = Peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }
  const Token& Expect(Tok kind, const std::string& what) {
    if (Peek().kind != kind) Fail(Peek(), "expected " + what);
    return Next();
  }

  Term ParseTerm() {
    const Token& t = Next();
    switch (t.kind) {
      case Tok::kIdent:
        if (!IsVariableName(t.text)) {
          Fail(t, "'" + t.text +
                      "' is not a variable (variables start lowercase)");
        }
        if (t.text == "true") Fail(t, "'true' is reserved");
        return Term::Variable(t.text);
      case Tok::kInt: {
        std::int64_t v = 0;
        const auto [ptr, ec] =
            std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
        if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
          Fail(t, "integer literal out of range");
        }
        return Term::Constant(Value::Int(v));
      }
      case Tok::kString:
        return Term::Constant(Value::Text(t.text));
      default:
        Fail(t, "expected a term");
    }
  }

  using AnyAtom = std::variant<RelationalAtom, ComparisonAtom>;

  AnyAtom ParseAtom() {
    const Token& first = Peek();
    if (first.kind == Tok::kIdent && Peek(1).kind == Tok::kLParen) {
      Next();
      Next();
      RelationalAtom atom{first.text, {}};
      atom.terms.push_back(ParseTerm());
      while (Peek().kind == Tok::kComma) {
        Next();
        atom.terms.push_back(ParseTerm());
      }
      Expect(Tok::kRParen, "')'");
      CheckRelation(atom, first);
      return atom;
    }
    Term left = ParseTerm();
    const Token& op = Expect(Tok::kOp, "comparison operator");
    Term right = ParseTerm();
    return ComparisonAtom{std::move(left), op.op, std::move(right)};
  }

  void CheckRelation(const RelationalAtom& atom, const Token& at) const {
    int arity = 1;
    if (!atom.is_com()) {
      const RelationSchema* rs = schema_.Find(atom.relation);
      if (rs == nullptr) {
        Fail(at, "unknown relation '" + atom.relation + "'",
             ErrorCode::kUnknownRelation);
      }
      arity = rs->arity();
    }
    if (static_cast<int>(atom.terms.size()) != arity) {
      Fail(at,
           "relation '" + atom.relation + "' has arity " +
               std::to_string(arity) + ", got " +
               std::to_string(atom.terms.size()) + " terms",
           ErrorCode::kArityMismatch);
    }
  }

  // conj := atom ("&" atom)*
  std::vector<std::pair<AnyAtom, Token>> ParseConjunction() {
    std::vector<std::pair<AnyAtom, Token>> atoms;
    Token at = Peek();
    atoms.emplace_back(ParseAtom(), at);
    while (Peek().kind == Tok::kAmp) {
      Next();
      at = Peek();
      atoms.emplace_back(ParseAtom(), at);
    }
    return atoms;
  }

  std::vector<RelationalAtom> RelationalOnly(
      std::vector<std::pair<AnyAtom, Token>> atoms) const {
    std::vector<RelationalAtom> out;
    for (auto& [atom, at] : atoms) {
      if (std::holds_alternative<ComparisonAtom>(atom)) {
        Fail(at, "comparison atoms are not allowed in TGDs");
      }
      out.push_back(std::get<RelationalAtom>(std::move(atom)));
    }
    return out;
  }

  static void CollectVariables(std::span<const RelationalAtom> atoms,
                               std::vector<std::string>& out) {
    for (const RelationalAtom& a : atoms) {
      for (const Term& t : a.terms) {
        if (t.is_variable() &&
            std::find(out.begin(), out.end(), t.variable()) == out.end()) {
          out.push_back(t.variable());
        }
      }
    }
  }

  Dc ParseDc() {
    Dc dc;
    for (auto& [atom, at] : ParseConjunction()) {
      if (auto* r = std::get_if<RelationalAtom>(&atom)) {
        dc.relational_atoms.push_back(std::move(*r));
      } else {
        dc.comparison_atoms.push_back(std::get<ComparisonAtom>(atom));
        comparison_tokens_.push_back(at);
      }
    }
    CollectVariables(dc.relational_atoms, dc.universal_vars);
    for (std::size_t i = 0; i < dc.comparison_atoms.size(); ++i) {
      const ComparisonAtom& cmp = dc.comparison_atoms[i];
      for (const Term* t : {&cmp.left, &cmp.right}) {
        if (t->is_variable() &&
            std::find(dc.universal_vars.begin(), dc.universal_vars.end(),
                      t->variable()) == dc.universal_vars.end()) {
          Fail(comparison_tokens_[i],
               "variable '" + t->variable() +
                   "' occurs in a comparison but in no relational atom",
               ErrorCode::kUnsafeVariable);
        }
      }
    }
    return dc;
  }

  Tgd ParseTgd() {
    Tgd tgd;
    if (Peek().kind == Tok::kIdent && Peek().text == "true" &&
        Peek(1).kind == Tok::kArrow) {
      Next();
    } else {
      tgd.body = RelationalOnly(ParseConjunction());
    }
    Expect(Tok::kArrow, "'->'");
    CollectVariables(tgd.body, tgd.universal_vars);

    if (Peek().kind == Tok::kIdent && Peek().text == "EXISTS") {
      Next();
      do {
        const Token& v = Expect(Tok::kIdent, "existential variable");
        if (!IsVariableName(v.text) || v.text == "true") {
          Fail(v, "'" + v.text + "' is not a variable name");
        }
        if (std::find(tgd.existential_vars.begin(),
                      tgd.existential_vars.end(),
                      v.text) != tgd.existential_vars.end()) {
          Fail(v, "existential variable '" + v.text + "' listed twice");
        }
        if (std::find(tgd.universal_vars.begin(), tgd.universal_vars.end(),
                      v.text) != tgd.universal_vars.end()) {
          Fail(v,
               "existential variable '" + v.text + "' also occurs in the body",
               ErrorCode::kUnsafeVariable);
        }
        tgd.existential_vars.push_back(v.text);
      } while (Peek().kind == Tok::kComma && (Next(), true));
      Expect(Tok::kDot, "'.' after the existential variables");
    }

    const Token head_start = Peek();
    tgd.head = RelationalOnly(ParseConjunction());
    std::vector<std::string> head_vars;
    CollectVariables(tgd.head, head_vars);
    for (const std::string& v : head_vars) {
      const bool known =
          std::find(tgd.universal_vars.begin(), tgd.universal_vars.end(), v) !=
              tgd.universal_vars.end() ||
          std::find(tgd.existential_vars.begin(), tgd.existential_vars.end(),
                    v) != tgd.existential_vars.end();
      if (!known) {
        Fail(head_start,
             "head variable '" + v + "' is neither universal nor existential",
             ErrorCode::kUnsafeVariable);
      }
    }
    return tgd;
  }

  std::string_view line_;
  int line_number_;
  const Schema& schema_;
  std::vector<Token> tokens_;
  std::vector<Token> comparison_tokens_;
  std::size_t pos_ = 0;
};

std::string JoinAtoms(std::span<const RelationalAtom> atoms,
                      std::span<const ComparisonAtom> comparisons = {}) {
  std::string out;
  for (const RelationalAtom& a : atoms) {
    if (!out.empty()) out += " & ";
    out += a.ToString();
  }
  for (const ComparisonAtom& c : comparisons) {
    if (!out.empty()) out += " & ";
    out += c.ToString();
  }
  return out;
}

}  // namespace

ConstraintSet ParseConstraints(std::string_view text, const Schema& schema) {
  ConstraintSet out;
  int line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_number;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') {
      LineParser(line, line_number, schema).Parse(out);
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

std::string PrettyPrint(const Tgd& tgd) {
  std::string out = "TGD: ";
  out += tgd.body.empty() ? "true" : JoinAtoms(tgd.body);
  out += " -> ";
  if (!tgd.existential_vars.empty()) {
    out += "EXISTS ";
    for (std::size_t i = 0; i < tgd.existential_vars.size(); ++i) {
      if (i > 0) out += ",";
      out += tgd.existential_vars[i];
    }
    out += " . ";
  }
  return out + JoinAtoms(tgd.head);
}

std::string PrettyPrint(const Dc& dc) {
  return "DC: " + JoinAtoms(dc.relational_atoms, dc.comparison_atoms);
}

std::string PrettyPrint(const ConstraintSet& gamma) {
  std::string out;
  for (const Tgd& t : gamma.tgds) out += PrettyPrint(t) + "\n";
  for (const Dc& d : gamma.dcs) out += PrettyPrint(d) + "\n";
  return out;
}

int ComAtomCount(std::span<const RelationalAtom> atoms) {
  return static_cast<int>(std::count_if(
      atoms.begin(), atoms.end(),
      [](const RelationalAtom& a) { return a.is_com(); }));
}

Relation CommitteeRelation(std::span<const std::string> committee) {
  std::vector<Tuple> tuples;
  tuples.reserve(committee.size());
  for (const std::string& c : committee) tuples.push_back({Value::Text(c)});
  return Relation(std::string(kComRelation), 1, std::move(tuples));
}

bool CheckConstraint(const RelationSource& db,
                     std::span<const std::string> committee, const Tgd& tgd) {
  const Relation com = CommitteeRelation(committee);
  const OverlaySource extended(db, com);
  return ForEachGrounding(
      extended, tgd.body, {}, Assignment(), [&](const Assignment& premise) {
        const bool no_extension = ForEachGrounding(
            extended, tgd.head, {}, premise,
            [](const Assignment&) { return false; });
        return !no_extension;
      });
}

bool CheckConstraint(const RelationSource& db,
                     std::span<const std::string> committee, const Dc& dc) {
  const Relation com = CommitteeRelation(committee);
  const OverlaySource extended(db, com);
  return ForEachGrounding(extended, dc.relational_atoms, dc.comparison_atoms,
                          Assignment(),
                          [](const Assignment&) { return false; });
}

bool IsLegal(const RelationSource& db, std::span<const std::string> committee,
             const ConstraintSet& gamma, int k) {
  std::set<std::string> members(committee.begin(), committee.end());
  if (static_cast<int>(members.size()) != k) return false;
  for (const Dc& dc : gamma.dcs) {
    if (!CheckConstraint(db, committee, dc)) return false;
  }
  for (const Tgd& tgd : gamma.tgds) {
    if (!CheckConstraint(db, committee, tgd)) return false;
  }
  return true;
}

}  // namespace abcc
