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

// Tuple-generating dependencies and denial constraints over the schema
// extended with the unary committee relation Com.
//
// Textual form, one constraint per line:
//
//   DC:  Supervise(c1,c2) & Com(c1) & Com(c2)
//   TGD: Topic(t) -> EXISTS c,p . Author(c,p) & Pub(p,t) & Com(c)
//   TGD: true -> EXISTS c . Ward(c,"north") & Com(c)
//
// Blank lines and lines starting with '#' are ignored. Body variables are
// implicitly universal.

#ifndef ABCC_CONSTRAINTS_H_
#define ABCC_CONSTRAINTS_H_

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "abcc/relational.h"

namespace abcc {

struct Tgd {
  std::vector<std::string> universal_vars;
  // Empty body means `true`.
  std::vector<RelationalAtom> body;
  std::vector<std::string> existential_vars;
  std::vector<RelationalAtom> head;

  friend bool operator==(const Tgd&, const Tgd&) = default;
};

struct Dc {
  std::vector<std::string> universal_vars;
  std::vector<RelationalAtom> relational_atoms;
  std::vector<ComparisonAtom> comparison_atoms;

  friend bool operator==(const Dc&, const Dc&) = default;
};

struct ConstraintSet {
  std::vector<Tgd> tgds;
  std::vector<Dc> dcs;

  bool empty() const { return tgds.empty() && dcs.empty(); }
  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

// Parses a constraint file. Relation names and arities are checked against
// `schema` plus Com/1.
//
// Throws kSyntaxError (with line and column), kUnknownRelation,
// kArityMismatch or kUnsafeVariable.
ConstraintSet ParseConstraints(std::string_view text, const Schema& schema);

std::string PrettyPrint(const Tgd& tgd);
std::string PrettyPrint(const Dc& dc);
std::string PrettyPrint(const ConstraintSet& gamma);

// Number of Com atoms in the premise (TGD body) or the whole DC.
int ComAtomCount(std::span<const RelationalAtom> atoms);

// The committee relation for `committee` (candidate ids as text values).
Relation CommitteeRelation(std::span<const std::string> committee);

// True iff the constraint holds in the database extended with Com
// interpreted as `committee`.
bool CheckConstraint(const RelationSource& db,
                     std::span<const std::string> committee, const Tgd& tgd);
bool CheckConstraint(const RelationSource& db,
                     std::span<const std::string> committee, const Dc& dc);

// |committee| == k (as a set) and every constraint of gamma holds.
bool IsLegal(const RelationSource& db, std::span<const std::string> committee,
             const ConstraintSet& gamma, int k);

}  // namespace abcc

#endif  // ABCC_CONSTRAINTS_H_
