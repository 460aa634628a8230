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

// Polynomial-time solvers for AV under three constraint shapes:
//
//   single TGD   R(x) -> EXISTS c . S(c, x) & Com(c)
//   two TGDs     one such TGD for (R1, S1) and one for (R2, S2)
//   key DC       Com(c1) & Com(c2) & R(c1, x) & R(c2, x) & c1 != c2
//
// where the first attribute of every S (and of R in the DC) is a declared
// key that the database satisfies.

#ifndef ABCC_PATTERNS_H_
#define ABCC_PATTERNS_H_

#include <optional>
#include <string>
#include <variant>

#include "abcc/constraints.h"
#include "abcc/election.h"
#include "abcc/flow.h"
#include "abcc/relational.h"

namespace abcc {

struct SingleTgdPattern {
  std::string requirement;  // unary R
  std::string membership;   // binary S, keyed on its first attribute

  friend bool operator==(const SingleTgdPattern&,
                         const SingleTgdPattern&) = default;
};

struct DoubleTgdPattern {
  SingleTgdPattern first;
  SingleTgdPattern second;

  friend bool operator==(const DoubleTgdPattern&,
                         const DoubleTgdPattern&) = default;
};

struct DcKeyPattern {
  std::string relation;  // binary R, keyed on its first attribute

  friend bool operator==(const DcKeyPattern&, const DcKeyPattern&) = default;
};

using Pattern =
    std::variant<std::monostate, SingleTgdPattern, DoubleTgdPattern,
                 DcKeyPattern>;

// Shape checks up to variable renaming; the key must be declared in the
// schema but is not checked against data.
std::optional<SingleTgdPattern> MatchSingleTgd(const Tgd& tgd,
                                               const Schema& schema);
std::optional<DcKeyPattern> MatchDcKey(const Dc& dc, const Schema& schema);

// Whether no two tuples of `relation` agree on the first attribute. An
// absent relation is trivially keyed.
bool FirstColumnIsKey(const RelationSource& db, const std::string& relation);

// The pattern gamma matches, with keys validated against `db`; monostate
// when none does.
Pattern DetectPattern(const Schema& schema, const RelationSource& db,
                      const ConstraintSet& gamma);

// Each of the following returns nullopt when no legal committee exists and
// throws kPatternViolation when the key does not hold in `db`. Ties are
// broken towards lower candidate indices.

std::optional<Committee> GreedySingleTgd(const Election& election,
                                         const RelationSource& db,
                                         const SingleTgdPattern& pattern);

// Network for the two-TGD case. Vertices are labelled s, t, s', t',
// cin:<c>, cout:<c>, u:<a>, w:<b>, u':<i>, w':<i>. Requires |R1| <= k and
// |R2| <= k (kInvalidArgument otherwise).
FlowNetwork BuildMcmfNetwork(const Election& election,
                             const RelationSource& db,
                             const DoubleTgdPattern& pattern);

struct McmfOutcome {
  std::optional<Committee> committee;
  // Minimum cost of the flow; set whenever the network was solved.
  std::optional<Rational> min_cost;
};

McmfOutcome McmfTwoTgds(const Election& election, const RelationSource& db,
                        const DoubleTgdPattern& pattern);

std::optional<Committee> DcKeyGreedy(const Election& election,
                                     const RelationSource& db,
                                     const DcKeyPattern& pattern);

}  // namespace abcc

#endif  // ABCC_PATTERNS_H_
