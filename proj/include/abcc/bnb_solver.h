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

// Exact branch-and-bound over the selection variables of an encoded model.
//
// Fixing z determines u exactly and s at the optimum, so the search branches
// on z alone (include before exclude, in candidate order) and evaluates each
// complete committee with the constraint checker and exact scoring. Packing
// rows of the model (sum of z <= c, which is every DC row) are propagated
// during the search.

#ifndef ABCC_BNB_SOLVER_H_
#define ABCC_BNB_SOLVER_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "abcc/constraints.h"
#include "abcc/election.h"
#include "abcc/mip_encoder.h"

namespace abcc {

enum class SolveStatus { kOptimal, kInfeasible, kTimeout };

std::string_view SolveStatusName(SolveStatus status);

struct SolveReport {
  SolveStatus status = SolveStatus::kInfeasible;
  // Present when optimal, and on timeout if an incumbent was found.
  std::optional<Committee> committee;
  Rational objective;
  std::uint64_t nodes_explored = 0;
  double build_ms = 0;
  double solve_ms = 0;
};

struct SolveOptions {
  // <= 0 means no limit.
  std::int64_t time_limit_ms = 0;
  // Options the encoding was built with; used to re-encode and compare
  // model statistics before searching.
  EncoderOptions encoder;
  bool verify_model = true;
};

// Throws kModelMismatch if `encoding` does not have the statistics of a
// fresh encoding of the same inputs.
SolveReport Solve(const Encoding& encoding, const Election& election,
                  const ScoringRule& rule, const RelationSource& db,
                  const ConstraintSet& gamma, const SolveOptions& options);

// Upper bound on the score of any committee that contains `selected` plus
// `slots` more members drawn from `available`. It is the smaller of
//   - sum_v f(x_v + min(available approved by v, slots), |A(v)|), and
//   - for rules with diminishing increments, score(selected) plus the
//     `slots` largest marginal gains over `available`.
Rational CompletionBound(const Election& election, const ScoringRule& rule,
                         std::span<const int> selected,
                         std::span<const int> available, int slots);

// Whether f(x+1, y) - f(x, y) is non-increasing in x for every voter's y
// over x in [0, k].
bool HasDiminishingIncrements(const Election& election,
                              const ScoringRule& rule);

}  // namespace abcc

#endif  // ABCC_BNB_SOLVER_H_
