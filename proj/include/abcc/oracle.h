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

// Brute-force reference solver: every k-subset of the candidates, in colex
// order, is scored exactly and checked for legality.

#ifndef ABCC_ORACLE_H_
#define ABCC_ORACLE_H_

#include <cstdint>
#include <optional>

#include "abcc/constraints.h"
#include "abcc/election.h"
#include "abcc/relational.h"

namespace abcc {

struct OracleOptions {
  std::uint64_t max_subsets = 2'000'000;
  // Worker threads sharing the subset space; the result does not depend on
  // the count.
  int jobs = 1;
};

// n choose k, saturating at UINT64_MAX.
std::uint64_t Binomial(int n, int k);

// A maximum-score legal committee, ties broken towards the lexicographically
// smallest member list; nullopt when no k-subset is legal. Throws
// kInstanceTooLarge when C(|C|, k) exceeds options.max_subsets.
std::optional<Committee> BruteForceWinner(const Election& election,
                                          const RelationSource& db,
                                          const ConstraintSet& gamma,
                                          const ScoringRule& rule,
                                          const OracleOptions& options = {});

}  // namespace abcc

#endif  // ABCC_ORACLE_H_
