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

// Seeded random instance generators for property and acceptance tests.

#ifndef ABCC_TESTS_SUPPORT_RANDOM_INSTANCES_H_
#define ABCC_TESTS_SUPPORT_RANDOM_INSTANCES_H_

#include <random>
#include <string>
#include <vector>

#include "abcc/constraints.h"
#include "abcc/election.h"
#include "abcc/relational.h"

namespace abcc::testing {

struct Instance {
  Schema schema;
  Database db;
  Election election;
  ConstraintSet gamma;
  std::string constraint_text;
};

struct InstanceShape {
  int max_candidates = 12;
  int max_voters = 30;
  int max_k = 5;
  int max_tgds = 2;
  int max_dcs = 2;
};

// Candidates c0..c{m-1} with random approvals (every voter approves at
// least one candidate).
Election RandomElection(std::mt19937_64& rng, int num_candidates,
                        int num_voters, int k);

// Relations A(cand, label) and L(label) with labels l0..l3, plus random
// TGDs and DCs drawn from fixed templates over them.
Instance RandomInstance(std::mt19937_64& rng, const InstanceShape& shape);

// Only DCs (1 to 3) over A and L.
Instance RandomDcInstance(std::mt19937_64& rng, int max_candidates);

// R(x) -> EXISTS c . S(c, x) & Com(c), with S keyed on its first attribute
// and variable names drawn at random.
Instance RandomSingleTgdInstance(std::mt19937_64& rng, int max_candidates);
Instance RandomDoubleTgdInstance(std::mt19937_64& rng, int max_candidates);
// Com(c1) & Com(c2) & R(c1, x) & R(c2, x) & c1 != c2 with R keyed.
Instance RandomDcKeyInstance(std::mt19937_64& rng, int max_candidates);

// `num_voters` voters cycling through five distinct ballots over six
// candidates.
Election DuplicateBallotElection(int num_voters, int k);

}  // namespace abcc::testing

#endif  // ABCC_TESTS_SUPPORT_RANDOM_INSTANCES_H_
