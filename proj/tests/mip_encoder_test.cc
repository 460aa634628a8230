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

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "abcc/constraints.h"
#include "abcc/mip_encoder.h"
#include "support/fixtures.h"
#include "support/model_check.h"
#include "support/random_instances.h"

namespace abcc {
namespace {

using testing::IsExtendable;

// Every size-k subset of [0, n), in lexicographic order.
std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask[i]) s.push_back(i);
    }
    out.push_back(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

std::map<VarId, Rational> FixSelection(const Encoding& enc,
                                       const std::vector<int>& members) {
  std::map<VarId, Rational> fixed;
  for (std::size_t j = 0; j < enc.z.size(); ++j) fixed[enc.z[j]] = 0;
  for (const int j : members) fixed[enc.z[j]] = 1;
  return fixed;
}

int CountPrefix(const MipModel& model, std::string_view prefix) {
  return static_cast<int>(std::count_if(
      model.variables().begin(), model.variables().end(),
      [&](const MipVariable& v) { return v.name.starts_with(prefix); }));
}

TEST(EncodeBaseTest, StructureWithoutOptimizations) {
  const Election e = testing::ConferenceElection(3);
  const Encoding enc = EncodeBase(e, ScoringRule::Av(), EncoderOptions::None());
  const int n = 5, c = 5, k = 3;
  EXPECT_EQ(GetModelStats(enc.model),
            (ModelStats{std::size_t(c + n * (2 + 3 * (k + 1))),
                        std::size_t(n * (1 + 4 * (k + 1)) + 1),
                        std::size_t(c + n * (k + 1))}));
  // Largest ballot has three approvals.
  EXPECT_EQ(enc.big_m, 4);
  EXPECT_EQ(enc.model.variable(enc.u[3]).upper, 1);
  EXPECT_TRUE(enc.model.HasName("z_Ann"));
  EXPECT_TRUE(enc.model.HasName("s_v2"));
  EXPECT_TRUE(enc.model.HasName("abs_tm_v4_3"));
}

TEST(EncodeBaseTest, PruningStopsAtBallotSize) {
  const Election e = testing::ConferenceElection(3);
  EncoderOptions p;
  p.prune_scores = true;
  const Encoding enc = EncodeBase(e, ScoringRule::Av(), p);
  // Ballot sizes 2, 3, 2, 1, 2 with k = 3.
  EXPECT_EQ(CountPrefix(enc.model, "abs_b_"), 3 + 4 + 3 + 2 + 3);
  EXPECT_FALSE(enc.model.HasName("abs_b_v4_2"));
}

// The objective variable can reach f(u, y) but never exceed it, for every
// committee of a single voter.
TEST(EncodeBaseTest, ScoreVariableIsExactlyTheRuleValue) {
  for (const char* rule_spec : {"av", "pav", "cc", "sav", "trunc:2"}) {
    const ScoringRule rule = ParseRule(rule_spec);
    for (const auto& options : EncoderOptions::AllCombinations()) {
      const Election e({"a", "b", "c", "d"}, {{"v", {"a", "b", "c"}}}, 2);
      const Encoding enc = EncodeBase(e, rule, options);
      for (const auto& committee : Subsets(4, 2)) {
        const int x = static_cast<int>(std::count_if(
            committee.begin(), committee.end(), [](int j) { return j < 3; }));
        const Rational f = RuleValue(rule, x, 3);
        auto fixed = FixSelection(enc, committee);
        fixed[enc.s[0]] = f;
        EXPECT_TRUE(IsExtendable(enc.model, fixed)) << rule_spec;
        fixed[enc.s[0]] = f + Rational(1, 100);
        EXPECT_FALSE(IsExtendable(enc.model, fixed)) << rule_spec;
      }
      // Committees of the wrong size are excluded.
      EXPECT_FALSE(IsExtendable(enc.model, FixSelection(enc, {0})));
    }
  }
}

TEST(GroupVotersTest, MergesIdenticalBallotsInFirstOccurrenceOrder) {
  const Election e({"a", "b", "c"},
                   {{"1", {"b"}}, {"2", {"a", "c"}}, {"3", {"b"}},
                    {"4", {"c", "a"}}, {"5", {"a"}}},
                   1);
  const std::vector<WeightedVoter> groups = GroupVoters(e);
  ASSERT_EQ(groups.size(), 3u);
  EXPECT_EQ(groups[0].key, "g1");
  EXPECT_EQ(groups[0].approvals, std::vector<int>{1});
  EXPECT_EQ(groups[0].weight, 2);
  EXPECT_EQ(groups[1].approvals, (std::vector<int>{0, 2}));
  EXPECT_EQ(groups[1].weight, 2);
  EXPECT_EQ(groups[2].weight, 1);
}

TEST(EncodeBaseTest, GroupingShrinksDuplicateProfiles) {
  const Election e = testing::DuplicateBallotElection(100, 3);
  EncoderOptions g;
  g.group_voters = true;
  const ModelStats plain =
      GetModelStats(EncodeBase(e, ScoringRule::Av(), EncoderOptions::None()).model);
  const ModelStats grouped =
      GetModelStats(EncodeBase(e, ScoringRule::Av(), g).model);
  EXPECT_EQ(plain.num_variables, 6 + 100 * (2 + 3 * 4));
  EXPECT_EQ(grouped.num_variables, 6 + 5 * (2 + 3 * 4));
}

TEST(EncodeTgdTest, TopicCoverageOnConferenceData) {
  const Election e = testing::ConferenceElection(3);
  const ConstraintSet gamma = testing::ParseConference(testing::kTopicTgd);
  Encoding enc = EncodeBase(e, ScoringRule::Av(), EncoderOptions::None());
  const ModelStats before = GetModelStats(enc.model);
  EncodeTgd(enc, testing::ConferenceDatabase(), e, gamma.tgds[0], 0);
  const ModelStats after = GetModelStats(enc.model);
  // Four topics, each with a premise binary fixed to 1; conclusion sets
  // AI {Cale}, ML {Ann} {Bob}, OS {Bob} {Dave}, PL {Ann}.
  EXPECT_EQ(CountPrefix(enc.model, "tgd0_a"), 4);
  EXPECT_EQ(CountPrefix(enc.model, "tgd0_b"), 6);
  EXPECT_EQ(after.num_constraints - before.num_constraints, 6u + 4u);
  EXPECT_EQ(after.num_binaries - before.num_binaries, 10u);
  EXPECT_EQ(enc.model.variable(enc.model.FindVariable("tgd0_a0")).lower, 1);
}

TEST(EncodeTgdTest, UnsatisfiablePremiseGivesInfeasibleRow) {
  const Election e = testing::ConferenceElection(2);
  const ConstraintSet gamma = testing::ParseConference(
      "TGD: Topic(t) -> EXISTS p . Pub(p, t) & Author(\"Zed\", p)\n");
  const Encoding enc = EncodeModel(e, ScoringRule::Av(),
                                   testing::ConferenceDatabase(), gamma,
                                   EncoderOptions::None());
  for (const auto& committee : Subsets(5, 2)) {
    EXPECT_FALSE(IsExtendable(enc.model, FixSelection(enc, committee)));
  }
}

TEST(GroundConflictsTest, SuperviseDcOnConferenceData) {
  const Election e = testing::ConferenceElection(3);
  const ConstraintSet gamma = testing::ParseConference(testing::kSuperviseDc);
  // Ann-Bob and Cale-Eva; Fred is not a candidate.
  EXPECT_EQ(GroundConflicts(testing::ConferenceDatabase(), e, gamma.dcs[0]),
            (std::vector<std::vector<int>>{{0, 1}, {2, 4}}));
}

TEST(GroundConflictsTest, ViolationWithoutComIsEmptyConflict) {
  const Election e = testing::ConferenceElection(3);
  const ConstraintSet gamma = testing::ParseConference("DC: Topic(\"AI\")\n");
  EXPECT_EQ(GroundConflicts(testing::ConferenceDatabase(), e, gamma.dcs[0]),
            std::vector<std::vector<int>>{{}});
  const Encoding enc = EncodeModel(e, ScoringRule::Av(),
                                   testing::ConferenceDatabase(), gamma,
                                   EncoderOptions::All());
  EXPECT_FALSE(IsExtendable(enc.model, FixSelection(enc, {0, 1, 2})));
}

TEST(ContractConflictsTest, TriangleBecomesOneRow) {
  const std::vector<std::vector<int>> triangle{{0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(ContractConflicts(triangle, 4),
            (std::vector<PackingRow>{{{0, 1, 2}, 1}}));
  EXPECT_EQ(ConflictRows(triangle).size(), 3u);
}

TEST(ContractConflictsTest, SmallerConflictsKeepTheirRows) {
  const auto rows = ContractConflicts({{0, 1, 2}, {3, 4}}, 5);
  EXPECT_EQ(rows.size(), 2u);
  EXPECT_NE(std::find(rows.begin(), rows.end(), PackingRow{{3, 4}, 1}),
            rows.end());
}

bool SatisfiesRows(const std::vector<PackingRow>& rows, unsigned mask) {
  for (const PackingRow& row : rows) {
    int taken = 0;
    for (const int v : row.members) taken += (mask >> v) & 1;
    if (taken > row.capacity) return false;
  }
  return true;
}

// Contracted rows admit exactly the conflict-free subsets.
TEST(ContractConflictsTest, PreservesFeasibleSubsets) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + rng() % 6;
    const int q = 2 + rng() % 2;
    std::set<std::vector<int>> conflicts;
    const int count = rng() % 12;
    for (int i = 0; i < count; ++i) {
      const int size = (rng() % 4 == 0) ? 1 + rng() % q : q;
      std::set<int> members;
      while (static_cast<int>(members.size()) < std::min(size, n)) {
        members.insert(rng() % n);
      }
      conflicts.insert({members.begin(), members.end()});
    }
    const std::vector<std::vector<int>> list(conflicts.begin(),
                                             conflicts.end());
    const auto plain = ConflictRows(list);
    const auto contracted = ContractConflicts(list, n);
    EXPECT_LE(contracted.size(), plain.size());
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      ASSERT_EQ(SatisfiesRows(plain, mask), SatisfiesRows(contracted, mask))
          << "trial " << trial << " mask " << mask;
    }
  }
}

// A committee extends to a model solution exactly when it is legal, under
// every option combination.
TEST(EncodeModelTest, FeasibilityMatchesLegality) {
  std::mt19937_64 rng(17);
  testing::InstanceShape shape;
  shape.max_candidates = 6;
  shape.max_voters = 4;
  shape.max_k = 3;
  for (int trial = 0; trial < 40; ++trial) {
    const testing::Instance inst = testing::RandomInstance(rng, shape);
    const int n = inst.election.num_candidates();
    const int k = inst.election.committee_size();
    for (const auto& options : EncoderOptions::AllCombinations()) {
      const Encoding enc = EncodeModel(inst.election, ScoringRule::Av(),
                                       inst.db, inst.gamma, options);
      for (const auto& committee : Subsets(n, k)) {
        const auto ids = inst.election.CandidateIds(committee);
        ASSERT_EQ(IsExtendable(enc.model, FixSelection(enc, committee)),
                  IsLegal(inst.db, ids, inst.gamma, k))
            << inst.constraint_text << " options " << options.ToString();
      }
    }
  }
}

TEST(EncodeModelTest, ContractionShrinksCliqueConflicts) {
  const Election e({"a", "b", "c", "d"}, {{"v", {"a"}}}, 1);
  Schema schema;
  schema.AddRelation({"Clash", {"x", "y"}, {}, {}});
  std::vector<Tuple> pairs;
  for (const char* x : {"a", "b", "c", "d"}) {
    for (const char* y : {"a", "b", "c", "d"}) {
      if (std::string(x) != y) pairs.push_back({Value::Text(x), Value::Text(y)});
    }
  }
  Database db;
  db.AddRelation(Relation("Clash", 2, std::move(pairs)));
  const ConstraintSet gamma =
      ParseConstraints("DC: Clash(x, y) & Com(x) & Com(y)\n", schema);
  EncoderOptions c;
  c.contract_dcs = true;
  const auto rows = [&](const EncoderOptions& o) {
    return GetModelStats(EncodeModel(e, ScoringRule::Av(), db, gamma, o).model)
        .num_constraints;
  };
  EXPECT_EQ(rows(EncoderOptions::None()) - rows(c), 6u - 1u);
}

}  // namespace
}  // namespace abcc
