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

#include <cstdint>
#include <random>

#include "abcc/error.h"
#include "abcc/oracle.h"
#include "support/fixtures.h"
#include "support/random_instances.h"

namespace abcc {
namespace {

// Bitmask enumeration, kept apart from the colex walk of the library.
std::optional<Committee> MaskWinner(const Election& e,
                                    const RelationSource& db,
                                    const ConstraintSet& gamma,
                                    const ScoringRule& rule) {
  std::optional<Committee> best;
  const int n = e.num_candidates();
  const int k = e.committee_size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<int> members;
    for (int j = 0; j < n; ++j) {
      if (mask >> j & 1) members.push_back(j);
    }
    if (!IsLegal(db, e.CandidateIds(members), gamma, k)) continue;
    const Rational score = CommitteeScore(e, rule, members);
    if (!best || score > best->score ||
        (score == best->score && members < best->members)) {
      best = Committee{members, score};
    }
  }
  return best;
}

TEST(BinomialTest, SmallValuesAndSaturation) {
  EXPECT_EQ(Binomial(5, 2), 10u);
  EXPECT_EQ(Binomial(5, 0), 1u);
  EXPECT_EQ(Binomial(5, 6), 0u);
  EXPECT_EQ(Binomial(60, 30), 118264581564861424ull);
  EXPECT_EQ(Binomial(200, 100), UINT64_MAX);
}

TEST(OracleTest, ConferenceExamples) {
  const Database db = testing::ConferenceDatabase();
  const Election e = testing::ConferenceElection(3);
  const ScoringRule av = ScoringRule::Av();

  const auto free = BruteForceWinner(e, db, {}, av);
  EXPECT_EQ(e.CandidateIds(free->members),
            (std::vector<std::string>{"Ann", "Bob", "Dave"}));
  EXPECT_EQ(free->score, 8);

  const auto dc =
      BruteForceWinner(e, db, testing::ParseConference(testing::kSuperviseDc), av);
  EXPECT_EQ(e.CandidateIds(dc->members),
            (std::vector<std::string>{"Ann", "Cale", "Dave"}));
  EXPECT_EQ(dc->score, 7);

  const auto topics =
      BruteForceWinner(e, db, testing::ParseConference(testing::kTopicTgd), av);
  EXPECT_EQ(e.CandidateIds(topics->members),
            (std::vector<std::string>{"Ann", "Cale", "Dave"}));
  EXPECT_EQ(topics->score, 7);
}

TEST(OracleTest, WholeCandidateSet) {
  const Election e = testing::ConferenceElection(5);
  const auto all = BruteForceWinner(e, Database(), {}, ScoringRule::Av());
  ASSERT_TRUE(all.has_value());
  EXPECT_EQ(all->members, (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(all->score, 10);
  EXPECT_FALSE(BruteForceWinner(
                   e, testing::ConferenceDatabase(),
                   testing::ParseConference(testing::kSuperviseDc),
                   ScoringRule::Av())
                   .has_value());
}

TEST(OracleTest, RefusesOversizedInstances) {
  std::mt19937_64 rng(1);
  const Election e = testing::RandomElection(rng, 30, 5, 15);
  try {
    BruteForceWinner(e, Database(), {}, ScoringRule::Av());
    FAIL() << "expected a size error";
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kInstanceTooLarge);
  }
  const Election small = testing::ConferenceElection(2);
  OracleOptions tight;
  tight.max_subsets = 9;
  EXPECT_THROW(BruteForceWinner(small, Database(), {}, ScoringRule::Av(), tight),
               Error);
  tight.max_subsets = 10;
  EXPECT_NO_THROW(
      BruteForceWinner(small, Database(), {}, ScoringRule::Av(), tight));
}

TEST(OracleTest, MatchesMaskEnumerationForAnyJobCount) {
  std::mt19937_64 rng(61);
  testing::InstanceShape shape;
  shape.max_candidates = 10;
  const std::vector<ScoringRule> rules = {ScoringRule::Av(), ScoringRule::Pav(),
                                          ScoringRule::Cc(), ScoringRule::Sav()};
  for (int trial = 0; trial < 80; ++trial) {
    const testing::Instance inst = testing::RandomInstance(rng, shape);
    const ScoringRule& rule = rules[trial % rules.size()];
    const auto expected = MaskWinner(inst.election, inst.db, inst.gamma, rule);
    for (const int jobs : {1, 3, 8}) {
      OracleOptions options;
      options.jobs = jobs;
      const auto got =
          BruteForceWinner(inst.election, inst.db, inst.gamma, rule, options);
      ASSERT_EQ(got.has_value(), expected.has_value()) << inst.constraint_text;
      if (!got) continue;
      EXPECT_EQ(got->members, expected->members) << "jobs " << jobs;
      EXPECT_EQ(got->score, expected->score);
    }
  }
}

}  // namespace
}  // namespace abcc
