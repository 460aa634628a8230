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

#include "abcc/oracle.h"

#include <algorithm>
#include <limits>
#include <thread>
#include <vector>

#include "abcc/error.h"

namespace abcc {

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > kMax) return kMax;
  }
  return static_cast<std::uint64_t>(result);
}

namespace {

// Advances `c` (strictly increasing) to the next k-subset of [0, n) in
// colex order. Returns false after the last one.
bool NextColex(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  for (int i = 0; i < k; ++i) {
    const int limit = i + 1 < k ? c[i + 1] : n;
    if (c[i] + 1 < limit) {
      ++c[i];
      for (int j = 0; j < i; ++j) c[j] = j;
      return true;
    }
  }
  return false;
}

bool Better(const Committee& a, const std::optional<Committee>& b) {
  if (!b) return true;
  if (a.score != b->score) return a.score > b->score;
  return LexicographicallyBefore(a.members, b->members);
}

std::optional<Committee> Shard(const Election& election,
                               const RelationSource& db,
                               const ConstraintSet& gamma,
                               const ScoringRule& rule, int shard,
                               int shards) {
  const int n = election.num_candidates();
  const int k = election.committee_size();
  std::vector<int> subset(k);
  for (int i = 0; i < k; ++i) subset[i] = i;
  std::optional<Committee> best;
  std::uint64_t position = 0;
  do {
    if (position++ % shards != static_cast<std::uint64_t>(shard)) continue;
    Committee candidate{subset, CommitteeScore(election, rule, subset)};
    if (!Better(candidate, best)) continue;
    if (!gamma.empty() &&
        !IsLegal(db, election.CandidateIds(subset), gamma, k)) {
      continue;
    }
    best = std::move(candidate);
  } while (NextColex(subset, n));
  return best;
}

}  // namespace

std::optional<Committee> BruteForceWinner(const Election& election,
                                          const RelationSource& db,
                                          const ConstraintSet& gamma,
                                          const ScoringRule& rule,
                                          const OracleOptions& options) {
  const std::uint64_t count =
      Binomial(election.num_candidates(), election.committee_size());
  if (count > options.max_subsets) {
    throw Error(ErrorCode::kInstanceTooLarge,
                std::to_string(count) + " subsets exceed the cap of " +
                    std::to_string(options.max_subsets));
  }
  const int shards = static_cast<int>(
      std::clamp<std::uint64_t>(options.jobs, 1, std::max<std::uint64_t>(count, 1)));
  if (shards == 1) return Shard(election, db, gamma, rule, 0, 1);

  std::vector<std::optional<Committee>> results(shards);
  std::vector<std::exception_ptr> errors(shards);
  {
    std::vector<std::jthread> workers;
    for (int s = 0; s < shards; ++s) {
      workers.emplace_back([&, s] {
        try {
          results[s] = Shard(election, db, gamma, rule, s, shards);
        } catch (...) {
          errors[s] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::optional<Committee> best;
  for (auto& r : results) {
    if (r && Better(*r, best)) best = std::move(r);
  }
  return best;
}

}  // namespace abcc
