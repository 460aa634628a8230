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

#ifndef ABCC_ELECTION_H_
#define ABCC_ELECTION_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "abcc/rational.h"

namespace abcc {

struct Ballot {
  std::string voter_id;
  std::vector<std::string> approvals;
};

struct Voter {
  std::string id;
  // Sorted, distinct candidate indices.
  std::vector<int> approvals;
};

// An approval election: ordered candidates, voters with non-empty approval
// sets, and the committee size k.
class Election {
 public:
  // Candidates keep the given order. Voters with empty approval sets are
  // dropped (see dropped_voters()); duplicate approvals collapse.
  //
  // Throws kInvalidArgument on duplicate candidate or voter ids, k < 1 or
  // k > |C|, and kUnknownCandidate on an approval outside the candidates.
  Election(std::vector<std::string> candidates, std::vector<Ballot> ballots,
           int committee_size);

  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  int num_voters() const { return static_cast<int>(voters_.size()); }
  int committee_size() const { return committee_size_; }
  const std::vector<std::string>& candidates() const { return candidates_; }
  const std::vector<Voter>& voters() const { return voters_; }
  int dropped_voters() const { return dropped_voters_; }

  std::optional<int> CandidateIndex(std::string_view id) const;
  // Number of voters approving each candidate.
  const std::vector<int>& approval_counts() const { return approval_counts_; }

  std::vector<std::string> CandidateIds(std::span<const int> members) const;
  // Throws kUnknownCandidate. The result is sorted and deduplicated.
  std::vector<int> CandidateIndices(std::span<const std::string> ids) const;

 private:
  std::vector<std::string> candidates_;
  std::unordered_map<std::string, int> index_;
  std::vector<Voter> voters_;
  std::vector<int> approval_counts_;
  int committee_size_;
  int dropped_voters_ = 0;
};

// An ABC scoring rule f(x, y): the score a voter approving y candidates
// contributes when x of them are on the committee.
class ScoringRule {
 public:
  enum class Kind { kAv, kPav, kCc, kSav, kTruncatedAv, kThiele, kTable };

  static ScoringRule Av() { return ScoringRule(Kind::kAv); }
  static ScoringRule Pav() { return ScoringRule(Kind::kPav); }
  static ScoringRule Cc() { return ScoringRule(Kind::kCc); }
  static ScoringRule Sav() { return ScoringRule(Kind::kSav); }
  // min(p, x); p >= 1.
  static ScoringRule TruncatedAv(int p);
  // w(x) = weights[x] with weights[0] == 0 and non-decreasing; x beyond the
  // table takes the last entry.
  static ScoringRule Thiele(std::vector<Rational> weights);
  // Arbitrary f(x, y) table; non-negative and non-decreasing in x for each
  // y. Lookups of absent entries throw kUndefinedScore.
  static ScoringRule Table(std::map<std::pair<int, int>, Rational> table);

  Kind kind() const { return kind_; }
  bool is_thiele() const { return kind_ != Kind::kSav && kind_ != Kind::kTable; }
  int truncation() const { return truncation_; }
  const std::vector<Rational>& weights() const { return weights_; }
  const std::map<std::pair<int, int>, Rational>& table() const {
    return table_;
  }

  // `av`, `pav`, `cc`, `sav`, `trunc:<p>`, `thiele:<w1,w2,...>`; tables
  // render as `table`.
  std::string ToString() const;

 private:
  explicit ScoringRule(Kind kind) : kind_(kind) {}
  Kind kind_;
  int truncation_ = 0;
  std::vector<Rational> weights_;
  std::map<std::pair<int, int>, Rational> table_;
};

// Parses `av | pav | cc | sav | trunc:<p> | thiele:<w1,w2,...>`, where the
// Thiele list gives w(1), w(2), ... as rationals `a` or `a/b` and w(0) = 0.
// Throws kInvalidArgument.
ScoringRule ParseRule(std::string_view spec);

// f(x, y) in exact arithmetic, with x > y evaluated as f(y, y).
// SAV with y == 0 throws kUndefinedScore.
Rational RuleValue(const ScoringRule& rule, int x, int y);

// Sum over voters of f(|B ∩ A(v)|, |A(v)|). `members` are candidate indices.
Rational CommitteeScore(const Election& election, const ScoringRule& rule,
                        std::span<const int> members);
// Same, by candidate id. Throws kUnknownCandidate.
Rational CommitteeScore(const Election& election, const ScoringRule& rule,
                        std::span<const std::string> members);

struct Committee {
  // Sorted candidate indices.
  std::vector<int> members;
  Rational score;
};

// Lexicographic order on sorted index vectors, used for tie-breaking among
// equal-score committees.
bool LexicographicallyBefore(std::span<const int> a, std::span<const int> b);

}  // namespace abcc

#endif  // ABCC_ELECTION_H_
