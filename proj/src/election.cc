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

#include "abcc/election.h"

#include <algorithm>
#include <set>

#include "abcc/error.h"

namespace abcc {

Election::Election(std::vector<std::string> candidates,
                   std::vector<Ballot> ballots, int committee_size)
    : candidates_(std::move(candidates)), committee_size_(committee_size) {
  for (int j = 0; j < num_candidates(); ++j) {
    if (!index_.emplace(candidates_[j], j).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate candidate '" + candidates_[j] + "'");
    }
  }
  if (committee_size_ < 1 || committee_size_ > num_candidates()) {
    throw Error(ErrorCode::kInvalidArgument,
                "committee size " + std::to_string(committee_size_) +
                    " outside [1, " + std::to_string(num_candidates()) + "]");
  }
  approval_counts_.assign(num_candidates(), 0);
  std::set<std::string> voter_ids;
  for (Ballot& ballot : ballots) {
    if (!voter_ids.insert(ballot.voter_id).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate voter '" + ballot.voter_id + "'");
    }
    Voter voter{std::move(ballot.voter_id), {}};
    for (const std::string& id : ballot.approvals) {
      const auto it = index_.find(id);
      if (it == index_.end()) {
        throw Error(ErrorCode::kUnknownCandidate,
                    "voter '" + voter.id + "' approves unknown candidate '" +
                        id + "'");
      }
      voter.approvals.push_back(it->second);
    }
    std::sort(voter.approvals.begin(), voter.approvals.end());
    voter.approvals.erase(
        std::unique(voter.approvals.begin(), voter.approvals.end()),
        voter.approvals.end());
    if (voter.approvals.empty()) {
      ++dropped_voters_;
      continue;
    }
    for (const int j : voter.approvals) ++approval_counts_[j];
    voters_.push_back(std::move(voter));
  }
}

std::optional<int> Election::CandidateIndex(std::string_view id) const {
  const auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::string> Election::CandidateIds(
    std::span<const int> members) const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (const int j : members) out.push_back(candidates_.at(j));
  return out;
}

std::vector<int> Election::CandidateIndices(
    std::span<const std::string> ids) const {
  std::vector<int> out;
  for (const std::string& id : ids) {
    const auto j = CandidateIndex(id);
    if (!j) {
      throw Error(ErrorCode::kUnknownCandidate,
                  "unknown candidate '" + id + "'");
    }
    out.push_back(*j);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ScoringRule ScoringRule::TruncatedAv(int p) {
  if (p < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "truncation must be positive, got " + std::to_string(p));
  }
  ScoringRule rule(Kind::kTruncatedAv);
  rule.truncation_ = p;
  return rule;
}

ScoringRule ScoringRule::Thiele(std::vector<Rational> weights) {
  for (Rational& w : weights) w.canonicalize();
  if (weights.empty() || weights[0] != 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "Thiele weights must start with w(0) = 0");
  }
  for (std::size_t x = 1; x < weights.size(); ++x) {
    if (weights[x] < weights[x - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "Thiele weights must be non-decreasing (w(" +
                      std::to_string(x) + ") < w(" + std::to_string(x - 1) +
                      "))");
    }
  }
  ScoringRule rule(Kind::kThiele);
  rule.weights_ = std::move(weights);
  return rule;
}

ScoringRule ScoringRule::Table(std::map<std::pair<int, int>, Rational> table) {
  for (auto& [key, value] : table) {
    value.canonicalize();
    if (key.first < 0 || key.second < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative table index");
    }
    if (value < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "score table values must be non-negative");
    }
  }
  // Monotone in x for each fixed y.
  for (const auto& [key, value] : table) {
    for (const auto& [other_key, other_value] : table) {
      if (other_key.second == key.second && other_key.first > key.first &&
          other_value < value) {
        throw Error(ErrorCode::kInvalidArgument,
                    "score table decreases in x at y = " +
                        std::to_string(key.second));
      }
    }
  }
  ScoringRule rule(Kind::kTable);
  rule.table_ = std::move(table);
  return rule;
}

std::string ScoringRule::ToString() const {
  switch (kind_) {
    case Kind::kAv:
      return "av";
    case Kind::kPav:
      return "pav";
    case Kind::kCc:
      return "cc";
    case Kind::kSav:
      return "sav";
    case Kind::kTruncatedAv:
      return "trunc:" + std::to_string(truncation_);
    case Kind::kThiele: {
      std::string out = "thiele:";
      for (std::size_t x = 1; x < weights_.size(); ++x) {
        if (x > 1) out += ",";
        out += RationalToString(weights_[x]);
      }
      return out;
    }
    case Kind::kTable:
      return "table";
  }
  return "?";
}

ScoringRule ParseRule(std::string_view spec) {
  if (spec == "av") return ScoringRule::Av();
  if (spec == "pav") return ScoringRule::Pav();
  if (spec == "cc") return ScoringRule::Cc();
  if (spec == "sav") return ScoringRule::Sav();
  if (spec.starts_with("trunc:")) {
    const std::string_view digits = spec.substr(6);
    const Rational p = ParseRational(digits);
    if (p.get_den() != 1 || p < 1 || !p.get_num().fits_sint_p() ||
        digits.find('/') != std::string_view::npos) {
      throw Error(ErrorCode::kInvalidArgument,
                  "trunc:<p> needs a positive integer, got '" +
                      std::string(digits) + "'");
    }
    return ScoringRule::TruncatedAv(static_cast<int>(p.get_num().get_si()));
  }
  if (spec.starts_with("thiele:")) {
    std::vector<Rational> weights{Rational(0)};
    std::string_view rest = spec.substr(7);
    while (true) {
      const auto comma = rest.find(',');
      weights.push_back(ParseRational(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return ScoringRule::Thiele(std::move(weights));
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown rule '" + std::string(spec) +
                  "' (expected av, pav, cc, sav, trunc:<p> or "
                  "thiele:<w1,w2,...>)");
}

Rational RuleValue(const ScoringRule& rule, int x, int y) {
  if (x < 0 || y < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative rule argument");
  }
  x = std::min(x, y);
  switch (rule.kind()) {
    case ScoringRule::Kind::kAv:
      return Rational(x);
    case ScoringRule::Kind::kPav: {
      Rational sum(0);
      for (int i = 1; i <= x; ++i) sum += Rational(1, i);
      return sum;
    }
    case ScoringRule::Kind::kCc:
      return Rational(std::min(x, 1));
    case ScoringRule::Kind::kSav: {
      if (y == 0) {
        throw Error(ErrorCode::kUndefinedScore, "SAV is undefined for y = 0");
      }
      Rational value(x, y);
      value.canonicalize();
      return value;
    }
    case ScoringRule::Kind::kTruncatedAv:
      return Rational(std::min(x, rule.truncation()));
    case ScoringRule::Kind::kThiele: {
      const auto& w = rule.weights();
      return w[std::min<std::size_t>(x, w.size() - 1)];
    }
    case ScoringRule::Kind::kTable: {
      const auto it = rule.table().find({x, y});
      if (it == rule.table().end()) {
        throw Error(ErrorCode::kUndefinedScore,
                    "score table has no entry for (" + std::to_string(x) +
                        ", " + std::to_string(y) + ")");
      }
      return it->second;
    }
  }
  return Rational(0);
}

Rational CommitteeScore(const Election& election, const ScoringRule& rule,
                        std::span<const int> members) {
  std::vector<char> selected(election.num_candidates(), 0);
  for (const int j : members) {
    if (j < 0 || j >= election.num_candidates()) {
      throw Error(ErrorCode::kUnknownCandidate,
                  "candidate index " + std::to_string(j) + " out of range");
    }
    selected[j] = 1;
  }
  Rational total(0);
  for (const Voter& v : election.voters()) {
    int x = 0;
    for (const int j : v.approvals) x += selected[j];
    total += RuleValue(rule, x, static_cast<int>(v.approvals.size()));
  }
  return total;
}

Rational CommitteeScore(const Election& election, const ScoringRule& rule,
                        std::span<const std::string> members) {
  const std::vector<int> indices = election.CandidateIndices(members);
  return CommitteeScore(election, rule, indices);
}

bool LexicographicallyBefore(std::span<const int> a, std::span<const int> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace abcc
