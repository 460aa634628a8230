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

#include "abcc/bnb_solver.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <unordered_map>

#include "abcc/error.h"

namespace abcc {
namespace {

using Clock = std::chrono::steady_clock;

// Per-voter score tables and the bound computation shared by the search and
// CompletionBound.
class ScoreModel {
 public:
  ScoreModel(const Election& election, const ScoringRule& rule)
      : election_(election),
        diminishing_(HasDiminishingIncrements(election, rule)) {
    const int k = election.committee_size();
    std::unordered_map<int, std::size_t> table_of_size;
    for (const Voter& v : election.voters()) {
      const int y = static_cast<int>(v.approvals.size());
      auto [it, inserted] = table_of_size.try_emplace(y, tables_.size());
      if (inserted) {
        std::vector<Rational> values;
        for (int x = 0; x <= std::min(k, y); ++x) {
          values.push_back(RuleValue(rule, x, y));
        }
        tables_.push_back(std::move(values));
      }
      table_.push_back(it->second);
    }
    approvers_.resize(election.num_candidates());
    for (int i = 0; i < election.num_voters(); ++i) {
      for (const int j : election.voters()[i].approvals) {
        approvers_[j].push_back(i);
      }
    }
  }

  const Rational& Value(int voter, int x) const {
    const auto& t = tables_[table_[voter]];
    return t[std::min<std::size_t>(x, t.size() - 1)];
  }

  const std::vector<int>& approvers(int candidate) const {
    return approvers_[candidate];
  }

  Rational Score(std::span<const int> counts) const {
    Rational total(0);
    for (std::size_t i = 0; i < counts.size(); ++i) total += Value(i, counts[i]);
    return total;
  }

  // `counts[v]` is the number of selected candidates voter v approves.
  Rational Bound(std::span<const int> counts, std::span<const int> available,
                 int slots) const {
    const int n = election_.num_voters();
    std::vector<int> free(n, 0);
    for (const int c : available) {
      for (const int v : approvers_[c]) ++free[v];
    }
    Rational cap(0);
    for (int v = 0; v < n; ++v) {
      cap += Value(v, counts[v] + std::min(free[v], slots));
    }
    if (!diminishing_) return cap;

    std::vector<Rational> gains;
    gains.reserve(available.size());
    for (const int c : available) {
      Rational g(0);
      for (const int v : approvers_[c]) {
        g += Value(v, counts[v] + 1) - Value(v, counts[v]);
      }
      gains.push_back(std::move(g));
    }
    const std::size_t take = std::min<std::size_t>(slots, gains.size());
    std::partial_sort(gains.begin(), gains.begin() + take, gains.end(),
                      std::greater<>());
    Rational marginal = Score(counts);
    for (std::size_t i = 0; i < take; ++i) marginal += gains[i];
    return std::min(cap, marginal);
  }

 private:
  const Election& election_;
  bool diminishing_;
  std::vector<std::vector<Rational>> tables_;
  std::vector<std::size_t> table_;
  std::vector<std::vector<int>> approvers_;
};

class Search {
 public:
  Search(const Encoding& encoding, const Election& election,
         const ScoringRule& rule, const RelationSource& db,
         const ConstraintSet& gamma, const SolveOptions& options)
      : election_(election),
        db_(db),
        gamma_(gamma),
        scores_(election, rule),
        k_(election.committee_size()),
        time_limit_ms_(options.time_limit_ms) {
    ExtractRows(encoding);
  }

  SolveReport Run() {
    start_ = Clock::now();
    SolveReport report;
    if (!trivially_infeasible_) {
      selected_.assign(election_.num_candidates(), 0);
      counts_.assign(election_.num_voters(), 0);
      row_load_.assign(rows_.size(), 0);
      Dfs(0, 0);
    }
    report.nodes_explored = nodes_;
    if (best_) {
      report.committee = best_;
      report.objective = best_->score;
    }
    if (timed_out_) {
      report.status = SolveStatus::kTimeout;
    } else {
      report.status =
          best_ ? SolveStatus::kOptimal : SolveStatus::kInfeasible;
    }
    return report;
  }

 private:
  void ExtractRows(const Encoding& encoding) {
    std::unordered_map<VarId, int> candidate_of;
    for (int j = 0; j < static_cast<int>(encoding.z.size()); ++j) {
      candidate_of[encoding.z[j]] = j;
    }
    rows_of_.resize(election_.num_candidates());
    for (const MipConstraint& row : encoding.model.constraints()) {
      if (row.terms.empty()) {
        const bool holds = row.sense == RowSense::kLessEqual   ? 0 <= row.rhs
                           : row.sense == RowSense::kEqual     ? row.rhs == 0
                                                               : 0 >= row.rhs;
        if (!holds) trivially_infeasible_ = true;
        continue;
      }
      if (row.sense != RowSense::kLessEqual) continue;
      PackingRow packing{{}, 0};
      bool pure = true;
      for (const LinearTerm& t : row.terms) {
        const auto it = candidate_of.find(t.var);
        if (it == candidate_of.end() || t.coefficient != 1) {
          pure = false;
          break;
        }
        packing.members.push_back(it->second);
      }
      if (!pure) continue;
      // Integral left-hand side, so the capacity rounds down.
      mpz_class cap;
      mpz_fdiv_q(cap.get_mpz_t(), row.rhs.get_num_mpz_t(),
                 row.rhs.get_den_mpz_t());
      if (cap < 0) {
        trivially_infeasible_ = true;
        continue;
      }
      if (cap >= static_cast<long>(packing.members.size())) continue;
      packing.capacity = static_cast<int>(cap.get_si());
      const int index = static_cast<int>(rows_.size());
      for (const int j : packing.members) rows_of_[j].push_back(index);
      rows_.push_back(std::move(packing));
    }
  }

  bool Blocked(int candidate) const {
    for (const int r : rows_of_[candidate]) {
      if (row_load_[r] >= rows_[r].capacity) return true;
    }
    return false;
  }

  bool OutOfTime() {
    if (time_limit_ms_ <= 0) return false;
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        Clock::now() - start_);
    if (elapsed.count() >= time_limit_ms_) timed_out_ = true;
    return timed_out_;
  }

  void Leaf() {
    const Rational score = scores_.Score(counts_);
    if (best_ && score <= best_->score) return;
    std::vector<int> members;
    for (int j = 0; j < election_.num_candidates(); ++j) {
      if (selected_[j]) members.push_back(j);
    }
    const std::vector<std::string> ids = election_.CandidateIds(members);
    if (!IsLegal(db_, ids, gamma_, k_)) return;
    best_ = Committee{std::move(members), score};
  }

  void Dfs(int next, int count) {
    ++nodes_;
    if (timed_out_ || OutOfTime()) return;
    if (count == k_) {
      Leaf();
      return;
    }
    std::vector<int> available;
    for (int j = next; j < election_.num_candidates(); ++j) {
      if (!Blocked(j)) available.push_back(j);
    }
    const int slots = k_ - count;
    if (static_cast<int>(available.size()) < slots) return;
    if (best_ &&
        scores_.Bound(counts_, available, slots) <= best_->score) {
      return;
    }

    const int c = available.front();
    // Include.
    selected_[c] = 1;
    for (const int v : scores_.approvers(c)) ++counts_[v];
    for (const int r : rows_of_[c]) ++row_load_[r];
    Dfs(c + 1, count + 1);
    for (const int r : rows_of_[c]) --row_load_[r];
    for (const int v : scores_.approvers(c)) --counts_[v];
    selected_[c] = 0;
    // Exclude.
    Dfs(c + 1, count);
  }

  const Election& election_;
  const RelationSource& db_;
  const ConstraintSet& gamma_;
  ScoreModel scores_;
  const int k_;
  const std::int64_t time_limit_ms_;

  std::vector<PackingRow> rows_;
  std::vector<std::vector<int>> rows_of_;
  bool trivially_infeasible_ = false;

  std::vector<char> selected_;
  std::vector<int> counts_;
  std::vector<int> row_load_;
  std::optional<Committee> best_;
  std::uint64_t nodes_ = 0;
  bool timed_out_ = false;
  Clock::time_point start_;
};

}  // namespace

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kTimeout:
      return "timeout";
  }
  return "unknown";
}

bool HasDiminishingIncrements(const Election& election,
                              const ScoringRule& rule) {
  const int k = election.committee_size();
  std::vector<int> sizes;
  for (const Voter& v : election.voters()) {
    sizes.push_back(static_cast<int>(v.approvals.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  for (const int y : sizes) {
    const int top = std::min(k, y);
    for (int x = 0; x + 2 <= top; ++x) {
      const Rational first = RuleValue(rule, x + 1, y) - RuleValue(rule, x, y);
      const Rational second =
          RuleValue(rule, x + 2, y) - RuleValue(rule, x + 1, y);
      if (second > first) return false;
    }
  }
  return true;
}

Rational CompletionBound(const Election& election, const ScoringRule& rule,
                         std::span<const int> selected,
                         std::span<const int> available, int slots) {
  const ScoreModel scores(election, rule);
  std::vector<char> in(election.num_candidates(), 0);
  for (const int j : selected) in[j] = 1;
  std::vector<int> counts(election.num_voters(), 0);
  for (int i = 0; i < election.num_voters(); ++i) {
    for (const int j : election.voters()[i].approvals) counts[i] += in[j];
  }
  return scores.Bound(counts, available, slots);
}

SolveReport Solve(const Encoding& encoding, const Election& election,
                  const ScoringRule& rule, const RelationSource& db,
                  const ConstraintSet& gamma, const SolveOptions& options) {
  if (options.verify_model) {
    const Encoding fresh =
        EncodeModel(election, rule, db, gamma, options.encoder);
    const ModelStats expected = GetModelStats(fresh.model);
    const ModelStats actual = GetModelStats(encoding.model);
    if (!(expected == actual) ||
        encoding.z.size() != static_cast<std::size_t>(election.num_candidates())) {
      throw Error(ErrorCode::kModelMismatch,
                  "model has " + std::to_string(actual.num_variables) +
                      " variables / " + std::to_string(actual.num_constraints) +
                      " constraints, a fresh encoding has " +
                      std::to_string(expected.num_variables) + " / " +
                      std::to_string(expected.num_constraints));
    }
  }
  const auto start = Clock::now();
  Search search(encoding, election, rule, db, gamma, options);
  SolveReport report = search.Run();
  report.solve_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return report;
}

}  // namespace abcc
