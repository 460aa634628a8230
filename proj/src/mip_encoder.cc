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

#include "abcc/mip_encoder.h"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

#include "abcc/error.h"

namespace abcc {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

// Adds a variable under `base`, suffixing it if the name is taken.
VarId AddUnique(MipModel& model, const std::string& base, VarKind kind,
                Rational lower, Rational upper) {
  std::string name = base;
  for (int n = 2; model.HasName(name); ++n) {
    name = base + "_dup" + std::to_string(n);
  }
  return model.AddVariable(std::move(name), kind, std::move(lower),
                           std::move(upper));
}

// Candidate indices bound by the Com atoms of `atoms` under `a`. Every Com
// value is a candidate because Com is grounded over the candidate set.
std::vector<int> ComMembers(std::span<const RelationalAtom> atoms,
                            const Assignment& a, const Election& election) {
  std::vector<int> out;
  for (const RelationalAtom& atom : atoms) {
    if (!atom.is_com()) continue;
    const Term& t = atom.terms.front();
    const Value& v = t.is_variable() ? *a.Find(t.variable()) : t.constant();
    out.push_back(*election.CandidateIndex(v.as_text()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LinearTerm> SelectionSum(const Encoding& enc,
                                     std::span<const int> members) {
  std::vector<LinearTerm> terms;
  terms.reserve(members.size());
  for (const int j : members) terms.push_back({1, enc.z[j]});
  return terms;
}

}  // namespace

std::vector<EncoderOptions> EncoderOptions::AllCombinations() {
  std::vector<EncoderOptions> out;
  for (int mask = 0; mask < 8; ++mask) {
    out.push_back({(mask & 4) != 0, (mask & 2) != 0, (mask & 1) != 0});
  }
  return out;
}

std::string EncoderOptions::ToString() const {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ",";
    out += name;
  };
  add(group_voters, "group");
  add(prune_scores, "prune");
  add(contract_dcs, "contract");
  return out.empty() ? "none" : out;
}

std::string SanitizeName(std::string_view id) {
  std::string out;
  out.reserve(id.size());
  for (const char c : id) {
    out += (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ? c : '_';
  }
  if (out.empty()) out = "_";
  return out;
}

std::vector<WeightedVoter> GroupVoters(const Election& election) {
  std::vector<WeightedVoter> groups;
  std::map<std::vector<int>, std::size_t> index;
  for (const Voter& v : election.voters()) {
    const auto [it, inserted] = index.try_emplace(v.approvals, groups.size());
    if (inserted) {
      groups.push_back({"g" + std::to_string(groups.size() + 1), v.approvals,
                        1});
    } else {
      ++groups[it->second].weight;
    }
  }
  return groups;
}

Rational BigM(const Election& election, const ScoringRule& rule) {
  Rational best(0);
  for (const Voter& v : election.voters()) {
    best = std::max(best, RuleValue(rule, election.committee_size(),
                                    static_cast<int>(v.approvals.size())));
  }
  return best + 1;
}

Encoding EncodeBase(const Election& election, const ScoringRule& rule,
                    const EncoderOptions& options) {
  Encoding enc;
  MipModel& model = enc.model;
  const int k = election.committee_size();
  enc.big_m = BigM(election, rule);

  for (const std::string& c : election.candidates()) {
    enc.z.push_back(AddUnique(model, "z_" + SanitizeName(c), VarKind::kBinary,
                              0, 1));
  }
  if (options.group_voters) {
    enc.voters = GroupVoters(election);
  } else {
    for (const Voter& v : election.voters()) {
      enc.voters.push_back({SanitizeName(v.id), v.approvals, 1});
    }
  }

  for (WeightedVoter& voter : enc.voters) {
    const int approved = static_cast<int>(voter.approvals.size());
    const VarId u = AddUnique(model, "u_" + voter.key, VarKind::kInteger, 0,
                              std::min(k, approved));
    // Keep the name keys aligned with what was actually registered.
    voter.key = model.variable(u).name.substr(2);
    const VarId s = AddUnique(model, "s_" + voter.key, VarKind::kContinuous,
                              0, enc.big_m);
    enc.u.push_back(u);
    enc.s.push_back(s);

    std::vector<LinearTerm> count = SelectionSum(enc, voter.approvals);
    count.push_back({-1, u});
    model.AddConstraint(std::move(count), RowSense::kEqual, 0);

    const int last = options.prune_scores ? std::min(k, approved) : k;
    for (int kp = 0; kp <= last; ++kp) {
      const std::string suffix = voter.key + "_" + std::to_string(kp);
      const VarId b =
          AddUnique(model, "abs_b_" + suffix, VarKind::kBinary, 0, 1);
      const VarId tp =
          AddUnique(model, "abs_tp_" + suffix, VarKind::kInteger, 0, k + 1);
      const VarId tm =
          AddUnique(model, "abs_tm_" + suffix, VarKind::kInteger, 0, k + 1);
      model.AddConstraint({{1, tp}, {-1, tm}, {1, u}}, RowSense::kEqual, kp);
      model.AddConstraint({{1, tp}, {-(k + 1), b}}, RowSense::kLessEqual, 0);
      model.AddConstraint({{1, tm}, {k + 1, b}}, RowSense::kLessEqual, k + 1);
      model.AddConstraint({{1, s}, {-enc.big_m, tp}, {-enc.big_m, tm}},
                          RowSense::kLessEqual, RuleValue(rule, kp, approved));
    }
    model.AddObjectiveTerm(voter.weight, s);
  }

  std::vector<LinearTerm> all;
  for (const VarId z : enc.z) all.push_back({1, z});
  model.AddConstraint(std::move(all), RowSense::kEqual, k);
  return enc;
}

void EncodeTgd(Encoding& enc, const RelationSource& db,
               const Election& election, const Tgd& tgd, int tgd_index) {
  MipModel& model = enc.model;
  const Relation candidates = CommitteeRelation(election.candidates());
  const OverlaySource source(db, candidates);
  const std::string prefix = "tgd" + std::to_string(tgd_index);

  auto start = Clock::now();
  const std::vector<Assignment> premises =
      GroundConjunction(source, tgd.body, {}, Assignment());
  enc.ground_ms += MillisSince(start);

  int next_alpha = 0;
  int next_beta = 0;
  for (const Assignment& alpha : premises) {
    const std::vector<int> premise_set = ComMembers(tgd.body, alpha, election);

    start = Clock::now();
    const std::vector<Assignment> extensions =
        GroundConjunction(source, tgd.head, {}, alpha);
    enc.ground_ms += MillisSince(start);

    std::vector<std::vector<int>> conclusions;
    std::set<std::vector<int>> seen;
    for (const Assignment& beta : extensions) {
      std::vector<int> c = ComMembers(tgd.head, beta, election);
      if (seen.insert(c).second) conclusions.push_back(std::move(c));
    }

    const int premise_size = static_cast<int>(premise_set.size());
    if (conclusions.empty()) {
      // The premise must not fire.
      if (premise_set.empty()) {
        model.AddInfeasibleRow();
      } else {
        model.AddConstraint(SelectionSum(enc, premise_set),
                            RowSense::kLessEqual, premise_size - 1);
      }
      continue;
    }

    const std::string alpha_name = prefix + "_a" + std::to_string(next_alpha++);
    VarId b_alpha;
    if (premise_set.empty()) {
      b_alpha = AddUnique(model, alpha_name, VarKind::kBinary, 1, 1);
    } else {
      b_alpha = AddUnique(model, alpha_name, VarKind::kBinary, 0, 1);
      std::vector<LinearTerm> lower = SelectionSum(enc, premise_set);
      lower.push_back({-premise_size, b_alpha});
      model.AddConstraint(std::move(lower), RowSense::kGreaterEqual, 0);
      std::vector<LinearTerm> upper = SelectionSum(enc, premise_set);
      upper.push_back({-1, b_alpha});
      model.AddConstraint(std::move(upper), RowSense::kLessEqual,
                          premise_size - 1);
    }

    std::vector<LinearTerm> cover{{1, b_alpha}};
    for (const std::vector<int>& conclusion : conclusions) {
      const std::string beta_name =
          prefix + "_b" + std::to_string(next_beta++);
      VarId b_beta;
      if (conclusion.empty()) {
        b_beta = AddUnique(model, beta_name, VarKind::kBinary, 1, 1);
      } else {
        b_beta = AddUnique(model, beta_name, VarKind::kBinary, 0, 1);
        std::vector<LinearTerm> row = SelectionSum(enc, conclusion);
        row.push_back({-static_cast<int>(conclusion.size()), b_beta});
        model.AddConstraint(std::move(row), RowSense::kGreaterEqual, 0);
      }
      cover.push_back({-1, b_beta});
    }
    model.AddConstraint(std::move(cover), RowSense::kLessEqual, 0);
  }
}

std::vector<std::vector<int>> GroundConflicts(const RelationSource& db,
                                              const Election& election,
                                              const Dc& dc) {
  const Relation candidates = CommitteeRelation(election.candidates());
  const OverlaySource source(db, candidates);
  std::set<std::vector<int>> conflicts;
  ForEachGrounding(source, dc.relational_atoms, dc.comparison_atoms,
                   Assignment(), [&](const Assignment& alpha) {
                     conflicts.insert(
                         ComMembers(dc.relational_atoms, alpha, election));
                     return true;
                   });
  return {conflicts.begin(), conflicts.end()};
}

std::vector<PackingRow> ConflictRows(
    const std::vector<std::vector<int>>& conflicts) {
  std::vector<PackingRow> rows;
  for (const std::vector<int>& c : conflicts) {
    rows.push_back({c, static_cast<int>(c.size()) - 1});
  }
  return rows;
}

namespace {

// Whether every q-subset of `clique` that contains `vertex` is an edge,
// i.e. every (q-1)-subset of `clique` joined with `vertex` is.
bool ExtendsHyperclique(const std::vector<int>& clique, int vertex, int q,
                        const std::set<std::vector<int>>& edges) {
  const int n = static_cast<int>(clique.size());
  const int r = q - 1;
  if (r > n) return false;
  std::vector<int> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    std::vector<int> edge{vertex};
    for (const int p : pick) edge.push_back(clique[p]);
    std::sort(edge.begin(), edge.end());
    if (edges.count(edge) == 0) return false;
    // Next r-combination of [0, n).
    int i = r - 1;
    while (i >= 0 && pick[i] == n - r + i) --i;
    if (i < 0) return true;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

std::vector<PackingRow> ContractConflicts(
    const std::vector<std::vector<int>>& conflicts, int num_candidates) {
  std::size_t q = 0;
  for (const auto& c : conflicts) q = std::max(q, c.size());
  if (q < 2) return ConflictRows(conflicts);

  std::vector<PackingRow> rows;
  std::set<std::vector<int>> edges;
  for (const auto& c : conflicts) {
    if (c.size() == q) {
      edges.insert(c);
    } else {
      rows.push_back({c, static_cast<int>(c.size()) - 1});
    }
  }

  std::vector<int> degree(num_candidates, 0);
  for (const auto& e : edges) {
    for (const int v : e) ++degree[v];
  }
  std::vector<int> order(num_candidates);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });

  std::set<std::vector<int>> uncovered = edges;
  while (!uncovered.empty()) {
    // Seed with an uncovered edge at the highest-degree vertex that has one.
    const std::vector<int>* seed = nullptr;
    for (const int v : order) {
      for (const auto& e : uncovered) {
        if (std::binary_search(e.begin(), e.end(), v)) {
          seed = &e;
          break;
        }
      }
      if (seed != nullptr) break;
    }
    std::vector<int> clique = *seed;
    for (const int w : order) {
      if (degree[w] == 0) break;
      if (std::find(clique.begin(), clique.end(), w) != clique.end()) continue;
      if (ExtendsHyperclique(clique, w, static_cast<int>(q), edges)) {
        clique.push_back(w);
      }
    }
    std::sort(clique.begin(), clique.end());
    for (auto it = uncovered.begin(); it != uncovered.end();) {
      if (std::includes(clique.begin(), clique.end(), it->begin(),
                        it->end())) {
        it = uncovered.erase(it);
      } else {
        ++it;
      }
    }
    rows.push_back({std::move(clique), static_cast<int>(q) - 1});
  }
  return rows;
}

void EncodeDc(Encoding& enc, const RelationSource& db,
              const Election& election, const Dc& dc, bool contract) {
  const auto start = Clock::now();
  std::vector<std::vector<int>> conflicts = GroundConflicts(db, election, dc);
  enc.ground_ms += MillisSince(start);

  if (!conflicts.empty() && conflicts.front().empty()) {
    // The database alone violates the DC.
    enc.model.AddInfeasibleRow();
    conflicts.erase(conflicts.begin());
  }
  const std::vector<PackingRow> rows =
      contract ? ContractConflicts(conflicts, election.num_candidates())
               : ConflictRows(conflicts);
  for (const PackingRow& row : rows) {
    enc.model.AddConstraint(SelectionSum(enc, row.members),
                            RowSense::kLessEqual, row.capacity);
  }
}

Encoding EncodeModel(const Election& election, const ScoringRule& rule,
                     const RelationSource& db, const ConstraintSet& gamma,
                     const EncoderOptions& options) {
  Encoding enc = EncodeBase(election, rule, options);
  for (std::size_t i = 0; i < gamma.tgds.size(); ++i) {
    EncodeTgd(enc, db, election, gamma.tgds[i], static_cast<int>(i));
  }
  for (const Dc& dc : gamma.dcs) {
    EncodeDc(enc, db, election, dc, options.contract_dcs);
  }
  return enc;
}

}  // namespace abcc
