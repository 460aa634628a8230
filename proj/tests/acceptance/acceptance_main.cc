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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails. Every limit below is fixed here.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "abcc/bnb_solver.h"
#include "abcc/constraints.h"
#include "abcc/election.h"
#include "abcc/io.h"
#include "abcc/mip_encoder.h"
#include "abcc/mip_model.h"
#include "abcc/oracle.h"
#include "abcc/patterns.h"
#include "support/fixtures.h"
#include "support/model_check.h"
#include "support/random_instances.h"

namespace abcc {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  // Records the first failure only.
  void Fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string name;
  // Wall-clock limit in seconds; 0 means none.
  double limit_s;
  std::function<Outcome()> run;
};

std::string Join(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out += (i ? ", " : "") + ids[i];
  }
  return out + "}";
}

struct Fixture {
  Schema schema;
  Database db;
  Election election;
  ConstraintSet gamma;
};

Fixture LoadConference(const std::string& constraints_file, int k) {
  const auto dir = testing::TestDataDir() / "fig1";
  Schema schema = ParseSchemaJson(ReadFile(dir / "schema.json"), "schema.json");
  Database db = LoadDatabase(schema, dir / "db");
  Election election(
      ParseCandidateList(ReadFile(dir / "candidates.txt")),
      ParseApprovals(ReadFile(dir / "approvals.txt"), "approvals.txt"), k);
  ConstraintSet gamma =
      ParseConstraints(ReadFile(dir / constraints_file), schema);
  return {std::move(schema), std::move(db), std::move(election),
          std::move(gamma)};
}

SolveReport SolveWith(const Election& e, const ScoringRule& rule,
                      const RelationSource& db, const ConstraintSet& gamma,
                      const EncoderOptions& options, Encoding* out = nullptr) {
  Encoding enc = EncodeModel(e, rule, db, gamma, options);
  SolveOptions solve;
  solve.encoder = options;
  SolveReport r = Solve(enc, e, rule, db, gamma, solve);
  if (out) *out = std::move(enc);
  return r;
}

// Checks oracle and bnb (every option combination) against an expected
// committee and score.
Outcome ExpectWinner(const std::string& constraints_file,
                     const std::vector<std::string>& members, int score) {
  Outcome o;
  const Fixture f = LoadConference(constraints_file, 3);
  const ScoringRule av = ScoringRule::Av();
  const auto oracle = BruteForceWinner(f.election, f.db, f.gamma, av);
  if (!oracle) {
    o.Fail("oracle: no legal committee");
  } else if (f.election.CandidateIds(oracle->members) != members ||
             oracle->score != score) {
    o.Fail("oracle: " + Join(f.election.CandidateIds(oracle->members)) +
           " score " + RationalToString(oracle->score));
  }
  for (const EncoderOptions& options : EncoderOptions::AllCombinations()) {
    const SolveReport r = SolveWith(f.election, av, f.db, f.gamma, options);
    if (r.status != SolveStatus::kOptimal) {
      o.Fail("bnb [" + options.ToString() + "]: " +
             std::string(SolveStatusName(r.status)));
    } else if (f.election.CandidateIds(r.committee->members) != members ||
               r.objective != score) {
      o.Fail("bnb [" + options.ToString() +
             "]: " + Join(f.election.CandidateIds(r.committee->members)) +
             " score " + RationalToString(r.objective));
    }
  }
  if (o.ok) o.detail = Join(members) + " score " + std::to_string(score);
  return o;
}

Outcome ConferenceDc() {
  return ExpectWinner("supervise_dc.txt", {"Ann", "Cale", "Dave"}, 7);
}

Outcome ConferenceTgds() {
  return ExpectWinner("topic_tgds.txt", {"Ann", "Bob", "Dave"}, 8);
}

constexpr int kSweepInstances = 500;
constexpr std::uint64_t kSweepSeed = 20260101;

Outcome OracleSweep() {
  Outcome o;
  std::mt19937_64 rng(kSweepSeed);
  int infeasible = 0;
  for (int i = 0; i < kSweepInstances; ++i) {
    const testing::Instance inst = testing::RandomInstance(rng, {});
    const ScoringRule rule = ScoringRule::Av();
    const auto oracle =
        BruteForceWinner(inst.election, inst.db, inst.gamma, rule);
    const SolveReport r = SolveWith(inst.election, rule, inst.db, inst.gamma,
                                    EncoderOptions::All());
    if (!oracle) {
      ++infeasible;
      if (r.status != SolveStatus::kInfeasible) {
        o.Fail("instance " + std::to_string(i) + ": oracle infeasible, bnb " +
               std::string(SolveStatusName(r.status)));
      }
    } else if (r.status != SolveStatus::kOptimal ||
               r.objective != oracle->score) {
      o.Fail("instance " + std::to_string(i) + ": oracle " +
             RationalToString(oracle->score) + ", bnb " +
             RationalToString(r.objective));
    }
  }
  if (o.ok) {
    o.detail = std::to_string(kSweepInstances) + " instances, " +
               std::to_string(infeasible) + " infeasible";
  }
  return o;
}

std::vector<std::vector<int>> Subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> mask(n, 0);
  std::fill(mask.begin(), mask.begin() + k, 1);
  do {
    std::vector<int> s;
    for (int i = 0; i < n; ++i) {
      if (mask[i]) s.push_back(i);
    }
    out.push_back(std::move(s));
  } while (std::prev_permutation(mask.begin(), mask.end()));
  return out;
}

Outcome FeasibilityEquivalence() {
  Outcome o;
  std::mt19937_64 rng(kSweepSeed + 1);
  testing::InstanceShape shape;
  shape.max_candidates = 8;
  constexpr int kInstances = 100;
  std::uint64_t subsets = 0;
  for (int i = 0; i < kInstances; ++i) {
    const testing::Instance inst = testing::RandomInstance(rng, shape);
    const EncoderOptions options = EncoderOptions::AllCombinations()[i % 8];
    const Encoding enc = EncodeModel(inst.election, ScoringRule::Av(),
                                     inst.db, inst.gamma, options);
    const int k = inst.election.committee_size();
    for (const auto& committee :
         Subsets(inst.election.num_candidates(), k)) {
      std::map<VarId, Rational> fixed;
      for (const VarId z : enc.z) fixed[z] = 0;
      for (const int j : committee) fixed[enc.z[j]] = 1;
      const bool legal = IsLegal(
          inst.db, inst.election.CandidateIds(committee), inst.gamma, k);
      if (legal != testing::IsExtendable(enc.model, fixed)) {
        o.Fail("instance " + std::to_string(i) + " committee " +
               Join(inst.election.CandidateIds(committee)));
      }
      ++subsets;
    }
  }
  if (o.ok) {
    o.detail = std::to_string(kInstances) + " instances, " +
               std::to_string(subsets) + " committees";
  }
  return o;
}

bool NoLarger(const ModelStats& a, const ModelStats& b) {
  return a.num_variables <= b.num_variables &&
         a.num_constraints <= b.num_constraints &&
         a.num_binaries <= b.num_binaries;
}

Outcome NeutralityAndShrinkage() {
  Outcome o;
  std::mt19937_64 rng(kSweepSeed);
  for (int i = 0; i < kSweepInstances; ++i) {
    const testing::Instance inst = testing::RandomInstance(rng, {});
    std::vector<ModelStats> stats(8);
    std::vector<std::optional<Rational>> objective(8);
    for (int mask = 0; mask < 8; ++mask) {
      Encoding enc;
      const SolveReport r =
          SolveWith(inst.election, ScoringRule::Av(), inst.db, inst.gamma,
                    EncoderOptions::AllCombinations()[mask], &enc);
      stats[mask] = GetModelStats(enc.model);
      if (r.status == SolveStatus::kOptimal) objective[mask] = r.objective;
    }
    for (int mask = 0; mask < 8; ++mask) {
      for (const int bit : {4, 2, 1}) {
        if (mask & bit) continue;
        if (!NoLarger(stats[mask | bit], stats[mask])) {
          o.Fail("instance " + std::to_string(i) + ": " +
                 EncoderOptions::AllCombinations()[mask | bit].ToString() +
                 " grows the model");
        }
        if (objective[mask | bit] != objective[mask]) {
          o.Fail("instance " + std::to_string(i) + ": " +
                 EncoderOptions::AllCombinations()[mask | bit].ToString() +
                 " changes the objective");
        }
      }
    }
  }
  const Election e = testing::DuplicateBallotElection(1000, 3);
  EncoderOptions group;
  group.group_voters = true;
  const Encoding plain =
      EncodeBase(e, ScoringRule::Av(), EncoderOptions::None());
  const Encoding grouped = EncodeBase(e, ScoringRule::Av(), group);
  // Voter-indexed variables: everything except the selection variables.
  const double before =
      static_cast<double>(plain.model.variables().size() - plain.z.size());
  const double after =
      static_cast<double>(grouped.model.variables().size() - grouped.z.size());
  const double reduction = 1.0 - after / before;
  if (grouped.voters.size() != 5) {
    o.Fail(std::to_string(grouped.voters.size()) + " groups, expected 5");
  }
  if (reduction < 0.99) {
    o.Fail("grouping removes only " + std::to_string(100 * reduction) + "%");
  }
  if (o.ok) {
    std::ostringstream out;
    out.precision(4);
    out << kSweepInstances << " instances x 8 combinations; 1000 voters -> "
        << grouped.voters.size() << " groups, " << 100 * reduction
        << "% fewer voter variables";
    o.detail = out.str();
  }
  return o;
}

bool Accepts(const std::vector<PackingRow>& rows, unsigned mask) {
  for (const PackingRow& row : rows) {
    int taken = 0;
    for (const int v : row.members) taken += (mask >> v) & 1;
    if (taken > row.capacity) return false;
  }
  return true;
}

Outcome ContractionSoundness() {
  Outcome o;
  std::mt19937_64 rng(kSweepSeed + 2);
  constexpr int kInstances = 100;
  std::size_t plain_rows = 0, contracted_rows = 0;
  for (int i = 0; i < kInstances; ++i) {
    const testing::Instance inst = testing::RandomDcInstance(rng, 10);
    std::vector<PackingRow> plain, contracted;
    for (const Dc& dc : inst.gamma.dcs) {
      const auto conflicts = GroundConflicts(inst.db, inst.election, dc);
      for (auto& row : ConflictRows(conflicts)) plain.push_back(row);
      for (auto& row : ContractConflicts(conflicts,
                                         inst.election.num_candidates())) {
        contracted.push_back(row);
      }
    }
    plain_rows += plain.size();
    contracted_rows += contracted.size();
    const unsigned n = inst.election.num_candidates();
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (Accepts(plain, mask) != Accepts(contracted, mask)) {
        o.Fail("instance " + std::to_string(i) + " vector " +
               std::to_string(mask));
        break;
      }
    }
  }
  if (o.ok) {
    o.detail = std::to_string(kInstances) + " instances, " +
               std::to_string(plain_rows) + " conflict rows -> " +
               std::to_string(contracted_rows);
  }
  return o;
}

void CompareWithOracle(Outcome& o, const testing::Instance& inst,
                       const std::optional<Committee>& got, int i) {
  const auto oracle =
      BruteForceWinner(inst.election, inst.db, inst.gamma, ScoringRule::Av());
  if (got.has_value() != oracle.has_value()) {
    o.Fail("instance " + std::to_string(i) + ": feasibility differs");
  } else if (got && got->score != oracle->score) {
    o.Fail("instance " + std::to_string(i) + ": " +
           RationalToString(got->score) + " vs oracle " +
           RationalToString(oracle->score));
  }
}

Outcome TgdFastPaths() {
  Outcome o;
  std::mt19937_64 rng(kSweepSeed + 3);
  constexpr int kInstances = 200;
  for (int i = 0; i < kInstances; ++i) {
    const testing::Instance inst = testing::RandomSingleTgdInstance(rng, 10);
    const Pattern p = DetectPattern(inst.schema, inst.db, inst.gamma);
    if (!std::holds_alternative<SingleTgdPattern>(p)) {
      o.Fail("single instance " + std::to_string(i) + " not detected");
      continue;
    }
    CompareWithOracle(
        o, inst,
        GreedySingleTgd(inst.election, inst.db, std::get<SingleTgdPattern>(p)),
        i);
  }
  int identities = 0;
  for (int i = 0; i < kInstances; ++i) {
    const testing::Instance inst = testing::RandomDoubleTgdInstance(rng, 10);
    const Pattern p = DetectPattern(inst.schema, inst.db, inst.gamma);
    if (!std::holds_alternative<DoubleTgdPattern>(p)) {
      o.Fail("double instance " + std::to_string(i) + " not detected");
      continue;
    }
    const McmfOutcome out =
        McmfTwoTgds(inst.election, inst.db, std::get<DoubleTgdPattern>(p));
    CompareWithOracle(o, inst, out.committee, i);
    if (out.committee) {
      const Rational expected =
          Rational(inst.election.committee_size() *
                   inst.election.num_voters()) -
          *out.min_cost;
      if (out.committee->score != expected) {
        o.Fail("double instance " + std::to_string(i) +
               ": score differs from k|V| - cost");
      }
      ++identities;
    }
  }

  // Census network: C = c1..c5, k = 4, R1 = {1,2,3}, R2 = {1,2}.
  const Election e({"c1", "c2", "c3", "c4", "c5"}, {{"v1", {"c1"}}}, 4);
  auto unary = [](const std::string& name, std::vector<std::string> vals) {
    std::vector<Tuple> t;
    for (auto& v : vals) t.push_back({Value::Text(v)});
    return Relation(name, 1, std::move(t));
  };
  auto binary = [](const std::string& name,
                   std::vector<std::pair<std::string, std::string>> vals) {
    std::vector<Tuple> t;
    for (auto& [a, b] : vals) t.push_back({Value::Text(a), Value::Text(b)});
    return Relation(name, 2, std::move(t));
  };
  Database db;
  db.AddRelation(unary("R1", {"1", "2", "3"}));
  db.AddRelation(unary("R2", {"1", "2"}));
  db.AddRelation(
      binary("S1", {{"c1", "1"}, {"c2", "1"}, {"c3", "2"}, {"c4", "3"}}));
  db.AddRelation(binary("S2", {{"c1", "1"}, {"c2", "2"}, {"c4", "2"}}));
  const FlowNetwork net =
      BuildMcmfNetwork(e, db, {{"R1", "S1"}, {"R2", "S2"}});
  const int u = net.CountLabelsWithPrefix("u:");
  const int up = net.CountLabelsWithPrefix("u':");
  const int w = net.CountLabelsWithPrefix("w:");
  const int wp = net.CountLabelsWithPrefix("w':");
  if (u != 3 || up != 1 || w != 2 || wp != 2) {
    o.Fail("census u/u'/w/w' = " + std::to_string(u) + "/" +
           std::to_string(up) + "/" + std::to_string(w) + "/" +
           std::to_string(wp));
  }
  if (o.ok) {
    o.detail = "200 + 200 instances, " + std::to_string(identities) +
               " cost identities, census 3/1/2/2";
  }
  return o;
}

Outcome DcKeyFastPath() {
  Outcome o;
  std::mt19937_64 rng(kSweepSeed + 4);
  constexpr int kInstances = 200;
  for (int i = 0; i < kInstances; ++i) {
    const testing::Instance inst = testing::RandomDcKeyInstance(rng, 10);
    const Pattern p = DetectPattern(inst.schema, inst.db, inst.gamma);
    if (!std::holds_alternative<DcKeyPattern>(p)) {
      o.Fail("instance " + std::to_string(i) + " not detected");
      continue;
    }
    CompareWithOracle(
        o, inst,
        DcKeyGreedy(inst.election, inst.db, std::get<DcKeyPattern>(p)), i);
  }
  if (o.ok) o.detail = std::to_string(kInstances) + " instances";
  return o;
}

// Evaluates one row on an assignment given by variable id.
bool RowHolds(const MipConstraint& row, const std::map<VarId, int>& value) {
  Rational lhs = 0;
  for (const LinearTerm& t : row.terms) lhs += t.coefficient * value.at(t.var);
  switch (row.sense) {
    case RowSense::kLessEqual:
      return lhs <= row.rhs;
    case RowSense::kEqual:
      return lhs == row.rhs;
    case RowSense::kGreaterEqual:
      return lhs >= row.rhs;
  }
  return false;
}

// Takes the (b, t+, t-) rows the encoder emits for one voter and checks,
// for every t, that the feasible points all have t+ + t- = |t|.
Outcome AbsLinearization() {
  Outcome o;
  int points = 0;
  for (int k = 1; k <= 10; ++k) {
    std::vector<std::string> cands;
    for (int j = 0; j < k; ++j) cands.push_back("c" + std::to_string(j));
    const Election e(cands, {{"v", cands}}, k);
    const Encoding enc =
        EncodeBase(e, ScoringRule::Av(), EncoderOptions::None());
    const MipModel& m = enc.model;
    const VarId b = m.FindVariable("abs_b_v_0");
    const VarId tp = m.FindVariable("abs_tp_v_0");
    const VarId tm = m.FindVariable("abs_tm_v_0");
    std::vector<const MipConstraint*> rows;
    for (const MipConstraint& row : m.constraints()) {
      const bool own = std::all_of(
          row.terms.begin(), row.terms.end(), [&](const LinearTerm& t) {
            return t.var == b || t.var == tp || t.var == tm;
          });
      if (own && !row.terms.empty()) rows.push_back(&row);
    }
    if (rows.size() != 2) {
      o.Fail("k=" + std::to_string(k) + ": expected two sign rows");
      continue;
    }
    const int hi_p = static_cast<int>(m.variable(tp).upper.get_num().get_si());
    const int hi_m = static_cast<int>(m.variable(tm).upper.get_num().get_si());
    for (int t = -(k + 1); t <= k + 1; ++t) {
      bool any = false;
      for (int bv = 0; bv <= 1; ++bv) {
        for (int p = 0; p <= hi_p; ++p) {
          const int q = p - t;
          if (q < 0 || q > hi_m) continue;
          const std::map<VarId, int> value{{b, bv}, {tp, p}, {tm, q}};
          if (!RowHolds(*rows[0], value) || !RowHolds(*rows[1], value)) {
            continue;
          }
          any = true;
          ++points;
          if (p + q != std::abs(t)) {
            o.Fail("k=" + std::to_string(k) + " t=" + std::to_string(t) +
                   ": t+ + t- = " + std::to_string(p + q));
          }
        }
      }
      if (!any) {
        o.Fail("k=" + std::to_string(k) + " t=" + std::to_string(t) +
               ": no feasible point");
      }
    }
  }
  if (o.ok) o.detail = std::to_string(points) + " feasible points, k <= 10";
  return o;
}

Outcome RuleCoverage() {
  Outcome o;
  struct Spot {
    const char* rule;
    int x;
    int y;
    Rational expected;
  };
  const Spot spots[] = {
      {"pav", 2, 2, Rational(3, 2)}, {"pav", 3, 3, Rational(11, 6)},
      {"cc", 0, 3, Rational(0)},     {"cc", 5, 5, Rational(1)},
      {"sav", 2, 4, Rational(1, 2)}, {"trunc:2", 3, 3, Rational(2)},
  };
  for (const Spot& s : spots) {
    const Rational got = RuleValue(ParseRule(s.rule), s.x, s.y);
    if (got != s.expected) {
      o.Fail(std::string(s.rule) + "(" + std::to_string(s.x) + ") = " +
             RationalToString(got));
    }
  }
  const Fixture f = LoadConference("supervise_dc.txt", 3);
  const Encoding enc = EncodeModel(f.election, ScoringRule::Av(), f.db,
                                   f.gamma, EncoderOptions::All());
  const ModelStats stats = GetModelStats(enc.model);
  const ModelStats read = testing::LpStats(testing::ReadLp(ExportLp(enc.model)));
  if (!(stats == read)) o.Fail("LP round trip changes model_stats");
  if (o.ok) {
    o.detail = "6 spot values; LP " + std::to_string(stats.num_variables) +
               " variables, " + std::to_string(stats.num_constraints) +
               " constraints";
  }
  return o;
}

}  // namespace
}  // namespace abcc

int main() {
  using abcc::Criterion;
  const std::vector<Criterion> criteria = {
      {1, "conference fixture, supervision DC", 1, abcc::ConferenceDc},
      {2, "conference fixture, three TGDs", 1, abcc::ConferenceTgds},
      {3, "bnb matches oracle on random instances", 300, abcc::OracleSweep},
      {4, "model feasibility equals legality", 120,
       abcc::FeasibilityEquivalence},
      {5, "optimization neutrality and shrinkage", 0,
       abcc::NeutralityAndShrinkage},
      {6, "contraction soundness", 120, abcc::ContractionSoundness},
      {7, "greedy and min-cost-flow TGD solvers", 180, abcc::TgdFastPaths},
      {8, "greedy key-DC solver", 60, abcc::DcKeyFastPath},
      {9, "absolute-value linearization", 1, abcc::AbsLinearization},
      {10, "rule values and LP round trip", 0, abcc::RuleCoverage},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = abcc::Clock::now();
    abcc::Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.Fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(abcc::Clock::now() - start).count();
    if (c.limit_s > 0 && seconds >= c.limit_s) {
      outcome.Fail("took " + std::to_string(seconds) + " s, limit " +
                   std::to_string(c.limit_s) + " s");
    }
    if (!outcome.ok) ++failures;
    std::printf("%s %2d %-42s %8.3f s  %s\n", outcome.ok ? "PASS" : "FAIL",
                c.id, c.name.c_str(), seconds, outcome.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
