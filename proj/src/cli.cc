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

#include "abcc/cli.h"

#include <chrono>
#include <fstream>
#include <sstream>
#include <variant>

#include "abcc/bnb_solver.h"
#include "abcc/constraints.h"
#include "abcc/error.h"
#include "abcc/io.h"
#include "abcc/oracle.h"
#include "abcc/patterns.h"
#include "abcc/relational.h"
#include "json.hpp"
#include "spdlog/spdlog.h"

namespace abcc {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start)
      .count();
}

constexpr std::pair<SolverChoice, std::string_view> kSolverNames[] = {
    {SolverChoice::kAuto, "auto"},           {SolverChoice::kBnb, "bnb"},
    {SolverChoice::kOracle, "oracle"},       {SolverChoice::kGreedyTgd, "greedy-tgd"},
    {SolverChoice::kMcmf, "mcmf"},           {SolverChoice::kGreedyDc, "greedy-dc"},
    {SolverChoice::kLpExport, "lp-export"},
};

// Re-raises an error from parsing `path` with the file name in front.
[[noreturn]] void RethrowWithPath(const Error& e,
                                  const std::filesystem::path& path) {
  throw Error(e.code(), path.string() + ": " + e.detail());
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) {
    throw Error(ErrorCode::kInvalidArgument, "cannot write " + path.string());
  }
}

void SetCommittee(RunReport& report, const Election& election,
                  const Committee& committee) {
  report.committee.clear();
  for (int c : committee.members) {
    report.committee.push_back(
        {election.candidates()[c], election.approval_counts()[c]});
  }
  report.objective = committee.score;
}

void SetOutcome(RunReport& report, const Election& election,
                const std::optional<Committee>& committee) {
  if (committee) {
    report.status = "optimal";
    SetCommittee(report, election, *committee);
  } else {
    report.status = "infeasible";
  }
}

void RequireAv(const ScoringRule& rule, SolverChoice solver) {
  if (rule.kind() != ScoringRule::Kind::kAv) {
    throw Error(ErrorCode::kPatternViolation,
                std::string(SolverName(solver)) + " requires --rule av");
  }
}

template <typename P>
const P& RequirePattern(const Pattern& pattern, SolverChoice solver) {
  if (const P* p = std::get_if<P>(&pattern)) return *p;
  throw Error(ErrorCode::kPatternViolation,
              "constraints do not match the shape required by " +
                  std::string(SolverName(solver)));
}

}  // namespace

std::string_view SolverName(SolverChoice solver) {
  for (const auto& [choice, name] : kSolverNames) {
    if (choice == solver) return name;
  }
  return "unknown";
}

SolverChoice ParseSolver(std::string_view name) {
  for (const auto& [choice, n] : kSolverNames) {
    if (n == name) return choice;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "unknown solver '" + std::string(name) + "'");
}

EncoderOptions ParseOptimizations(std::string_view spec) {
  if (spec == "all") return EncoderOptions::All();
  if (spec == "none") return EncoderOptions::None();
  EncoderOptions options;
  std::stringstream in{std::string(spec)};
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "group") {
      options.group_voters = true;
    } else if (item == "prune") {
      options.prune_scores = true;
    } else if (item == "contract") {
      options.contract_dcs = true;
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown optimization '" + item + "'");
    }
  }
  return options;
}

RunReport Run(const RunConfig& config) {
  if (config.k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  }
  const ScoringRule rule = ParseRule(config.rule);
  RunReport report;
  report.rule = rule.ToString();
  report.k = config.k;
  report.optimizations = config.optimizations;

  const auto load_start = Clock::now();
  const Schema schema =
      ParseSchemaJson(ReadFile(config.schema), config.schema.string());
  const Database db = LoadDatabase(schema, config.database);
  const std::vector<KeyViolation> violations = ValidateKeys(db, schema);
  if (!violations.empty()) {
    std::string message = std::to_string(violations.size()) +
                          " key violation(s) in the database:";
    for (const KeyViolation& v : violations) {
      spdlog::error("key violation: {}", v.Describe());
      message += "\n  " + v.Describe();
    }
    throw Error(ErrorCode::kInputFormat, message);
  }
  const std::vector<Ballot> ballots =
      ParseApprovals(ReadFile(config.approvals), config.approvals.string());
  std::vector<std::string> candidates =
      config.candidates.empty()
          ? CandidatesFromBallots(ballots)
          : ParseCandidateList(ReadFile(config.candidates));
  const Election election(std::move(candidates), ballots, config.k);
  report.dropped_voters = election.dropped_voters();
  if (election.dropped_voters() > 0) {
    spdlog::warn("dropped {} voter(s) with empty approval sets",
                 election.dropped_voters());
  }
  ConstraintSet gamma;
  if (!config.constraints.empty()) {
    try {
      gamma = ParseConstraints(ReadFile(config.constraints), schema);
    } catch (const Error& e) {
      RethrowWithPath(e, config.constraints);
    }
  }
  report.load_ms = MillisSince(load_start);
  spdlog::info("loaded {} candidates, {} voters, {} TGDs, {} DCs",
               election.num_candidates(), election.num_voters(),
               gamma.tgds.size(), gamma.dcs.size());

  SolverChoice solver = config.solver;
  const Pattern pattern = DetectPattern(schema, db, gamma);
  if (solver == SolverChoice::kAuto) {
    solver = SolverChoice::kBnb;
    if (rule.kind() == ScoringRule::Kind::kAv) {
      if (std::holds_alternative<SingleTgdPattern>(pattern)) {
        solver = SolverChoice::kGreedyTgd;
      } else if (std::holds_alternative<DoubleTgdPattern>(pattern)) {
        solver = SolverChoice::kMcmf;
      } else if (std::holds_alternative<DcKeyPattern>(pattern)) {
        solver = SolverChoice::kGreedyDc;
      }
    }
  }
  report.solver = SolverName(solver);
  spdlog::info("solver: {}", report.solver);

  switch (solver) {
    case SolverChoice::kAuto:
    case SolverChoice::kBnb:
    case SolverChoice::kLpExport: {
      const auto build_start = Clock::now();
      const Encoding encoding =
          EncodeModel(election, rule, db, gamma, config.optimizations);
      report.ground_ms = encoding.ground_ms;
      report.build_ms = MillisSince(build_start) - encoding.ground_ms;
      report.model_stats = GetModelStats(encoding.model);
      if (!config.lp_output.empty()) {
        WriteText(config.lp_output, ExportLp(encoding.model));
      } else if (solver == SolverChoice::kLpExport) {
        throw Error(ErrorCode::kInvalidArgument, "lp-export requires --lp");
      }
      if (solver == SolverChoice::kLpExport) {
        report.status = "exported";
        break;
      }
      SolveOptions options;
      options.time_limit_ms = config.time_limit_ms;
      options.encoder = config.optimizations;
      // The encoding was built just above from the same inputs.
      options.verify_model = false;
      const SolveReport solved =
          Solve(encoding, election, rule, db, gamma, options);
      report.solve_ms = solved.solve_ms;
      report.nodes_explored = solved.nodes_explored;
      report.status = std::string(SolveStatusName(solved.status));
      if (solved.committee) SetCommittee(report, election, *solved.committee);
      break;
    }
    case SolverChoice::kOracle: {
      const auto start = Clock::now();
      OracleOptions options;
      options.max_subsets = config.oracle_cap;
      options.jobs = config.jobs;
      SetOutcome(report, election,
                 BruteForceWinner(election, db, gamma, rule, options));
      report.solve_ms = MillisSince(start);
      break;
    }
    case SolverChoice::kGreedyTgd: {
      RequireAv(rule, solver);
      const auto& p = RequirePattern<SingleTgdPattern>(pattern, solver);
      const auto start = Clock::now();
      SetOutcome(report, election, GreedySingleTgd(election, db, p));
      report.solve_ms = MillisSince(start);
      break;
    }
    case SolverChoice::kMcmf: {
      RequireAv(rule, solver);
      const auto& p = RequirePattern<DoubleTgdPattern>(pattern, solver);
      const auto start = Clock::now();
      SetOutcome(report, election, McmfTwoTgds(election, db, p).committee);
      report.solve_ms = MillisSince(start);
      break;
    }
    case SolverChoice::kGreedyDc: {
      RequireAv(rule, solver);
      const auto& p = RequirePattern<DcKeyPattern>(pattern, solver);
      const auto start = Clock::now();
      SetOutcome(report, election, DcKeyGreedy(election, db, p));
      report.solve_ms = MillisSince(start);
      break;
    }
  }
  return report;
}

std::string ReportToJson(const RunReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["status"] = report.status;
  doc["solver"] = report.solver;
  doc["rule"] = report.rule;
  doc["k"] = report.k;
  ordered_json committee = ordered_json::array();
  for (const CommitteeMember& m : report.committee) {
    committee.push_back({{"id", m.id}, {"approvals", m.approvals}});
  }
  doc["committee"] = committee;
  if (report.objective) {
    doc["objective"] = RationalToString(*report.objective);
    doc["objective_decimal"] = RationalToFixed(*report.objective, 12);
  } else {
    doc["objective"] = nullptr;
    doc["objective_decimal"] = nullptr;
  }
  if (report.model_stats) {
    doc["model_stats"] = {
        {"variables", report.model_stats->num_variables},
        {"constraints", report.model_stats->num_constraints},
        {"binaries", report.model_stats->num_binaries},
    };
  } else {
    doc["model_stats"] = nullptr;
  }
  doc["optimizations"] = {
      {"group", report.optimizations.group_voters},
      {"prune", report.optimizations.prune_scores},
      {"contract", report.optimizations.contract_dcs},
  };
  doc["nodes_explored"] = report.nodes_explored;
  doc["dropped_voters"] = report.dropped_voters;
  doc["timings_ms"] = {
      {"load", report.load_ms},
      {"ground", report.ground_ms},
      {"build", report.build_ms},
      {"solve", report.solve_ms},
  };
  return doc.dump(2) + "\n";
}

int ExitCodeFor(const RunReport& report) {
  if (report.status == "infeasible") return 2;
  if (report.status == "timeout") return 3;
  return 0;
}

}  // namespace abcc
