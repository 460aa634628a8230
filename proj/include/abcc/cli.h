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

// End-to-end pipeline behind the abcc command-line tool.

#ifndef ABCC_CLI_H_
#define ABCC_CLI_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "abcc/election.h"
#include "abcc/mip_encoder.h"
#include "abcc/mip_model.h"

namespace abcc {

enum class SolverChoice {
  kAuto,
  kBnb,
  kOracle,
  kGreedyTgd,
  kMcmf,
  kGreedyDc,
  kLpExport,
};

std::string_view SolverName(SolverChoice solver);
// Throws kInvalidArgument on an unknown name.
SolverChoice ParseSolver(std::string_view name);

// Comma list of group, prune, contract, or one of all / none.
EncoderOptions ParseOptimizations(std::string_view spec);

struct RunConfig {
  std::filesystem::path schema;
  std::filesystem::path database;  // directory of <Name>.csv files
  std::filesystem::path approvals;
  std::filesystem::path constraints;  // empty: no constraints
  std::filesystem::path candidates;   // empty: approved ids, sorted
  std::string rule = "av";
  int k = 0;
  SolverChoice solver = SolverChoice::kAuto;
  EncoderOptions optimizations = EncoderOptions::All();
  std::int64_t time_limit_ms = 0;
  int jobs = 1;
  std::uint64_t oracle_cap = 2'000'000;
  std::filesystem::path lp_output;  // required for lp-export
};

struct CommitteeMember {
  std::string id;
  int approvals;
};

struct RunReport {
  // optimal, infeasible, timeout or exported.
  std::string status;
  std::string solver;
  std::string rule;
  int k = 0;
  std::vector<CommitteeMember> committee;
  std::optional<Rational> objective;
  std::optional<ModelStats> model_stats;
  EncoderOptions optimizations;
  std::uint64_t nodes_explored = 0;
  int dropped_voters = 0;
  double load_ms = 0;
  double ground_ms = 0;
  double build_ms = 0;
  double solve_ms = 0;
};

// Loads the inputs, validates keys, and runs the chosen solver. Throws
// Error on any input problem; key violations are all listed in the message.
RunReport Run(const RunConfig& config);

std::string ReportToJson(const RunReport& report);

// 0 optimal or exported, 2 infeasible, 3 timeout.
int ExitCodeFor(const RunReport& report);

}  // namespace abcc

#endif  // ABCC_CLI_H_
