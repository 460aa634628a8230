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

// abcc: constrained approval-based committee selection.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "abcc/cli.h"
#include "abcc/error.h"
#include "spdlog/cfg/helpers.h"
#include "spdlog/sinks/stdout_color_sinks.h"
#include "spdlog/spdlog.h"

int main(int argc, char** argv) {
  CLI::App app{"Constrained approval-based committee selection"};
  abcc::RunConfig config;
  std::string schema, database, approvals, constraints, candidates, lp;
  std::string solver = "auto";
  std::string opt = "all";
  std::string output;
  std::string log_level;

  app.add_option("--schema", schema, "schema.json")->required();
  app.add_option("--db", database, "directory of <Relation>.csv files")
      ->required();
  app.add_option("--approvals", approvals, "approval ballots")->required();
  app.add_option("--constraints", constraints, "TGD/DC file");
  app.add_option("--candidates", candidates,
                 "candidate ids in declaration order, one per line "
                 "(default: approved ids, sorted)");
  app.add_option("--rule", config.rule,
                 "av | pav | cc | sav | trunc:<p> | thiele:<w1,w2,...>")
      ->capture_default_str();
  app.add_option("--k", config.k, "committee size")->required();
  app.add_option("--solver", solver,
                 "auto | bnb | oracle | greedy-tgd | mcmf | greedy-dc | "
                 "lp-export")
      ->capture_default_str();
  app.add_option("--opt", opt, "group,prune,contract | all | none")
      ->capture_default_str();
  app.add_option("--time-limit-ms", config.time_limit_ms,
                 "branch-and-bound time limit, 0 for none")
      ->capture_default_str();
  app.add_option("--jobs", config.jobs, "oracle worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--oracle-cap", config.oracle_cap,
                 "maximum number of subsets the oracle enumerates")
      ->capture_default_str();
  app.add_option("--lp", lp, "write the MIP model in LP format");
  app.add_option("--output", output, "JSON report path (default: stdout)");
  app.add_option("--log-level", log_level,
                 "trace | debug | info | warn | error | off (overrides "
                 "ABCC_LOG)");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors count as input errors; --help still exits 0.
    return app.exit(e) == 0 ? 0 : 1;
  }

  auto logger = spdlog::stderr_color_mt("abcc");
  spdlog::set_default_logger(logger);
  spdlog::set_level(spdlog::level::warn);
  if (const char* env = std::getenv("ABCC_LOG")) {
    spdlog::cfg::helpers::load_levels(env);
  }
  if (!log_level.empty()) {
    spdlog::set_level(spdlog::level::from_str(log_level));
  }

  try {
    config.schema = schema;
    config.database = database;
    config.approvals = approvals;
    config.constraints = constraints;
    config.candidates = candidates;
    config.lp_output = lp;
    config.solver = abcc::ParseSolver(solver);
    config.optimizations = abcc::ParseOptimizations(opt);

    const abcc::RunReport report = abcc::Run(config);
    const std::string json = abcc::ReportToJson(report);
    if (output.empty()) {
      std::cout << json;
    } else {
      std::ofstream out(output, std::ios::binary);
      out << json;
      if (!out) {
        std::cerr << "cannot write " << output << "\n";
        return 1;
      }
    }
    return abcc::ExitCodeFor(report);
  } catch (const abcc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
