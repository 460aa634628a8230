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

// File formats:
//
//   schema.json   {"relations":[{"name":"Pub","attributes":["pub","topic"],
//                  "keys":[1],"types":["text","text"]}]}
//   <Name>.csv    one file per relation in the database directory, no
//                 header, RFC 4180 quoting.
//   approvals     `voter_id: cand,cand,...` per line.
//
// Every parse error is reported as Error(kInputFormat) naming the source and
// line.

#ifndef ABCC_IO_H_
#define ABCC_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "abcc/election.h"
#include "abcc/relational.h"

namespace abcc {

std::string ReadFile(const std::filesystem::path& path);

// RFC 4180 records. `source` is used in error messages.
std::vector<std::vector<std::string>> ParseCsv(std::string_view text,
                                               std::string_view source);

Schema ParseSchemaJson(std::string_view text, std::string_view source);

// Builds a relation from CSV text, converting fields per the declared
// attribute types.
Relation ParseRelationCsv(const RelationSchema& relation, std::string_view text,
                          std::string_view source);

// Loads <dir>/<Name>.csv for every schema relation; a missing file is an
// empty relation.
Database LoadDatabase(const Schema& schema,
                      const std::filesystem::path& directory);

std::vector<Ballot> ParseApprovals(std::string_view text,
                                   std::string_view source);

// Every candidate approved on some ballot, sorted by id.
std::vector<std::string> CandidatesFromBallots(
    const std::vector<Ballot>& ballots);

// One candidate id per non-blank line.
std::vector<std::string> ParseCandidateList(std::string_view text);

}  // namespace abcc

#endif  // ABCC_IO_H_
