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

// Shared fixtures: the conference-committee database and profile, plus the
// constraint texts used across tests.

#ifndef ABCC_TESTS_SUPPORT_FIXTURES_H_
#define ABCC_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <string>

#include "abcc/constraints.h"
#include "abcc/election.h"
#include "abcc/relational.h"

namespace abcc::testing {

// Topic(name), Supervise(advisor, advised), Author(author, pub),
// Pub(pub, topic); keys on Topic.1 and Pub.1.
Schema ConferenceSchema();
Database ConferenceDatabase();
// Candidates Ann, Bob, Cale, Dave, Eva; voters v1..v5.
Election ConferenceElection(int k);

inline constexpr char kSuperviseDc[] =
    "DC: Supervise(c1, c2) & Com(c1) & Com(c2)\n";
inline constexpr char kTopicTgd[] =
    "TGD: Topic(t) -> EXISTS c, p . Author(c, p) & Pub(p, t) & Com(c)\n";
inline constexpr char kBlendTgd[] =
    "TGD: true -> EXISTS c, f, g . Author(c, f) & Author(c, g) & "
    "Pub(f, \"ML\") & Pub(g, \"PL\") & Com(c)\n";
inline constexpr char kSupervisionTgd[] =
    "TGD: Supervise(c1, c2) & Com(c1) & Com(c2) -> EXISTS p . "
    "Author(c1, p) & Pub(p, \"ML\")\n";

ConstraintSet ParseConference(const std::string& text);

// tests/data, resolved at configure time.
std::filesystem::path TestDataDir();

}  // namespace abcc::testing

#endif  // ABCC_TESTS_SUPPORT_FIXTURES_H_
