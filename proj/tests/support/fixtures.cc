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

#include "support/fixtures.h"

namespace abcc::testing {
namespace {

Relation TextRelation(const std::string& name,
                      std::initializer_list<std::vector<std::string>> rows) {
  std::vector<Tuple> tuples;
  std::size_t arity = 0;
  for (const auto& row : rows) {
    Tuple t;
    for (const std::string& field : row) t.push_back(Value::Text(field));
    arity = t.size();
    tuples.push_back(std::move(t));
  }
  return Relation(name, static_cast<int>(arity), std::move(tuples));
}

}  // namespace

Schema ConferenceSchema() {
  Schema schema;
  schema.AddRelation({"Topic", {"name"}, {}, {1}});
  schema.AddRelation({"Supervise", {"advisor", "advised"}, {}, {}});
  schema.AddRelation({"Author", {"author", "pub"}, {}, {}});
  schema.AddRelation({"Pub", {"pub", "topic"}, {}, {1}});
  return schema;
}

Database ConferenceDatabase() {
  Database db;
  db.AddRelation(TextRelation("Topic", {{"AI"}, {"ML"}, {"OS"}, {"PL"}}));
  db.AddRelation(TextRelation("Supervise", {{"Ann", "Bob"},
                                            {"Bob", "Fred"},
                                            {"Cale", "Eva"},
                                            {"Dave", "Fred"}}));
  db.AddRelation(TextRelation("Author", {{"Ann", "p1"},
                                         {"Ann", "p2"},
                                         {"Bob", "p1"},
                                         {"Bob", "p3"},
                                         {"Cale", "p4"},
                                         {"Dave", "p5"}}));
  db.AddRelation(TextRelation("Pub", {{"p1", "ML"},
                                      {"p2", "PL"},
                                      {"p3", "OS"},
                                      {"p4", "AI"},
                                      {"p5", "OS"}}));
  return db;
}

Election ConferenceElection(int k) {
  return Election({"Ann", "Bob", "Cale", "Dave", "Eva"},
                  {{"v1", {"Ann", "Dave"}},
                   {"v2", {"Ann", "Bob", "Dave"}},
                   {"v3", {"Ann", "Eva"}},
                   {"v4", {"Cale"}},
                   {"v5", {"Bob", "Dave"}}},
                  k);
}

ConstraintSet ParseConference(const std::string& text) {
  return ParseConstraints(text, ConferenceSchema());
}

std::filesystem::path TestDataDir() { return ABCC_TEST_DATA_DIR; }

}  // namespace abcc::testing
