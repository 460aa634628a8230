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

#include "abcc/io.h"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "abcc/error.h"

namespace abcc {
namespace {

[[noreturn]] void Fail(std::string_view source, int line,
                       const std::string& message) {
  throw Error(ErrorCode::kInputFormat, std::string(source) + ":" +
                                           std::to_string(line) + ": " +
                                           message);
}

std::string_view Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kInputFormat,
                "cannot open '" + path.string() + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::vector<std::string>> ParseCsv(std::string_view text,
                                               std::string_view source) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool in_quotes = false;
  bool field_was_quoted = false;
  bool record_has_content = false;
  int line = 1;
  int quote_line = 0;

  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_record = [&] {
    if (record_has_content || !record.empty() || !field.empty()) {
      end_field();
      records.push_back(std::move(record));
    }
    record.clear();
    record_has_content = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field.empty() || field_was_quoted) {
          Fail(source, line, "quote inside an unquoted field");
        }
        in_quotes = true;
        field_was_quoted = true;
        record_has_content = true;
        quote_line = line;
        break;
      case ',':
        end_field();
        record_has_content = true;
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        if (field_was_quoted) {
          Fail(source, line, "text after a closing quote");
        }
        field += c;
        record_has_content = true;
    }
  }
  if (in_quotes) Fail(source, quote_line, "unterminated quoted field");
  end_record();
  return records;
}

Schema ParseSchemaJson(std::string_view text, std::string_view source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kInputFormat,
                std::string(source) + ": " + e.what());
  }
  Schema schema;
  try {
    for (const auto& r : doc.at("relations")) {
      RelationSchema rs;
      rs.name = r.at("name").get<std::string>();
      rs.attribute_names = r.at("attributes").get<std::vector<std::string>>();
      if (r.contains("keys")) {
        rs.key_attributes = r.at("keys").get<std::vector<int>>();
      }
      if (r.contains("types")) {
        for (const auto& t : r.at("types")) {
          const std::string name = t.get<std::string>();
          if (name == "text") {
            rs.types.push_back(AttributeType::kText);
          } else if (name == "int") {
            rs.types.push_back(AttributeType::kInt);
          } else {
            throw Error(ErrorCode::kInputFormat,
                        std::string(source) + ": relation '" + rs.name +
                            "' has unknown type '" + name + "'");
          }
        }
      }
      schema.AddRelation(std::move(rs));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInputFormat,
                std::string(source) + ": " + e.what());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInputFormat) throw;
    throw Error(ErrorCode::kInputFormat,
                std::string(source) + ": " + e.what());
  }
  return schema;
}

Relation ParseRelationCsv(const RelationSchema& relation, std::string_view text,
                          std::string_view source) {
  std::vector<Tuple> tuples;
  int line = 0;
  for (const auto& record : ParseCsv(text, source)) {
    ++line;
    if (static_cast<int>(record.size()) != relation.arity()) {
      Fail(source, line,
           "expected " + std::to_string(relation.arity()) + " fields, got " +
               std::to_string(record.size()));
    }
    Tuple tuple;
    for (int c = 0; c < relation.arity(); ++c) {
      if (relation.types[c] == AttributeType::kInt) {
        const std::string_view f = Trim(record[c]);
        std::int64_t v = 0;
        const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
        if (f.empty() || ec != std::errc() || ptr != f.data() + f.size()) {
          Fail(source, line,
               "field " + std::to_string(c + 1) + " ('" + record[c] +
                   "') is not an int");
        }
        tuple.push_back(Value::Int(v));
      } else {
        tuple.push_back(Value::Text(record[c]));
      }
    }
    tuples.push_back(std::move(tuple));
  }
  return Relation(relation.name, relation.arity(), std::move(tuples));
}

Database LoadDatabase(const Schema& schema,
                      const std::filesystem::path& directory) {
  Database db;
  for (const RelationSchema& rs : schema.relations()) {
    const std::filesystem::path file = directory / (rs.name + ".csv");
    if (!std::filesystem::exists(file)) {
      db.AddRelation(Relation(rs.name, rs.arity(), {}));
      continue;
    }
    db.AddRelation(ParseRelationCsv(rs, ReadFile(file), file.string()));
  }
  return db;
}

std::vector<Ballot> ParseApprovals(std::string_view text,
                                   std::string_view source) {
  std::vector<Ballot> ballots;
  std::set<std::string> seen;
  int line_number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = Trim(text.substr(start, end - start));
    ++line_number;
    if (!line.empty() && line.front() != '#') {
      const auto colon = line.find(':');
      if (colon == std::string_view::npos) {
        Fail(source, line_number, "expected 'voter_id: cand,cand,...'");
      }
      Ballot ballot{std::string(Trim(line.substr(0, colon))), {}};
      if (ballot.voter_id.empty()) Fail(source, line_number, "empty voter id");
      if (!seen.insert(ballot.voter_id).second) {
        Fail(source, line_number, "duplicate voter '" + ballot.voter_id + "'");
      }
      std::string_view rest = line.substr(colon + 1);
      if (!Trim(rest).empty()) {
        while (true) {
          const auto comma = rest.find(',');
          const std::string_view id = Trim(rest.substr(0, comma));
          if (id.empty()) Fail(source, line_number, "empty candidate id");
          ballot.approvals.emplace_back(id);
          if (comma == std::string_view::npos) break;
          rest.remove_prefix(comma + 1);
        }
      }
      ballots.push_back(std::move(ballot));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  return ballots;
}

std::vector<std::string> CandidatesFromBallots(
    const std::vector<Ballot>& ballots) {
  std::set<std::string> ids;
  for (const Ballot& b : ballots) ids.insert(b.approvals.begin(), b.approvals.end());
  return {ids.begin(), ids.end()};
}

std::vector<std::string> ParseCandidateList(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view id = Trim(text.substr(start, end - start));
    if (!id.empty() && id.front() != '#') out.emplace_back(id);
    if (end == text.size()) break;
    start = end + 1;
  }
  return out;
}

}  // namespace abcc
