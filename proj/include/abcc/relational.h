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

// In-memory relational database: schema metadata, immutable relations with
// per-column hash indexes, key validation, and conjunctive-query grounding.

#ifndef ABCC_RELATIONAL_H_
#define ABCC_RELATIONAL_H_

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

#include "abcc/value.h"

namespace abcc {

// Name of the virtual committee relation. Schemas may not declare it.
inline constexpr std::string_view kComRelation = "Com";

enum class AttributeType { kText, kInt };

struct RelationSchema {
  std::string name;
  std::vector<std::string> attribute_names;
  std::vector<AttributeType> types;
  // 1-based attribute indices.
  std::vector<int> key_attributes;

  int arity() const { return static_cast<int>(attribute_names.size()); }
  bool IsKey(int attribute) const;
};

class Schema {
 public:
  Schema() = default;

  // Throws kInvalidArgument on a duplicate name, a relation named Com, an
  // empty arity, a types list of the wrong length or an out-of-range key.
  void AddRelation(RelationSchema relation);

  const RelationSchema* Find(std::string_view name) const;
  const std::vector<RelationSchema>& relations() const { return relations_; }

 private:
  std::vector<RelationSchema> relations_;
};

// A finite set of tuples of fixed arity. Tuples are deduplicated and stored
// in canonical order; every column carries a hash index.
class Relation {
 public:
  // Throws kArityMismatch if a tuple has the wrong length.
  Relation(std::string name, int arity, std::vector<Tuple> tuples);

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<Tuple>& tuples() const { return tuples_; }
  bool Contains(const Tuple& tuple) const;

  // Positions (into tuples()) of the tuples whose `column` (0-based) equals
  // `value`, ascending.
  std::span<const std::uint32_t> Matching(int column, const Value& value) const;

 private:
  std::string name_;
  int arity_;
  std::vector<Tuple> tuples_;
  std::vector<std::unordered_map<Value, std::vector<std::uint32_t>, ValueHash>>
      index_;
};

// Name resolution used by grounding. Implemented by Database and by overlays
// that add the committee relation.
class RelationSource {
 public:
  virtual ~RelationSource() = default;
  virtual const Relation* Find(std::string_view name) const = 0;
};

class Database : public RelationSource {
 public:
  Database() = default;

  // Replaces any existing relation of the same name.
  void AddRelation(Relation relation);
  const Relation* Find(std::string_view name) const override;
  const std::map<std::string, Relation, std::less<>>& relations() const {
    return relations_;
  }

 private:
  std::map<std::string, Relation, std::less<>> relations_;
};

// Resolves one extra relation on top of a base source. The overlay borrows
// both arguments.
class OverlaySource : public RelationSource {
 public:
  OverlaySource(const RelationSource& base, const Relation& extra)
      : base_(base), extra_(extra) {}
  const Relation* Find(std::string_view name) const override;

 private:
  const RelationSource& base_;
  const Relation& extra_;
};

struct KeyViolation {
  std::string relation;
  int attribute;  // 1-based
  Tuple first;
  Tuple second;

  std::string Describe() const;
};

// Lists every pair of distinct tuples that agree on a declared key
// attribute. Throws kUnknownRelation if the database holds a relation the
// schema does not declare.
std::vector<KeyViolation> ValidateKeys(const Database& db,
                                       const Schema& schema);

// Constraint-language terms and atoms. They live here because grounding
// consumes them directly.

class Term {
 public:
  static Term Variable(std::string name) { return Term(std::move(name)); }
  static Term Constant(Value value) { return Term(std::move(value)); }

  bool is_variable() const {
    return std::holds_alternative<std::string>(data_);
  }
  const std::string& variable() const { return std::get<std::string>(data_); }
  const Value& constant() const { return std::get<Value>(data_); }

  std::string ToString() const;
  friend bool operator==(const Term&, const Term&) = default;

 private:
  explicit Term(std::string name) : data_(std::move(name)) {}
  explicit Term(Value value) : data_(std::move(value)) {}
  std::variant<std::string, Value> data_;
};

enum class CompareOp { kEq, kNe, kLt, kLe, kGt, kGe };

std::string_view CompareOpSymbol(CompareOp op);

struct RelationalAtom {
  std::string relation;
  std::vector<Term> terms;

  bool is_com() const { return relation == kComRelation; }
  std::string ToString() const;
  friend bool operator==(const RelationalAtom&, const RelationalAtom&) =
      default;
};

struct ComparisonAtom {
  Term left;
  CompareOp op;
  Term right;

  std::string ToString() const;
  friend bool operator==(const ComparisonAtom&, const ComparisonAtom&) =
      default;
};

// Evaluates `left op right`. Throws kTypeError when an ordering operator is
// applied to anything but two ints.
bool Compare(const Value& left, CompareOp op, const Value& right);

// Variable bindings, kept in binding order.
class Assignment {
 public:
  Assignment() = default;

  const Value* Find(std::string_view variable) const;
  // Throws kInvalidArgument if `variable` is already bound.
  void Bind(std::string variable, Value value);
  std::size_t size() const { return bindings_.size(); }
  const std::vector<std::pair<std::string, Value>>& bindings() const {
    return bindings_;
  }

  // Order-insensitive equality over the binding sets.
  friend bool operator==(const Assignment& a, const Assignment& b);

  std::string ToString() const;

 private:
  std::vector<std::pair<std::string, Value>> bindings_;
};

// Calls `visit` once per assignment that extends `seed`, binds every
// variable of the atoms, places each instantiated relational atom in its
// relation and satisfies every comparison. Stops as soon as `visit` returns
// false; the return value is false iff that happened.
//
// Relational atoms are evaluated in ascending relation cardinality; each
// atom probes the smallest column index among its bound positions.
//
// Throws kUnknownRelation, kArityMismatch, kTypeError, and kUnsafeVariable
// when a comparison mentions a variable no relational atom or the seed
// binds.
bool ForEachGrounding(const RelationSource& source,
                      std::span<const RelationalAtom> relational_atoms,
                      std::span<const ComparisonAtom> comparison_atoms,
                      const Assignment& seed,
                      const std::function<bool(const Assignment&)>& visit);

// All groundings, sorted lexicographically by bound values under the
// canonical variable order: seed variables first, then variables in order of
// first occurrence in `relational_atoms` and then `comparison_atoms`. Each
// returned assignment binds its variables in that canonical order.
std::vector<Assignment> GroundConjunction(
    const RelationSource& source,
    std::span<const RelationalAtom> relational_atoms,
    std::span<const ComparisonAtom> comparison_atoms, const Assignment& seed);

}  // namespace abcc

#endif  // ABCC_RELATIONAL_H_
