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

#include "abcc/relational.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "abcc/error.h"

namespace abcc {

bool RelationSchema::IsKey(int attribute) const {
  return std::find(key_attributes.begin(), key_attributes.end(), attribute) !=
         key_attributes.end();
}

void Schema::AddRelation(RelationSchema relation) {
  if (relation.name == kComRelation) {
    throw Error(ErrorCode::kInvalidArgument,
                "relation name 'Com' is reserved for the committee");
  }
  if (relation.name.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "relation with empty name");
  }
  if (Find(relation.name) != nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate relation '" + relation.name + "'");
  }
  if (relation.arity() == 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "relation '" + relation.name + "' has no attributes");
  }
  if (relation.types.empty()) {
    relation.types.assign(relation.arity(), AttributeType::kText);
  }
  if (static_cast<int>(relation.types.size()) != relation.arity()) {
    throw Error(ErrorCode::kInvalidArgument,
                "relation '" + relation.name + "' declares " +
                    std::to_string(relation.types.size()) + " types for " +
                    std::to_string(relation.arity()) + " attributes");
  }
  for (const int key : relation.key_attributes) {
    if (key < 1 || key > relation.arity()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "relation '" + relation.name + "' key attribute " +
                      std::to_string(key) + " out of range");
    }
  }
  relations_.push_back(std::move(relation));
}

const RelationSchema* Schema::Find(std::string_view name) const {
  for (const RelationSchema& r : relations_) {
    if (r.name == name) return &r;
  }
  return nullptr;
}

Relation::Relation(std::string name, int arity, std::vector<Tuple> tuples)
    : name_(std::move(name)), arity_(arity), tuples_(std::move(tuples)) {
  for (const Tuple& t : tuples_) {
    if (static_cast<int>(t.size()) != arity_) {
      throw Error(ErrorCode::kArityMismatch,
                  "tuple of length " + std::to_string(t.size()) +
                      " in relation '" + name_ + "' of arity " +
                      std::to_string(arity_));
    }
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
  index_.resize(arity_);
  for (std::uint32_t i = 0; i < tuples_.size(); ++i) {
    for (int c = 0; c < arity_; ++c) index_[c][tuples_[i][c]].push_back(i);
  }
}

bool Relation::Contains(const Tuple& tuple) const {
  return std::binary_search(tuples_.begin(), tuples_.end(), tuple);
}

std::span<const std::uint32_t> Relation::Matching(int column,
                                                  const Value& value) const {
  const auto& column_index = index_[column];
  const auto it = column_index.find(value);
  if (it == column_index.end()) return {};
  return it->second;
}

void Database::AddRelation(Relation relation) {
  const std::string name = relation.name();
  relations_.insert_or_assign(name, std::move(relation));
}

const Relation* Database::Find(std::string_view name) const {
  const auto it = relations_.find(name);
  return it == relations_.end() ? nullptr : &it->second;
}

const Relation* OverlaySource::Find(std::string_view name) const {
  if (name == extra_.name()) return &extra_;
  return base_.Find(name);
}

namespace {

std::string TupleToString(const Tuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += ",";
    out += t[i].ToLiteral();
  }
  return out + ")";
}

}  // namespace

std::string KeyViolation::Describe() const {
  return "key violation in " + relation + " attribute " +
         std::to_string(attribute) + ": " + TupleToString(first) + " and " +
         TupleToString(second);
}

std::vector<KeyViolation> ValidateKeys(const Database& db,
                                       const Schema& schema) {
  std::vector<KeyViolation> violations;
  for (const auto& [name, relation] : db.relations()) {
    const RelationSchema* rs = schema.Find(name);
    if (rs == nullptr) {
      throw Error(ErrorCode::kUnknownRelation,
                  "database relation '" + name + "' is not in the schema");
    }
    for (const int key : rs->key_attributes) {
      const int column = key - 1;
      // Group by key value; report every conflicting pair.
      std::map<Value, std::vector<std::uint32_t>> groups;
      for (std::uint32_t i = 0; i < relation.size(); ++i) {
        groups[relation.tuples()[i][column]].push_back(i);
      }
      for (const auto& [value, members] : groups) {
        for (std::size_t a = 0; a < members.size(); ++a) {
          for (std::size_t b = a + 1; b < members.size(); ++b) {
            violations.push_back({name, key, relation.tuples()[members[a]],
                                  relation.tuples()[members[b]]});
          }
        }
      }
    }
  }
  return violations;
}

std::string Term::ToString() const {
  return is_variable() ? variable() : constant().ToLiteral();
}

std::string_view CompareOpSymbol(CompareOp op) {
  switch (op) {
    case CompareOp::kEq:
      return "=";
    case CompareOp::kNe:
      return "!=";
    case CompareOp::kLt:
      return "<";
    case CompareOp::kLe:
      return "<=";
    case CompareOp::kGt:
      return ">";
    case CompareOp::kGe:
      return ">=";
  }
  return "?";
}

std::string RelationalAtom::ToString() const {
  std::string out = relation + "(";
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0) out += ",";
    out += terms[i].ToString();
  }
  return out + ")";
}

std::string ComparisonAtom::ToString() const {
  return left.ToString() + " " + std::string(CompareOpSymbol(op)) + " " +
         right.ToString();
}

bool Compare(const Value& left, CompareOp op, const Value& right) {
  switch (op) {
    case CompareOp::kEq:
      return left == right;
    case CompareOp::kNe:
      return left != right;
    default:
      break;
  }
  if (!left.is_int() || !right.is_int()) {
    throw Error(ErrorCode::kTypeError,
                "ordering comparison " + left.ToLiteral() + " " +
                    std::string(CompareOpSymbol(op)) + " " +
                    right.ToLiteral() + " requires two ints");
  }
  const std::int64_t a = left.as_int();
  const std::int64_t b = right.as_int();
  switch (op) {
    case CompareOp::kLt:
      return a < b;
    case CompareOp::kLe:
      return a <= b;
    case CompareOp::kGt:
      return a > b;
    case CompareOp::kGe:
      return a >= b;
    default:
      return false;
  }
}

const Value* Assignment::Find(std::string_view variable) const {
  for (const auto& [name, value] : bindings_) {
    if (name == variable) return &value;
  }
  return nullptr;
}

void Assignment::Bind(std::string variable, Value value) {
  if (Find(variable) != nullptr) {
    throw Error(ErrorCode::kInvalidArgument,
                "variable '" + variable + "' bound twice");
  }
  bindings_.emplace_back(std::move(variable), std::move(value));
}

bool operator==(const Assignment& a, const Assignment& b) {
  if (a.size() != b.size()) return false;
  for (const auto& [name, value] : a.bindings_) {
    const Value* other = b.Find(name);
    if (other == nullptr || !(*other == value)) return false;
  }
  return true;
}

std::string Assignment::ToString() const {
  std::string out = "{";
  for (std::size_t i = 0; i < bindings_.size(); ++i) {
    if (i > 0) out += ", ";
    out += bindings_[i].first + "->" + bindings_[i].second.ToLiteral();
  }
  return out + "}";
}

namespace {

// Position of an atom argument: a variable slot or a constant.
struct Operand {
  int slot = -1;
  const Value* constant = nullptr;
};

class GroundingPlan {
 public:
  GroundingPlan(const RelationSource& source,
                std::span<const RelationalAtom> relational_atoms,
                std::span<const ComparisonAtom> comparison_atoms,
                const Assignment& seed) {
    for (const auto& [name, value] : seed.bindings()) {
      SlotFor(name);
      seed_values_.push_back(value);
    }
    for (const RelationalAtom& atom : relational_atoms) {
      for (const Term& t : atom.terms) {
        if (t.is_variable()) SlotFor(t.variable());
      }
    }
    for (const ComparisonAtom& cmp : comparison_atoms) {
      for (const Term* t : {&cmp.left, &cmp.right}) {
        if (t->is_variable() && slot_of_.count(t->variable()) == 0) {
          throw Error(ErrorCode::kUnsafeVariable,
                      "comparison variable '" + t->variable() +
                          "' does not occur in a relational atom");
        }
      }
    }

    for (const RelationalAtom& atom : relational_atoms) {
      const Relation* rel = source.Find(atom.relation);
      if (rel == nullptr) {
        throw Error(ErrorCode::kUnknownRelation,
                    "unknown relation '" + atom.relation + "'");
      }
      if (static_cast<int>(atom.terms.size()) != rel->arity()) {
        throw Error(ErrorCode::kArityMismatch,
                    "atom " + atom.ToString() + " used with arity " +
                        std::to_string(rel->arity()));
      }
      Step step;
      step.relation = rel;
      for (const Term& t : atom.terms) {
        step.operands.push_back(ToOperand(t));
      }
      steps_.push_back(std::move(step));
    }
    std::stable_sort(steps_.begin(), steps_.end(),
                     [](const Step& a, const Step& b) {
                       return a.relation->size() < b.relation->size();
                     });

    // Step at which each slot becomes bound (-1: before the first atom).
    std::vector<int> bound_at(variables_.size(), -1);
    std::vector<bool> bound(variables_.size(), false);
    for (std::size_t s = 0; s < seed.size(); ++s) bound[s] = true;
    for (std::size_t i = 0; i < steps_.size(); ++i) {
      for (const Operand& op : steps_[i].operands) {
        if (op.slot >= 0 && !bound[op.slot]) {
          bound[op.slot] = true;
          bound_at[op.slot] = static_cast<int>(i);
        }
      }
    }
    for (const ComparisonAtom& cmp : comparison_atoms) {
      ScheduledComparison sc{ToOperand(cmp.left), cmp.op,
                             ToOperand(cmp.right)};
      int at = -1;
      for (const Operand* op : {&sc.left, &sc.right}) {
        if (op->slot >= 0) at = std::max(at, bound_at[op->slot]);
      }
      if (at < 0) {
        initial_comparisons_.push_back(sc);
      } else {
        steps_[at].comparisons.push_back(sc);
      }
    }
  }

  bool Run(const std::function<bool(const Assignment&)>& visit) {
    values_.assign(variables_.size(), nullptr);
    for (std::size_t s = 0; s < seed_values_.size(); ++s) {
      values_[s] = &seed_values_[s];
    }
    for (const ScheduledComparison& sc : initial_comparisons_) {
      if (!Holds(sc)) return true;
    }
    visit_ = &visit;
    return Descend(0);
  }

  const std::vector<std::string>& variables() const { return variables_; }

 private:
  struct ScheduledComparison {
    Operand left;
    CompareOp op;
    Operand right;
  };
  struct Step {
    const Relation* relation = nullptr;
    std::vector<Operand> operands;
    std::vector<ScheduledComparison> comparisons;
  };

  int SlotFor(const std::string& name) {
    const auto [it, inserted] =
        slot_of_.try_emplace(name, static_cast<int>(variables_.size()));
    if (inserted) variables_.push_back(name);
    return it->second;
  }

  Operand ToOperand(const Term& t) const {
    Operand op;
    if (t.is_variable()) {
      op.slot = slot_of_.at(t.variable());
    } else {
      op.constant = &t.constant();
    }
    return op;
  }

  const Value* Resolve(const Operand& op) const {
    return op.constant != nullptr ? op.constant : values_[op.slot];
  }

  bool Holds(const ScheduledComparison& sc) const {
    return Compare(*Resolve(sc.left), sc.op, *Resolve(sc.right));
  }

  bool Descend(std::size_t depth) {
    if (depth == steps_.size()) return Emit();
    const Step& step = steps_[depth];
    const Relation& rel = *step.relation;

    // Probe the most selective bound column, if any.
    std::span<const std::uint32_t> candidates;
    bool probed = false;
    for (int c = 0; c < rel.arity(); ++c) {
      const Value* v = Resolve(step.operands[c]);
      if (v == nullptr) continue;
      std::span<const std::uint32_t> m = rel.Matching(c, *v);
      if (!probed || m.size() < candidates.size()) {
        candidates = m;
        probed = true;
      }
    }

    std::vector<int> newly_bound;
    auto try_tuple = [&](const Tuple& tuple) -> bool {
      newly_bound.clear();
      bool match = true;
      for (int c = 0; c < rel.arity() && match; ++c) {
        const Operand& op = step.operands[c];
        const Value* v = Resolve(op);
        if (v == nullptr) {
          values_[op.slot] = &tuple[c];
          newly_bound.push_back(op.slot);
        } else if (!(*v == tuple[c])) {
          match = false;
        }
      }
      if (match) {
        for (const ScheduledComparison& sc : step.comparisons) {
          if (!Holds(sc)) {
            match = false;
            break;
          }
        }
      }
      bool keep_going = true;
      if (match) keep_going = Descend(depth + 1);
      for (const int slot : newly_bound) values_[slot] = nullptr;
      return keep_going;
    };

    if (probed) {
      for (const std::uint32_t i : candidates) {
        if (!try_tuple(rel.tuples()[i])) return false;
      }
    } else {
      for (const Tuple& tuple : rel.tuples()) {
        if (!try_tuple(tuple)) return false;
      }
    }
    return true;
  }

  bool Emit() {
    Assignment a;
    for (std::size_t s = 0; s < variables_.size(); ++s) {
      a.Bind(variables_[s], *values_[s]);
    }
    return (*visit_)(a);
  }

  std::vector<std::string> variables_;
  std::unordered_map<std::string, int> slot_of_;
  std::vector<Value> seed_values_;
  std::vector<Step> steps_;
  std::vector<ScheduledComparison> initial_comparisons_;
  std::vector<const Value*> values_;
  const std::function<bool(const Assignment&)>* visit_ = nullptr;
};

}  // namespace

bool ForEachGrounding(const RelationSource& source,
                      std::span<const RelationalAtom> relational_atoms,
                      std::span<const ComparisonAtom> comparison_atoms,
                      const Assignment& seed,
                      const std::function<bool(const Assignment&)>& visit) {
  GroundingPlan plan(source, relational_atoms, comparison_atoms, seed);
  return plan.Run(visit);
}

std::vector<Assignment> GroundConjunction(
    const RelationSource& source,
    std::span<const RelationalAtom> relational_atoms,
    std::span<const ComparisonAtom> comparison_atoms, const Assignment& seed) {
  std::vector<Assignment> out;
  ForEachGrounding(source, relational_atoms, comparison_atoms, seed,
                   [&](const Assignment& a) {
                     out.push_back(a);
                     return true;
                   });
  // Emitted assignments bind in canonical order, so comparing binding
  // values positionally is the canonical lexicographic order.
  std::sort(out.begin(), out.end(),
            [](const Assignment& a, const Assignment& b) {
              const auto& x = a.bindings();
              const auto& y = b.bindings();
              for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
                if (x[i].second != y[i].second) {
                  return x[i].second < y[i].second;
                }
              }
              return x.size() < y.size();
            });
  return out;
}

}  // namespace abcc
