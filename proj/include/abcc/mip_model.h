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

// Solver-independent mixed-integer linear program with exact rational data.

#ifndef ABCC_MIP_MODEL_H_
#define ABCC_MIP_MODEL_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "abcc/rational.h"

namespace abcc {

enum class VarKind { kBinary, kInteger, kContinuous };
enum class RowSense { kLessEqual, kEqual, kGreaterEqual };

using VarId = int;

struct MipVariable {
  std::string name;
  VarKind kind;
  Rational lower;
  Rational upper;
};

struct LinearTerm {
  Rational coefficient;
  VarId var;
};

struct MipConstraint {
  std::vector<LinearTerm> terms;
  RowSense sense;
  Rational rhs;
};

struct ModelStats {
  std::size_t num_variables = 0;
  std::size_t num_constraints = 0;
  std::size_t num_binaries = 0;

  friend bool operator==(const ModelStats&, const ModelStats&) = default;
};

// Maximization model. Variable names are unique, every term references a
// declared variable, and stored rationals are canonical.
class MipModel {
 public:
  // Throws kInvalidArgument on a duplicate name, lower > upper, or a binary
  // with bounds outside [0, 1].
  VarId AddVariable(std::string name, VarKind kind, Rational lower,
                    Rational upper);
  VarId AddBinary(std::string name) {
    return AddVariable(std::move(name), VarKind::kBinary, 0, 1);
  }
  // Throws kInvalidArgument on an undeclared variable.
  void AddConstraint(std::vector<LinearTerm> terms, RowSense sense,
                     Rational rhs);
  void AddObjectiveTerm(Rational coefficient, VarId var);

  // The row 0 >= 1, which no assignment satisfies.
  void AddInfeasibleRow() { AddConstraint({}, RowSense::kGreaterEqual, 1); }

  const std::vector<MipVariable>& variables() const { return variables_; }
  const std::vector<MipConstraint>& constraints() const { return constraints_; }
  const std::vector<LinearTerm>& objective() const { return objective_; }
  const MipVariable& variable(VarId id) const { return variables_.at(id); }
  // -1 if absent.
  VarId FindVariable(std::string_view name) const;
  bool HasName(std::string_view name) const {
    return FindVariable(name) >= 0;
  }

 private:
  std::vector<MipVariable> variables_;
  std::unordered_map<std::string, VarId> by_name_;
  std::vector<MipConstraint> constraints_;
  std::vector<LinearTerm> objective_;
};

ModelStats GetModelStats(const MipModel& model);

// CPLEX LP text: Maximize / Subject To / Bounds / Generals / Binaries / End.
// Variables keep declaration order and coefficients are rendered with up to
// 12 significant digits.
std::string ExportLp(const MipModel& model);

}  // namespace abcc

#endif  // ABCC_MIP_MODEL_H_
