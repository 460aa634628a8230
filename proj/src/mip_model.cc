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

#include "abcc/mip_model.h"

#include <sstream>

#include "abcc/error.h"

namespace abcc {

VarId MipModel::AddVariable(std::string name, VarKind kind, Rational lower,
                            Rational upper) {
  lower.canonicalize();
  upper.canonicalize();
  if (by_name_.count(name) > 0) {
    throw Error(ErrorCode::kInvalidArgument,
                "duplicate variable '" + name + "'");
  }
  if (lower > upper) {
    throw Error(ErrorCode::kInvalidArgument,
                "variable '" + name + "' has lower bound above upper bound");
  }
  if (kind == VarKind::kBinary && (lower < 0 || upper > 1)) {
    throw Error(ErrorCode::kInvalidArgument,
                "binary variable '" + name + "' with bounds outside [0, 1]");
  }
  const VarId id = static_cast<VarId>(variables_.size());
  by_name_.emplace(name, id);
  variables_.push_back({std::move(name), kind, std::move(lower),
                        std::move(upper)});
  return id;
}

void MipModel::AddConstraint(std::vector<LinearTerm> terms, RowSense sense,
                             Rational rhs) {
  rhs.canonicalize();
  for (LinearTerm& t : terms) {
    t.coefficient.canonicalize();
    if (t.var < 0 || t.var >= static_cast<VarId>(variables_.size())) {
      throw Error(ErrorCode::kInvalidArgument,
                  "constraint references undeclared variable " +
                      std::to_string(t.var));
    }
  }
  constraints_.push_back({std::move(terms), sense, std::move(rhs)});
}

void MipModel::AddObjectiveTerm(Rational coefficient, VarId var) {
  if (var < 0 || var >= static_cast<VarId>(variables_.size())) {
    throw Error(ErrorCode::kInvalidArgument,
                "objective references undeclared variable " +
                    std::to_string(var));
  }
  coefficient.canonicalize();
  objective_.push_back({std::move(coefficient), var});
}

VarId MipModel::FindVariable(std::string_view name) const {
  const auto it = by_name_.find(std::string(name));
  return it == by_name_.end() ? -1 : it->second;
}

ModelStats GetModelStats(const MipModel& model) {
  ModelStats stats;
  stats.num_variables = model.variables().size();
  stats.num_constraints = model.constraints().size();
  for (const MipVariable& v : model.variables()) {
    if (v.kind == VarKind::kBinary) ++stats.num_binaries;
  }
  return stats;
}

namespace {

constexpr int kTermsPerLine = 8;

void WriteExpression(std::ostream& out, const MipModel& model,
                     const std::vector<LinearTerm>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i > 0 && i % kTermsPerLine == 0) out << "\n  ";
    const Rational& c = terms[i].coefficient;
    if (c < 0) {
      out << (i == 0 ? "-" : " -");
    } else if (i > 0) {
      out << " +";
    }
    out << (i == 0 && c >= 0 ? "" : " ") << RationalToDecimal(abs(c)) << ' '
        << model.variable(terms[i].var).name;
  }
}

std::string_view SenseSymbol(RowSense sense) {
  switch (sense) {
    case RowSense::kLessEqual:
      return "<=";
    case RowSense::kEqual:
      return "=";
    case RowSense::kGreaterEqual:
      return ">=";
  }
  return "?";
}

}  // namespace

std::string ExportLp(const MipModel& model) {
  std::ostringstream out;
  out << "Maximize\n";
  if (!model.objective().empty()) {
    out << " obj: ";
    WriteExpression(out, model, model.objective());
    out << "\n";
  }
  out << "Subject To\n";
  for (std::size_t r = 0; r < model.constraints().size(); ++r) {
    const MipConstraint& row = model.constraints()[r];
    out << " c" << (r + 1) << ": ";
    if (row.terms.empty()) {
      // LP rows need at least one term.
      out << "0 "
          << (model.variables().empty() ? std::string("x")
                                        : model.variables().front().name);
    } else {
      WriteExpression(out, model, row.terms);
    }
    out << ' ' << SenseSymbol(row.sense) << ' ' << RationalToDecimal(row.rhs)
        << "\n";
  }
  out << "Bounds\n";
  for (const MipVariable& v : model.variables()) {
    if (v.kind == VarKind::kBinary && v.lower == 0 && v.upper == 1) continue;
    if (v.lower == v.upper) {
      out << ' ' << v.name << " = " << RationalToDecimal(v.lower) << "\n";
    } else {
      out << ' ' << RationalToDecimal(v.lower) << " <= " << v.name
          << " <= " << RationalToDecimal(v.upper) << "\n";
    }
  }
  auto write_list = [&](VarKind kind) {
    int on_line = 0;
    for (const MipVariable& v : model.variables()) {
      if (v.kind != kind) continue;
      out << ' ' << v.name;
      if (++on_line == kTermsPerLine) {
        out << "\n";
        on_line = 0;
      }
    }
    if (on_line > 0) out << "\n";
  };
  out << "Generals\n";
  write_list(VarKind::kInteger);
  out << "Binaries\n";
  write_list(VarKind::kBinary);
  out << "End\n";
  return out.str();
}

}  // namespace abcc
