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

// Mixed-integer encoding of constrained committee selection.
//
// Base program, per (weighted) voter i and candidate j:
//
//   maximize   sum_i mu_i * s_i
//   s.t.       sum_{j in A(i)} z_j - u_i = 0
//              sum_j z_j = k
//              for k' = 0..K_i:
//                t+ - t- + u_i = k'            (t+ - t- = k' - u_i)
//                t+ - (k+1) b <= 0
//                t- + (k+1) b <= k+1
//                s_i - M t+ - M t- <= f(k', |A(i)|)
//
// with z, b binary, u, t+, t- integer and s continuous in [0, M]. K_i is k,
// or min(k, |A(i)|) when score pruning is on. At the optimum s_i equals
// f(u_i, |A(i)|): the row with k' = u_i is the only one that binds.
//
// TGD and DC rows are added on top; see EncodeTgd and EncodeDc.

#ifndef ABCC_MIP_ENCODER_H_
#define ABCC_MIP_ENCODER_H_

#include <string>
#include <vector>

#include "abcc/constraints.h"
#include "abcc/election.h"
#include "abcc/mip_model.h"
#include "abcc/relational.h"

namespace abcc {

struct EncoderOptions {
  bool group_voters = false;  // G
  bool prune_scores = false;  // P
  bool contract_dcs = false;  // C

  static EncoderOptions All() { return {true, true, true}; }
  static EncoderOptions None() { return {}; }
  // All eight combinations, G as the high bit.
  static std::vector<EncoderOptions> AllCombinations();

  // e.g. "group,prune", "none".
  std::string ToString() const;
  friend bool operator==(const EncoderOptions&, const EncoderOptions&) =
      default;
};

struct WeightedVoter {
  // Key used in variable names.
  std::string key;
  std::vector<int> approvals;
  int weight = 1;
};

// Voters with identical approval sets merged into one weighted voter, in
// order of first occurrence. Keys are g1, g2, ...
std::vector<WeightedVoter> GroupVoters(const Election& election);

struct Encoding {
  MipModel model;
  // Selection variable per candidate.
  std::vector<VarId> z;
  std::vector<WeightedVoter> voters;
  std::vector<VarId> u;
  std::vector<VarId> s;
  Rational big_m;
  // Wall time spent grounding constraints.
  double ground_ms = 0;
};

// M = 1 + max_v f(k, |A(v)|).
Rational BigM(const Election& election, const ScoringRule& rule);

Encoding EncodeBase(const Election& election, const ScoringRule& rule,
                    const EncoderOptions& options);

// Adds the rows of one TGD. For each premise grounding alpha whose Com
// values are all candidates, a binary b_alpha tracks whether B[alpha] is on
// the committee; each distinct conclusion set B[beta] of the extensions of
// alpha gets a binary b_beta that may be 1 only if B[beta] is on the
// committee; and b_alpha <= sum b_beta. A premise with no extension becomes
// sum_{B[alpha]} z <= |B[alpha]| - 1, or the infeasible row 0 >= 1 when
// B[alpha] is empty.
void EncodeTgd(Encoding& encoding, const RelationSource& db,
               const Election& election, const Tgd& tgd, int tgd_index);

// Distinct conflict sets B[alpha] of a DC (sorted candidate indices), in
// lexicographic order. Groundings binding a Com term to a non-candidate are
// dropped. An empty set means the database alone violates the DC.
std::vector<std::vector<int>> GroundConflicts(const RelationSource& db,
                                              const Election& election,
                                              const Dc& dc);

// A packing row: at most `capacity` members of `members` may be selected.
struct PackingRow {
  std::vector<int> members;
  int capacity;

  friend bool operator==(const PackingRow&, const PackingRow&) = default;
};

// One row per conflict: sum z <= |B| - 1.
std::vector<PackingRow> ConflictRows(
    const std::vector<std::vector<int>>& conflicts);

// Covers the q-uniform part of the conflict hypergraph (q the largest
// conflict size) with greedily grown hypercliques U, one row
// sum_{U} z <= q - 1 each; smaller conflicts keep their own rows.
std::vector<PackingRow> ContractConflicts(
    const std::vector<std::vector<int>>& conflicts, int num_candidates);

void EncodeDc(Encoding& encoding, const RelationSource& db,
              const Election& election, const Dc& dc, bool contract);

// Base program plus every TGD and DC of gamma.
Encoding EncodeModel(const Election& election, const ScoringRule& rule,
                     const RelationSource& db, const ConstraintSet& gamma,
                     const EncoderOptions& options);

// Maps arbitrary ids onto [A-Za-z0-9_].
std::string SanitizeName(std::string_view id);

}  // namespace abcc

#endif  // ABCC_MIP_ENCODER_H_
