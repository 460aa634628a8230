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

#include "abcc/patterns.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "abcc/error.h"

namespace abcc {
namespace {

bool IsVar(const Term& t) { return t.is_variable(); }

const RelationSchema* BinaryKeyed(const Schema& schema,
                                  const std::string& name) {
  const RelationSchema* rel = schema.Find(name);
  if (rel == nullptr || rel->arity() != 2 || !rel->IsKey(1)) return nullptr;
  return rel;
}

// Candidate index for a database value, if it names a candidate.
std::optional<int> CandidateOf(const Election& election, const Value& v) {
  if (!v.is_text()) return std::nullopt;
  return election.CandidateIndex(v.as_text());
}

void RequireKey(const RelationSource& db, const std::string& relation) {
  if (!FirstColumnIsKey(db, relation)) {
    throw Error(ErrorCode::kPatternViolation,
                "relation " + relation + " violates its key on attribute 1");
  }
}

const std::vector<Tuple>& TuplesOf(const RelationSource& db,
                                   const std::string& relation) {
  static const std::vector<Tuple> kEmpty;
  const Relation* rel = db.Find(relation);
  return rel == nullptr ? kEmpty : rel->tuples();
}

// The S-value each candidate is paired with, keyed by candidate index.
std::map<int, Value> PairedValues(const Election& election,
                                  const RelationSource& db,
                                  const std::string& relation) {
  std::map<int, Value> out;
  for (const Tuple& t : TuplesOf(db, relation)) {
    if (auto c = CandidateOf(election, t[0])) out.emplace(*c, t[1]);
  }
  return out;
}

// Candidates ordered by approvals (desc), then index.
std::vector<int> ByApprovals(const Election& election) {
  std::vector<int> order(election.num_candidates());
  std::iota(order.begin(), order.end(), 0);
  const auto& counts = election.approval_counts();
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return counts[a] > counts[b];
  });
  return order;
}

Committee MakeCommittee(const Election& election, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  Committee c;
  c.score = CommitteeScore(election, ScoringRule::Av(), members);
  c.members = std::move(members);
  return c;
}

}  // namespace

std::optional<SingleTgdPattern> MatchSingleTgd(const Tgd& tgd,
                                               const Schema& schema) {
  if (tgd.body.size() != 1 || tgd.existential_vars.size() != 1 ||
      tgd.head.size() != 2) {
    return std::nullopt;
  }
  const RelationalAtom& premise = tgd.body[0];
  if (premise.is_com() || premise.terms.size() != 1 ||
      !IsVar(premise.terms[0])) {
    return std::nullopt;
  }
  const RelationSchema* r = schema.Find(premise.relation);
  if (r == nullptr || r->arity() != 1) return std::nullopt;
  const std::string& x = premise.terms[0].variable();
  const std::string& c = tgd.existential_vars[0];
  if (c == x) return std::nullopt;

  const RelationalAtom* com = nullptr;
  const RelationalAtom* member = nullptr;
  for (const RelationalAtom& atom : tgd.head) {
    (atom.is_com() ? com : member) = &atom;
  }
  if (com == nullptr || member == nullptr) return std::nullopt;
  if (com->terms.size() != 1 || !IsVar(com->terms[0]) ||
      com->terms[0].variable() != c) {
    return std::nullopt;
  }
  if (member->terms.size() != 2 || !IsVar(member->terms[0]) ||
      !IsVar(member->terms[1]) || member->terms[0].variable() != c ||
      member->terms[1].variable() != x) {
    return std::nullopt;
  }
  if (BinaryKeyed(schema, member->relation) == nullptr) return std::nullopt;
  return SingleTgdPattern{premise.relation, member->relation};
}

std::optional<DcKeyPattern> MatchDcKey(const Dc& dc, const Schema& schema) {
  if (dc.relational_atoms.size() != 4 || dc.comparison_atoms.size() != 1) {
    return std::nullopt;
  }
  std::vector<std::string> com_vars;
  std::vector<const RelationalAtom*> others;
  for (const RelationalAtom& atom : dc.relational_atoms) {
    if (atom.is_com()) {
      if (atom.terms.size() != 1 || !IsVar(atom.terms[0])) return std::nullopt;
      com_vars.push_back(atom.terms[0].variable());
    } else {
      others.push_back(&atom);
    }
  }
  if (com_vars.size() != 2 || com_vars[0] == com_vars[1]) return std::nullopt;
  if (others.size() != 2 || others[0]->relation != others[1]->relation) {
    return std::nullopt;
  }
  for (const RelationalAtom* atom : others) {
    if (atom->terms.size() != 2 || !IsVar(atom->terms[0]) ||
        !IsVar(atom->terms[1])) {
      return std::nullopt;
    }
  }
  const std::string& x = others[0]->terms[1].variable();
  if (others[1]->terms[1].variable() != x || x == com_vars[0] ||
      x == com_vars[1]) {
    return std::nullopt;
  }
  const std::set<std::string> firsts = {others[0]->terms[0].variable(),
                                        others[1]->terms[0].variable()};
  if (firsts != std::set<std::string>(com_vars.begin(), com_vars.end())) {
    return std::nullopt;
  }
  const ComparisonAtom& cmp = dc.comparison_atoms[0];
  if (cmp.op != CompareOp::kNe || !IsVar(cmp.left) || !IsVar(cmp.right)) {
    return std::nullopt;
  }
  const std::set<std::string> compared = {cmp.left.variable(),
                                          cmp.right.variable()};
  if (compared != firsts) return std::nullopt;
  if (BinaryKeyed(schema, others[0]->relation) == nullptr) return std::nullopt;
  return DcKeyPattern{others[0]->relation};
}

bool FirstColumnIsKey(const RelationSource& db, const std::string& relation) {
  const std::vector<Tuple>& tuples = TuplesOf(db, relation);
  // Tuples are sorted, so equal first attributes are adjacent.
  for (std::size_t i = 1; i < tuples.size(); ++i) {
    if (tuples[i][0] == tuples[i - 1][0]) return false;
  }
  return true;
}

Pattern DetectPattern(const Schema& schema, const RelationSource& db,
                      const ConstraintSet& gamma) {
  if (gamma.dcs.empty() && gamma.tgds.size() == 1) {
    auto p = MatchSingleTgd(gamma.tgds[0], schema);
    if (p && FirstColumnIsKey(db, p->membership)) return *p;
  } else if (gamma.dcs.empty() && gamma.tgds.size() == 2) {
    auto p1 = MatchSingleTgd(gamma.tgds[0], schema);
    auto p2 = MatchSingleTgd(gamma.tgds[1], schema);
    if (p1 && p2 && FirstColumnIsKey(db, p1->membership) &&
        FirstColumnIsKey(db, p2->membership)) {
      return DoubleTgdPattern{*p1, *p2};
    }
  } else if (gamma.tgds.empty() && gamma.dcs.size() == 1) {
    auto p = MatchDcKey(gamma.dcs[0], schema);
    if (p && FirstColumnIsKey(db, p->relation)) return *p;
  }
  return std::monostate{};
}

std::optional<Committee> GreedySingleTgd(const Election& election,
                                         const RelationSource& db,
                                         const SingleTgdPattern& pattern) {
  RequireKey(db, pattern.membership);
  const int k = election.committee_size();
  const auto& counts = election.approval_counts();
  std::map<Value, std::vector<int>> groups;
  for (const auto& [c, a] : PairedValues(election, db, pattern.membership)) {
    groups[a].push_back(c);
  }
  std::vector<char> chosen(election.num_candidates(), 0);
  std::vector<int> members;
  for (const Tuple& t : TuplesOf(db, pattern.requirement)) {
    auto it = groups.find(t[0]);
    if (it == groups.end()) return std::nullopt;
    // Groups are in index order; keep the first maximum.
    int best = it->second.front();
    for (int c : it->second) {
      if (counts[c] > counts[best]) best = c;
    }
    chosen[best] = 1;
    members.push_back(best);
    if (static_cast<int>(members.size()) > k) return std::nullopt;
  }
  for (int c : ByApprovals(election)) {
    if (static_cast<int>(members.size()) == k) break;
    if (!chosen[c]) members.push_back(c);
  }
  return MakeCommittee(election, std::move(members));
}

namespace {

// Vertex layout of the two-TGD network, with the c_in -> c_out edge index
// per candidate.
struct McmfLayout {
  FlowNetwork network;
  std::vector<int> candidate_edge;
};

McmfLayout BuildLayout(const Election& election, const RelationSource& db,
                       const DoubleTgdPattern& pattern) {
  RequireKey(db, pattern.first.membership);
  RequireKey(db, pattern.second.membership);
  const int k = election.committee_size();
  const std::vector<Tuple>& r1 = TuplesOf(db, pattern.first.requirement);
  const std::vector<Tuple>& r2 = TuplesOf(db, pattern.second.requirement);
  if (static_cast<int>(r1.size()) > k || static_cast<int>(r2.size()) > k) {
    throw Error(ErrorCode::kInvalidArgument,
                "requirement relation larger than the committee size");
  }
  const int m = election.num_candidates();
  const Rational num_voters(election.num_voters());

  McmfLayout out;
  FlowNetwork& net = out.network;
  const int source = net.AddVertex("s'");
  const int sink = net.AddVertex("t'");
  net.set_source(source);
  net.set_sink(sink);
  std::vector<int> cin(m), cout(m);
  for (int j = 0; j < m; ++j) {
    cin[j] = net.AddVertex("cin:" + election.candidates()[j]);
    cout[j] = net.AddVertex("cout:" + election.candidates()[j]);
    out.candidate_edge.push_back(net.AddEdge(
        cin[j], cout[j], 1, num_voters - election.approval_counts()[j]));
  }

  const auto s1 = PairedValues(election, db, pattern.first.membership);
  for (const Tuple& t : r1) {
    const int u = net.AddVertex("u:" + t[0].ToString());
    net.AddEdge(source, u, 1, 0);
    for (const auto& [c, a] : s1) {
      if (a == t[0]) net.AddEdge(u, cin[c], 1, 0);
    }
  }
  for (int i = 1; i <= k - static_cast<int>(r1.size()); ++i) {
    const int u = net.AddVertex("u':" + std::to_string(i));
    net.AddEdge(source, u, 1, 0);
    for (int j = 0; j < m; ++j) net.AddEdge(u, cin[j], 1, 0);
  }

  const auto s2 = PairedValues(election, db, pattern.second.membership);
  for (const Tuple& t : r2) {
    const int w = net.AddVertex("w:" + t[0].ToString());
    net.AddEdge(w, sink, 1, 0);
    for (const auto& [c, b] : s2) {
      if (b == t[0]) net.AddEdge(cout[c], w, 1, 0);
    }
  }
  for (int i = 1; i <= k - static_cast<int>(r2.size()); ++i) {
    const int w = net.AddVertex("w':" + std::to_string(i));
    net.AddEdge(w, sink, 1, 0);
    for (int j = 0; j < m; ++j) net.AddEdge(cout[j], w, 1, 0);
  }
  return out;
}

}  // namespace

FlowNetwork BuildMcmfNetwork(const Election& election,
                             const RelationSource& db,
                             const DoubleTgdPattern& pattern) {
  return BuildLayout(election, db, pattern).network;
}

McmfOutcome McmfTwoTgds(const Election& election, const RelationSource& db,
                        const DoubleTgdPattern& pattern) {
  RequireKey(db, pattern.first.membership);
  RequireKey(db, pattern.second.membership);
  const int k = election.committee_size();
  if (static_cast<int>(TuplesOf(db, pattern.first.requirement).size()) > k ||
      static_cast<int>(TuplesOf(db, pattern.second.requirement).size()) > k) {
    return {};
  }
  const McmfLayout layout = BuildLayout(election, db, pattern);
  const FlowResult flow = MinCostMaxFlow(layout.network);
  McmfOutcome out;
  out.min_cost = flow.cost;
  if (flow.flow_value < k) return out;
  std::vector<int> members;
  for (int j = 0; j < election.num_candidates(); ++j) {
    if (flow.edge_flows[layout.candidate_edge[j]] == 1) members.push_back(j);
  }
  out.committee = MakeCommittee(election, std::move(members));
  return out;
}

std::optional<Committee> DcKeyGreedy(const Election& election,
                                     const RelationSource& db,
                                     const DcKeyPattern& pattern) {
  RequireKey(db, pattern.relation);
  const int k = election.committee_size();
  const auto& counts = election.approval_counts();
  std::map<Value, std::vector<int>> groups;
  for (const auto& [c, a] : PairedValues(election, db, pattern.relation)) {
    groups[a].push_back(c);
  }
  std::vector<char> dropped(election.num_candidates(), 0);
  for (const auto& [value, group] : groups) {
    int best = group.front();
    for (int c : group) {
      if (counts[c] > counts[best]) best = c;
    }
    for (int c : group) {
      if (c != best) dropped[c] = 1;
    }
  }
  std::vector<int> members;
  for (int c : ByApprovals(election)) {
    if (static_cast<int>(members.size()) == k) break;
    if (!dropped[c]) members.push_back(c);
  }
  if (static_cast<int>(members.size()) < k) return std::nullopt;
  return MakeCommittee(election, std::move(members));
}

}  // namespace abcc
