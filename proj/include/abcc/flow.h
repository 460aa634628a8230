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

#ifndef ABCC_FLOW_H_
#define ABCC_FLOW_H_

#include <string>
#include <string_view>
#include <vector>

#include "abcc/rational.h"

namespace abcc {

struct FlowEdge {
  int from;
  int to;
  int capacity;
  Rational cost;
};

// Directed network with integral capacities and a designated source and
// sink. Vertices carry labels for inspection.
class FlowNetwork {
 public:
  int AddVertex(std::string label);
  // Throws kInvalidArgument on a negative capacity or unknown endpoint.
  int AddEdge(int from, int to, int capacity, Rational cost);

  void set_source(int v) { source_ = v; }
  void set_sink(int v) { sink_ = v; }
  int source() const { return source_; }
  int sink() const { return sink_; }

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  const std::vector<FlowEdge>& edges() const { return edges_; }
  const std::string& label(int v) const { return labels_.at(v); }
  int CountLabelsWithPrefix(std::string_view prefix) const;

 private:
  std::vector<std::string> labels_;
  std::vector<FlowEdge> edges_;
  int source_ = -1;
  int sink_ = -1;
};

struct FlowResult {
  int flow_value = 0;
  Rational cost;
  // Flow on each edge of FlowNetwork::edges(), same order.
  std::vector<int> edge_flows;
};

// Integral minimum-cost maximum flow by successive shortest augmenting
// paths: Bellman-Ford initialises vertex potentials, then Dijkstra on
// reduced costs finds each augmenting path. Requires no negative-cost cycle.
FlowResult MinCostMaxFlow(const FlowNetwork& network);

}  // namespace abcc

#endif  // ABCC_FLOW_H_
