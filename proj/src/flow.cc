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

#include "abcc/flow.h"

#include <algorithm>
#include <optional>
#include <queue>

#include "abcc/error.h"

namespace abcc {

int FlowNetwork::AddVertex(std::string label) {
  labels_.push_back(std::move(label));
  return num_vertices() - 1;
}

int FlowNetwork::AddEdge(int from, int to, int capacity, Rational cost) {
  if (capacity < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative edge capacity");
  }
  if (from < 0 || from >= num_vertices() || to < 0 || to >= num_vertices()) {
    throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
  }
  cost.canonicalize();
  edges_.push_back({from, to, capacity, std::move(cost)});
  return static_cast<int>(edges_.size()) - 1;
}

int FlowNetwork::CountLabelsWithPrefix(std::string_view prefix) const {
  return static_cast<int>(
      std::count_if(labels_.begin(), labels_.end(), [&](const std::string& l) {
        return std::string_view(l).starts_with(prefix);
      }));
}

namespace {

struct Arc {
  int to;
  int residual;
  Rational cost;
  int reverse;  // index of the paired arc in adjacency[to]
  int edge;     // original edge, -1 for reverse arcs
};

}  // namespace

FlowResult MinCostMaxFlow(const FlowNetwork& network) {
  const int n = network.num_vertices();
  FlowResult result;
  result.edge_flows.assign(network.edges().size(), 0);
  const int s = network.source();
  const int t = network.sink();
  if (n == 0 || s < 0 || t < 0 || s == t) return result;

  std::vector<std::vector<Arc>> adj(n);
  for (int e = 0; e < static_cast<int>(network.edges().size()); ++e) {
    const FlowEdge& edge = network.edges()[e];
    const int fwd = static_cast<int>(adj[edge.from].size());
    const int rev = static_cast<int>(adj[edge.to].size()) +
                    (edge.from == edge.to ? 1 : 0);
    adj[edge.from].push_back({edge.to, edge.capacity, edge.cost, rev, e});
    adj[edge.to].push_back({edge.from, 0, -edge.cost, fwd, -1});
  }

  // Potentials: Bellman-Ford from the source over arcs with capacity.
  std::vector<std::optional<Rational>> potential(n);
  potential[s] = Rational(0);
  for (int round = 0; round < n; ++round) {
    bool changed = false;
    for (int u = 0; u < n; ++u) {
      if (!potential[u]) continue;
      for (const Arc& a : adj[u]) {
        if (a.residual <= 0) continue;
        const Rational candidate = *potential[u] + a.cost;
        if (!potential[a.to] || candidate < *potential[a.to]) {
          potential[a.to] = candidate;
          changed = true;
        }
      }
    }
    if (!changed) break;
  }

  while (true) {
    // Dijkstra on reduced costs cost + pi(u) - pi(v) >= 0.
    std::vector<std::optional<Rational>> dist(n);
    std::vector<std::pair<int, int>> parent(n, {-1, -1});
    using Item = std::pair<Rational, int>;
    auto later = [](const Item& a, const Item& b) {
      return a.first > b.first || (a.first == b.first && a.second > b.second);
    };
    std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
    dist[s] = Rational(0);
    queue.push({Rational(0), s});
    std::vector<char> done(n, 0);
    while (!queue.empty()) {
      const auto [d, u] = queue.top();
      queue.pop();
      if (done[u]) continue;
      done[u] = 1;
      for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
        const Arc& a = adj[u][i];
        if (a.residual <= 0 || !potential[a.to]) continue;
        const Rational nd = d + a.cost + *potential[u] - *potential[a.to];
        if (!dist[a.to] || nd < *dist[a.to]) {
          dist[a.to] = nd;
          parent[a.to] = {u, i};
          queue.push({nd, a.to});
        }
      }
    }
    if (!dist[t]) break;
    for (int v = 0; v < n; ++v) {
      if (dist[v]) *potential[v] += *dist[v];
    }

    int push = -1;
    for (int v = t; v != s; v = parent[v].first) {
      const Arc& a = adj[parent[v].first][parent[v].second];
      push = push < 0 ? a.residual : std::min(push, a.residual);
    }
    for (int v = t; v != s; v = parent[v].first) {
      Arc& a = adj[parent[v].first][parent[v].second];
      a.residual -= push;
      adj[v][a.reverse].residual += push;
      result.cost += a.cost * push;
    }
    result.flow_value += push;
  }

  for (int u = 0; u < n; ++u) {
    for (const Arc& a : adj[u]) {
      if (a.edge >= 0) {
        result.edge_flows[a.edge] = network.edges()[a.edge].capacity - a.residual;
      }
    }
  }
  return result;
}

}  // namespace abcc
