// Copyright 2026 The vsplit Authors
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vsplit {

using Vertex = int;
using EdgeId = int;

/// Unordered vertex pair stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;

  [[nodiscard]] bool has(Vertex x) const { return x == u || x == v; }
  [[nodiscard]] Vertex other(Vertex x) const { return x == u ? v : u; }
};

/// Simple undirected graph on the dense vertex set 0..n-1.
///
/// Immutable after construction. Edge ids index the edge list sorted by
/// (u, v), so two graphs with the same edge set assign identical ids. Copies
/// share storage.
class Graph {
 public:
  Graph() : Graph(0, {}) {}

  /// Throws std::invalid_argument on loops, parallel edges or endpoints out
  /// of range.
  Graph(int order, std::span<const std::pair<Vertex, Vertex>> edges) {
    if (order < 0) throw std::invalid_argument("graph order must be non-negative");
    auto data = std::make_shared<Data>();
    data->order = order;
    data->edge_index.assign(static_cast<std::size_t>(order) * order, -1);
    data->edges.reserve(edges.size());
    for (auto [a, b] : edges) {
      if (a < 0 || b < 0 || a >= order || b >= order)
        throw std::invalid_argument("edge endpoint out of range");
      if (a == b) throw std::invalid_argument("loops are not allowed");
      data->edges.push_back(Edge{std::min(a, b), std::max(a, b)});
    }
    std::sort(data->edges.begin(), data->edges.end());
    if (std::adjacent_find(data->edges.begin(), data->edges.end()) != data->edges.end())
      throw std::invalid_argument("parallel edges are not allowed");
    data->adjacency.resize(order);
    for (EdgeId id = 0; id < static_cast<EdgeId>(data->edges.size()); ++id) {
      const Edge e = data->edges[id];
      data->adjacency[e.u].push_back(e.v);
      data->adjacency[e.v].push_back(e.u);
      data->edge_index[static_cast<std::size_t>(e.u) * order + e.v] = id;
      data->edge_index[static_cast<std::size_t>(e.v) * order + e.u] = id;
    }
    for (auto& nbrs : data->adjacency) std::sort(nbrs.begin(), nbrs.end());
    for (const auto& nbrs : data->adjacency)
      data->max_degree = std::max(data->max_degree, static_cast<int>(nbrs.size()));
    data_ = std::move(data);
  }

  Graph(int order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
      : Graph(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

  Graph(int order, const std::vector<std::pair<Vertex, Vertex>>& edges)
      : Graph(order, std::span<const std::pair<Vertex, Vertex>>(edges)) {}

  [[nodiscard]] int order() const { return data_->order; }
  [[nodiscard]] int size() const { return static_cast<int>(data_->edges.size()); }
  [[nodiscard]] int max_degree() const { return data_->max_degree; }
  [[nodiscard]] int degree(Vertex v) const {
    return static_cast<int>(data_->adjacency.at(v).size());
  }
  [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const {
    return data_->adjacency.at(v);
  }
  [[nodiscard]] const std::vector<Edge>& edges() const { return data_->edges; }
  [[nodiscard]] Edge edge(EdgeId id) const { return data_->edges.at(id); }

  [[nodiscard]] bool contains(Vertex v) const { return v >= 0 && v < order(); }

  [[nodiscard]] std::optional<EdgeId> edge_id(Vertex a, Vertex b) const {
    if (!contains(a) || !contains(b)) return std::nullopt;
    const EdgeId id = data_->edge_index[static_cast<std::size_t>(a) * order() + b];
    if (id < 0) return std::nullopt;
    return id;
  }
  [[nodiscard]] bool adjacent(Vertex a, Vertex b) const { return edge_id(a, b).has_value(); }

  /// Edge id of `ab`; throws std::out_of_range if absent.
  [[nodiscard]] EdgeId require_edge(Vertex a, Vertex b) const {
    auto id = edge_id(a, b);
    if (!id) throw std::out_of_range("no edge " + std::to_string(a) + "-" + std::to_string(b));
    return *id;
  }

  [[nodiscard]] std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges().size());
    for (const Edge& e : edges()) out.emplace_back(e.u, e.v);
    return out;
  }

  [[nodiscard]] std::vector<int> degree_sequence() const {
    std::vector<int> out;
    out.reserve(order());
    for (Vertex v = 0; v < order(); ++v) out.push_back(degree(v));
    std::sort(out.begin(), out.end());
    return out;
  }

  [[nodiscard]] bool is_regular() const {
    for (Vertex v = 0; v < order(); ++v)
      if (degree(v) != max_degree()) return false;
    return true;
  }

  [[nodiscard]] Graph without_edge(EdgeId id) const {
    auto pairs = edge_pairs();
    pairs.erase(pairs.begin() + id);
    return Graph(order(), pairs);
  }

  [[nodiscard]] Graph without_vertex(Vertex x) const {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    auto relabel = [x](Vertex v) { return v > x ? v - 1 : v; };
    for (const Edge& e : edges())
      if (!e.has(x)) pairs.emplace_back(relabel(e.u), relabel(e.v));
    return Graph(order() - 1, pairs);
  }

  [[nodiscard]] Graph complement() const {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < order(); ++a)
      for (Vertex b = a + 1; b < order(); ++b)
        if (!adjacent(a, b)) pairs.emplace_back(a, b);
    return Graph(order(), pairs);
  }

  /// Graph with vertex `v` renamed to `perm[v]`.
  [[nodiscard]] Graph relabeled(std::span<const Vertex> perm) const {
    if (static_cast<int>(perm.size()) != order())
      throw std::invalid_argument("permutation size does not match graph order");
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const Edge& e : edges()) pairs.emplace_back(perm[e.u], perm[e.v]);
    return Graph(order(), pairs);
  }

  [[nodiscard]] bool is_connected() const {
    if (order() == 0) return true;
    std::vector<char> seen(order(), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          stack.push_back(w);
        }
    }
    return count == order();
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order() == b.order() && a.edges() == b.edges();
  }

 private:
  struct Data {
    int order = 0;
    int max_degree = 0;
    std::vector<Edge> edges;
    std::vector<std::vector<Vertex>> adjacency;
    std::vector<EdgeId> edge_index;
  };
  std::shared_ptr<const Data> data_;
};

/// Neighbourhood bipartition used by a vertex split. `first` becomes the
/// private neighbourhood of the vertex that keeps the old slot.
struct SplitSpec {
  Vertex vertex = 0;
  std::vector<Vertex> first;
  std::vector<Vertex> second;
};

/// Replaces `spec.vertex` by adjacent vertices v1 (same id) and v2 (id n),
/// with N(v1) = first + {v2} and N(v2) = second + {v1}.
inline Graph vertex_split(const Graph& g, const SplitSpec& spec) {
  const Vertex v = spec.vertex;
  if (!g.contains(v)) throw std::invalid_argument("split vertex not in graph");
  if (spec.first.empty() || spec.second.empty())
    throw std::invalid_argument("split partition has an empty part");
  std::vector<Vertex> all = spec.first;
  all.insert(all.end(), spec.second.begin(), spec.second.end());
  std::sort(all.begin(), all.end());
  if (std::adjacent_find(all.begin(), all.end()) != all.end())
    throw std::invalid_argument("split parts overlap");
  if (all != g.neighbors(v))
    throw std::invalid_argument("split partition does not cover the neighbourhood");

  const Vertex v2 = g.order();
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(g.size() + 1);
  for (const Edge& e : g.edges())
    if (!e.has(v)) pairs.emplace_back(e.u, e.v);
  for (Vertex w : spec.first) pairs.emplace_back(v, w);
  for (Vertex w : spec.second) pairs.emplace_back(v2, w);
  pairs.emplace_back(v, v2);
  return Graph(g.order() + 1, pairs);
}

/// True iff |E| > max_degree * floor(n / 2).
inline bool is_overfull(const Graph& g) {
  return static_cast<long long>(g.size()) >
         static_cast<long long>(g.max_degree()) * (g.order() / 2);
}

/// Breadth-first distance from `u` to the nearest vertex of `targets`;
/// nullopt when none is reachable.
inline std::optional<int> distance(const Graph& g, Vertex u, std::span<const Vertex> targets) {
  if (targets.empty()) throw std::invalid_argument("distance target set is empty");
  if (!g.contains(u)) throw std::invalid_argument("distance source not in graph");
  std::vector<char> is_target(g.order(), 0);
  for (Vertex t : targets) {
    if (!g.contains(t)) throw std::invalid_argument("distance target not in graph");
    is_target[t] = 1;
  }
  std::vector<int> dist(g.order(), -1);
  std::deque<Vertex> queue{u};
  dist[u] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (is_target[v]) return dist[v];
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return std::nullopt;
}

inline std::optional<int> distance(const Graph& g, Vertex u, std::initializer_list<Vertex> targets) {
  return distance(g, u, std::span<const Vertex>(targets.begin(), targets.size()));
}

// Standard constructions.

inline Graph complete(int k) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = a + 1; b < k; ++b) pairs.emplace_back(a, b);
  return Graph(k, pairs);
}

inline Graph cycle(int k) {
  if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < k; ++a) pairs.emplace_back(a, (a + 1) % k);
  return Graph(k, pairs);
}

inline Graph complete_bipartite(int p, int q) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < p; ++a)
    for (Vertex b = 0; b < q; ++b) pairs.emplace_back(a, p + b);
  return Graph(p + q, pairs);
}

/// K_{2k} with a perfect matching {2i, 2i+1} removed.
inline Graph complete_minus_perfect_matching(int order) {
  if (order % 2 != 0) throw std::invalid_argument("perfect matching needs even order");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < order; ++a)
    for (Vertex b = a + 1; b < order; ++b)
      if (!(a % 2 == 0 && b == a + 1)) pairs.emplace_back(a, b);
  return Graph(order, pairs);
}

/// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < 5; ++i) {
    pairs.emplace_back(i, (i + 1) % 5);
    pairs.emplace_back(5 + i, 5 + (i + 2) % 5);
    pairs.emplace_back(i, i + 5);
  }
  return Graph(10, pairs);
}

/// Petersen graph with its last vertex deleted.
inline Graph petersen_minus_vertex() { return petersen().without_vertex(9); }

/// Triangular prism: triangles 0-1-2 and 3-4-5, rungs i -- i+3.
inline Graph prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

/// 3-cube on bit strings 0..7.
inline Graph cube() {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a < 8; ++a)
    for (int bit = 0; bit < 3; ++bit)
      if (Vertex b = a ^ (1 << bit); a < b) pairs.emplace_back(a, b);
  return Graph(8, pairs);
}

inline Graph path_graph(int k) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex a = 0; a + 1 < k; ++a) pairs.emplace_back(a, a + 1);
  return Graph(k, pairs);
}

}  // namespace vsplit
