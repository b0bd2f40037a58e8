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

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "vsplit/canonical.hpp"
#include "vsplit/graph.hpp"

namespace vsplit {

namespace detail {

// Labelled d-regular graphs on m vertices whose vertex 0 is adjacent to
// exactly 1..d. Every isomorphism class has such a representative.
inline void generate_regular(int m, int d,
                             const std::function<void(const std::vector<std::pair<Vertex, Vertex>>&)>& emit) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  std::vector<int> deg(m, 0);
  for (Vertex b = 1; b <= d; ++b) {
    pairs.emplace_back(0, b);
    ++deg[0];
    ++deg[b];
  }
  // Candidate pairs (a, b), a >= 1, in lexicographic order; decide each in turn.
  std::vector<std::pair<Vertex, Vertex>> candidates;
  for (Vertex a = 1; a < m; ++a)
    for (Vertex b = a + 1; b < m; ++b) candidates.emplace_back(a, b);
  // last_slot[a]: index of the final candidate touching vertex a.
  std::vector<int> last_slot(m, -1);
  for (int i = 0; i < static_cast<int>(candidates.size()); ++i) {
    last_slot[candidates[i].first] = i;
    last_slot[candidates[i].second] = i;
  }
  std::function<void(int)> step = [&](int i) {
    if (i == static_cast<int>(candidates.size())) {
      for (Vertex v = 0; v < m; ++v)
        if (deg[v] != d) return;
      emit(pairs);
      return;
    }
    auto [a, b] = candidates[i];
    if (deg[a] < d && deg[b] < d) {
      pairs.emplace_back(a, b);
      ++deg[a];
      ++deg[b];
      step(i + 1);
      --deg[a];
      --deg[b];
      pairs.pop_back();
    }
    // Skipping is allowed only if both endpoints can still be completed.
    if ((last_slot[a] != i || deg[a] == d) && (last_slot[b] != i || deg[b] == d)) step(i + 1);
  };
  step(0);
}

}  // namespace detail

/// Every d-regular simple graph on m vertices, one canonical representative
/// per isomorphism class, ordered by canonical graph6 string.
///
/// Degrees above (m-1)/2 are generated as complements of the
/// (m-1-d)-regular graphs, which is much cheaper.
inline std::vector<Graph> enumerate_regular_graphs(int m, int d) {
  if (m <= 0 || d < 0 || d >= m) throw std::invalid_argument("need 0 <= d < m");
  if ((m * d) % 2 != 0) throw std::invalid_argument("m * d must be even");
  if (m > kMaxCanonicalOrder) throw std::invalid_argument("order too large");

  if (2 * d > m - 1) {
    std::map<std::string, Graph> seen;
    for (const Graph& g : enumerate_regular_graphs(m, m - 1 - d)) {
      Graph c = canonical_form(g.complement());
      seen.emplace(emit_graph6(c), c);
    }
    std::vector<Graph> out;
    for (auto& [key, g] : seen) out.push_back(g);
    return out;
  }

  std::map<std::string, Graph> seen;
  detail::generate_regular(m, d, [&](const std::vector<std::pair<Vertex, Vertex>>& pairs) {
    Graph c = canonical_form(Graph(m, pairs));
    seen.emplace(emit_graph6(c), std::move(c));
  });
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [key, g] : seen) out.push_back(g);
  return out;
}

}  // namespace vsplit
