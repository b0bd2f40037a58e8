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

#include <vector>

#include "vsplit/coloring.hpp"
#include "vsplit/kempe.hpp"

namespace vsplit {

namespace detail {

// Fan at u starting with the uncoloured edge u-v: a sequence of distinct
// neighbours f[0] = v, f[1], ... with colour(u f[i+1]) missing at f[i].
inline std::vector<Vertex> maximal_fan(const EdgeColoring& phi, Vertex u, Vertex v) {
  const Graph& g = phi.graph();
  std::vector<Vertex> fan{v};
  std::vector<char> in_fan(g.order(), 0);
  in_fan[v] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    const ColorSet free_last = phi.missing(fan.back());
    for (Vertex w : g.neighbors(u)) {
      if (in_fan[w]) continue;
      const Color c = phi.color(u, w);
      if (c != kUncolored && free_last.contains(c)) {
        fan.push_back(w);
        in_fan[w] = 1;
        grew = true;
        break;
      }
    }
  }
  return fan;
}

inline bool fan_prefix_valid(const EdgeColoring& phi, Vertex u, const std::vector<Vertex>& fan, std::size_t upto) {
  for (std::size_t i = 0; i < upto; ++i) {
    const Color c = phi.color(u, fan[i + 1]);
    if (c == kUncolored || !phi.missing(fan[i]).contains(c)) return false;
  }
  return true;
}

}  // namespace detail

/// Proper colouring with max_degree + 1 colours by fan rotation and
/// Kempe path inversion (Misra and Gries). Edges are coloured in id order.
inline EdgeColoring vizing_color(const Graph& g) {
  const int k = g.max_degree() + 1;
  EdgeColoring phi(g, g.size() == 0 ? 0 : k);
  for (EdgeId id = 0; id < g.size(); ++id) {
    const Edge e = g.edge(id);
    const Vertex u = e.u;
    std::vector<Vertex> fan = detail::maximal_fan(phi, u, e.v);
    const Color c = *phi.missing(u).min();
    const Color d = *phi.missing(fan.back()).min();
    // Invert the cd-path from u so that d becomes free at u.
    if (c != d) {
      const KempeChain path = kempe_chain(phi, u, c, d);
      phi.swap_on(path.edges, c, d);
    }
    // First fan vertex w with d free whose prefix is still a fan.
    std::size_t w = fan.size() - 1;
    for (std::size_t i = 0; i < fan.size(); ++i) {
      if (phi.missing(fan[i]).contains(d) && detail::fan_prefix_valid(phi, u, fan, i)) {
        w = i;
        break;
      }
    }
    // Rotate: u f[i] takes the colour of u f[i+1] for i < w.
    for (std::size_t i = 0; i < w; ++i) {
      const EdgeId next = g.require_edge(u, fan[i + 1]);
      const Color col = phi.color(next);
      phi.clear(next);
      phi.assign(g.require_edge(u, fan[i]), col);
    }
    phi.assign(g.require_edge(u, fan[w]), d);
  }
  return phi;
}

}  // namespace vsplit
