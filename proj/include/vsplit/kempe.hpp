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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsplit/coloring.hpp"
#include "vsplit/graph.hpp"

namespace vsplit {

enum class ChainShape { kPath, kCycle };

/// A connected component of the subgraph spanned by colours alpha and beta.
///
/// For a path, `vertices` runs from one end to the other and `edges[i]` joins
/// vertices[i] and vertices[i+1]. For a cycle, `vertices` starts at the
/// queried vertex and `edges` has one more entry closing the cycle.
struct KempeChain {
  Color alpha = 0;
  Color beta = 0;
  ChainShape shape = ChainShape::kPath;
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  [[nodiscard]] bool contains(Vertex v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }
  [[nodiscard]] bool contains_edge(EdgeId e) const {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
  }
  [[nodiscard]] int position(Vertex v) const {
    auto it = std::find(vertices.begin(), vertices.end(), v);
    return it == vertices.end() ? -1 : static_cast<int>(it - vertices.begin());
  }
};

namespace detail {

inline void check_pair(const EdgeColoring& phi, Color alpha, Color beta) {
  if (alpha == beta) throw std::invalid_argument("chain colours must differ");
  const int k = phi.palette_size();
  if (alpha < 1 || alpha > k || beta < 1 || beta > k)
    throw std::invalid_argument("chain colour outside palette");
}

// Walks from `start` leaving by colour `first`, alternating with `second`,
// until the walk ends or returns to `start`. Appends to vertices/edges
// (start itself is not appended). Returns true if it closed a cycle.
inline bool walk(const EdgeColoring& phi, Vertex start, Color first, Color second,
                 std::vector<Vertex>& vertices, std::vector<EdgeId>& edges) {
  Vertex v = start;
  Color c = first;
  while (auto e = phi.edge_at(v, c)) {
    const Vertex w = phi.graph().edge(*e).other(v);
    edges.push_back(*e);
    if (w == start) return true;
    vertices.push_back(w);
    v = w;
    c = (c == first) ? second : first;
  }
  return false;
}

}  // namespace detail

/// The (alpha, beta)-chain containing `x`. A vertex missing both colours is
/// a single-vertex path.
inline KempeChain kempe_chain(const EdgeColoring& phi, Vertex x, Color alpha, Color beta) {
  detail::check_pair(phi, alpha, beta);
  KempeChain chain{alpha, beta, ChainShape::kPath, {}, {}};
  std::vector<Vertex> fwd_v;
  std::vector<EdgeId> fwd_e;
  // Leave x by alpha first; if that closes, it is a cycle.
  if (detail::walk(phi, x, alpha, beta, fwd_v, fwd_e)) {
    chain.shape = ChainShape::kCycle;
    chain.vertices.push_back(x);
    chain.vertices.insert(chain.vertices.end(), fwd_v.begin(), fwd_v.end());
    chain.edges = std::move(fwd_e);
    return chain;
  }
  std::vector<Vertex> back_v;
  std::vector<EdgeId> back_e;
  detail::walk(phi, x, beta, alpha, back_v, back_e);
  // Path: reverse(back) + x + fwd.
  chain.vertices.assign(back_v.rbegin(), back_v.rend());
  chain.vertices.push_back(x);
  chain.vertices.insert(chain.vertices.end(), fwd_v.begin(), fwd_v.end());
  chain.edges.assign(back_e.rbegin(), back_e.rend());
  chain.edges.insert(chain.edges.end(), fwd_e.begin(), fwd_e.end());
  return chain;
}

/// True iff x and y lie in the same (alpha, beta)-chain.
inline bool are_linked(const EdgeColoring& phi, Vertex x, Vertex y, Color alpha, Color beta) {
  if (x == y) return true;
  return kempe_chain(phi, x, alpha, beta).contains(y);
}

/// Kempe change: exchanges alpha and beta on the whole chain.
inline EdgeColoring kempe_swap(const EdgeColoring& phi, const KempeChain& chain) {
  EdgeColoring out = phi;
  out.swap_on(chain.edges, chain.alpha, chain.beta);
  return out;
}

/// Kempe change on the chain through `x`.
inline EdgeColoring kempe_swap_at(const EdgeColoring& phi, Vertex x, Color alpha, Color beta) {
  return kempe_swap(phi, kempe_chain(phi, x, alpha, beta));
}

class LinkageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The segment of the (alpha, beta)-path between x and y, ordered from x.
/// Throws LinkageError when x and y are unlinked or the chain is a cycle.
inline KempeChain subchain(const EdgeColoring& phi, Vertex x, Vertex y, Color alpha, Color beta) {
  const KempeChain chain = kempe_chain(phi, x, alpha, beta);
  const int py = chain.position(y);
  if (py < 0)
    throw LinkageError("vertices " + std::to_string(x) + " and " + std::to_string(y) + " are (" +
                       std::to_string(alpha) + "," + std::to_string(beta) + ")-unlinked");
  if (chain.shape == ChainShape::kCycle)
    throw LinkageError("(" + std::to_string(alpha) + "," + std::to_string(beta) +
                       ")-chain through " + std::to_string(x) + " is a cycle");
  const int px = chain.position(x);
  KempeChain seg{alpha, beta, ChainShape::kPath, {}, {}};
  const int step = px <= py ? 1 : -1;
  for (int i = px; i != py + step; i += step) seg.vertices.push_back(chain.vertices[i]);
  for (int i = px; i != py; i += step) seg.edges.push_back(chain.edges[step > 0 ? i : i - 1]);
  return seg;
}

/// Exchanges alpha and beta on the segment between x and y only.
inline EdgeColoring subchain_swap(const EdgeColoring& phi, Vertex x, Vertex y, Color alpha, Color beta) {
  const KempeChain seg = subchain(phi, x, y, alpha, beta);
  EdgeColoring out = phi;
  // The result must stay proper; assign() enforces it at the segment ends.
  try {
    out.swap_on(seg.edges, alpha, beta);
  } catch (const ColoringError& e) {
    throw LinkageError(std::string("subchain swap breaks properness: ") + e.what());
  }
  return out;
}

/// The chain segment that starts at `x` and runs to the end of the path.
///
/// When x is an end of its chain the segment is the whole chain. When x is
/// interior the direction is ambiguous and the caller must name the first
/// edge; throws LinkageError otherwise, and for cycles.
inline KempeChain chain_from(const EdgeColoring& phi, Vertex x, Color alpha, Color beta,
                             std::optional<EdgeId> first_edge = std::nullopt) {
  const KempeChain chain = kempe_chain(phi, x, alpha, beta);
  if (chain.shape == ChainShape::kCycle)
    throw LinkageError("chain from " + std::to_string(x) + " is a cycle");
  const int px = chain.position(x);
  const int last = static_cast<int>(chain.vertices.size()) - 1;
  bool forward;
  if (px == 0) {
    forward = true;
  } else if (px == last) {
    forward = false;
  } else {
    if (!first_edge)
      throw LinkageError("vertex " + std::to_string(x) + " is interior to its chain; name the first edge");
    if (chain.edges[px] == *first_edge) {
      forward = true;
    } else if (chain.edges[px - 1] == *first_edge) {
      forward = false;
    } else {
      throw LinkageError("named first edge is not on the chain at " + std::to_string(x));
    }
  }
  if (px == 0 && last == 0) return chain;
  if (first_edge && (px == 0 || px == last)) {
    const EdgeId only = px == 0 ? chain.edges.front() : chain.edges.back();
    if (only != *first_edge) throw LinkageError("named first edge is not on the chain at " + std::to_string(x));
  }
  return subchain(phi, x, chain.vertices[forward ? last : 0], alpha, beta);
}

/// `uv: current -> tau`. tau must be missing at both ends once uv's current
/// colour is removed; the edge may start uncoloured.
inline EdgeColoring recolor_edge(const EdgeColoring& phi, EdgeId e, Color tau) {
  EdgeColoring out = phi;
  const Color old = out.color(e);
  if (old == tau) return out;
  out.clear(e);
  out.assign(e, tau);
  return out;
}

/// Colours the designated uncoloured edge with eta, giving a full colouring.
inline EdgeColoring color_uncolored(const EdgeColoring& phi, Color eta) {
  const auto e = phi.uncolored_edge();
  if (!e) throw ColoringError("colouring has no uncoloured edge");
  EdgeColoring out = phi;
  out.assign(*e, eta);
  return out;
}

}  // namespace vsplit
