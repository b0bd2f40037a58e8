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

// Fan-type structures relative to a colouring with one uncoloured edge:
// multifans, Kierstead paths, short-kites and full-deficiency pairs.

#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsplit/coloring.hpp"
#include "vsplit/graph.hpp"

namespace vsplit {

/// (r, r s_1, s_1, ..., r s_p, s_p); r s_1 is the uncoloured edge.
struct Multifan {
  Vertex center = 0;
  std::vector<Vertex> spokes;  // s_1 .. s_p

  [[nodiscard]] std::vector<Vertex> vertices() const {
    std::vector<Vertex> out{center};
    out.insert(out.end(), spokes.begin(), spokes.end());
    return out;
  }
};

/// (v_0, v_0 v_1, v_1, ..., v_p); v_0 v_1 is the uncoloured edge.
struct KiersteadPath {
  std::vector<Vertex> vertices;

  [[nodiscard]] int edge_count() const { return static_cast<int>(vertices.size()) - 1; }
};

/// 4-cycle a-b-u-c-a with pendant edges u-x and u-y.
struct ShortKite {
  Vertex a = 0, b = 0, c = 0, u = 0, x = 0, y = 0;

  friend bool operator==(const ShortKite&, const ShortKite&) = default;
};

/// Adjacent (u, v) with d(u) + d(v) = max_degree + 2.
struct FullDeficiencyPair {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const FullDeficiencyPair&, const FullDeficiencyPair&) = default;
};

inline std::string to_string(const std::vector<Vertex>& vs) {
  std::string out = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + ")";
}

namespace detail {

inline bool all_distinct(std::vector<Vertex> vs) {
  std::sort(vs.begin(), vs.end());
  return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
}

inline bool is_uncolored_edge(const EdgeColoring& phi, Vertex a, Vertex b) {
  const auto id = phi.graph().edge_id(a, b);
  if (!id || phi.color(*id) != kUncolored) return false;
  return phi.uncolored_edges().size() == 1;
}

}  // namespace detail

/// Checks distinctness, that r s_1 is the single uncoloured edge, that every
/// r s_i is an edge, and condition (F1).
inline bool is_multifan(const EdgeColoring& phi, const Multifan& f) {
  const Graph& g = phi.graph();
  if (f.spokes.empty() || !g.contains(f.center)) return false;
  if (!detail::all_distinct(f.vertices())) return false;
  for (Vertex s : f.spokes)
    if (!g.adjacent(f.center, s)) return false;
  if (!detail::is_uncolored_edge(phi, f.center, f.spokes[0])) return false;
  ColorSet seen = phi.missing(f.spokes[0]);
  for (std::size_t i = 1; i < f.spokes.size(); ++i) {
    const Color c = phi.color(f.center, f.spokes[i]);
    if (!seen.contains(c)) return false;
    seen = seen | phi.missing(f.spokes[i]);
  }
  return true;
}

/// Checks distinctness, path edges, v_0 v_1 the single uncoloured edge, and
/// condition (K1).
inline bool is_kierstead_path(const EdgeColoring& phi, const KiersteadPath& k) {
  const Graph& g = phi.graph();
  const auto& v = k.vertices;
  if (v.size() < 2) return false;
  for (Vertex x : v)
    if (!g.contains(x)) return false;
  if (!detail::all_distinct(v)) return false;
  for (std::size_t i = 0; i + 1 < v.size(); ++i)
    if (!g.adjacent(v[i], v[i + 1])) return false;
  if (!detail::is_uncolored_edge(phi, v[0], v[1])) return false;
  ColorSet seen = phi.missing(v[0]);
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    const Color c = phi.color(v[i], v[i + 1]);
    if (!seen.contains(c)) return false;
    seen = seen | phi.missing(v[i]);
  }
  return true;
}

/// Greedy maximal multifan at `center` along the uncoloured edge: repeatedly
/// append the lowest-id neighbour whose edge colour is missing at some spoke
/// already in the fan.
inline Multifan build_maximal_multifan(const EdgeColoring& phi, Vertex center) {
  const auto unc = phi.uncolored_edge();
  if (!unc) throw std::invalid_argument("multifan needs an uncoloured edge");
  const Edge e = phi.graph().edge(*unc);
  if (!e.has(center)) throw std::invalid_argument("multifan centre is not on the uncoloured edge");
  Multifan f{center, {e.other(center)}};
  ColorSet seen = phi.missing(e.other(center));
  std::vector<char> in(phi.graph().order(), 0);
  in[center] = in[e.other(center)] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (Vertex w : phi.graph().neighbors(center)) {
      if (in[w] || !seen.contains(phi.color(center, w))) continue;
      f.spokes.push_back(w);
      in[w] = 1;
      seen = seen | phi.missing(w);
      grew = true;
      break;
    }
  }
  return f;
}

/// All Kierstead paths with `edges` edges (1..4) starting with the uncoloured
/// edge, in both orientations, in lexicographic vertex order.
inline std::vector<KiersteadPath> enumerate_kierstead_paths(const EdgeColoring& phi, int edges = 3) {
  if (edges < 1 || edges > 4) throw std::invalid_argument("supported Kierstead path lengths are 1..4 edges");
  const auto unc = phi.uncolored_edge();
  if (!unc) throw std::invalid_argument("Kierstead paths need an uncoloured edge");
  const Graph& g = phi.graph();
  const Edge e = g.edge(*unc);
  std::vector<KiersteadPath> out;
  std::vector<Vertex> path;
  auto extend = [&](auto&& self, ColorSet seen) -> void {
    if (static_cast<int>(path.size()) == edges + 1) {
      out.push_back({path});
      return;
    }
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (std::find(path.begin(), path.end(), w) != path.end()) continue;
      if (!seen.contains(phi.color(last, w))) continue;
      path.push_back(w);
      self(self, seen | phi.missing(last));
      path.pop_back();
    }
  };
  for (auto [v0, v1] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
    path = {v0, v1};
    // (K1) for edge v_i v_{i+1} ranges over v_0..v_{i-1}; `seen` holds those.
    extend(extend, phi.missing(v0));
  }
  std::sort(out.begin(), out.end(),
            [](const KiersteadPath& a, const KiersteadPath& b) { return a.vertices < b.vertices; });
  return out;
}

inline bool is_short_kite(const Graph& g, const ShortKite& k) {
  const std::vector<Vertex> vs{k.a, k.b, k.c, k.u, k.x, k.y};
  for (Vertex v : vs)
    if (!g.contains(v)) return false;
  if (!detail::all_distinct(vs)) return false;
  return g.adjacent(k.a, k.b) && g.adjacent(k.b, k.u) && g.adjacent(k.u, k.c) &&
         g.adjacent(k.c, k.a) && g.adjacent(k.u, k.x) && g.adjacent(k.u, k.y);
}

/// Every labelled short-kite subgraph (not necessarily induced), ordered by
/// (a, b, c, u, x, y). Labelled means that b/c and x/y are ordered roles, so
/// each unlabelled copy appears several times.
inline std::vector<ShortKite> find_short_kites(const Graph& g) {
  std::vector<ShortKite> out;
  for (Vertex a = 0; a < g.order(); ++a)
    for (Vertex b : g.neighbors(a))
      for (Vertex c : g.neighbors(a)) {
        if (c == b) continue;
        for (Vertex u : g.neighbors(b)) {
          if (u == a || u == c || !g.adjacent(u, c)) continue;
          for (Vertex x : g.neighbors(u)) {
            if (x == a || x == b || x == c) continue;
            for (Vertex y : g.neighbors(u)) {
              if (y == a || y == b || y == c || y == x) continue;
              out.push_back({a, b, c, u, x, y});
            }
          }
        }
      }
  return out;
}

/// Ordered pairs (u, v) with uv an edge and d(u) + d(v) = max_degree + 2;
/// both orientations are listed.
inline std::vector<FullDeficiencyPair> find_full_deficiency_pairs(const Graph& g) {
  std::vector<FullDeficiencyPair> out;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.neighbors(u))
      if (g.degree(u) + g.degree(v) == g.max_degree() + 2) out.push_back({u, v});
  return out;
}

}  // namespace vsplit
