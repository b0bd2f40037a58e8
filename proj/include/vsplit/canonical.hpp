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

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsplit/graph.hpp"
#include "vsplit/graph6.hpp"

namespace vsplit {

inline constexpr int kMaxCanonicalOrder = 64;

namespace detail {

using Row = std::uint64_t;

inline std::vector<Row> adjacency_rows(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder)
    throw std::invalid_argument("canonical labelling supports at most 64 vertices");
  std::vector<Row> rows(g.order(), 0);
  for (const Edge& e : g.edges()) {
    rows[e.u] |= Row{1} << e.v;
    rows[e.v] |= Row{1} << e.u;
  }
  return rows;
}

// Exhaustive search over vertex orderings for the one whose graph6 bit string
// (column order) is lexicographically largest. Columns are fixed one vertex at
// a time, so any prefix already smaller than the incumbent is cut. Twins
// (vertices whose neighbourhoods agree outside each other) are exchanged by an
// automorphism, so only the lowest-id twin is branched on at each depth.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : n_(g.order()), rows_(adjacency_rows(g)) {
    for (Vertex a = 0; a < n_; ++a)
      for (Vertex b = 0; b < n_; ++b) {
        const Row mask = ~((Row{1} << a) | (Row{1} << b));
        if (a != b && (rows_[a] & mask) == (rows_[b] & mask)) twins_[a] |= Row{1} << b;
      }
  }

  std::vector<Vertex> run() {
    order_.assign(n_, -1);
    best_order_.clear();
    best_cols_.assign(n_, 0);
    cur_cols_.assign(n_, 0);
    if (n_ == 0) return {};
    recurse(0, 0, false);
    return best_order_;
  }

 private:
  // `equal`: the placed prefix matches the incumbent's prefix; otherwise it
  // is strictly larger (or there is no incumbent yet).
  void recurse(int depth, Row placed, bool equal) {
    if (depth == n_) {
      if (!equal) {
        best_order_ = order_;
        best_cols_ = cur_cols_;
        ++updates_;
      }
      return;
    }
    Row tried = 0;
    for (Vertex v = 0; v < n_; ++v) {
      if (placed >> v & 1) continue;
      if (twins_[v] & tried) continue;
      tried |= Row{1} << v;
      // Column `depth`: bits x(i, depth) for i < depth, most significant first.
      Row col = 0;
      for (int i = 0; i < depth; ++i) col = (col << 1) | (rows_[order_[i]] >> v & 1);
      bool child_equal = false;
      if (equal) {
        if (col < best_cols_[depth]) continue;
        child_equal = col == best_cols_[depth];
      }
      order_[depth] = v;
      cur_cols_[depth] = col;
      const long before = updates_;
      recurse(depth + 1, placed | (Row{1} << v), child_equal);
      // A new incumbent found below shares this prefix.
      if (updates_ != before) equal = true;
    }
  }

  int n_;
  std::vector<Row> rows_;
  Row twins_[kMaxCanonicalOrder] = {};
  std::vector<Vertex> order_;
  std::vector<Vertex> best_order_;
  std::vector<Row> best_cols_;
  std::vector<Row> cur_cols_;
  long updates_ = 0;
};

}  // namespace detail

/// `perm[v]` is the canonical position of vertex v.
inline std::vector<Vertex> canonical_labeling(const Graph& g) {
  const std::vector<Vertex> order = detail::CanonicalSearch(g).run();
  std::vector<Vertex> perm(g.order());
  for (int pos = 0; pos < g.order(); ++pos) perm[order[pos]] = pos;
  return perm;
}

inline Graph canonical_form(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

/// graph6 string of the canonical form; equal iff the graphs are isomorphic.
inline std::string canonical_graph6(const Graph& g) { return emit_graph6(canonical_form(g)); }

/// Calls `visit(perm)` for every automorphism (perm[v] = image of v) in
/// lexicographic order of the image sequence. Stops early when `visit`
/// returns false.
inline void for_each_automorphism(const Graph& g,
                                  const std::function<bool(const std::vector<Vertex>&)>& visit) {
  const int n = g.order();
  const auto rows = detail::adjacency_rows(g);
  std::vector<Vertex> image(n, -1);
  std::uint64_t used = 0;
  bool stop = false;
  std::function<void(int)> extend = [&](int v) {
    if (stop) return;
    if (v == n) {
      if (!visit(image)) stop = true;
      return;
    }
    for (Vertex w = 0; w < n && !stop; ++w) {
      if (used >> w & 1) continue;
      if (g.degree(w) != g.degree(v)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u)
        ok = ((rows[v] >> u & 1) == (rows[w] >> image[u] & 1));
      if (!ok) continue;
      image[v] = w;
      used |= std::uint64_t{1} << w;
      extend(v + 1);
      used &= ~(std::uint64_t{1} << w);
      image[v] = -1;
    }
  };
  extend(0);
}

}  // namespace vsplit
