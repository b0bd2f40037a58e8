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

// Exact edge k-colouring by backtracking.
//
// Branching picks the uncoloured edge with the fewest distinct feasible
// colours (ties: larger endpoint degree sum, then lower id). Colours not used
// so far are interchangeable, so only the lowest unused one is tried; each
// colouring is therefore produced once per renaming of colours. A node is cut
// when, summed over colours, the largest matchings the remaining edges could
// still receive cannot cover them, or when some vertex has fewer feasible
// colours than remaining edges.

#pragma once

#include <bit>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "vsplit/coloring.hpp"
#include "vsplit/graph.hpp"

namespace vsplit {

enum class Decision { kColorable, kNotColorable, kUndecided };

inline const char* to_string(Decision d) {
  switch (d) {
    case Decision::kColorable: return "colorable";
    case Decision::kNotColorable: return "not-colorable";
    case Decision::kUndecided: return "undecided";
  }
  return "?";
}

struct SolveOptions {
  /// Wall-clock budget for one call; exceeding it yields kUndecided.
  std::chrono::milliseconds budget{60000};
};

struct SolveResult {
  Decision decision = Decision::kUndecided;
  std::optional<EdgeColoring> coloring;
  long long nodes = 0;
};

namespace detail {

class ColoringSearch {
 public:
  using Visit = std::function<bool(const EdgeColoring&)>;

  ColoringSearch(const Graph& g, int k, std::optional<EdgeId> skip, SolveOptions options)
      : g_(g), k_(k), skip_(skip), options_(options) {
    if (g.order() > 64) throw std::invalid_argument("exact solver supports at most 64 vertices");
    if (k < 0 || k > kMaxColors) throw std::invalid_argument("palette size out of range");
    if (skip && (*skip < 0 || *skip >= g.size())) throw std::invalid_argument("skipped edge out of range");
    const int m = g.size();
    color_.assign(m, kUncolored);
    remaining_.assign(m, 1);
    if (skip) remaining_[*skip] = 0;
    remaining_count_ = m - (skip ? 1 : 0);
    used_.assign(g.order(), 0);
    rem_deg_.assign(g.order(), 0);
    ends_.resize(m);
    incident_.resize(g.order());
    degree_sum_.resize(m);
    for (EdgeId e = 0; e < m; ++e) {
      const Edge ed = g.edge(e);
      ends_[e] = {ed.u, ed.v};
      degree_sum_[e] = g.degree(ed.u) + g.degree(ed.v);
      incident_[ed.u].push_back(e);
      incident_[ed.v].push_back(e);
      if (remaining_[e]) {
        ++rem_deg_[ed.u];
        ++rem_deg_[ed.v];
      }
    }
    palette_ = ColorSet::palette(k).bits();
  }

  // Runs until the first colouring (visit returns false) or exhaustion.
  Decision run(const Visit& visit) {
    visit_ = &visit;
    start_ = std::chrono::steady_clock::now();
    found_ = false;
    stopped_ = false;
    timed_out_ = false;
    recurse(0);
    if (timed_out_) return Decision::kUndecided;
    return found_ ? Decision::kColorable : Decision::kNotColorable;
  }

  [[nodiscard]] long long nodes() const { return nodes_; }

 private:
  [[nodiscard]] std::uint64_t available(EdgeId e) const {
    return palette_ & ~(used_[ends_[e].first] | used_[ends_[e].second]);
  }

  [[nodiscard]] bool bound_ok() const {
    const int n = g_.order();
    // Per colour c: vertices that miss c and have a remaining edge to another
    // vertex missing c. A colour class adds at most half of them.
    std::uint64_t touch[kMaxColors + 1] = {};
    for (EdgeId e = 0; e < static_cast<EdgeId>(color_.size()); ++e) {
      if (!remaining_[e]) continue;
      const auto [a, b] = ends_[e];
      std::uint64_t common = palette_ & ~(used_[a] | used_[b]);
      for (; common; common &= common - 1) {
        const int c = std::countr_zero(common);
        touch[c] |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
      }
    }
    int capacity = 0;
    for (int c = 1; c <= k_; ++c) capacity += std::popcount(touch[c]) / 2;
    if (capacity < remaining_count_) return false;
    // Per vertex: the colours usable on its remaining edges must be enough.
    for (Vertex v = 0; v < n; ++v) {
      if (rem_deg_[v] == 0) continue;
      std::uint64_t avail_union = 0;
      for (EdgeId e : incident_[v])
        if (remaining_[e]) avail_union |= available(e);
      if (std::popcount(avail_union) < rem_deg_[v]) return false;
    }
    return true;
  }

  void emit() {
    EdgeColoring phi(g_, k_);
    for (EdgeId e = 0; e < static_cast<EdgeId>(color_.size()); ++e)
      if (color_[e] != kUncolored) phi.assign(e, color_[e]);
    found_ = true;
    if (!(*visit_)(phi)) stopped_ = true;
  }

  void recurse(int max_used) {
    if (stopped_ || timed_out_) return;
    // the clock is read at the root and every 1024 nodes after it
    if ((nodes_++ & 1023) == 0 && std::chrono::steady_clock::now() - start_ >= options_.budget) {
      timed_out_ = true;
      return;
    }
    if (remaining_count_ == 0) {
      emit();
      return;
    }
    if (!bound_ok()) return;

    const std::uint64_t used_colors = max_used == 0 ? 0 : ColorSet::palette(max_used).bits();
    EdgeId best = -1;
    int best_options = 1 << 30;
    for (EdgeId e = 0; e < static_cast<EdgeId>(color_.size()); ++e) {
      if (!remaining_[e]) continue;
      const std::uint64_t avail = available(e);
      const int options = std::popcount(avail & used_colors) + ((avail & ~used_colors) ? 1 : 0);
      if (options == 0) return;
      if (options < best_options ||
          (options == best_options && degree_sum_[e] > degree_sum_[best])) {
        best = e;
        best_options = options;
      }
    }

    const auto [a, b] = ends_[best];
    std::uint64_t candidates = available(best);
    if (max_used < k_) candidates &= used_colors | (std::uint64_t{1} << (max_used + 1));
    remaining_[best] = 0;
    --remaining_count_;
    --rem_deg_[a];
    --rem_deg_[b];
    for (; candidates && !stopped_ && !timed_out_; candidates &= candidates - 1) {
      const int c = std::countr_zero(candidates);
      const std::uint64_t bit = std::uint64_t{1} << c;
      color_[best] = c;
      used_[a] |= bit;
      used_[b] |= bit;
      recurse(std::max(max_used, c));
      used_[a] &= ~bit;
      used_[b] &= ~bit;
    }
    color_[best] = kUncolored;
    remaining_[best] = 1;
    ++remaining_count_;
    ++rem_deg_[a];
    ++rem_deg_[b];
  }

  const Graph& g_;
  int k_;
  std::optional<EdgeId> skip_;
  SolveOptions options_;
  std::uint64_t palette_ = 0;
  std::vector<Color> color_;
  std::vector<char> remaining_;
  int remaining_count_ = 0;
  std::vector<std::uint64_t> used_;
  std::vector<int> rem_deg_;
  std::vector<std::pair<Vertex, Vertex>> ends_;
  std::vector<int> degree_sum_;
  std::vector<std::vector<EdgeId>> incident_;
  const Visit* visit_ = nullptr;
  std::chrono::steady_clock::time_point start_;
  long long nodes_ = 0;
  bool found_ = false;
  bool stopped_ = false;
  bool timed_out_ = false;
};

}  // namespace detail

/// Decides whether `g` (minus `skip`, if given) has a proper edge
/// k-colouring, returning one when it does. The skipped edge stays
/// uncoloured in the returned colouring.
inline SolveResult find_coloring(const Graph& g, int k, std::optional<EdgeId> skip = std::nullopt,
                                 SolveOptions options = {}) {
  detail::ColoringSearch search(g, k, skip, options);
  SolveResult result;
  result.decision = search.run([&](const EdgeColoring& phi) {
    result.coloring = phi;
    return false;
  });
  result.nodes = search.nodes();
  return result;
}

/// Exact test for a max_degree-colouring of `g` (minus `skip`).
inline SolveResult find_delta_coloring(const Graph& g, std::optional<EdgeId> skip = std::nullopt,
                                       SolveOptions options = {}) {
  return find_coloring(g, g.max_degree(), skip, options);
}

/// Calls `visit` for every proper k-colouring of g minus `skip`, one per
/// renaming of colours, in deterministic order, until it returns false.
/// Returns kUndecided if the budget ran out first.
inline Decision enumerate_colorings(const Graph& g, int k, std::optional<EdgeId> skip,
                                    const std::function<bool(const EdgeColoring&)>& visit,
                                    SolveOptions options = {}) {
  detail::ColoringSearch search(g, k, skip, options);
  return search.run(visit);
}

enum class EdgeClass { kClass1, kClass2 };

struct ChromaticIndex {
  Decision decision = Decision::kUndecided;  // of the max_degree-colouring test
  int value = 0;                             // meaningful unless undecided
  std::optional<EdgeColoring> witness;       // a max_degree-colouring for class 1

  [[nodiscard]] bool decided() const { return decision != Decision::kUndecided; }
  [[nodiscard]] EdgeClass edge_class() const {
    return decision == Decision::kColorable ? EdgeClass::kClass1 : EdgeClass::kClass2;
  }
};

/// chi'(g) in {max_degree, max_degree + 1}, or undecided on budget overrun.
inline ChromaticIndex chromatic_index(const Graph& g, SolveOptions options = {}) {
  const int delta = g.max_degree();
  ChromaticIndex out;
  SolveResult r = find_coloring(g, delta, std::nullopt, options);
  out.decision = r.decision;
  out.value = r.decision == Decision::kColorable ? delta : delta + 1;
  out.witness = std::move(r.coloring);
  return out;
}

/// kClass1 / kClass2; nullopt when undecided within budget.
inline std::optional<EdgeClass> classify(const Graph& g, SolveOptions options = {}) {
  const ChromaticIndex ci = chromatic_index(g, options);
  if (!ci.decided()) return std::nullopt;
  return ci.edge_class();
}

}  // namespace vsplit
