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

#include <bit>
#include <cstdint>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsplit/graph.hpp"

namespace vsplit {

using Color = int;

/// Reserved value for an edge without a colour.
inline constexpr Color kUncolored = 0;

/// Largest palette a ColorSet can hold.
inline constexpr int kMaxColors = 63;

/// Subset of the palette [1, k] as a bitmask (bit c set iff colour c present).
class ColorSet {
 public:
  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits) {}
  ColorSet(std::initializer_list<Color> colors) {
    for (Color c : colors) insert(c);
  }

  /// All of [1, k].
  static constexpr ColorSet palette(int k) {
    return ColorSet(k == 0 ? 0 : ((~std::uint64_t{0}) >> (64 - k)) << 1);
  }

  [[nodiscard]] constexpr bool contains(Color c) const { return c > 0 && c <= kMaxColors && (bits_ >> c & 1); }
  constexpr void insert(Color c) { bits_ |= std::uint64_t{1} << c; }
  constexpr void erase(Color c) { bits_ &= ~(std::uint64_t{1} << c); }
  [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }

  /// Smallest colour in the set; nullopt when empty.
  [[nodiscard]] constexpr std::optional<Color> min() const {
    if (bits_ == 0) return std::nullopt;
    return std::countr_zero(bits_);
  }

  [[nodiscard]] std::vector<Color> to_vector() const {
    std::vector<Color> out;
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr ColorSet operator|(ColorSet a, ColorSet b) { return ColorSet(a.bits_ | b.bits_); }
  friend constexpr ColorSet operator&(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & b.bits_); }
  friend constexpr ColorSet operator-(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ColorSet, ColorSet) = default;

  /// True iff this is a subset of `other`.
  [[nodiscard]] constexpr bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }

 private:
  std::uint64_t bits_ = 0;
};

inline std::string to_string(ColorSet s) {
  std::string out = "{";
  bool first = true;
  for (Color c : s.to_vector()) {
    if (!first) out += ",";
    out += std::to_string(c);
    first = false;
  }
  return out + "}";
}

class ColoringError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Proper (partial) edge colouring of a graph with palette [1, k].
///
/// Properness is an invariant: every mutator rejects an assignment that would
/// put the same colour on two edges at a vertex. Colourings used in the
/// lemma machinery have at most one uncoloured edge (phi in C^k(G - e));
/// intermediate states of the colouring algorithms may have more.
class EdgeColoring {
 public:
  EdgeColoring(Graph g, int k)
      : graph_(std::move(g)),
        k_(k),
        color_(graph_.size(), kUncolored),
        at_(static_cast<std::size_t>(graph_.order()) * (k + 1), -1),
        present_(graph_.order()) {
    if (k < 0 || k > kMaxColors) throw std::invalid_argument("palette size out of range");
  }

  /// Builds from one colour per edge id (kUncolored allowed); throws
  /// ColoringError when improper.
  static EdgeColoring from_colors(Graph g, int k, const std::vector<Color>& colors) {
    if (static_cast<int>(colors.size()) != g.size())
      throw std::invalid_argument("colour vector size does not match edge count");
    EdgeColoring phi(std::move(g), k);
    for (EdgeId e = 0; e < static_cast<EdgeId>(colors.size()); ++e)
      if (colors[e] != kUncolored) phi.assign(e, colors[e]);
    return phi;
  }

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] int palette_size() const { return k_; }
  [[nodiscard]] Color color(EdgeId e) const { return color_.at(e); }
  [[nodiscard]] Color color(Vertex a, Vertex b) const { return color_[graph_.require_edge(a, b)]; }
  [[nodiscard]] const std::vector<Color>& colors() const { return color_; }

  /// Edge at `v` carrying colour `c`, if any.
  [[nodiscard]] std::optional<EdgeId> edge_at(Vertex v, Color c) const {
    if (c <= 0 || c > k_) return std::nullopt;
    const EdgeId e = at_[index(v, c)];
    if (e < 0) return std::nullopt;
    return e;
  }

  [[nodiscard]] ColorSet present(Vertex v) const { return present_.at(v); }
  [[nodiscard]] ColorSet missing(Vertex v) const { return ColorSet::palette(k_) - present_.at(v); }

  /// Union of missing sets.
  [[nodiscard]] ColorSet missing(std::span<const Vertex> vs) const {
    ColorSet out;
    for (Vertex v : vs) out = out | missing(v);
    return out;
  }

  [[nodiscard]] std::vector<EdgeId> uncolored_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 0; e < static_cast<EdgeId>(color_.size()); ++e)
      if (color_[e] == kUncolored) out.push_back(e);
    return out;
  }

  /// The designated uncoloured edge; nullopt for a full colouring. Throws
  /// ColoringError if several edges are uncoloured.
  [[nodiscard]] std::optional<EdgeId> uncolored_edge() const {
    auto all = uncolored_edges();
    if (all.size() > 1) throw ColoringError("colouring has more than one uncoloured edge");
    if (all.empty()) return std::nullopt;
    return all.front();
  }

  [[nodiscard]] bool is_complete() const { return uncolored_edges().empty(); }

  /// Gives `e` colour `c`. `e` must be uncoloured and `c` missing at both ends.
  void assign(EdgeId e, Color c) {
    if (c <= 0 || c > k_) throw ColoringError("colour " + std::to_string(c) + " outside palette");
    if (color_.at(e) != kUncolored) throw ColoringError("edge already coloured");
    const Edge ed = graph_.edge(e);
    if (present_[ed.u].contains(c) || present_[ed.v].contains(c))
      throw ColoringError("colour " + std::to_string(c) + " already present at an endpoint of " +
                          std::to_string(ed.u) + "-" + std::to_string(ed.v));
    color_[e] = c;
    at_[index(ed.u, c)] = e;
    at_[index(ed.v, c)] = e;
    present_[ed.u].insert(c);
    present_[ed.v].insert(c);
  }

  void clear(EdgeId e) {
    const Color c = color_.at(e);
    if (c == kUncolored) return;
    const Edge ed = graph_.edge(e);
    color_[e] = kUncolored;
    at_[index(ed.u, c)] = -1;
    at_[index(ed.v, c)] = -1;
    present_[ed.u].erase(c);
    present_[ed.v].erase(c);
  }

  /// Exchanges colours a and b on the given edges simultaneously.
  void swap_on(std::span<const EdgeId> edges, Color a, Color b) {
    std::vector<Color> target;
    target.reserve(edges.size());
    for (EdgeId e : edges) {
      const Color c = color_.at(e);
      if (c != a && c != b) throw ColoringError("swap edge carries neither swap colour");
      target.push_back(c == a ? b : a);
    }
    for (EdgeId e : edges) clear(e);
    for (std::size_t i = 0; i < edges.size(); ++i) assign(edges[i], target[i]);
  }

  /// Independent full scan: no two edges at a vertex share a colour and all
  /// colours lie in [1, k]. Does not trust the incremental tables.
  [[nodiscard]] bool verify_proper() const {
    std::vector<std::vector<char>> seen(graph_.order(), std::vector<char>(k_ + 1, 0));
    for (EdgeId e = 0; e < static_cast<EdgeId>(color_.size()); ++e) {
      const Color c = color_[e];
      if (c == kUncolored) continue;
      if (c < 0 || c > k_) return false;
      const Edge ed = graph_.edge(e);
      if (seen[ed.u][c] || seen[ed.v][c]) return false;
      seen[ed.u][c] = seen[ed.v][c] = 1;
    }
    return true;
  }

  friend bool operator==(const EdgeColoring& a, const EdgeColoring& b) {
    return a.k_ == b.k_ && a.graph_ == b.graph_ && a.color_ == b.color_;
  }

 private:
  [[nodiscard]] std::size_t index(Vertex v, Color c) const {
    return static_cast<std::size_t>(v) * (k_ + 1) + c;
  }

  Graph graph_;
  int k_;
  std::vector<Color> color_;
  std::vector<EdgeId> at_;
  std::vector<ColorSet> present_;
};

/// Pairwise-disjoint missing sets over `xs` (duplicates ignored).
inline bool is_elementary(const EdgeColoring& phi, std::span<const Vertex> xs) {
  ColorSet seen;
  std::vector<Vertex> distinct(xs.begin(), xs.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (Vertex v : distinct) {
    const ColorSet m = phi.missing(v);
    if (!(seen & m).empty()) return false;
    seen = seen | m;
  }
  return true;
}

inline bool is_elementary(const EdgeColoring& phi, std::initializer_list<Vertex> xs) {
  return is_elementary(phi, std::span<const Vertex>(xs.begin(), xs.end()));
}

/// For each colour c in [1, k], the number of vertices missing c (index 0
/// unused). For a full colouring each count has the parity of n.
inline std::vector<int> parity_census(const EdgeColoring& phi) {
  std::vector<int> counts(phi.palette_size() + 1, 0);
  for (Vertex v = 0; v < phi.graph().order(); ++v)
    for (Color c : phi.missing(v).to_vector()) ++counts[c];
  return counts;
}

/// True iff every entry of parity_census has the parity of the order.
inline bool parity_holds(const EdgeColoring& phi) {
  const auto counts = parity_census(phi);
  const int n = phi.graph().order();
  for (std::size_t c = 1; c < counts.size(); ++c)
    if ((counts[c] - n) % 2 != 0) return false;
  return true;
}

// Text form: a header "k=<int> uncolored=<u,v|none>" followed by one
// "u v color" line per coloured edge, ordered by (u, v).

inline std::string serialize_coloring(const EdgeColoring& phi) {
  std::ostringstream out;
  const auto unc = phi.uncolored_edges();
  out << "k=" << phi.palette_size() << " uncolored=";
  if (unc.empty()) {
    out << "none";
  } else {
    for (std::size_t i = 0; i < unc.size(); ++i) {
      const Edge e = phi.graph().edge(unc[i]);
      out << (i ? ";" : "") << e.u << "," << e.v;
    }
  }
  out << "\n";
  for (EdgeId e = 0; e < phi.graph().size(); ++e) {
    if (phi.color(e) == kUncolored) continue;
    const Edge ed = phi.graph().edge(e);
    out << ed.u << " " << ed.v << " " << phi.color(e) << "\n";
  }
  return out.str();
}

/// Parses serialize_coloring output against a known host graph. Edges of `g`
/// absent from the listing must be exactly the declared uncoloured ones.
inline EdgeColoring parse_coloring(const Graph& g, std::istream& in) {
  std::string header;
  if (!std::getline(in, header)) throw ColoringError("missing colouring header");
  int k = -1;
  std::string unc;
  {
    std::istringstream hs(header);
    std::string kpart, upart;
    hs >> kpart >> upart;
    if (!kpart.starts_with("k=") || !upart.starts_with("uncolored="))
      throw ColoringError("malformed colouring header: " + header);
    try {
      k = std::stoi(kpart.substr(2));
    } catch (const std::exception&) {
      throw ColoringError("malformed palette size in header");
    }
    unc = upart.substr(10);
  }
  std::vector<EdgeId> declared;
  if (unc != "none") {
    std::istringstream us(unc);
    std::string item;
    while (std::getline(us, item, ';')) {
      const auto comma = item.find(',');
      if (comma == std::string::npos) throw ColoringError("malformed uncoloured edge " + item);
      const auto id = g.edge_id(std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1)));
      if (!id) throw ColoringError("declared uncoloured edge not in graph: " + item);
      declared.push_back(*id);
    }
  }
  EdgeColoring phi(g, k);
  std::string line;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    Vertex u = 0, v = 0;
    Color c = 0;
    if (!(ls >> u >> v >> c)) throw ColoringError("malformed colouring line " + std::to_string(lineno));
    const auto id = g.edge_id(u, v);
    if (!id) throw ColoringError("coloured edge not in graph at line " + std::to_string(lineno));
    phi.assign(*id, c);
  }
  std::sort(declared.begin(), declared.end());
  if (phi.uncolored_edges() != declared)
    throw ColoringError("uncoloured edges do not match the header");
  return phi;
}

}  // namespace vsplit
