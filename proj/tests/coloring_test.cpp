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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vsplit/coloring.hpp"
#include "vsplit/solver.hpp"
#include "vsplit/vizing.hpp"

namespace vsplit {
namespace {

// a=0, c=1, b=2: path a-c-b with ac=1, cb=2
EdgeColoring path_acb(int k = 2) {
  const Graph g(3, {{0, 1}, {1, 2}});
  EdgeColoring phi(g, k);
  phi.assign(g.require_edge(0, 1), 1);
  phi.assign(g.require_edge(1, 2), 2);
  return phi;
}

std::vector<int> as_ints(ColorSet s) { return s.to_vector(); }

TEST(ColorSet, BasicOperations) {
  ColorSet s{1, 3};
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(2));
  EXPECT_FALSE(s.contains(0));
  EXPECT_EQ(s.size(), 2);
  EXPECT_EQ(s.min(), 1);
  EXPECT_EQ(ColorSet::palette(4), (ColorSet{1, 2, 3, 4}));
  EXPECT_EQ(ColorSet::palette(0), ColorSet{});
  EXPECT_EQ(ColorSet::palette(63).size(), 63);
  EXPECT_EQ(ColorSet::palette(4) - s, (ColorSet{2, 4}));
  EXPECT_EQ(s | ColorSet{2}, (ColorSet{1, 2, 3}));
  EXPECT_EQ(s & (ColorSet{3, 4}), ColorSet{3});
  EXPECT_TRUE(ColorSet{3}.subset_of(s));
  EXPECT_FALSE(ColorSet{}.min().has_value());
  EXPECT_EQ(to_string(s), "{1,3}");
}

TEST(EdgeColoring, PresentAndMissingOnPath) {
  const EdgeColoring phi = path_acb();
  EXPECT_EQ(as_ints(phi.missing(0)), (std::vector<int>{2}));
  EXPECT_EQ(as_ints(phi.missing(2)), (std::vector<int>{1}));
  EXPECT_TRUE(phi.missing(1).empty());
  EXPECT_EQ(phi.present(1), (ColorSet{1, 2}));
  for (Vertex v = 0; v < 3; ++v) {
    EXPECT_TRUE((phi.present(v) & phi.missing(v)).empty());
    EXPECT_EQ(phi.present(v) | phi.missing(v), ColorSet::palette(2));
  }
}

TEST(EdgeColoring, MissingSizeAccountsForUncolouredEdge) {
  const Graph g = petersen_minus_vertex();
  const auto full = find_delta_coloring(g);
  ASSERT_FALSE(full.coloring.has_value());
  const auto r = find_delta_coloring(g, EdgeId{4});
  ASSERT_TRUE(r.coloring.has_value());
  const Edge e = g.edge(4);
  for (Vertex v = 0; v < g.order(); ++v)
    EXPECT_EQ(r.coloring->missing(v).size(), 3 - g.degree(v) + (e.has(v) ? 1 : 0));
}

TEST(EdgeColoring, RegularFullColouringMissesNothing) {
  const auto r = find_delta_coloring(complete(6));
  ASSERT_TRUE(r.coloring);
  for (Vertex v = 0; v < 6; ++v) EXPECT_TRUE(r.coloring->missing(v).empty());
}

TEST(EdgeColoring, RejectsImproperAssignments) {
  EdgeColoring phi = path_acb(3);
  EXPECT_THROW(phi.assign(0, 3), ColoringError);  // already coloured
  phi.clear(0);
  EXPECT_THROW(phi.assign(0, 2), ColoringError);  // 2 present at c
  EXPECT_THROW(phi.assign(0, 4), ColoringError);  // outside palette
  EXPECT_THROW(phi.assign(0, 0), ColoringError);
  phi.assign(0, 3);
  EXPECT_TRUE(phi.verify_proper());
  EXPECT_THROW(EdgeColoring::from_colors(Graph(3, {{0, 1}, {1, 2}}), 2, {1, 1}), ColoringError);
}

TEST(EdgeColoring, UncolouredEdgeQueries) {
  EdgeColoring phi = path_acb(3);
  EXPECT_TRUE(phi.is_complete());
  EXPECT_FALSE(phi.uncolored_edge().has_value());
  phi.clear(0);
  EXPECT_EQ(phi.uncolored_edge(), 0);
  phi.clear(1);
  EXPECT_THROW((void)phi.uncolored_edge(), ColoringError);
  EXPECT_EQ(phi.uncolored_edges().size(), 2u);
}

TEST(Elementary, Examples) {
  const EdgeColoring phi = path_acb();
  EXPECT_TRUE(is_elementary(phi, {0, 2}));
  EXPECT_TRUE(is_elementary(phi, {1}));
  EXPECT_TRUE(is_elementary(phi, {0, 0}));
  const EdgeColoring wide = path_acb(3);
  EXPECT_FALSE(is_elementary(wide, {0, 2}));  // both miss 3
}

TEST(Parity, CensusExamples) {
  const auto k4 = find_delta_coloring(complete(4));
  ASSERT_TRUE(k4.coloring);
  EXPECT_EQ(parity_census(*k4.coloring), (std::vector<int>{0, 0, 0, 0}));
  EXPECT_TRUE(parity_holds(*k4.coloring));

  const auto c6 = find_delta_coloring(cycle(6));
  ASSERT_TRUE(c6.coloring);
  EXPECT_EQ(parity_census(*c6.coloring), (std::vector<int>{0, 0, 0}));
}

TEST(Parity, HoldsOnSolverColouringsOfSevenVertexGraphs) {
  std::mt19937 rng(21);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(rng, 7, 4 + static_cast<int>(rng() % 12));
    const auto r = find_delta_coloring(g);
    if (!r.coloring) continue;
    ++checked;
    const int k = g.max_degree();
    for (int c = 1; c <= k; ++c) {
      int count = 0;
      for (Vertex v = 0; v < 7; ++v) count += oracle::missing(g, r.coloring->colors(), k, v).count(c);
      EXPECT_EQ(count % 2, 1);
      EXPECT_EQ(parity_census(*r.coloring)[c], count);
    }
  }
  EXPECT_GT(checked, 50);
}

TEST(Serialization, RoundTrip) {
  const Graph g = petersen_minus_vertex();
  const auto r = find_delta_coloring(g, EdgeId{7});
  ASSERT_TRUE(r.coloring);
  const std::string text = serialize_coloring(*r.coloring);
  const Edge e = g.edge(7);
  EXPECT_EQ(text.substr(0, text.find('\n')),
            "k=3 uncolored=" + std::to_string(e.u) + "," + std::to_string(e.v));
  std::istringstream in(text);
  EXPECT_EQ(parse_coloring(g, in), *r.coloring);

  const EdgeColoring full = path_acb();
  EXPECT_EQ(serialize_coloring(full), "k=2 uncolored=none\n0 1 1\n1 2 2\n");
}

TEST(Serialization, RejectsMalformedInput) {
  const Graph g(3, {{0, 1}, {1, 2}});
  auto parse = [&](const std::string& s) {
    std::istringstream in(s);
    return parse_coloring(g, in);
  };
  EXPECT_THROW(parse(""), ColoringError);
  EXPECT_THROW(parse("k=2\n"), ColoringError);
  EXPECT_THROW(parse("k=2 uncolored=none\n0 1 1\n"), ColoringError);        // edge 1-2 unaccounted
  EXPECT_THROW(parse("k=2 uncolored=none\n0 1 1\n1 2 1\n"), ColoringError);  // improper
  EXPECT_THROW(parse("k=2 uncolored=0,2\n0 1 1\n1 2 2\n"), ColoringError);   // not an edge
  EXPECT_THROW(parse("k=2 uncolored=none\n0 1 x\n"), ColoringError);
  EXPECT_NO_THROW(parse("k=2 uncolored=1,2\n0 1 1\n"));
}

TEST(Vizing, ProperWithDeltaPlusOneColours) {
  for (const Graph& g : {petersen(), cycle(5), complete(4), complete(7), petersen_minus_vertex(), cube()}) {
    const EdgeColoring phi = vizing_color(g);
    EXPECT_EQ(phi.palette_size(), g.max_degree() + 1);
    EXPECT_TRUE(phi.is_complete());
    EXPECT_TRUE(oracle::proper(g, phi.colors(), g.max_degree() + 1));
  }
}

TEST(Vizing, RandomGraphs) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 3 + static_cast<int>(rng() % 10), static_cast<int>(rng() % 30));
    const EdgeColoring phi = vizing_color(g);
    EXPECT_TRUE(phi.is_complete());
    EXPECT_TRUE(oracle::proper(g, phi.colors(), g.max_degree() + 1));
  }
}

TEST(Vizing, K4ThenExactSolverCertifiesThree) {
  const EdgeColoring phi = vizing_color(complete(4));
  EXPECT_LE(phi.palette_size(), 4);
  EXPECT_EQ(chromatic_index(complete(4)).value, 3);
  EXPECT_TRUE(oracle::brute_force_colorable(complete(4), 3));
}

}  // namespace
}  // namespace vsplit
