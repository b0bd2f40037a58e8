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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "vsplit/kempe.hpp"
#include "vsplit/vizing.hpp"

namespace vsplit {
namespace {

// a=0, c=1, b=2: path a-c-b with ac=1, cb=2
EdgeColoring path_acb(int k = 2) {
  return EdgeColoring::from_colors(Graph(3, {{0, 1}, {1, 2}}), k, {1, 2});
}

TEST(KempeChain, PathOrderedEndToEnd) {
  const KempeChain ch = kempe_chain(path_acb(), 0, 1, 2);
  EXPECT_EQ(ch.shape, ChainShape::kPath);
  EXPECT_EQ(ch.vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(ch.edges.size(), 2u);
  const KempeChain mid = kempe_chain(path_acb(), 1, 1, 2);
  EXPECT_EQ(mid.vertices.size(), 3u);
}

TEST(KempeChain, VertexMissingBothColoursIsTrivial) {
  const KempeChain ch = kempe_chain(path_acb(4), 0, 3, 4);
  EXPECT_EQ(ch.vertices, (std::vector<Vertex>{0}));
  EXPECT_TRUE(ch.edges.empty());
}

TEST(KempeChain, AlternatingFourCycleIsCycle) {
  const EdgeColoring phi = EdgeColoring::from_colors(cycle(4), 2, {1, 2, 2, 1});
  for (Vertex v = 0; v < 4; ++v) {
    const KempeChain ch = kempe_chain(phi, v, 1, 2);
    EXPECT_EQ(ch.shape, ChainShape::kCycle);
    EXPECT_EQ(ch.vertices.front(), v);
    EXPECT_EQ(ch.vertices.size(), 4u);
    EXPECT_EQ(ch.edges.size(), 4u);
  }
}

TEST(KempeChain, RejectsBadColourPairs) {
  EXPECT_THROW(kempe_chain(path_acb(), 0, 1, 1), std::invalid_argument);
  EXPECT_THROW(kempe_chain(path_acb(), 0, 1, 3), std::invalid_argument);
}

TEST(KempeSwap, PathExampleAndInvolution) {
  const EdgeColoring phi = path_acb();
  const EdgeColoring once = kempe_swap_at(phi, 0, 1, 2);
  EXPECT_EQ(once.color(0, 1), 2);
  EXPECT_EQ(once.color(1, 2), 1);
  EXPECT_EQ(once.missing(0), ColorSet{1});
  EXPECT_EQ(kempe_swap_at(once, 0, 1, 2), phi);
}

TEST(Linked, Examples) {
  EXPECT_TRUE(are_linked(path_acb(), 1, 1, 1, 2));
  // triangle minus ab: a and b linked through c
  EXPECT_TRUE(are_linked(path_acb(), 0, 2, 2, 1));
  // two disjoint edges coloured 1 and 2
  const EdgeColoring two = EdgeColoring::from_colors(Graph(4, {{0, 1}, {2, 3}}), 2, {1, 2});
  EXPECT_FALSE(are_linked(two, 0, 2, 1, 2));
  EXPECT_FALSE(are_linked(two, 1, 3, 1, 2));
}

TEST(Subchain, FullPathSwapsAndCycleOrUnlinkedThrow) {
  const EdgeColoring phi = path_acb();
  EXPECT_EQ(subchain_swap(phi, 0, 2, 1, 2), kempe_swap_at(phi, 0, 1, 2));
  const EdgeColoring two = EdgeColoring::from_colors(Graph(4, {{0, 1}, {2, 3}}), 2, {1, 2});
  EXPECT_THROW(subchain_swap(two, 0, 2, 1, 2), LinkageError);
  const EdgeColoring c4 = EdgeColoring::from_colors(cycle(4), 2, {1, 2, 2, 1});
  EXPECT_THROW(subchain_swap(c4, 0, 2, 1, 2), LinkageError);
}

TEST(Subchain, InteriorSegmentIsRejectedAsImproper) {
  // path 0-1-2-3 coloured 1,2,1 in a palette of 3
  const EdgeColoring phi = EdgeColoring::from_colors(path_graph(4), 3, {1, 2, 1});
  const KempeChain seg = subchain(phi, 1, 3, 1, 2);
  EXPECT_EQ(seg.vertices, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_THROW(subchain_swap(phi, 1, 3, 1, 2), LinkageError);
  EXPECT_THROW(subchain_swap(phi, 1, 2, 1, 2), LinkageError);
  EXPECT_NO_THROW(subchain_swap(phi, 3, 0, 1, 2));
}

TEST(ChainFrom, InteriorNeedsFirstEdge) {
  const EdgeColoring phi = EdgeColoring::from_colors(path_graph(4), 3, {1, 2, 1});
  EXPECT_THROW(chain_from(phi, 1, 1, 2), LinkageError);
  const KempeChain right = chain_from(phi, 1, 1, 2, phi.graph().require_edge(1, 2));
  EXPECT_EQ(right.vertices, (std::vector<Vertex>{1, 2, 3}));
  const KempeChain left = chain_from(phi, 1, 1, 2, phi.graph().require_edge(0, 1));
  EXPECT_EQ(left.vertices, (std::vector<Vertex>{1, 0}));
  EXPECT_EQ(chain_from(phi, 0, 1, 2).vertices, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_THROW(chain_from(phi, 1, 1, 2, phi.graph().require_edge(2, 3)), LinkageError);
}

TEST(Recolor, IdentityUncolouredAndClash) {
  const EdgeColoring phi = path_acb(3);
  EXPECT_EQ(recolor_edge(phi, 1, 2), phi);
  EXPECT_THROW(recolor_edge(phi, 1, 1), ColoringError);
  EXPECT_EQ(recolor_edge(phi, 1, 3).color(1), 3);

  // triangle minus ab
  const Graph c3 = cycle(3);
  EdgeColoring two(c3, 2);
  two.assign(c3.require_edge(0, 2), 1);
  two.assign(c3.require_edge(1, 2), 2);
  for (Color c : {1, 2}) EXPECT_THROW(color_uncolored(two, c), ColoringError);
  EdgeColoring three(c3, 3);
  three.assign(c3.require_edge(0, 2), 1);
  three.assign(c3.require_edge(1, 2), 2);
  const EdgeColoring done = color_uncolored(three, 3);
  EXPECT_TRUE(done.is_complete());
  EXPECT_TRUE(oracle::proper(c3, done.colors(), 3));
}

// Random proper colourings from Vizing, then random operations; each
// result is checked with the oracle's properness test and chain relaxation.
TEST(KempeProperty, RandomOperationsStayProper) {
  std::mt19937 rng(1234);
  int ops = 0;
  while (ops < 2000) {
    const Graph g = oracle::random_graph(rng, 4 + static_cast<int>(rng() % 7), 3 + static_cast<int>(rng() % 18));
    if (g.size() == 0) continue;
    EdgeColoring phi = vizing_color(g);
    const int k = phi.palette_size();
    if (k < 2) continue;
    for (int step = 0; step < 20; ++step, ++ops) {
      const Color a = 1 + static_cast<int>(rng() % k);
      Color b = 1 + static_cast<int>(rng() % (k - 1));
      if (b >= a) ++b;
      const Vertex x = static_cast<Vertex>(rng() % g.order());
      switch (rng() % 3) {
        case 0: {
          const KempeChain ch = kempe_chain(phi, x, a, b);
          const auto expect = oracle::chain_vertices(g, phi.colors(), x, a, b);
          EXPECT_EQ(std::set<Vertex>(ch.vertices.begin(), ch.vertices.end()), expect);
          const EdgeColoring swapped = kempe_swap(phi, ch);
          EXPECT_TRUE(oracle::proper(g, swapped.colors(), k));
          EXPECT_EQ(kempe_swap(swapped, kempe_chain(swapped, x, a, b)), phi);
          phi = swapped;
          break;
        }
        case 1: {
          const Vertex y = static_cast<Vertex>(rng() % g.order());
          try {
            const EdgeColoring s = subchain_swap(phi, x, y, a, b);
            EXPECT_TRUE(oracle::proper(g, s.colors(), k));
            // only the segment's ends change missing sets
            for (Vertex v = 0; v < g.order(); ++v)
              if (v != x && v != y) {
                EXPECT_EQ(s.missing(v), phi.missing(v));
              }
            phi = s;
          } catch (const LinkageError&) {
          }
          break;
        }
        default: {
          const EdgeId e = static_cast<EdgeId>(rng() % g.size());
          try {
            phi = recolor_edge(phi, e, a);
          } catch (const ColoringError&) {
          }
          EXPECT_TRUE(oracle::proper(g, phi.colors(), k));
        }
      }
      EXPECT_TRUE(phi.verify_proper());
    }
  }
}

}  // namespace
}  // namespace vsplit
