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

// Instance checkers for the adjacency lemmas used around critical edges.
//
// Each checker evaluates its hypotheses on the instance and records them next
// to the conclusion. Facts that need a chromatic-index computation (class 2,
// criticality of an edge) are supplied by the caller through Host and the
// `critical` arguments, so a deliberately wrong fact can drive the negative
// paths in tests. A colouring in C^Delta(G - e) is itself a certificate that
// e is critical in a class 2 graph, so colouring-based checkers need only
// the class fact.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "vsplit/coloring.hpp"
#include "vsplit/graph.hpp"
#include "vsplit/graph6.hpp"
#include "vsplit/kempe.hpp"
#include "vsplit/record.hpp"
#include "vsplit/structures.hpp"

namespace vsplit {

/// A graph together with the facts the lemma hypotheses refer to.
struct Host {
  Graph graph;
  bool class2 = false;
  std::string id;  // instance label used in records; graph6 when empty

  [[nodiscard]] std::string label() const { return id.empty() ? emit_graph6(graph) : id; }
};

namespace detail {

inline Json vertices_json(const std::vector<Vertex>& vs) { return Json(vs); }

inline Json edge_json(const Graph& g, EdgeId e) {
  const Edge ed = g.edge(e);
  return Json::array({ed.u, ed.v});
}

inline Json coloring_json(const EdgeColoring& phi) {
  Json out = Json::array();
  for (EdgeId e = 0; e < phi.graph().size(); ++e) {
    const Edge ed = phi.graph().edge(e);
    out.push_back(Json::array({ed.u, ed.v, phi.color(e)}));
  }
  return out;
}

inline std::string suffix(const std::string& base, const std::string& tail) {
  return tail.empty() ? base : base + "/" + tail;
}

inline bool uncolored_is(const EdgeColoring& phi, Vertex a, Vertex b) {
  const auto unc = phi.uncolored_edges();
  const auto id = phi.graph().edge_id(a, b);
  return id && unc.size() == 1 && unc.front() == *id;
}

inline int count_delta_neighbors(const Graph& g, Vertex x, Vertex except) {
  int count = 0;
  for (Vertex w : g.neighbors(x))
    if (w != except && g.degree(w) == g.max_degree()) ++count;
  return count;
}

}  // namespace detail

/// Multifan lemma: (a) V(F) is elementary; (b) for alpha missing at the
/// centre and beta missing at a spoke, centre and spoke are
/// (alpha, beta)-linked.
inline VerificationRecord check_multifan_lemma(const Host& host, const EdgeColoring& phi, const Multifan& f,
                                               const std::string& tag = {}) {
  const Graph& g = host.graph;
  VerificationRecord r;
  r.lemma = "multifan";
  r.instance_id = detail::suffix(host.label(), tag);
  r.hypothesis("class2", host.class2);
  r.hypothesis("palette_is_max_degree", phi.palette_size() == g.max_degree());
  r.hypothesis("valid_multifan", is_multifan(phi, f));

  const bool elementary = is_elementary(phi, f.vertices());
  bool linked = true;
  Json violation;
  if (r.hypotheses.back().second) {
    for (Color alpha : phi.missing(f.center).to_vector()) {
      for (std::size_t i = 0; i < f.spokes.size() && linked; ++i) {
        for (Color beta : phi.missing(f.spokes[i]).to_vector()) {
          if (beta == alpha) continue;  // only possible when (a) already fails
          if (!are_linked(phi, f.center, f.spokes[i], alpha, beta)) {
            linked = false;
            violation = {{"alpha", alpha}, {"beta", beta}, {"i", i + 1}, {"spoke", f.spokes[i]}};
            break;
          }
        }
      }
      if (!linked) break;
    }
  }
  r.conclusion = elementary && linked;
  if (!r.conclusion) {
    r.witness = {{"fan", detail::vertices_json(f.vertices())},
                 {"elementary", elementary},
                 {"linked", linked},
                 {"coloring", detail::coloring_json(phi)}};
    if (!violation.is_null()) r.witness["unlinked"] = violation;
  }
  return r;
}

/// Kierstead-path lemma for paths on four vertices; one record for each of
/// (a) elementarity under the degree hypothesis and (b) the intersection
/// bound |missing(v3) & (missing(v0) | missing(v1))| <= 1.
inline std::vector<VerificationRecord> check_kierstead_lemma(const Host& host, const EdgeColoring& phi,
                                                             const KiersteadPath& k, const std::string& tag = {}) {
  const Graph& g = host.graph;
  const bool valid = k.vertices.size() == 4 && is_kierstead_path(phi, k);
  const int delta = g.max_degree();
  std::vector<VerificationRecord> out(2);
  for (auto& r : out) {
    r.instance_id = detail::suffix(host.label(), tag);
    r.hypothesis("class2", host.class2);
    r.hypothesis("palette_is_max_degree", phi.palette_size() == delta);
    r.hypothesis("valid_kierstead_path", valid);
  }
  const auto& v = k.vertices;
  const bool low_degree = v.size() == 4 && std::min(g.degree(v[1]), g.degree(v[2])) < delta;
  const bool elementary = is_elementary(phi, v);
  out[0].lemma = "kierstead_a";
  out[0].hypothesis("min_degree_v1_v2_below_max", low_degree);
  out[0].conclusion = elementary;

  out[1].lemma = "kierstead_b";
  int overlap = 0;
  if (v.size() == 4) overlap = (phi.missing(v[3]) & (phi.missing(v[0]) | phi.missing(v[1]))).size();
  out[1].conclusion = overlap <= 1;

  for (auto& r : out) {
    if (r.conclusion && r.hypotheses_hold()) continue;
    r.witness = {{"path", detail::vertices_json(v)},
                 {"elementary", elementary},
                 {"overlap", overlap},
                 {"coloring", detail::coloring_json(phi)}};
  }
  return out;
}

/// Vizing's adjacency lemma at a critical edge xy: x has at least
/// Delta - d(y) + 1 neighbours of degree Delta other than y, and
/// symmetrically.
inline VerificationRecord check_val(const Host& host, EdgeId e, bool critical, const std::string& tag = {}) {
  const Graph& g = host.graph;
  const Edge ed = g.edge(e);
  const int delta = g.max_degree();
  VerificationRecord r;
  r.lemma = "val";
  r.instance_id = detail::suffix(host.label(), tag);
  r.hypothesis("class2", host.class2);
  r.hypothesis("edge_critical", critical);
  const int at_u = detail::count_delta_neighbors(g, ed.u, ed.v);
  const int at_v = detail::count_delta_neighbors(g, ed.v, ed.u);
  const int need_u = delta - g.degree(ed.v) + 1;
  const int need_v = delta - g.degree(ed.u) + 1;
  r.conclusion = at_u >= need_u && at_v >= need_v;
  if (!r.conclusion)
    r.witness = {{"edge", {ed.u, ed.v}}, {"have", {at_u, at_v}}, {"need", {need_u, need_v}}};
  return r;
}

/// Parity lemma on a colouring treated as a full colouring of G minus its
/// uncoloured edges: every colour is missed by a number of vertices of the
/// same parity as n.
inline VerificationRecord check_parity(const EdgeColoring& phi, const std::string& instance_id) {
  VerificationRecord r;
  r.lemma = "parity";
  r.instance_id = instance_id;
  int max_deg_colored = 0;
  for (Vertex v = 0; v < phi.graph().order(); ++v)
    max_deg_colored = std::max(max_deg_colored, phi.present(v).size());
  r.hypothesis("proper", phi.verify_proper());
  r.hypothesis("palette_covers_degrees", phi.palette_size() >= max_deg_colored);
  r.conclusion = parity_holds(phi);
  if (!r.conclusion) r.witness = {{"census", parity_census(phi)}, {"n", phi.graph().order()}};
  return r;
}

/// Counting identity at a full-deficiency pair (a, b) whose edge is the
/// uncoloured one: missing(a) and missing(b) are disjoint and together
/// cover all Delta colours.
inline VerificationRecord check_deficiency_count(const Host& host, const EdgeColoring& phi, Vertex a, Vertex b,
                                                 const std::string& tag = {}) {
  const Graph& g = host.graph;
  const int delta = g.max_degree();
  VerificationRecord r;
  r.lemma = "deficiency_count";
  r.instance_id = detail::suffix(host.label(), tag);
  r.hypothesis("class2", host.class2);
  r.hypothesis("palette_is_max_degree", phi.palette_size() == delta);
  r.hypothesis("uncolored_is_pair_edge", detail::uncolored_is(phi, a, b));
  r.hypothesis("full_deficiency", g.adjacent(a, b) && g.degree(a) + g.degree(b) == delta + 2);
  const ColorSet ma = phi.missing(a);
  const ColorSet mb = phi.missing(b);
  const int fan_missing = phi.missing(std::vector<Vertex>{b, a}).size();
  r.conclusion = (ma & mb).empty() && (ma | mb).size() == delta && fan_missing == delta;
  if (!r.conclusion)
    r.witness = {{"missing_a", ma.to_vector()}, {"missing_b", mb.to_vector()}, {"delta", delta}};
  return r;
}

/// Short-kite lemma: with K = (a,b,u,x) and K* = (b,a,c,u,y) Kierstead
/// paths for phi in C^Delta(G - ab) and missing(x) | missing(y) within
/// missing(a) | missing(b), one of x, y has degree Delta.
inline VerificationRecord check_short_kite_lemma(const Host& host, const ShortKite& kite, const EdgeColoring& phi,
                                                 const std::string& tag = {}) {
  const Graph& g = host.graph;
  const int delta = g.max_degree();
  VerificationRecord r;
  r.lemma = "short_kite";
  r.instance_id = detail::suffix(host.label(), tag);
  r.hypothesis("class2", host.class2);
  r.hypothesis("short_kite", is_short_kite(g, kite));
  r.hypothesis("palette_is_max_degree", phi.palette_size() == delta);
  r.hypothesis("uncolored_is_ab", detail::uncolored_is(phi, kite.a, kite.b));
  const bool structural = r.hypotheses_hold();
  const KiersteadPath k{{kite.a, kite.b, kite.u, kite.x}};
  const KiersteadPath k_star{{kite.b, kite.a, kite.c, kite.u, kite.y}};
  r.hypothesis("k_is_kierstead", structural && is_kierstead_path(phi, k));
  r.hypothesis("k_star_is_kierstead", structural && is_kierstead_path(phi, k_star));
  const ColorSet xy = phi.missing(kite.x) | phi.missing(kite.y);
  r.hypothesis("missing_xy_within_ab", xy.subset_of(phi.missing(kite.a) | phi.missing(kite.b)));
  r.conclusion = std::max(g.degree(kite.x), g.degree(kite.y)) == delta;
  if (!r.conclusion && r.hypotheses_hold())
    r.witness = {{"kite", {kite.a, kite.b, kite.c, kite.u, kite.x, kite.y}},
                 {"degrees", {g.degree(kite.x), g.degree(kite.y)}},
                 {"coloring", detail::coloring_json(phi)}};
  return r;
}

/// Statements (i)-(iv) at a full-deficiency pair (a, b) with ab critical:
///  (i)   neighbours of a or b other than a, b have degree Delta;
///  (ii)  vertices at distance 2 from {a, b} have degree >= Delta - 1, and
///        exactly Delta when both d(a), d(b) < Delta;
///  (iii) the same for vertices with d(x) >= n - |N(a) | N(b)|;
///  (iv)  for odd n, a vertex of degree < Delta outside {a, b} has a second
///        one beside it.
inline std::vector<VerificationRecord> check_full_deficiency_lemma(const Host& host, FullDeficiencyPair pair,
                                                                   bool critical, const std::string& tag = {}) {
  const Graph& g = host.graph;
  const int delta = g.max_degree();
  const int n = g.order();
  const Vertex a = pair.u;
  const Vertex b = pair.v;
  const bool adjacent = g.adjacent(a, b);
  const bool deficiency = adjacent && g.degree(a) + g.degree(b) == delta + 2;
  const bool both_low = g.degree(a) < delta && g.degree(b) < delta;

  std::vector<char> in_union(n, 0);
  for (Vertex w : g.neighbors(a)) in_union[w] = 1;
  for (Vertex w : g.neighbors(b)) in_union[w] = 1;
  const int union_size = static_cast<int>(std::count(in_union.begin(), in_union.end(), 1));

  auto base = [&](const char* name) {
    VerificationRecord r;
    r.lemma = name;
    r.instance_id = detail::suffix(host.label(), tag);
    r.hypothesis("class2", host.class2);
    r.hypothesis("pair_edge_critical", critical && adjacent);
    r.hypothesis("full_deficiency", deficiency);
    return r;
  };
  auto strong_ok = [&](Vertex x) {
    const int d = g.degree(x);
    return d >= delta - 1 && (!both_low || d == delta);
  };

  std::vector<VerificationRecord> out;
  {
    auto r = base("deficiency_i");
    std::vector<Vertex> bad;
    for (Vertex x = 0; x < n; ++x)
      if (x != a && x != b && in_union[x] && g.degree(x) != delta) bad.push_back(x);
    r.conclusion = bad.empty();
    if (!bad.empty()) r.witness = {{"pair", {a, b}}, {"vertices", bad}};
    out.push_back(std::move(r));
  }
  {
    auto r = base("deficiency_ii");
    std::vector<Vertex> bad;
    for (Vertex x = 0; x < n; ++x) {
      if (x == a || x == b) continue;
      const auto dist = distance(g, x, {a, b});
      if (dist && *dist == 2 && !strong_ok(x)) bad.push_back(x);
    }
    r.conclusion = bad.empty();
    if (!bad.empty()) r.witness = {{"pair", {a, b}}, {"vertices", bad}};
    out.push_back(std::move(r));
  }
  {
    auto r = base("deficiency_iii");
    std::vector<Vertex> bad;
    for (Vertex x = 0; x < n; ++x) {
      if (x == a || x == b) continue;
      if (g.degree(x) >= n - union_size && !strong_ok(x)) bad.push_back(x);
    }
    r.conclusion = bad.empty();
    if (!bad.empty()) r.witness = {{"pair", {a, b}}, {"vertices", bad}};
    out.push_back(std::move(r));
  }
  {
    auto r = base("deficiency_iv");
    r.hypothesis("order_odd", n % 2 == 1);
    std::vector<Vertex> low;
    for (Vertex x = 0; x < n; ++x)
      if (x != a && x != b && g.degree(x) < delta) low.push_back(x);
    r.conclusion = low.size() != 1;
    if (!r.conclusion) r.witness = {{"pair", {a, b}}, {"lonely_low_vertex", low.front()}};
    out.push_back(std::move(r));
  }
  {
    auto r = base("corollary_no_two_deficient");
    r.hypothesis("max_degree_at_least_three_quarters", 4 * delta >= 3 * (n - 1));
    std::vector<Vertex> near;
    for (Vertex x = 0; x < n; ++x)
      if (x != a && x != b && g.degree(x) == delta - 1) near.push_back(x);
    r.conclusion = near.size() <= 1;
    if (!r.conclusion) r.witness = {{"pair", {a, b}}, {"vertices", near}};
    out.push_back(std::move(r));
  }
  return out;
}

/// Second claim inside the short-kite argument (the case missing(x) =
/// missing(y) = {eta}). With missing(b) = {1}, phi(uy) = 1, u saturated,
/// delta = phi(bu) missing at a and eta != delta: the (eta, delta)-path from
/// y runs through u and then b along ub. Also checks that recolouring
/// (ab := delta, bu uncoloured) makes (u, ub, b, uy, y) a multifan.
inline VerificationRecord check_claim2_linkage(const Host& host, const ShortKite& kite, const EdgeColoring& phi,
                                               const std::string& tag = {}) {
  const Graph& g = host.graph;
  const int delta_deg = g.max_degree();
  VerificationRecord r;
  r.lemma = "kite_linkage";
  r.instance_id = detail::suffix(host.label(), tag);
  r.hypothesis("class2", host.class2);
  r.hypothesis("short_kite", is_short_kite(g, kite));
  r.hypothesis("palette_is_max_degree", phi.palette_size() == delta_deg);
  r.hypothesis("uncolored_is_ab", detail::uncolored_is(phi, kite.a, kite.b));
  if (!r.hypotheses_hold()) return r;

  const ColorSet mb = phi.missing(kite.b);
  const ColorSet mx = phi.missing(kite.x);
  const ColorSet my = phi.missing(kite.y);
  const Color one = mb.size() == 1 ? *mb.min() : kUncolored;
  const Color delta = phi.color(kite.b, kite.u);
  const Color eta = mx.size() == 1 ? *mx.min() : kUncolored;
  r.hypothesis("b_misses_one_color", mb.size() == 1);
  r.hypothesis("uy_has_missing_color_of_b", one != kUncolored && phi.color(kite.u, kite.y) == one);
  r.hypothesis("u_saturated", phi.missing(kite.u).empty());
  r.hypothesis("x_y_miss_same_single_color", mx.size() == 1 && mx == my);
  r.hypothesis("bu_color_missing_at_a", phi.missing(kite.a).contains(delta));
  r.hypothesis("eta_differs_from_bu_color", eta != delta);
  if (!r.hypotheses_hold()) return r;

  // Auxiliary colouring: ab takes delta, bu becomes the uncoloured edge.
  EdgeColoring aux = phi;
  aux.clear(g.require_edge(kite.b, kite.u));
  aux.assign(g.require_edge(kite.a, kite.b), delta);
  const bool fan_ok = is_multifan(aux, Multifan{kite.u, {kite.b, kite.y}});

  const KempeChain from_y = chain_from(phi, kite.y, eta, delta);
  const EdgeId ub = g.require_edge(kite.u, kite.b);
  const int pu = from_y.position(kite.u);
  const int pb = from_y.position(kite.b);
  const bool passes = from_y.contains_edge(ub) && pu >= 0 && pb >= 0 && pu < pb;
  r.conclusion = fan_ok && passes;
  if (!r.conclusion)
    r.witness = {{"kite", {kite.a, kite.b, kite.c, kite.u, kite.x, kite.y}},
                 {"aux_multifan", fan_ok},
                 {"chain", from_y.vertices},
                 {"coloring", detail::coloring_json(phi)}};
  return r;
}

}  // namespace vsplit
