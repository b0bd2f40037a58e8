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

// End-to-end checks of the vertex-splitting statements: every split of a
// regular class 1 base in a degree range must be overfull, class 2 and
// Delta-critical.

#pragma once

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <functional>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "vsplit/canonical.hpp"
#include "vsplit/coloring.hpp"
#include "vsplit/enumerate.hpp"
#include "vsplit/graph.hpp"
#include "vsplit/graph6.hpp"
#include "vsplit/record.hpp"
#include "vsplit/solver.hpp"
#include "vsplit/structures.hpp"

namespace vsplit {

/// Which bases a sweep admits, by base order m and degree d.
enum class DegreeFilter {
  kTheorem,          // 4d >= 3m
  kConjectureBase,   // 3d > m   (n of the conjecture = order of the base)
  kConjectureSplit,  // 3d > m+1 (n = order of the split graph)
  kCustom,           // d >= min_degree
};

inline const char* to_string(DegreeFilter f) {
  switch (f) {
    case DegreeFilter::kTheorem: return "theorem";
    case DegreeFilter::kConjectureBase: return "conjecture-base";
    case DegreeFilter::kConjectureSplit: return "conjecture-split";
    case DegreeFilter::kCustom: return "custom";
  }
  return "?";
}

struct SweepConfig {
  int m_max = 8;
  DegreeFilter filter = DegreeFilter::kTheorem;
  int min_degree = 0;  // kCustom only
  SolveOptions solve;
  int jobs = 1;
  /// Bases above this order are split without automorphism reduction.
  int automorphism_max_order = 8;
  /// When non-empty, replaces enumeration of regular bases.
  std::vector<Graph> bases;
  /// Record name: "theorem1" or "conjecture".
  std::string lemma = "theorem1";
};

inline bool degree_admitted(const SweepConfig& c, int m, int d) {
  switch (c.filter) {
    case DegreeFilter::kTheorem: return 4 * d >= 3 * m;
    case DegreeFilter::kConjectureBase: return 3 * d > m;
    case DegreeFilter::kConjectureSplit: return 3 * d > m + 1;
    case DegreeFilter::kCustom: return d >= c.min_degree;
  }
  return false;
}

/// "<canonical graph6 of base>|v<vertex>|<first>/<second>", with parts
/// written as comma-separated ascending vertex ids of the base.
inline std::string instance_id(const std::string& base_graph6, const SplitSpec& s) {
  auto join = [](const std::vector<Vertex>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
    return out;
  };
  return base_graph6 + "|v" + std::to_string(s.vertex) + "|" + join(s.first) + "/" + join(s.second);
}

namespace detail {

// The part holding the smallest neighbour becomes `first`; both sorted.
inline SplitSpec normalize_split(Vertex v, std::vector<Vertex> a, std::vector<Vertex> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (b.front() < a.front()) std::swap(a, b);
  return {v, std::move(a), std::move(b)};
}

}  // namespace detail

/// All vertex splits of `g` with the (A,B) ~ (B,A) identification, in order
/// of vertex and then bitmask over the non-smallest neighbours. With
/// `reduce_automorphisms`, only the first split of each Aut(g)-orbit is kept.
inline std::vector<SplitSpec> enumerate_splits(const Graph& g, bool reduce_automorphisms) {
  std::vector<SplitSpec> all;
  for (Vertex v = 0; v < g.order(); ++v) {
    const auto& nb = g.neighbors(v);
    const int d = static_cast<int>(nb.size());
    if (d < 2) continue;
    const int rest = d - 1;
    for (std::uint64_t mask = 0; mask + 1 < (std::uint64_t{1} << rest); ++mask) {
      std::vector<Vertex> a{nb[0]}, b;
      for (int i = 0; i < rest; ++i) (mask >> i & 1 ? a : b).push_back(nb[i + 1]);
      all.push_back(detail::normalize_split(v, a, b));
    }
  }
  if (!reduce_automorphisms) return all;

  std::vector<std::vector<Vertex>> autos;
  for_each_automorphism(g, [&](const std::vector<Vertex>& p) {
    autos.push_back(p);
    return true;
  });
  auto key = [](const SplitSpec& s) { return std::make_pair(s.vertex, s.first); };
  std::set<std::pair<Vertex, std::vector<Vertex>>> seen;
  std::vector<SplitSpec> out;
  for (const SplitSpec& s : all) {
    if (seen.count(key(s))) continue;
    out.push_back(s);
    for (const auto& p : autos) {
      std::vector<Vertex> a, b;
      for (Vertex w : s.first) a.push_back(p[w]);
      for (Vertex w : s.second) b.push_back(p[w]);
      seen.insert(key(detail::normalize_split(p[s.vertex], a, b)));
    }
  }
  return out;
}

/// The colouring of vertex_split(g0, spec) - v1v2 inherited from phi0: an
/// edge at v1 or v2 keeps the colour of the base edge it replaces. Throws
/// ColoringError unless phi0 is a complete proper max_degree-colouring of g0.
inline EdgeColoring split_edge_criticality_shortcut(const Graph& g0, const EdgeColoring& phi0, const SplitSpec& spec) {
  if (!(phi0.graph() == g0)) throw ColoringError("base colouring belongs to another graph");
  if (phi0.palette_size() != g0.max_degree()) throw ColoringError("base colouring does not use max_degree colours");
  if (!phi0.is_complete() || !phi0.verify_proper()) throw ColoringError("base colouring is not a proper full colouring");
  const Graph g = vertex_split(g0, spec);
  const Vertex v = spec.vertex;
  const Vertex v2 = g0.order();
  EdgeColoring out(g, g0.max_degree());
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge ed = g.edge(e);
    if (ed.u == v && ed.v == v2) continue;
    const Vertex a = ed.u == v2 ? v : ed.u;
    const Vertex b = ed.v == v2 ? v : ed.v;
    out.assign(e, phi0.color(a, b));
  }
  return out;
}

/// A regular base admitted by a sweep, relabelled canonically.
struct SweepBase {
  Graph graph;
  std::string graph6;
  std::optional<EdgeColoring> coloring;  // max_degree-colouring when class 1
  bool regular = false;
  bool class1 = false;
  bool in_range = false;
  bool connected = false;
  bool undecided = false;

  [[nodiscard]] bool eligible() const { return regular && class1 && in_range && connected && !undecided; }
};

inline SweepBase prepare_base(const Graph& g, const SweepConfig& config) {
  SweepBase b;
  b.graph = canonical_form(g);
  b.graph6 = emit_graph6(b.graph);
  b.regular = b.graph.is_regular();
  b.in_range = b.regular && b.graph.order() % 2 == 0 && degree_admitted(config, b.graph.order(), b.graph.max_degree());
  b.connected = b.graph.is_connected();
  const ChromaticIndex ci = chromatic_index(b.graph, config.solve);
  b.undecided = !ci.decided();
  b.class1 = ci.decided() && ci.edge_class() == EdgeClass::kClass1;
  b.coloring = ci.witness;
  return b;
}

/// Bases in sweep order: explicit list as given, otherwise even orders
/// 4..m_max, degrees ascending, canonical graph6 ascending.
inline std::vector<SweepBase> sweep_bases(const SweepConfig& config) {
  std::vector<SweepBase> out;
  if (!config.bases.empty()) {
    for (const Graph& g : config.bases) out.push_back(prepare_base(g, config));
    return out;
  }
  for (int m = 4; m <= config.m_max; m += 2)
    for (int d = 2; d < m; ++d)
      if (degree_admitted(config, m, d))
        for (const Graph& g : enumerate_regular_graphs(m, d)) out.push_back(prepare_base(g, config));
  return out;
}

/// Record for a base that cannot be split under the sweep's hypotheses.
inline VerificationRecord base_record(const SweepBase& b, const SweepConfig& config) {
  VerificationRecord r;
  r.lemma = config.lemma;
  r.instance_id = b.graph6 + "|base";
  r.hypothesis("base_regular", b.regular);
  r.hypothesis("base_class1", b.class1);
  r.hypothesis("degree_in_range", b.in_range);
  r.hypothesis("base_connected", b.connected);
  r.undecided = b.undecided;
  r.witness = {{"base", b.graph6}, {"order", b.graph.order()}, {"max_degree", b.graph.max_degree()},
               {"filter", to_string(config.filter)}};
  return r;
}

/// The three checks on one split, plus the inherited-colouring certificate
/// for the split edge, which the solver must confirm independently.
inline VerificationRecord verify_split(const SweepBase& base, const SplitSpec& spec, const SweepConfig& config) {
  VerificationRecord r;
  r.lemma = config.lemma;
  r.instance_id = instance_id(base.graph6, spec);
  const Graph g = vertex_split(base.graph, spec);
  const int delta = g.max_degree();
  r.hypothesis("base_regular", base.regular);
  r.hypothesis("base_class1", base.class1);
  r.hypothesis("degree_in_range", base.in_range);
  r.hypothesis("split_connected", g.is_connected());

  const bool overfull = is_overfull(g);
  const SolveResult whole = find_delta_coloring(g, std::nullopt, config.solve);
  bool undecided = whole.decision == Decision::kUndecided;
  const bool class2 = whole.decision == Decision::kNotColorable;

  bool certified = false;
  if (base.coloring) {
    try {
      const EdgeColoring inherited = split_edge_criticality_shortcut(base.graph, *base.coloring, spec);
      certified = inherited.verify_proper() && inherited.uncolored_edges().size() == 1;
    } catch (const ColoringError&) {
      certified = false;
    }
  }

  const EdgeId split_edge = g.require_edge(spec.vertex, base.graph.order());
  Json noncritical = Json::array();
  Json pending = Json::array();
  int critical = 0;
  bool solver_agrees = true;
  for (EdgeId e = 0; e < g.size(); ++e) {
    const Decision d = find_delta_coloring(g, e, config.solve).decision;
    const Edge ed = g.edge(e);
    if (d == Decision::kColorable) {
      ++critical;
    } else if (d == Decision::kNotColorable) {
      noncritical.push_back(Json::array({ed.u, ed.v}));
    } else {
      pending.push_back(Json::array({ed.u, ed.v}));
      undecided = true;
    }
    if (e == split_edge && certified && d == Decision::kNotColorable) solver_agrees = false;
  }

  r.conclusion = overfull && class2 && certified && solver_agrees && critical == g.size();
  r.undecided = undecided;
  r.witness = {{"split", emit_graph6(g)},
               {"order", g.order()},
               {"max_degree", delta},
               {"overfull", overfull},
               {"class2", class2},
               {"split_edge_certified", certified},
               {"critical_edges", critical},
               {"edges", g.size()},
               {"noncritical", noncritical},
               {"undecided_edges", pending}};
  return r;
}

/// Runs `tasks` on `jobs` threads and hands results to `sink` in task order.
/// Only the calling thread invokes `sink`.
template <typename Result>
void run_ordered(const std::vector<std::function<Result()>>& tasks, int jobs,
                 const std::function<void(const Result&)>& sink) {
  const std::size_t n = tasks.size();
  if (jobs <= 1 || n <= 1) {
    for (const auto& t : tasks) sink(t());
    return;
  }
  std::vector<std::optional<Result>> results(n);
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::condition_variable ready;
  std::vector<std::thread> workers;
  const int width = std::min<std::size_t>(jobs, n);
  for (int w = 0; w < width; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        Result r = tasks[i]();
        {
          std::lock_guard lock(mu);
          results[i] = std::move(r);
        }
        ready.notify_all();
      }
    });
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return results[i].has_value(); });
    Result r = std::move(*results[i]);
    results[i].reset();
    lock.unlock();
    sink(r);
  }
  for (auto& t : workers) t.join();
}

struct SweepSummary {
  int instances = 0;  // records in the full sweep, including resumed ones
  int resumed = 0;    // records taken from the existing log
  RecordTally tally;  // over all records, resumed included

  [[nodiscard]] bool all_passed() const { return tally.failed == 0 && tally.undecided == 0; }
};

/// Emits one record per base that fails the sweep hypotheses and one per
/// split of every eligible base, in deterministic order. Instances listed in
/// `done` are not recomputed; `prior` records are counted in the summary.
inline SweepSummary run_sweep(const SweepConfig& config, const std::function<void(const VerificationRecord&)>& sink,
                              const std::vector<VerificationRecord>& prior = {}) {
  SweepSummary summary;
  const std::set<std::string> done = [&] {
    std::set<std::string> s;
    for (const auto& r : prior) s.insert(r.instance_id);
    return s;
  }();
  for (const auto& r : prior) summary.tally.add(r);
  summary.resumed = static_cast<int>(prior.size());

  std::vector<std::function<VerificationRecord()>> tasks;
  const std::vector<SweepBase> bases = sweep_bases(config);
  for (const SweepBase& b : bases) {
    if (!b.eligible()) {
      ++summary.instances;
      VerificationRecord r = base_record(b, config);
      if (!done.count(r.instance_id)) tasks.push_back([r] { return r; });
      continue;
    }
    const bool reduce = b.graph.order() <= config.automorphism_max_order;
    for (const SplitSpec& s : enumerate_splits(b.graph, reduce)) {
      ++summary.instances;
      if (done.count(instance_id(b.graph6, s))) continue;
      tasks.push_back([&b, s, &config] { return verify_split(b, s, config); });
    }
  }
  run_ordered<VerificationRecord>(tasks, config.jobs, [&](const VerificationRecord& r) {
    summary.tally.add(r);
    sink(r);
  });
  return summary;
}

inline SweepSummary verify_theorem1(SweepConfig config, const std::function<void(const VerificationRecord&)>& sink,
                                    const std::vector<VerificationRecord>& prior = {}) {
  config.filter = DegreeFilter::kTheorem;
  config.lemma = "theorem1";
  return run_sweep(config, sink, prior);
}

/// Defaults to the base-order threshold; pass kConjectureSplit explicitly
/// for the split-order one.
inline SweepSummary sweep_conjecture_range(SweepConfig config,
                                           const std::function<void(const VerificationRecord&)>& sink,
                                           const std::vector<VerificationRecord>& prior = {}) {
  if (config.filter == DegreeFilter::kTheorem) config.filter = DegreeFilter::kConjectureBase;
  config.lemma = "conjecture";
  return run_sweep(config, sink, prior);
}

/// Searches P* for an edge e, a 3-colouring of P* - e and a four-vertex
/// Kierstead path whose vertex set is not elementary. Edges are tried in id
/// order and colourings in solver order; the first hit is returned.
inline VerificationRecord reproduce_figure1(SolveOptions options = {}) {
  const Graph g = petersen_minus_vertex();
  const int delta = g.max_degree();
  VerificationRecord r;
  r.lemma = "figure1";
  r.instance_id = emit_graph6(g);
  const ChromaticIndex ci = chromatic_index(g, options);
  r.hypothesis("class2", ci.decided() && ci.edge_class() == EdgeClass::kClass2);
  r.undecided = !ci.decided();

  for (EdgeId e = 0; e < g.size(); ++e) {
    std::optional<std::pair<EdgeColoring, KiersteadPath>> hit;
    const Decision d = enumerate_colorings(
        g, delta, e,
        [&](const EdgeColoring& phi) {
          for (const KiersteadPath& k : enumerate_kierstead_paths(phi, 3)) {
            if (!is_elementary(phi, k.vertices)) {
              hit.emplace(phi, k);
              return false;
            }
          }
          return true;
        },
        options);
    if (d == Decision::kUndecided && !hit) r.undecided = true;
    if (!hit) continue;

    const auto& [phi, k] = *hit;
    const bool revalidated = is_kierstead_path(phi, k) && !is_elementary(phi, k.vertices);
    const Vertex v1 = k.vertices[1], v2 = k.vertices[2];
    Json missing = Json::object();
    for (Vertex x : k.vertices) missing[std::to_string(x)] = phi.missing(x).to_vector();
    r.conclusion = revalidated;
    r.undecided = false;
    r.witness = {{"edge", Json::array({g.edge(e).u, g.edge(e).v})},
                 {"path", k.vertices},
                 {"coloring", serialize_coloring(phi)},
                 {"missing", missing},
                 {"min_degree_v1_v2", std::min(g.degree(v1), g.degree(v2))},
                 {"max_degree", delta}};
    return r;
  }
  r.conclusion = false;
  return r;
}

}  // namespace vsplit
