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

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "vsplit/lemmas.hpp"
#include "vsplit/record.hpp"
#include "vsplit/script.hpp"
#include "vsplit/solver.hpp"
#include "vsplit/structures.hpp"

namespace vsplit {

struct LemmaSuiteOptions {
  /// Colourings of G - e examined per edge (distinct up to colour renaming).
  int colorings_per_edge = 2;
  bool include_kites = true;
  SolveOptions solve;
};

struct LemmaSuiteReport {
  std::map<std::string, RecordTally> tallies;
  std::vector<VerificationRecord> failures;
  int undecided = 0;

  void add(const VerificationRecord& r) {
    tallies[r.lemma].add(r);
    if (r.failed()) failures.push_back(r);
    if (r.status() == Status::kUndecided) ++undecided;
  }
  void merge(const LemmaSuiteReport& other) {
    for (const auto& [name, t] : other.tallies) {
      auto& mine = tallies[name];
      mine.passed += t.passed;
      mine.failed += t.failed;
      mine.skipped += t.skipped;
      mine.undecided += t.undecided;
    }
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    undecided += other.undecided;
  }
  [[nodiscard]] int failed() const { return static_cast<int>(failures.size()); }
};

using RecordSink = std::function<void(const VerificationRecord&)>;

/// Runs every instance checker on `g`: per edge e and per colouring of
/// G - e, the multifan lemma at both ends, both Kierstead-path statements
/// for every four-vertex path, the parity lemma, the deficiency count and,
/// for short-kites on e, the kite lemma, the linkage claim and the
/// recolouring script; per edge, the adjacency lemma; per full-deficiency
/// pair, statements (i)-(iv) and the corollary.
inline LemmaSuiteReport run_lemma_suite(const Graph& g, const std::string& id, const LemmaSuiteOptions& options = {},
                                        const RecordSink& sink = {}) {
  LemmaSuiteReport report;
  auto emit = [&](const VerificationRecord& r) {
    report.add(r);
    if (sink) sink(r);
  };

  const ChromaticIndex ci = chromatic_index(g, options.solve);
  const Host host{g, ci.decided() && ci.edge_class() == EdgeClass::kClass2, id};
  if (!ci.decided()) {
    VerificationRecord r;
    r.lemma = "classification";
    r.instance_id = host.label();
    r.undecided = true;
    emit(r);
    return report;
  }
  if (ci.witness) emit(check_parity(*ci.witness, host.label() + "/full"));

  const int delta = g.max_degree();
  const auto kites = options.include_kites ? find_short_kites(g) : std::vector<ShortKite>{};
  std::vector<std::optional<bool>> critical(g.size());

  for (EdgeId e = 0; e < g.size(); ++e) {
    const Edge ed = g.edge(e);
    const std::string etag = "e" + std::to_string(ed.u) + "-" + std::to_string(ed.v);
    std::vector<EdgeColoring> colorings;
    const Decision d = enumerate_colorings(
        g, delta, e,
        [&](const EdgeColoring& phi) {
          colorings.push_back(phi);
          return static_cast<int>(colorings.size()) < options.colorings_per_edge;
        },
        options.solve);
    if (!colorings.empty()) {
      critical[e] = host.class2;
    } else if (d == Decision::kNotColorable) {
      critical[e] = false;
    }

    if (critical[e].has_value()) {
      emit(check_val(host, e, *critical[e], etag));
    } else {
      VerificationRecord r = check_val(host, e, false, etag);
      r.undecided = true;
      emit(r);
    }

    for (std::size_t j = 0; j < colorings.size(); ++j) {
      const EdgeColoring& phi = colorings[j];
      const std::string tag = etag + "/phi" + std::to_string(j);
      emit(check_parity(phi, host.label() + "/" + tag));
      for (Vertex center : {ed.u, ed.v})
        emit(check_multifan_lemma(host, phi, build_maximal_multifan(phi, center), tag + "/fan" + std::to_string(center)));
      for (const KiersteadPath& k : enumerate_kierstead_paths(phi, 3))
        for (const auto& r : check_kierstead_lemma(host, phi, k, tag + "/path" + to_string(k.vertices))) emit(r);
      if (g.degree(ed.u) + g.degree(ed.v) == delta + 2) emit(check_deficiency_count(host, phi, ed.u, ed.v, tag));
      for (const ShortKite& kite : kites) {
        if (!((kite.a == ed.u && kite.b == ed.v) || (kite.a == ed.v && kite.b == ed.u))) continue;
        const std::string ktag = tag + "/kite" +
                                 to_string(std::vector<Vertex>{kite.a, kite.b, kite.c, kite.u, kite.x, kite.y});
        emit(check_short_kite_lemma(host, kite, phi, ktag));
        emit(check_claim2_linkage(host, kite, phi, ktag));
        emit(check_equal_missing_script(host, kite, phi, ktag));
      }
    }
  }

  for (const FullDeficiencyPair& pair : find_full_deficiency_pairs(g)) {
    const EdgeId e = g.require_edge(pair.u, pair.v);
    const std::string tag = "pair" + std::to_string(pair.u) + "-" + std::to_string(pair.v);
    for (auto r : check_full_deficiency_lemma(host, pair, critical[e].value_or(false), tag)) {
      if (!critical[e].has_value()) r.undecided = true;
      emit(r);
    }
  }
  return report;
}

}  // namespace vsplit
