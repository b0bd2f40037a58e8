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

#include <optional>
#include <vector>

#include "vsplit/graph.hpp"
#include "vsplit/solver.hpp"

namespace vsplit {

/// Per-edge criticality of a graph: for class 2 hosts, edge e is critical
/// iff G - e has a max_degree-colouring.
struct CriticalityReport {
  Decision class_decision = Decision::kUndecided;  // of the Delta-colouring test on G
  bool connected = false;
  std::vector<Decision> edge_decisions;            // Delta-colouring test on G - e

  [[nodiscard]] bool class2() const { return class_decision == Decision::kNotColorable; }
  [[nodiscard]] int critical_count() const {
    int n = 0;
    for (Decision d : edge_decisions) n += d == Decision::kColorable;
    return n;
  }
  [[nodiscard]] bool any_undecided() const {
    if (class_decision == Decision::kUndecided) return true;
    for (Decision d : edge_decisions)
      if (d == Decision::kUndecided) return true;
    return false;
  }
  /// Connected, class 2 and every edge critical.
  [[nodiscard]] bool delta_critical() const {
    return connected && class2() && critical_count() == static_cast<int>(edge_decisions.size());
  }
};

/// Edge decisions are computed in ascending edge id order. They are skipped
/// (left undecided) for class 1 graphs, where no edge can lower chi'.
inline CriticalityReport analyze_criticality(const Graph& g, SolveOptions options = {}) {
  CriticalityReport report;
  report.connected = g.is_connected();
  report.class_decision = find_delta_coloring(g, std::nullopt, options).decision;
  report.edge_decisions.assign(g.size(), Decision::kUndecided);
  if (!report.class2()) return report;
  for (EdgeId e = 0; e < g.size(); ++e)
    report.edge_decisions[e] = find_delta_coloring(g, e, options).decision;
  return report;
}

}  // namespace vsplit
