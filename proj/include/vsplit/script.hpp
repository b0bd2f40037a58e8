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

// Recolouring scripts: sequences of chain swaps and single-edge recolourings
// applied left to right, each checked against the colouring left by the
// previous step. Vertices are named either directly or through role labels
// so that a step can relabel roles mid-script.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "vsplit/coloring.hpp"
#include "vsplit/kempe.hpp"
#include "vsplit/lemmas.hpp"
#include "vsplit/record.hpp"
#include "vsplit/structures.hpp"

namespace vsplit {

/// A vertex given directly or by role name.
using VertexRef = std::variant<Vertex, std::string>;

namespace step {

/// Exchange alpha/beta on the path segment between x and y.
struct SwapSubchain {
  VertexRef x, y;
  Color alpha, beta;
};
/// Kempe change on the whole (alpha, beta)-chain through x.
struct SwapChainAt {
  VertexRef x;
  Color alpha, beta;
};
/// uv: from -> to.
struct RecolorEdge {
  VertexRef u, v;
  Color from, to;
};
/// Colour the uncoloured edge uv.
struct ColorEdge {
  VertexRef u, v;
  Color color;
};
/// With ab uncoloured: ab takes the colour of ac, ac becomes uncoloured, and
/// the role labels bound to b and c are exchanged.
struct RotateUncolored {
  std::string a, b, c;
};

}  // namespace step

using ScriptStep =
    std::variant<step::SwapSubchain, step::SwapChainAt, step::RecolorEdge, step::ColorEdge, step::RotateUncolored>;

struct RecolorScript {
  std::map<std::string, Vertex> roles;
  std::vector<ScriptStep> steps;
};

struct StepFailure {
  int index = 0;
  std::string reason;
};

struct ScriptOutcome {
  EdgeColoring final;
  std::vector<EdgeColoring> trace;  // colouring after each completed step
  std::map<std::string, Vertex> roles;
  std::optional<StepFailure> failure;

  [[nodiscard]] bool completed() const { return !failure.has_value(); }
};

namespace detail {

class ScriptRunner {
 public:
  ScriptRunner(EdgeColoring phi, std::map<std::string, Vertex> roles) : phi_(std::move(phi)), roles_(std::move(roles)) {}

  void operator()(const step::SwapSubchain& s) {
    phi_ = subchain_swap(phi_, resolve(s.x), resolve(s.y), s.alpha, s.beta);
  }
  void operator()(const step::SwapChainAt& s) { phi_ = kempe_swap_at(phi_, resolve(s.x), s.alpha, s.beta); }
  void operator()(const step::RecolorEdge& s) {
    const EdgeId e = edge(s.u, s.v);
    if (phi_.color(e) != s.from)
      throw ColoringError("edge carries colour " + std::to_string(phi_.color(e)) + ", expected " +
                          std::to_string(s.from));
    phi_ = recolor_edge(phi_, e, s.to);
  }
  void operator()(const step::ColorEdge& s) {
    const EdgeId e = edge(s.u, s.v);
    if (phi_.color(e) != kUncolored) throw ColoringError("edge to colour is already coloured");
    phi_.assign(e, s.color);
  }
  void operator()(const step::RotateUncolored& s) {
    const Vertex a = role(s.a), b = role(s.b), c = role(s.c);
    const EdgeId ab = phi_.graph().require_edge(a, b);
    const EdgeId ac = phi_.graph().require_edge(a, c);
    if (phi_.color(ab) != kUncolored) throw ColoringError("rotation needs ab uncoloured");
    const Color moved = phi_.color(ac);
    if (moved == kUncolored) throw ColoringError("rotation needs ac coloured");
    phi_.clear(ac);
    phi_.assign(ab, moved);
    std::swap(roles_[s.b], roles_[s.c]);
  }

  EdgeColoring phi_;
  std::map<std::string, Vertex> roles_;

 private:
  Vertex role(const std::string& name) const {
    auto it = roles_.find(name);
    if (it == roles_.end()) throw std::invalid_argument("unbound role " + name);
    return it->second;
  }
  Vertex resolve(const VertexRef& ref) const {
    if (const auto* v = std::get_if<Vertex>(&ref)) return *v;
    return role(std::get<std::string>(ref));
  }
  EdgeId edge(const VertexRef& u, const VertexRef& v) const {
    return phi_.graph().require_edge(resolve(u), resolve(v));
  }
};

}  // namespace detail

/// Runs the steps in order. Stops at the first step whose precondition fails
/// (unlinked or cyclic subchain, colour clash, wrong current colour) and
/// reports its index; the colouring stays proper after every step.
inline ScriptOutcome execute_script(const EdgeColoring& phi, const RecolorScript& script) {
  detail::ScriptRunner runner(phi, script.roles);
  ScriptOutcome out{phi, {}, script.roles, std::nullopt};
  for (std::size_t i = 0; i < script.steps.size(); ++i) {
    try {
      std::visit(runner, script.steps[i]);
    } catch (const std::exception& e) {
      out.failure = StepFailure{static_cast<int>(i), e.what()};
      break;
    }
    out.trace.push_back(runner.phi_);
  }
  out.final = runner.phi_;
  out.roles = runner.roles_;
  return out;
}

/// The five-step recolouring of the equal-missing-colour case of the
/// short-kite argument:
///   ux: gamma -> eta | swap P[u,y](eta, delta) | ub: delta -> 1 |
///   swap P_u(1, gamma) | colour ab with delta,
/// where 1 = missing(b), gamma = phi(ux), eta = missing(x), delta = phi(bu).
/// When the (1, gamma)-path leaving u along uy ends at b, the script first
/// rotates the uncoloured edge from ab to ac and swaps the roles of b and c.
/// Returns nullopt when those colours are not defined on this instance.
inline std::optional<RecolorScript> build_equal_missing_script(const EdgeColoring& phi, const ShortKite& kite) {
  const Graph& g = phi.graph();
  if (!is_short_kite(g, kite)) return std::nullopt;
  const ColorSet mb = phi.missing(kite.b);
  const ColorSet mx = phi.missing(kite.x);
  if (mb.size() != 1 || mx.size() != 1 || mx != phi.missing(kite.y)) return std::nullopt;
  const Color one = *mb.min();
  const Color gamma = phi.color(kite.u, kite.x);
  const Color eta = *mx.min();
  const Color delta = phi.color(kite.b, kite.u);
  if (gamma == kUncolored || delta == kUncolored || gamma == one) return std::nullopt;

  RecolorScript script;
  script.roles = {{"a", kite.a}, {"b", kite.b}, {"c", kite.c}, {"u", kite.u}, {"x", kite.x}, {"y", kite.y}};
  if (phi.color(kite.u, kite.y) == one) {
    try {
      const KempeChain seg = chain_from(phi, kite.u, one, gamma, g.require_edge(kite.u, kite.y));
      if (seg.vertices.back() == kite.b) script.steps.push_back(step::RotateUncolored{"a", "b", "c"});
    } catch (const LinkageError&) {
      // cyclic or unexpected chain: leave roles as they are
    }
  }
  script.steps.push_back(step::RecolorEdge{std::string("u"), std::string("x"), gamma, eta});
  script.steps.push_back(step::SwapSubchain{std::string("u"), std::string("y"), eta, delta});
  script.steps.push_back(step::RecolorEdge{std::string("u"), std::string("b"), delta, one});
  script.steps.push_back(step::SwapChainAt{std::string("u"), one, gamma});
  script.steps.push_back(step::ColorEdge{std::string("a"), std::string("b"), delta});
  return script;
}

/// Runs build_equal_missing_script on a class 2 host. Completing it would
/// yield a Delta-colouring of G, so the conclusion is that the script stops
/// at a failed precondition.
inline VerificationRecord check_equal_missing_script(const Host& host, const ShortKite& kite, const EdgeColoring& phi,
                                                     const std::string& tag = {}) {
  VerificationRecord r;
  r.lemma = "kite_script";
  r.instance_id = detail::suffix(host.label(), tag);
  r.hypothesis("class2", host.class2);
  r.hypothesis("palette_is_max_degree", phi.palette_size() == host.graph.max_degree());
  r.hypothesis("uncolored_is_ab", detail::uncolored_is(phi, kite.a, kite.b));
  const auto script = build_equal_missing_script(phi, kite);
  r.hypothesis("script_defined", script.has_value());
  if (!script) return r;
  const ScriptOutcome outcome = execute_script(phi, *script);
  const bool full_coloring = outcome.completed() && outcome.final.is_complete() && outcome.final.verify_proper();
  r.conclusion = !full_coloring;
  r.witness = {{"steps", script->steps.size()}, {"completed", outcome.completed()}};
  if (outcome.failure) {
    r.witness["failed_step"] = outcome.failure->index;
    r.witness["reason"] = outcome.failure->reason;
  }
  return r;
}

}  // namespace vsplit
