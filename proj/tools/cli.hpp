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

// Command-line front end. Exit codes: 0 success, 1 failed check,
// 2 usage or input error, 3 undecided within budget.

#pragma once

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "vsplit/criticality.hpp"
#include "vsplit/graph6.hpp"
#include "vsplit/lemma_suite.hpp"
#include "vsplit/log.hpp"
#include "vsplit/named.hpp"
#include "vsplit/verifier.hpp"
#include "vsplit/vizing.hpp"

namespace vsplit::cli {

enum ExitCode : int { kOk = 0, kFailure = 1, kUsage = 2, kUndecided = 3 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string builder;
  std::string graph6;
  std::string input;
  bool json = false;
  long long budget_ms = 60000;
  int jobs = std::max(1u, std::thread::hardware_concurrency());
  std::string log;
  bool resume = false;
  bool long_run = false;
  int m_max = 8;
  std::string filter = "conjecture-base";
  int min_degree = 0;
  int vertex = -1;
  std::vector<int> first;
  int colorings_per_edge = 2;
};

namespace detail {

inline SolveOptions solve_options(const Options& o) {
  return SolveOptions{std::chrono::milliseconds(o.budget_ms)};
}

inline std::vector<Graph> read_lines(std::istream& in, const std::string& source) {
  try {
    return read_graph6_stream(in);
  } catch (const Graph6Error& e) {
    throw UsageError(source + ": " + e.what());
  }
}

/// The graphs named by --builder, --graph6 or --input ("-" is stdin).
/// With none of them, stdin is read when `stdin_default`.
inline std::vector<Graph> resolve_inputs(const Options& o, std::istream& in, bool stdin_default) {
  const int given = !o.builder.empty() + !o.graph6.empty() + !o.input.empty();
  if (given > 1) throw UsageError("give at most one of --builder, --graph6, --input");
  if (!o.builder.empty()) {
    auto g = graph_by_name(o.builder);
    if (!g) throw UsageError("unknown builder '" + o.builder + "'");
    return {*g};
  }
  if (!o.graph6.empty()) {
    try {
      return {parse_graph6(o.graph6)};
    } catch (const Graph6Error& e) {
      throw UsageError(std::string("malformed graph6: ") + e.what());
    }
  }
  if (o.input == "-" || (o.input.empty() && stdin_default)) return read_lines(in, "stdin");
  if (o.input.empty()) return {};
  std::ifstream file(o.input);
  if (!file) throw UsageError("cannot read " + o.input);
  return read_lines(file, o.input);
}

inline std::vector<Graph> require_inputs(const Options& o, std::istream& in) {
  auto graphs = resolve_inputs(o, in, true);
  if (graphs.empty()) throw UsageError("no input graph");
  return graphs;
}

inline int worst(int a, int b) {
  // failure dominates undecided, which dominates success
  auto rank = [](int c) { return c == kFailure ? 2 : c == kUndecided ? 1 : 0; };
  return rank(a) >= rank(b) ? a : b;
}

inline Json coloring_json(const EdgeColoring& phi) {
  Json edges = Json::array();
  for (EdgeId e = 0; e < phi.graph().size(); ++e) {
    const Edge ed = phi.graph().edge(e);
    edges.push_back(Json::array({ed.u, ed.v, phi.color(e)}));
  }
  return Json{{"graph6", emit_graph6(phi.graph())}, {"colors", phi.palette_size()}, {"edges", edges}};
}

inline void print_tally_table(std::ostream& out, const std::map<std::string, RecordTally>& tallies) {
  out << std::left << std::setw(28) << "check" << std::right << std::setw(10) << "passed" << std::setw(10) << "failed"
      << std::setw(10) << "skipped" << std::setw(11) << "undecided" << '\n';
  for (const auto& [name, t] : tallies)
    out << std::left << std::setw(28) << name << std::right << std::setw(10) << t.passed << std::setw(10) << t.failed
        << std::setw(10) << t.skipped << std::setw(11) << t.undecided << '\n';
}

inline Json tally_json(const RecordTally& t) {
  return Json{{"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}, {"undecided", t.undecided}};
}

}  // namespace detail

inline int cmd_chi(const Options& o, std::istream& in, std::ostream& out) {
  int code = kOk;
  for (const Graph& g : detail::require_inputs(o, in)) {
    const ChromaticIndex ci = chromatic_index(g, detail::solve_options(o));
    if (!ci.decided()) code = detail::worst(code, kUndecided);
    if (o.json) {
      Json j{{"graph6", emit_graph6(g)}, {"max_degree", g.max_degree()}, {"decision", to_string(ci.decision)}};
      j["chromatic_index"] = ci.decided() ? Json(ci.value) : Json();
      j["class"] = ci.decided() ? Json(ci.edge_class() == EdgeClass::kClass1 ? 1 : 2) : Json();
      out << j.dump() << '\n';
    } else if (ci.decided()) {
      out << "Δ=" << g.max_degree() << " χ'=" << ci.value
          << " class=" << (ci.edge_class() == EdgeClass::kClass1 ? 1 : 2) << '\n';
    } else {
      out << "Δ=" << g.max_degree() << " χ'=undecided\n";
    }
  }
  return code;
}

inline int cmd_color(const Options& o, std::istream& in, std::ostream& out) {
  int code = kOk;
  for (const Graph& g : detail::require_inputs(o, in)) {
    const ChromaticIndex ci = chromatic_index(g, detail::solve_options(o));
    std::optional<EdgeColoring> phi = ci.witness;
    if (!ci.decided()) code = detail::worst(code, kUndecided);
    // class 2 (or undecided): Vizing's bound is then optimal or the best known
    if (!phi) phi = vizing_color(g);
    if (o.json)
      out << detail::coloring_json(*phi).dump() << '\n';
    else
      out << serialize_coloring(*phi);
  }
  return code;
}

inline int cmd_critical(const Options& o, std::istream& in, std::ostream& out) {
  int code = kOk;
  for (const Graph& g : detail::require_inputs(o, in)) {
    const CriticalityReport rep = analyze_criticality(g, detail::solve_options(o));
    if (rep.any_undecided() && rep.class_decision != Decision::kColorable) code = detail::worst(code, kUndecided);
    Json noncritical = Json::array();
    for (EdgeId e = 0; e < g.size(); ++e)
      if (rep.edge_decisions[e] == Decision::kNotColorable)
        noncritical.push_back(Json::array({g.edge(e).u, g.edge(e).v}));
    if (o.json) {
      out << Json{{"graph6", emit_graph6(g)},
                  {"max_degree", g.max_degree()},
                  {"class2", rep.class2()},
                  {"connected", rep.connected},
                  {"delta_critical", rep.delta_critical()},
                  {"critical_edges", rep.critical_count()},
                  {"edges", g.size()},
                  {"noncritical", noncritical}}
                 .dump()
          << '\n';
    } else {
      out << "delta-critical: " << (rep.delta_critical() ? "true" : "false") << " (" << rep.critical_count() << "/"
          << g.size() << " edges critical)";
      if (rep.class_decision == Decision::kColorable) out << " [class 1]";
      if (!rep.connected) out << " [disconnected]";
      out << '\n';
    }
  }
  return code;
}

inline int cmd_split(const Options& o, std::istream& in, std::ostream& out) {
  const auto graphs = detail::require_inputs(o, in);
  if (o.vertex >= 0) {
    if (graphs.size() != 1) throw UsageError("--vertex needs exactly one input graph");
    const Graph& g = graphs.front();
    if (!g.contains(o.vertex)) throw UsageError("split vertex out of range");
    std::vector<Vertex> a(o.first.begin(), o.first.end()), b;
    for (Vertex w : g.neighbors(o.vertex))
      if (std::find(a.begin(), a.end(), w) == a.end()) b.push_back(w);
    Graph s;
    try {
      s = vertex_split(g, SplitSpec{o.vertex, a, b});
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    if (o.json)
      out << Json{{"graph6", emit_graph6(s)}, {"order", s.order()}, {"max_degree", s.max_degree()},
                  {"overfull", is_overfull(s)}}
                 .dump()
          << '\n';
    else
      out << emit_graph6(s) << "  order=" << s.order() << " Δ=" << s.max_degree()
          << " overfull=" << (is_overfull(s) ? "true" : "false") << '\n';
    return kOk;
  }
  for (const Graph& g0 : graphs) {
    const Graph g = canonical_form(g0);
    const std::string g6 = emit_graph6(g);
    for (const SplitSpec& s : enumerate_splits(g, g.order() <= kMaxCanonicalOrder)) {
      const Graph h = vertex_split(g, s);
      if (o.json)
        out << Json{{"instance_id", instance_id(g6, s)}, {"graph6", emit_graph6(h)}}.dump() << '\n';
      else
        out << std::left << std::setw(40) << instance_id(g6, s) << emit_graph6(h) << '\n';
    }
  }
  return kOk;
}

inline int cmd_lemmas(const Options& o, std::istream& in, std::ostream& out) {
  std::optional<LogWriter> log;
  if (!o.log.empty()) log.emplace(o.log, false);
  LemmaSuiteOptions opts;
  opts.colorings_per_edge = o.colorings_per_edge;
  opts.solve = detail::solve_options(o);
  LemmaSuiteReport total;
  for (const Graph& g : detail::require_inputs(o, in)) {
    total.merge(run_lemma_suite(g, emit_graph6(g), opts, [&](const VerificationRecord& r) {
      if (log) log->write(r);
    }));
  }
  const int code = total.failed() ? kFailure : total.undecided ? kUndecided : kOk;
  if (o.json) {
    Json tallies = Json::object();
    for (const auto& [name, t] : total.tallies) tallies[name] = detail::tally_json(t);
    Json failures = Json::array();
    for (const auto& r : total.failures) failures.push_back(to_json(r));
    out << Json{{"tallies", tallies}, {"failures", failures}}.dump() << '\n';
  } else {
    detail::print_tally_table(out, total.tallies);
    for (const auto& r : total.failures) out << "FAILED " << to_json_line(r) << '\n';
  }
  return code;
}

inline int run_sweep_command(const Options& o, SweepConfig config, bool theorem, std::ostream& out,
                             std::ostream& err) {
  if (config.m_max > 8 && !o.long_run) throw UsageError("--m-max above 8 needs --long (runs for hours)");
  if (config.m_max % 2) throw UsageError("--m-max must be even");
  if (o.resume && o.log.empty()) throw UsageError("--resume needs --log");
  std::vector<VerificationRecord> prior;
  if (o.resume) {
    try {
      prior = read_log_file(o.log);
    } catch (const LogError& e) {
      err << "refusing to resume: " << e.what() << '\n';
      return kUsage;
    }
  }
  std::optional<LogWriter> log;
  if (!o.log.empty()) log.emplace(o.log, o.resume);
  std::vector<VerificationRecord> failures;
  auto sink = [&](const VerificationRecord& r) {
    if (log) log->write(r);
    if (r.failed()) failures.push_back(r);
  };
  const auto start = std::chrono::steady_clock::now();
  const SweepSummary s = theorem ? verify_theorem1(config, sink, prior) : sweep_conjecture_range(config, sink, prior);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  for (const auto& r : prior)
    if (r.failed()) failures.push_back(r);

  if (o.json) {
    Json f = Json::array();
    for (const auto& r : failures) f.push_back(to_json(r));
    out << Json{{"instances", s.instances}, {"resumed", s.resumed}, {"tally", detail::tally_json(s.tally)},
                {"seconds", seconds}, {"failures", f}}
               .dump()
        << '\n';
  } else {
    out << std::left << std::setw(12) << "instances" << s.instances << '\n'
        << std::setw(12) << "resumed" << s.resumed << '\n'
        << std::setw(12) << "passed" << s.tally.passed << '\n'
        << std::setw(12) << "failed" << s.tally.failed << '\n'
        << std::setw(12) << "skipped" << s.tally.skipped << '\n'
        << std::setw(12) << "undecided" << s.tally.undecided << '\n'
        << std::setw(12) << "seconds" << std::fixed << std::setprecision(1) << seconds << '\n';
    out << s.tally.failed << " failures\n";
    for (const auto& r : failures) out << "COUNTEREXAMPLE " << to_json_line(r) << '\n';
  }
  if (s.tally.failed) return kFailure;
  if (s.tally.undecided) return kUndecided;
  return kOk;
}

inline SweepConfig sweep_config(const Options& o) {
  SweepConfig c;
  c.m_max = o.m_max;
  c.solve = detail::solve_options(o);
  c.jobs = o.jobs;
  return c;
}

inline int cmd_theorem1(const Options& o, std::ostream& out, std::ostream& err) {
  return run_sweep_command(o, sweep_config(o), true, out, err);
}

inline int cmd_sweep(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
  SweepConfig c = sweep_config(o);
  if (o.filter == "conjecture-base") {
    c.filter = DegreeFilter::kConjectureBase;
  } else if (o.filter == "conjecture-split") {
    c.filter = DegreeFilter::kConjectureSplit;
  } else if (o.filter == "theorem") {
    c.filter = DegreeFilter::kTheorem;
  } else if (o.filter == "custom") {
    c.filter = DegreeFilter::kCustom;
    c.min_degree = o.min_degree;
  } else {
    throw UsageError("unknown filter '" + o.filter + "'");
  }
  c.bases = detail::resolve_inputs(o, in, false);
  return run_sweep_command(o, c, false, out, err);
}

inline int cmd_figure1(const Options& o, std::ostream& out) {
  const VerificationRecord r = reproduce_figure1(detail::solve_options(o));
  if (o.json) {
    out << to_json_line(r) << '\n';
  } else if (r.witness.is_null()) {
    out << "no witness found\n";
  } else {
    const Json& w = r.witness;
    out << "edge removed   " << w["edge"].dump() << '\n'
        << "path           " << w["path"].dump() << '\n'
        << "missing sets   " << w["missing"].dump() << '\n'
        << "min d(v1),d(v2) " << w["min_degree_v1_v2"] << " (Δ=" << w["max_degree"] << ")\n"
        << "verdict        " << to_string(r.status()) << '\n'
        << w["coloring"].get<std::string>();
  }
  return r.status() == Status::kPassed ? kOk : r.status() == Status::kUndecided ? kUndecided : kFailure;
}

/// Entry point shared by the binary and the tests. `args` excludes argv[0].
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Edge-colouring toolkit for vertex-split critical graphs", "vsplit"};
  app.require_subcommand(1, 1);
  Options o;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--builder", o.builder, "named graph: " + [] {
      std::string s;
      for (const auto& n : builder_names()) s += (s.empty() ? "" : ", ") + n;
      return s;
    }());
    sub->add_option("--graph6", o.graph6, "graph in graph6 format");
    sub->add_option("--input", o.input, "file with one graph6 per line ('-' for stdin)");
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "machine-readable output");
    sub->add_option("--budget-ms", o.budget_ms, "solver budget per call in milliseconds")->check(CLI::PositiveNumber);
  };
  auto add_sweep = [&](CLI::App* sub) {
    sub->add_option("--m-max", o.m_max, "largest base order (even)")->check(CLI::Range(4, 64));
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--log", o.log, "JSON-lines record log");
    sub->add_flag("--resume", o.resume, "skip instances already in --log");
    sub->add_flag("--long", o.long_run, "allow --m-max above 8");
  };

  auto* chi = app.add_subcommand("chi", "chromatic index and class");
  auto* color = app.add_subcommand("color", "an optimal edge colouring (Δ+1 colours for class 2)");
  auto* critical = app.add_subcommand("critical", "per-edge criticality");
  auto* split = app.add_subcommand("split", "vertex splits of a graph");
  auto* lemmas = app.add_subcommand("lemmas", "run the lemma checkers on every edge");
  auto* theorem1 = app.add_subcommand("theorem1", "verify all splits in the theorem range");
  auto* sweep = app.add_subcommand("sweep", "verify all splits in the conjecture range");
  auto* figure1 = app.add_subcommand("figure1", "find a non-elementary Kierstead path in P*");
  for (auto* s : {chi, color, critical, split, lemmas}) {
    add_input(s);
    add_common(s);
  }
  add_input(sweep);
  for (auto* s : {theorem1, sweep, figure1}) add_common(s);
  for (auto* s : {theorem1, sweep}) add_sweep(s);
  split->add_option("--vertex", o.vertex, "vertex to split");
  split->add_option("--first", o.first, "neighbours kept by the old vertex")->delimiter(',');
  lemmas->add_option("--log", o.log, "JSON-lines record log");
  lemmas->add_option("--colorings", o.colorings_per_edge, "colourings of G-e per edge")->check(CLI::PositiveNumber);
  sweep->add_option("--filter", o.filter, "conjecture-base | conjecture-split | theorem | custom");
  sweep->add_option("--min-degree", o.min_degree, "lower degree bound for --filter custom");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  try {
    if (chi->parsed()) return cmd_chi(o, in, out);
    if (color->parsed()) return cmd_color(o, in, out);
    if (critical->parsed()) return cmd_critical(o, in, out);
    if (split->parsed()) return cmd_split(o, in, out);
    if (lemmas->parsed()) return cmd_lemmas(o, in, out);
    if (theorem1->parsed()) return cmd_theorem1(o, out, err);
    if (sweep->parsed()) return cmd_sweep(o, in, out, err);
    if (figure1->parsed()) return cmd_figure1(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace vsplit::cli
