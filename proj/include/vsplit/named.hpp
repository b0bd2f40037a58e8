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

#include <charconv>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vsplit/graph.hpp"

namespace vsplit {

namespace detail {

inline std::optional<int> parse_int(std::string_view s) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || v < 0) return std::nullopt;
  return v;
}

}  // namespace detail

/// Builder names understood by graph_by_name: petersen, petersen_minus_vertex,
/// prism, Q3 (or cube), K<n>, C<n>, P<n>, K<p>,<q>, K<n>-PM.
inline std::vector<std::string> builder_names() {
  return {"petersen", "petersen_minus_vertex", "prism", "Q3", "cube", "K<n>", "C<n>", "P<n>", "K<p>,<q>", "K<n>-PM"};
}

/// nullopt for an unknown name or out-of-range parameter.
inline std::optional<Graph> graph_by_name(std::string_view name) {
  if (name == "petersen") return petersen();
  if (name == "petersen_minus_vertex" || name == "P*") return petersen_minus_vertex();
  if (name == "prism") return prism();
  if (name == "Q3" || name == "cube") return cube();
  if (name.size() < 2) return std::nullopt;
  const char head = name.front();
  std::string_view rest = name.substr(1);
  if (head == 'K') {
    if (rest.ends_with("-PM")) {
      auto n = detail::parse_int(rest.substr(0, rest.size() - 3));
      if (!n || *n < 2 || *n % 2) return std::nullopt;
      return complete_minus_perfect_matching(*n);
    }
    if (auto comma = rest.find(','); comma != std::string_view::npos) {
      auto p = detail::parse_int(rest.substr(0, comma));
      auto q = detail::parse_int(rest.substr(comma + 1));
      if (!p || !q || *p < 1 || *q < 1) return std::nullopt;
      return complete_bipartite(*p, *q);
    }
    auto n = detail::parse_int(rest);
    if (!n || *n < 1) return std::nullopt;
    return complete(*n);
  }
  if (head == 'C') {
    auto n = detail::parse_int(rest);
    if (!n || *n < 3) return std::nullopt;
    return cycle(*n);
  }
  if (head == 'P') {
    auto n = detail::parse_int(rest);
    if (!n || *n < 1) return std::nullopt;
    return path_graph(*n);
  }
  return std::nullopt;
}

}  // namespace vsplit
