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

// graph6 encoding as used by nauty/geng: an order header followed by the
// upper triangle of the adjacency matrix in column order (x(0,1), x(0,2),
// x(1,2), x(0,3), ...), six bits per printable byte offset by 63.

#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vsplit/graph.hpp"

namespace vsplit {

class Graph6Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline constexpr long long kGraph6MaxOrder = 68719476735LL;

inline void append_order(std::string& out, long long n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
}

inline int sextet(char c) {
  if (c < 63 || c > 126) throw Graph6Error(std::string("invalid graph6 byte '") + c + "'");
  return c - 63;
}

}  // namespace detail

inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  detail::append_order(out, n);
  int acc = 0;
  int nbits = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
  return out;
}

inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Graph6Error("empty graph6 string");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != 126) {
    n = detail::sextet(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != 126) {
    if (text.size() < 4) throw Graph6Error("truncated graph6 order header");
    for (int i = 1; i <= 3; ++i) n = (n << 6) | detail::sextet(text[i]);
    if (n <= 62) throw Graph6Error("non-minimal graph6 order header");
    pos = 4;
  } else {
    if (text.size() < 8) throw Graph6Error("truncated graph6 order header");
    for (int i = 2; i <= 7; ++i) n = (n << 6) | detail::sextet(text[i]);
    if (n <= 258047) throw Graph6Error("non-minimal graph6 order header");
    pos = 8;
  }
  // Dense edge-index storage is quadratic in n; keep orders parseable but bounded.
  if (n > 1 << 14) throw Graph6Error("graph6 order out of supported range");

  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(text.size() - pos) < bytes)
    throw Graph6Error("truncated graph6 adjacency data");
  if (static_cast<long long>(text.size() - pos) > bytes)
    throw Graph6Error("trailing bytes after graph6 adjacency data");

  std::vector<std::pair<Vertex, Vertex>> pairs;
  long long k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = detail::sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) pairs.emplace_back(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = detail::sextet(text[pos + bytes - 1]);
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error("nonzero graph6 padding bits");
  }
  return Graph(static_cast<int>(n), pairs);
}

/// Reads one graph6 string per non-empty line.
inline std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace vsplit
