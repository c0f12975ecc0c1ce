// Copyright 2026 The wep Authors
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

#include <cctype>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wep/error.hpp"
#include "wep/graph.hpp"

namespace wep {

// graph6: N(n) followed by the upper triangle x(0,1) x(0,2) x(1,2) x(0,3) ...
// (column by column), packed six bits per byte, each byte offset by 63.

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
  text = detail::trim(text);
  for (unsigned char c : text)
    if (c < 63 || c > 126)
      detail::fail(ErrorKind::MalformedGraph6,
                   "byte " + std::to_string(static_cast<int>(c)) + " outside 63..126");
  detail::require(!text.empty(), ErrorKind::MalformedGraph6, "empty record");

  std::size_t pos = 0;
  auto next = [&]() -> std::uint32_t {
    if (pos >= text.size()) detail::fail(ErrorKind::MalformedGraph6, "record truncated");
    return static_cast<std::uint32_t>(static_cast<unsigned char>(text[pos++]) - 63);
  };

  std::uint64_t n = next();
  if (n == 63) {
    detail::require(text.size() > 1, ErrorKind::MalformedGraph6, "record truncated");
    if (static_cast<unsigned char>(text[1]) - 63 == 63) {
      // 8-byte form: 126 126 then six 6-bit groups.
      ++pos;
      n = 0;
      for (int i = 0; i < 6; ++i) n = (n << 6) | next();
    } else {
      n = 0;
      for (int i = 0; i < 3; ++i) n = (n << 6) | next();
    }
  }
  if (n > static_cast<std::uint64_t>(kMaxOrder))
    detail::fail(ErrorKind::GraphTooLarge, "graph6 order " + std::to_string(n) + " exceeds 65536");

  const int order = static_cast<int>(n);
  const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes)
    detail::fail(ErrorKind::MalformedGraph6,
                 "expected " + std::to_string(bytes) + " payload bytes, got " +
                     std::to_string(text.size() - pos));

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const auto byte = static_cast<unsigned char>(text[pos + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph(order, edges);
}

/// Canonical graph6 encoding (no header, no trailing newline).
inline std::string emit_graph6(const Graph& g) {
  const std::uint64_t n = static_cast<std::uint64_t>(g.order());
  std::string out;
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
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.order(); ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

/// Edge list: "n m" on the first line, then m lines "u v" (1-based).
inline Graph parse_edge_list(std::string_view text) {
  std::vector<long long> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    long long value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + j, value);
    if (ec != std::errc() || ptr != text.data() + j)
      detail::fail(ErrorKind::MalformedEdgeList,
                   "bad token '" + std::string(text.substr(i, j - i)) + "'");
    tokens.push_back(value);
    i = j;
  }
  detail::require(tokens.size() >= 2, ErrorKind::MalformedEdgeList, "missing 'n m' header");
  const long long n = tokens[0];
  const long long m = tokens[1];
  detail::require(n >= 1 && m >= 0, ErrorKind::MalformedEdgeList, "header must have n >= 1, m >= 0");
  if (n > kMaxOrder)
    detail::fail(ErrorKind::GraphTooLarge, "edge list order " + std::to_string(n) + " exceeds 65536");
  if (static_cast<long long>(tokens.size()) != 2 + 2 * m)
    detail::fail(ErrorKind::MalformedEdgeList,
                 "header announces " + std::to_string(m) + " edges but body has " +
                     std::to_string(tokens.size() - 2) + " numbers");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    const long long u = tokens[2 + 2 * e];
    const long long v = tokens[3 + 2 * e];
    if (u < 1 || u > n || v < 1 || v > n)
      detail::fail(ErrorKind::VertexOutOfRange,
                   "edge " + std::to_string(u) + " " + std::to_string(v) + " outside 1.." +
                       std::to_string(n));
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
  }
  return Graph(static_cast<int>(n), edges);
}

inline std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges())
    out += std::to_string(e.u + 1) + " " + std::to_string(e.v + 1) + "\n";
  return out;
}

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Auto-detection: a record whose first token is a decimal number followed by
/// more tokens is an edge list, anything else is graph6.
inline Graph read_graph(std::string_view text, GraphFormat format = GraphFormat::Auto) {
  if (format == GraphFormat::Auto) {
    const std::string_view t = detail::trim(text);
    const bool digits_then_space =
        !t.empty() && std::isdigit(static_cast<unsigned char>(t.front())) &&
        t.find_first_of(" \t\n") != std::string_view::npos;
    format = digits_then_space ? GraphFormat::EdgeList : GraphFormat::Graph6;
  }
  return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edge_list(text);
}

}  // namespace wep
