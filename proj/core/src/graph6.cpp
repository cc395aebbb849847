// Copyright 2026 The nbspec Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nbspec/graph6.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>

#include "nbspec/errors.hpp"

namespace nbspec {
namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int sextet(std::string_view s, std::size_t pos) {
  const int c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: character " + std::to_string(c) +
                         " outside 63..126 at byte " + std::to_string(pos),
                     pos);
  }
  return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view record) {
  std::size_t base = 0;
  if (record.substr(0, kHeader.size()) == kHeader) base = kHeader.size();
  while (!record.empty() && (record.back() == '\n' || record.back() == '\r')) {
    record.remove_suffix(1);
  }
  if (record.size() <= base) throw ParseError("graph6: empty record", base);

  std::size_t pos = base;
  std::int64_t n = 0;
  if (record[pos] != '~') {
    n = sextet(record, pos);
    pos += 1;
  } else {
    if (record.size() < pos + 4) {
      throw ParseError("graph6: truncated size prefix", pos);
    }
    if (record[pos + 1] == '~') {
      throw ParseError("graph6: 8-byte size prefix exceeds supported order",
                       pos + 1);
    }
    for (std::size_t k = 1; k <= 3; ++k) n = (n << 6) | sextet(record, pos + k);
    if (n < 63) {
      throw ParseError("graph6: long size prefix used for n < 63", pos);
    }
    pos += 4;
  }

  const std::int64_t bits = n * (n - 1) / 2;
  const std::int64_t want = (bits + 5) / 6;
  const auto have = static_cast<std::int64_t>(record.size() - pos);
  if (have != want) {
    throw ParseError("graph6: expected " + std::to_string(want) +
                         " data bytes for n=" + std::to_string(n) + ", found " +
                         std::to_string(have),
                     pos + static_cast<std::size_t>(std::min(have, want)));
  }

  std::vector<Edge> edges;
  std::int64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const std::size_t at = pos + static_cast<std::size_t>(k / 6);
      const int chunk = sextet(record, at);
      if ((chunk >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  if (bits % 6 != 0) {
    const std::size_t last = record.size() - 1;
    const int pad = static_cast<int>(6 - bits % 6);
    if (sextet(record, last) & ((1 << pad) - 1)) {
      throw ParseError("graph6: nonzero padding bits", last);
    }
  }
  return Graph(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  const int n = g.vertex_count();
  if (n > kGraph6MaxVertices) {
    throw UnsupportedSizeError("graph6: order above 258047 not supported");
  }
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int chunk = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  }
  return out;
}

std::vector<Graph> read_graph6(std::istream& in) {
  std::vector<Graph> graphs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line == kHeader) continue;
    try {
      graphs.push_back(parse_graph6(line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(lineno) + ": " + e.what(),
                       e.offset(), lineno);
    }
  }
  return graphs;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6(in);
}

void write_graph6(std::ostream& out, std::span<const Graph> graphs) {
  for (const Graph& g : graphs) out << write_graph6(g) << '\n';
}

}  // namespace nbspec
