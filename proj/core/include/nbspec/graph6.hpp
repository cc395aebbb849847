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

#ifndef NBSPEC_GRAPH6_HPP
#define NBSPEC_GRAPH6_HPP

#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nbspec/graph.hpp"

namespace nbspec {

// Largest order representable by the 4-byte size prefix.
inline constexpr int kGraph6MaxVertices = 258047;

/// Decodes one graph6 record.
///
/// An optional ">>graph6<<" header and trailing CR/LF are stripped. The
/// upper-triangle bits are read column by column, x(0,1), x(0,2), x(1,2),
/// x(0,3), ..., six bits per byte, each byte offset by 63. Throws ParseError
/// carrying the offending byte offset on a bad size prefix, a character
/// outside 63..126, a wrong record length or nonzero padding bits.
Graph parse_graph6(std::string_view record);

std::string write_graph6(const Graph& g);

// One record per non-empty line. ParseError::line() is 1-based.
std::vector<Graph> read_graph6(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

void write_graph6(std::ostream& out, std::span<const Graph> graphs);

}  // namespace nbspec

#endif  // NBSPEC_GRAPH6_HPP
