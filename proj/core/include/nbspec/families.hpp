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

#ifndef NBSPEC_FAMILIES_HPP
#define NBSPEC_FAMILIES_HPP

#include <cstdint>

#include "nbspec/graph.hpp"

// Named graphs used by the checks, the CLI and the tests.
namespace nbspec::families {

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph complete_bipartite(int a, int b);
Graph petersen();

// Two triangles sharing vertex 0: degrees (4,2,2,2,2).
Graph bowtie();

// Two 4-cycles sharing vertex 0: degrees (4,2,2,2,2,2,2).
Graph two_squares();

// G(n, p) with p = alpha / (n - 1), seeded.
Graph erdos_renyi(int n, double alpha, std::uint64_t seed);

}  // namespace nbspec::families

#endif  // NBSPEC_FAMILIES_HPP
