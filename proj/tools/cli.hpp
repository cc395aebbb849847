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

#ifndef NBSPEC_TOOLS_CLI_HPP
#define NBSPEC_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace nbspec::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitError = 3;

/// Runs the nbspec command line. args excludes the program name. Results go
/// to out; a JSON failure report goes to err whenever the exit code is not 0.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nbspec::cli

#endif  // NBSPEC_TOOLS_CLI_HPP
