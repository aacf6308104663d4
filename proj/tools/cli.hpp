// Copyright 2026 The gcsg Authors
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

#ifndef GCSG_TOOLS_CLI_HPP_
#define GCSG_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace gcsg::cli {

// Exit codes of the gcsg tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitTooLarge = 2;
inline constexpr int kExitInternal = 3;

// Runs the solver front end. `args` excludes the program name. The result
// document goes to --output or `out`; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Benchmark harness front end: --config <path> [--output <path>].
int run_bench_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gcsg::cli

#endif  // GCSG_TOOLS_CLI_HPP_
