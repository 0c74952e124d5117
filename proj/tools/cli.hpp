// Copyright 2026 The p22 Authors
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

// The `p22` command-line driver, callable in-process for tests.

#ifndef P22_TOOLS_CLI_HPP_
#define P22_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace p22::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kWitnessFound = 1;  // check: digraph contains P(2,2)
inline constexpr int kNotExtremal = 2;   // recognize: not in EX(n)
inline constexpr int kUsage = 64;
inline constexpr int kDataError = 65;
inline constexpr int kFileError = 66;

// `args` excludes the program name. Data goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace p22::cli

#endif  // P22_TOOLS_CLI_HPP_
