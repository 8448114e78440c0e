// Copyright 2026 The ccmp-icbc Authors
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

#ifndef CCMP_TOOLS_CLI_H_
#define CCMP_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace ccmp::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitAuthFailure = 1;
inline constexpr int kExitUsage = 2;

// Runs one invocation. `args` excludes the program name. Results go to
// `out`; diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Runs the built-in vector suite, one line per group. Returns true when
// every group passes.
bool RunSelftest(std::ostream& out);

}  // namespace ccmp::cli

#endif  // CCMP_TOOLS_CLI_H_
