// Copyright 2026 The rejmetrics Authors
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

#ifndef REJMETRICS_CLI_COMMANDS_H_
#define REJMETRICS_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace rejmetrics::cli {

inline constexpr const char* kVersion = "0.1.0";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,
  kExitData = 3,
  kExitInfeasible = 4,
};

// Runs the command line `args` (without the program name). Results go to
// `out` unless redirected with --out; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace rejmetrics::cli

#endif  // REJMETRICS_CLI_COMMANDS_H_
