// Copyright 2026 The defunc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DEFUNC_TOOLS_CLI_H_
#define DEFUNC_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace defunc::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // fuzz mismatch, stack underflow
  kExitUsage = 2,    // bad arguments, parse or assembly error, bad path
};

// Runs one invocation. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace defunc::cli

#endif  // DEFUNC_TOOLS_CLI_H_
