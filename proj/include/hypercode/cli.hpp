// Copyright 2026 The Hypercode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HYPERCODE_CLI_HPP
#define HYPERCODE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace hypercode::cli {

enum ExitCode : int {
  kSuccess = 0,
  kParseError = 2,
  kValidationError = 3,
  kInternalError = 4,
};

/// Runs one command. `args` excludes the program name, e.g.
/// {"code", "example.hm", "--kind", "face"}.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace hypercode::cli

#endif  // HYPERCODE_CLI_HPP
