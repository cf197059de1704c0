// Copyright 2026 The hypnet Authors
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

#ifndef HYPNET_TOOLS_CLI_H_
#define HYPNET_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace hypnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitEmbedding = 2;

// Runs the hypnet command line. `args` excludes the program name. Results go
// to files named by -o, or to `out` when no output path is given; logging
// and diagnostics go to `err`.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hypnet::cli

#endif  // HYPNET_TOOLS_CLI_H_
