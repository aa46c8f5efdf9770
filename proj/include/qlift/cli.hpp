// Copyright 2026 The Authors.
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

#ifndef QLIFT_CLI_HPP_
#define QLIFT_CLI_HPP_

#include <iosfwd>
#include <string>
#include <vector>

namespace qlift {

inline constexpr int kExitOk = 0;
inline constexpr int kExitPropertyFails = 1;
inline constexpr int kExitUsage = 2;

/// Runs one `qlift` subcommand; `args` excludes the program name.
/// Returns 0 when the command succeeds or the property holds, 1 when the
/// property fails (the counterexample goes to `out`), 2 on usage or input
/// errors (the message goes to `err`).
int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err);

}  // namespace qlift

#endif  // QLIFT_CLI_HPP_
