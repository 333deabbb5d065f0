// Copyright 2026 The Sentagg Authors.
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

#ifndef SENTAGG_CLI_H_
#define SENTAGG_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace sentagg {

// Exit codes of the command-line driver.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitConfigError = 2;

// Entry point of the `sentagg` tool. `args` excludes the program name.
//
//   sentagg [run] --input PATH|- [--format fd|jsonl] [--config PATH]
//           [--emit text|plan|stats|all] [--out PATH]
//           [--disable STEP]... [--max-clauses N]
//   sentagg gen [--seed N] [--messages N] [--pool N] [--config PATH] [--out PATH]
int RunCli(const std::vector<std::string> &args, std::istream &in, std::ostream &out,
           std::ostream &err);

}  // namespace sentagg

#endif  // SENTAGG_CLI_H_
