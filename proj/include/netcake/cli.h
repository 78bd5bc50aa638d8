// Copyright 2026 The netcake Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NETCAKE_CLI_H_
#define NETCAKE_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace netcake::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kError = 1;
inline constexpr int kViolated = 2;

// Runs one command line (args excludes the program name):
//
//   solve  --protocol tree|descendant --in FILE [--out FILE]
//   verify --criterion envy-free|proportional
//          --graph tree|descendant-closure|explicit
//          --in INSTANCE --alloc FILE [--out FILE]
//   gen    --n N --seed S --segments K [--max-depth D] [--out FILE]
//   info   --in FILE [--out FILE]
//
// Reports go to --out, or to `out` when omitted. Errors are a JSON object
// on `err` with exit code 1; verify exits 2 when the criterion fails.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace netcake::cli

#endif  // NETCAKE_CLI_H_
