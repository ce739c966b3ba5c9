//
// Copyright 2026 The Stratintent Authors
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
//

#ifndef STRATINTENT_CLI_CLI_H_
#define STRATINTENT_CLI_CLI_H_

#include <iosfwd>

namespace stratintent::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitFailure = 1;  // conflicts, divergence, bad input files
inline constexpr int kExitUsage = 2;

// Entry point of the `stratintent` tool. Primary results go to `out`,
// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace stratintent::cli

#endif  // STRATINTENT_CLI_CLI_H_
