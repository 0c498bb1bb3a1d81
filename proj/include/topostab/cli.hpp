// Copyright 2026 The topostab Authors
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

#ifndef TOPOSTAB_CLI_HPP
#define TOPOSTAB_CLI_HPP

#include <string>
#include <vector>

namespace topostab {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitIllDefined = 2;

struct RunResult {
  int status = kExitOk;
  std::string out;
  std::string err;
};

/// Runs one command line (without the program name), e.g.
///   {"entropy", "-f", "hopf.mfd", "--region", "a", "--json"}.
/// Never throws; failures land in `status` and `err`.
RunResult run(const std::vector<std::string>& args);

}  // namespace topostab

#endif  // TOPOSTAB_CLI_HPP
