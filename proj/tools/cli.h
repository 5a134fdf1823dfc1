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

#ifndef DELTAMATROID_TOOLS_CLI_H_
#define DELTAMATROID_TOOLS_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace dmat::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;
inline constexpr int kExitUsage = 2;

// Runs one dmtool invocation. `args` excludes the program name. Verdict
// commands return kExitOk / kExitNo; domain errors return kExitNo with a
// message on `err`; usage errors return kExitUsage.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace dmat::cli

#endif  // DELTAMATROID_TOOLS_CLI_H_
