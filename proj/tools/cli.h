// Copyright 2026 The NAGTI Authors
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

#ifndef NAGTI_TOOLS_CLI_H_
#define NAGTI_TOOLS_CLI_H_

#include <iosfwd>

namespace nagti {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // verify-disjunct found a counterexample
inline constexpr int kExitDomain = 2;
inline constexpr int kExitGuard = 3;
inline constexpr int kExitConfig = 4;
inline constexpr int kExitInternal = 5;

// Runs the nagti command line against the given streams and returns the
// exit code. Never throws.
int RunCli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace nagti

#endif  // NAGTI_TOOLS_CLI_H_
