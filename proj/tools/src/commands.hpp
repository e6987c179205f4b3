// Copyright 2026 The bribelab Authors
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

#ifndef BRIBELAB_TOOLS_COMMANDS_HPP_
#define BRIBELAB_TOOLS_COMMANDS_HPP_

#include <ostream>

namespace bribelab::cli {

// Exit codes of the bribelab tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;  // bad arguments or parameters
inline constexpr int kExitRuntime = 2;  // I/O or runtime failure

// Parses argv and runs one subcommand. Regular output goes to `out`,
// diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace bribelab::cli

#endif  // BRIBELAB_TOOLS_COMMANDS_HPP_
