// Copyright 2026 The divide2 Authors. All Rights Reserved.
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

#ifndef DIVIDE2_TOOLS_CLI_HPP_
#define DIVIDE2_TOOLS_CLI_HPP_

#include <iosfwd>
#include <span>
#include <string>

namespace divide2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitContradiction = 1;
inline constexpr int kExitBadInput = 2;

/// Runs the divide2 command line. `args` excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace divide2::cli

#endif  // DIVIDE2_TOOLS_CLI_HPP_
