// Copyright 2026 The pdakit Authors
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

#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace pdakit::cli {

// Exit codes. They depend only on the class of outcome.
inline constexpr int kOk = 0;
inline constexpr int kFailed = 1;      // invalid PDA, failed check, inequivalent
inline constexpr int kUsage = 2;       // bad flags or inputs; search budget spent
inline constexpr int kInvariant = 3;   // a guaranteed result did not hold

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace pdakit::cli
