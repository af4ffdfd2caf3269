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

#include <filesystem>
#include <string>
#include <string_view>

#include "pdakit/pda.hpp"

namespace pdakit {

// Text format, version 1:
//
//   pda v1
//   K=<int> F=<int> Z=<int> S=<int>
//   <F lines of K tokens, each "*" or a color in 1..S, single-space separated>
//
// Every line ends in '\n'. On read the header must agree with the grid: K and
// F with its shape, Z with the star count of the first column, S with the
// largest color.

/// Throws ParseError (with line and column) or ColorGapError.
PdaArray read_pda(std::string_view text);

/// Colors are renumbered 1..S in first-appearance order before writing, so
/// write_pda(read_pda(t)) == t for any t this function produced.
std::string write_pda(const PdaArray& p);

PdaArray read_pda_file(const std::filesystem::path& path);
void write_pda_file(const std::filesystem::path& path, const PdaArray& p);

}  // namespace pdakit
