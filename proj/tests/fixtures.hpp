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

#include "pdakit/pda.hpp"

namespace pdakit::testing {

// The (4,4,2,4) array used as the main reference in the tests.
inline PdaArray reference_pda() {
  return PdaArray::from_rows({{0, 1, 0, 3},  //
                              {1, 0, 3, 0},
                              {0, 2, 0, 4},
                              {2, 0, 4, 0}});
}

// A (4,2,1,2) array; two copies combine into reference_pda().
inline PdaArray half_pda() {
  return PdaArray::from_rows({{0, 1, 0, 2},  //
                              {1, 0, 2, 0}});
}

}  // namespace pdakit::testing
