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

#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "pdakit/pda.hpp"

namespace pdakit {
namespace {

TEST(ValidateTest, ReferenceArrayIsValid) {
  const ValidationReport r = validate(testing::reference_pda());
  EXPECT_TRUE(r.is_valid);
  EXPECT_EQ(r.describe(), "valid");
}

TEST(ValidateTest, RepeatedColorInRowIsB) {
  const ValidationReport r = validate(PdaArray::from_rows({{1, 1}, {0, 0}}));
  ASSERT_FALSE(r.is_valid);
  ASSERT_EQ(r.violations.size(), 1u);
  EXPECT_EQ(r.violations[0].condition, Condition::kB);
  EXPECT_EQ(r.violations[0].cells, (std::vector<Cell>{{0, 0}, {0, 1}}));
}

TEST(ValidateTest, MissingStarCornerIsC) {
  // Color 1 at (0,0) and (1,1) but (0,1) is a color, not a star.
  const PdaArray p = PdaArray::from_rows({{1, 2}, {2, 1}});
  const ValidationReport r = validate(p);
  ASSERT_FALSE(r.is_valid);
  for (const Violation& v : r.violations) EXPECT_EQ(v.condition, Condition::kC);
  EXPECT_EQ(r.violations.size(), 2u);
  EXPECT_NE(r.describe().find("C: (1,1) (2,2)"), std::string::npos);
}

TEST(ValidateTest, UnevenStarsIsA) {
  const ValidationReport r = validate(PdaArray::from_rows({{0, 1}, {0, 0}}));
  ASSERT_FALSE(r.is_valid);
  EXPECT_EQ(r.violations[0].condition, Condition::kA);
  EXPECT_EQ(r.violations[0].cells, (std::vector<Cell>{{0, 0}, {0, 1}}));
}

TEST(ValidateTest, NoStarsAllowedWhenColorsDistinct) {
  EXPECT_TRUE(validate(PdaArray::from_rows({{1, 2}, {3, 4}})).is_valid);
}

TEST(ValidateTest, ParallelAgreesWithReference) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 6;
    const int colors = 1 + static_cast<int>(rng() % 6);
    std::vector<std::vector<int>> grid(rows, std::vector<int>(cols));
    for (auto& row : grid) {
      for (auto& v : row) v = static_cast<int>(rng() % (colors + 1));
    }
    PdaArray p = PdaArray::from_rows({{0}});
    try {
      p = PdaArray::from_rows(grid);
    } catch (const std::exception&) {
      continue;  // color gap
    }
    const ValidationReport a = validate(p);
    const ValidationReport b = validate_reference(p);
    EXPECT_EQ(a.is_valid, b.is_valid);
    EXPECT_EQ(a.violations, b.violations) << p.grid_text();
  }
}

}  // namespace
}  // namespace pdakit
