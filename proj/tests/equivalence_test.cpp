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

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "pdakit/families.hpp"
#include "pdakit/graphs.hpp"
#include "pdakit/pda.hpp"

namespace pdakit {
namespace {

// Applies random row/column permutations and a random color bijection.
PdaArray shuffle(const PdaArray& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> rows(p.rows()), cols(p.cols());
  std::vector<int> colors(p.colors());
  std::iota(rows.begin(), rows.end(), 0);
  std::iota(cols.begin(), cols.end(), 0);
  std::iota(colors.begin(), colors.end(), 1);
  std::shuffle(rows.begin(), rows.end(), rng);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::shuffle(colors.begin(), colors.end(), rng);
  std::vector<std::vector<int>> grid(p.rows(), std::vector<int>(p.cols()));
  for (std::size_t j = 0; j < p.rows(); ++j) {
    for (std::size_t k = 0; k < p.cols(); ++k) {
      const PdaEntry e = p.at(rows[j], cols[k]);
      grid[j][k] = e.is_star() ? 0 : colors[static_cast<std::size_t>(e.color_index() - 1)];
    }
  }
  return PdaArray::from_rows(grid);
}

TEST(EquivalenceTest, IdenticalArrays) {
  EXPECT_EQ(equivalent(testing::reference_pda(), testing::reference_pda()),
            Equivalence::kEquivalent);
}

TEST(EquivalenceTest, ShuffledCopiesAreEquivalent) {
  const PdaArray base = coloring_to_pda(disjoint_union_coloring(5, 1, 2));
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    EXPECT_EQ(equivalent(base, shuffle(base, seed)), Equivalence::kEquivalent)
        << "seed " << seed;
  }
  EXPECT_EQ(equivalent(testing::reference_pda(), shuffle(testing::reference_pda(), 3)),
            Equivalence::kEquivalent);
}

TEST(EquivalenceTest, DifferentShapes) {
  EXPECT_EQ(equivalent(testing::reference_pda(), testing::half_pda()),
            Equivalence::kInequivalent);
}

TEST(EquivalenceTest, SameSignaturesDifferentStructure) {
  // Both 2x2 with one star per column and two colors; color pairs differ.
  const PdaArray a = PdaArray::from_rows({{0, 1}, {1, 0}});
  const PdaArray b = PdaArray::from_rows({{0, 1}, {2, 0}});
  EXPECT_EQ(equivalent(a, b), Equivalence::kInequivalent);
}

TEST(EquivalenceTest, ColorMergeIsNotEquivalent) {
  // Same star pattern, but one array uses one more color.
  const PdaArray a = PdaArray::from_rows({{0, 1, 2}, {1, 0, 3}, {2, 3, 0}});
  const PdaArray b = PdaArray::from_rows({{0, 1, 2}, {1, 0, 3}, {4, 3, 0}});
  EXPECT_EQ(equivalent(a, b), Equivalence::kInequivalent);
}

TEST(EquivalenceTest, TinyBudgetGivesUp) {
  const PdaArray base = coloring_to_pda(disjoint_union_coloring(6, 2, 2));
  EXPECT_EQ(equivalent(base, shuffle(base, 11), 1),
            Equivalence::kBudgetExhausted);
  EXPECT_EQ(to_string(Equivalence::kBudgetExhausted), "budget_exhausted");
}

}  // namespace
}  // namespace pdakit
