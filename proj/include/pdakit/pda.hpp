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

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "pdakit/numeric.hpp"

namespace pdakit {

/// One cell of a placement delivery array: the star symbol or a color.
class PdaEntry {
 public:
  constexpr PdaEntry() = default;

  static constexpr PdaEntry star() { return PdaEntry(); }
  /// `index` must be >= 1; checked by PdaArray on construction.
  static constexpr PdaEntry color(int index) { return PdaEntry(index); }

  constexpr bool is_star() const { return value_ == 0; }
  /// Color index, or 0 for a star.
  constexpr int color_index() const { return value_; }

  friend constexpr bool operator==(PdaEntry, PdaEntry) = default;

 private:
  constexpr explicit PdaEntry(int value) : value_(value) {}
  int value_ = 0;
};

/// Row/column position in a grid, 0-based. Printed 1-based.
struct Cell {
  std::size_t row = 0;
  std::size_t col = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// An F x K array over {*} and the colors 1..S.
///
/// Structural invariants are enforced on construction: F, K >= 1, every color
/// index is positive and the colors present are exactly 1..S. The PDA
/// conditions themselves are not; see validate().
class PdaArray {
 public:
  /// Row-major grid. Throws PreconditionError on shape problems and
  /// ColorGapError when some color in 1..max is absent.
  PdaArray(std::size_t rows, std::size_t cols, std::vector<PdaEntry> grid);

  /// Builds from nested rows where 0 stands for a star. Handy in tests.
  static PdaArray from_rows(
      std::initializer_list<std::initializer_list<int>> rows);
  static PdaArray from_rows(const std::vector<std::vector<int>>& rows);

  /// Parses a bare grid: rows separated by newlines, tokens by whitespace.
  static PdaArray from_text(std::string_view grid);

  std::size_t rows() const { return rows_; }  // F
  std::size_t cols() const { return cols_; }  // K
  std::size_t colors() const { return colors_; }  // S

  PdaEntry at(std::size_t row, std::size_t col) const {
    return grid_[row * cols_ + col];
  }
  PdaEntry at(Cell c) const { return at(c.row, c.col); }
  const std::vector<PdaEntry>& grid() const { return grid_; }

  std::size_t stars_in_column(std::size_t col) const;

  /// Copy with colors renumbered 1..S in first-appearance (row-major) order.
  PdaArray canonical_colors() const;
  PdaArray transposed() const;

  /// Bare grid text, one row per line, tokens separated by single spaces.
  std::string grid_text() const;

  friend bool operator==(const PdaArray&, const PdaArray&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t colors_ = 0;
  std::vector<PdaEntry> grid_;
};

/// Measured (K, F, Z, S) and derived quantities of a valid PDA.
struct ParamRecord {
  std::size_t K = 0;
  std::size_t F = 0;
  std::size_t Z = 0;
  std::size_t S = 0;
  std::size_t g = 0;  // F - Z, the integer entries per column
  Rational ratio;     // M/N = Z/F
  Rational rate;      // R = S/F

  static ParamRecord make(std::size_t K, std::size_t F, std::size_t Z,
                          std::size_t S);

  friend bool operator==(const ParamRecord&, const ParamRecord&) = default;
};

std::string to_string(const ParamRecord& p);

enum class Condition : std::uint8_t {
  kA,  // non-constant star count per column
  kB,  // repeated color in a row or column
  kC,  // equal colors without star corners
};

char condition_letter(Condition c);

struct Violation {
  Condition condition;
  // A: {(0, 0), (0, c)} where column c's star count differs from column 0's.
  // B and C: the two cells carrying the same color.
  std::vector<Cell> cells;

  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct ValidationReport {
  bool is_valid = true;
  std::vector<Violation> violations;  // sorted

  std::string describe() const;
};

/// Checks conditions A, B and C. Condition A means "all columns hold the same
/// number of stars"; Z is measured, never supplied. Parallel over color
/// classes when built with OpenMP.
ValidationReport validate(const PdaArray& p);

/// Serial reference for validate(): scans every pair of cells, O(F^2 K^2).
/// Kept independent of the color-class kernel so the two can be compared.
ValidationReport validate_reference(const PdaArray& p);

/// Measured parameters. Throws InvalidPdaError if validate() fails.
ParamRecord params(const PdaArray& p);

enum class Equivalence : std::uint8_t {
  kEquivalent,
  kInequivalent,
  kBudgetExhausted,
};

std::string to_string(Equivalence e);

inline constexpr std::uint64_t kDefaultEquivalenceBudget = 1'000'000;

/// Decides whether some row permutation, column permutation and color
/// bijection map `a` onto `b`. Backtracking, pruned by per-row and
/// per-column signatures; gives up after `budget` search nodes.
Equivalence equivalent(const PdaArray& a, const PdaArray& b,
                       std::uint64_t budget = kDefaultEquivalenceBudget);

}  // namespace pdakit
