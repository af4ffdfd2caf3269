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

#include "pdakit/pda.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pdakit/errors.hpp"

namespace pdakit {

PdaArray::PdaArray(std::size_t rows, std::size_t cols,
                   std::vector<PdaEntry> grid)
    : rows_(rows), cols_(cols), grid_(std::move(grid)) {
  if (rows_ == 0 || cols_ == 0) {
    throw PreconditionError("a PDA needs at least one row and one column");
  }
  if (grid_.size() != rows_ * cols_) {
    throw PreconditionError("grid holds " + std::to_string(grid_.size()) +
                            " entries, expected " +
                            std::to_string(rows_ * cols_));
  }
  int max_color = 0;
  for (PdaEntry e : grid_) {
    if (e.color_index() < 0) {
      throw PreconditionError("negative color index");
    }
    max_color = std::max(max_color, e.color_index());
  }
  std::vector<bool> seen(static_cast<std::size_t>(max_color) + 1, false);
  for (PdaEntry e : grid_) seen[static_cast<std::size_t>(e.color_index())] = true;
  for (int c = 1; c <= max_color; ++c) {
    if (!seen[static_cast<std::size_t>(c)]) throw ColorGapError(c);
  }
  colors_ = static_cast<std::size_t>(max_color);
}

PdaArray PdaArray::from_rows(
    std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> copy;
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(copy);
}

PdaArray PdaArray::from_rows(const std::vector<std::vector<int>>& rows) {
  if (rows.empty()) throw PreconditionError("no rows");
  const std::size_t cols = rows.front().size();
  std::vector<PdaEntry> grid;
  grid.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw PreconditionError("ragged rows");
    for (int v : r) grid.push_back(v == 0 ? PdaEntry::star() : PdaEntry::color(v));
  }
  return PdaArray(rows.size(), cols, std::move(grid));
}

PdaArray PdaArray::from_text(std::string_view text) {
  std::vector<std::vector<int>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream tokens(line);
    std::vector<int> row;
    std::string tok;
    while (tokens >> tok) {
      if (tok == "*") {
        row.push_back(0);
      } else {
        int v = 0;
        const auto [end, ec] =
            std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (ec != std::errc() || end != tok.data() + tok.size() || v <= 0) {
          throw PreconditionError("bad grid token '" + tok + "'");
        }
        row.push_back(v);
      }
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

std::size_t PdaArray::stars_in_column(std::size_t col) const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < rows_; ++r) n += at(r, col).is_star() ? 1 : 0;
  return n;
}

PdaArray PdaArray::canonical_colors() const {
  std::vector<int> relabel(colors_ + 1, 0);
  int next = 0;
  std::vector<PdaEntry> grid;
  grid.reserve(grid_.size());
  for (PdaEntry e : grid_) {
    if (e.is_star()) {
      grid.push_back(e);
      continue;
    }
    int& to = relabel[static_cast<std::size_t>(e.color_index())];
    if (to == 0) to = ++next;
    grid.push_back(PdaEntry::color(to));
  }
  return PdaArray(rows_, cols_, std::move(grid));
}

PdaArray PdaArray::transposed() const {
  std::vector<PdaEntry> grid;
  grid.reserve(grid_.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) grid.push_back(at(r, c));
  }
  return PdaArray(cols_, rows_, std::move(grid));
}

std::string PdaArray::grid_text() const {
  std::string out;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c > 0) out += ' ';
      const PdaEntry e = at(r, c);
      out += e.is_star() ? std::string("*") : std::to_string(e.color_index());
    }
    out += '\n';
  }
  return out;
}

ParamRecord ParamRecord::make(std::size_t K, std::size_t F, std::size_t Z,
                              std::size_t S) {
  ParamRecord p;
  p.K = K;
  p.F = F;
  p.Z = Z;
  p.S = S;
  p.g = F - Z;
  p.ratio = Rational(Z, F);
  p.rate = Rational(S, F);
  return p;
}

std::string to_string(const ParamRecord& p) {
  std::ostringstream out;
  out << "K=" << p.K << " F=" << p.F << " Z=" << p.Z << " S=" << p.S
      << " g=" << p.g << " M/N=" << to_string(p.ratio)
      << " R=" << to_string(p.rate);
  return out.str();
}

ParamRecord params(const PdaArray& p) {
  const ValidationReport report = validate(p);
  if (!report.is_valid) {
    throw InvalidPdaError("not a PDA: " + report.describe());
  }
  return ParamRecord::make(p.cols(), p.rows(), p.stars_in_column(0),
                           p.colors());
}

std::string to_string(Equivalence e) {
  switch (e) {
    case Equivalence::kEquivalent:
      return "equivalent";
    case Equivalence::kInequivalent:
      return "inequivalent";
    case Equivalence::kBudgetExhausted:
      return "budget_exhausted";
  }
  return "?";
}

}  // namespace pdakit
