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

#include <algorithm>
#include <sstream>
#include <vector>

#include "parallel.hpp"
#include "pdakit/pda.hpp"

namespace pdakit {
namespace {

void check_constant_stars(const PdaArray& p, std::vector<Violation>& out) {
  const std::size_t z0 = p.stars_in_column(0);
  for (std::size_t c = 1; c < p.cols(); ++c) {
    if (p.stars_in_column(c) != z0) {
      out.push_back({Condition::kA, {Cell{0, 0}, Cell{0, c}}});
    }
  }
}

// Classifies one pair of distinct cells carrying the same color. Returns
// false when the pair is fine.
bool check_pair(const PdaArray& p, Cell a, Cell b, Violation& v) {
  if (a.row == b.row || a.col == b.col) {
    v = {Condition::kB, {std::min(a, b), std::max(a, b)}};
    return true;
  }
  if (p.at(a.row, b.col).is_star() && p.at(b.row, a.col).is_star()) {
    return false;
  }
  v = {Condition::kC, {std::min(a, b), std::max(a, b)}};
  return true;
}

ValidationReport finish(std::vector<Violation> violations) {
  std::sort(violations.begin(), violations.end());
  ValidationReport report;
  report.is_valid = violations.empty();
  report.violations = std::move(violations);
  return report;
}

}  // namespace

char condition_letter(Condition c) {
  switch (c) {
    case Condition::kA:
      return 'A';
    case Condition::kB:
      return 'B';
    case Condition::kC:
      return 'C';
  }
  return '?';
}

std::string ValidationReport::describe() const {
  if (is_valid) return "valid";
  std::ostringstream out;
  out << "invalid (" << violations.size() << " violation"
      << (violations.size() == 1 ? "" : "s") << ")";
  for (const Violation& v : violations) {
    out << "\n  " << condition_letter(v.condition) << ":";
    if (v.condition == Condition::kA) {
      out << " columns " << v.cells[0].col + 1 << " and " << v.cells[1].col + 1
          << " hold different numbers of stars";
      continue;
    }
    for (const Cell& c : v.cells) out << " (" << c.row + 1 << "," << c.col + 1 << ")";
  }
  return out.str();
}

ValidationReport validate_reference(const PdaArray& p) {
  std::vector<Violation> violations;
  check_constant_stars(p, violations);
  const std::size_t n = p.rows() * p.cols();
  for (std::size_t i = 0; i < n; ++i) {
    const Cell a{i / p.cols(), i % p.cols()};
    const PdaEntry ea = p.at(a);
    if (ea.is_star()) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Cell b{j / p.cols(), j % p.cols()};
      if (p.at(b) != ea) continue;
      Violation v;
      if (check_pair(p, a, b, v)) violations.push_back(std::move(v));
    }
  }
  return finish(std::move(violations));
}

ValidationReport validate(const PdaArray& p) {
  std::vector<Violation> violations;
  check_constant_stars(p, violations);

  std::vector<std::vector<Cell>> classes(p.colors());
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      const PdaEntry e = p.at(r, c);
      if (!e.is_star()) {
        classes[static_cast<std::size_t>(e.color_index() - 1)].push_back({r, c});
      }
    }
  }

  std::vector<std::vector<Violation>> per_thread(
      static_cast<std::size_t>(omp_get_max_threads()));
  const auto num_classes = static_cast<std::ptrdiff_t>(classes.size());
#pragma omp parallel for schedule(dynamic, 16)
  for (std::ptrdiff_t s = 0; s < num_classes; ++s) {
    auto& local = per_thread[static_cast<std::size_t>(omp_get_thread_num())];
    const auto& cells = classes[static_cast<std::size_t>(s)];
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        Violation v;
        if (check_pair(p, cells[i], cells[j], v)) local.push_back(std::move(v));
      }
    }
  }
  for (auto& local : per_thread) {
    violations.insert(violations.end(), std::make_move_iterator(local.begin()),
                      std::make_move_iterator(local.end()));
  }
  return finish(std::move(violations));
}

}  // namespace pdakit
