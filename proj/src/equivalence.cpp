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
#include <vector>

#include "pdakit/pda.hpp"

namespace pdakit {
namespace {

using Signature = std::vector<std::size_t>;

// Per-line invariant under relabeling: the class sizes of the colors on the
// line, sorted, followed by the star count.
std::vector<Signature> line_signatures(const PdaArray& p, bool by_row) {
  std::vector<std::size_t> class_size(p.colors() + 1, 0);
  for (PdaEntry e : p.grid()) {
    if (!e.is_star()) ++class_size[static_cast<std::size_t>(e.color_index())];
  }
  const std::size_t lines = by_row ? p.rows() : p.cols();
  const std::size_t length = by_row ? p.cols() : p.rows();
  std::vector<Signature> out(lines);
  for (std::size_t i = 0; i < lines; ++i) {
    std::size_t stars = 0;
    for (std::size_t j = 0; j < length; ++j) {
      const PdaEntry e = by_row ? p.at(i, j) : p.at(j, i);
      if (e.is_star()) {
        ++stars;
      } else {
        out[i].push_back(class_size[static_cast<std::size_t>(e.color_index())]);
      }
    }
    std::sort(out[i].begin(), out[i].end());
    out[i].push_back(stars);
  }
  return out;
}

bool same_multiset(std::vector<Signature> x, std::vector<Signature> y) {
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

class Search {
 public:
  Search(const PdaArray& a, const PdaArray& b, std::uint64_t budget)
      : a_(a),
        b_(b),
        budget_(budget),
        row_sig_a_(line_signatures(a, true)),
        row_sig_b_(line_signatures(b, true)),
        col_sig_a_(line_signatures(a, false)),
        col_sig_b_(line_signatures(b, false)),
        row_map_(a.rows(), kUnset),
        col_map_(a.cols(), kUnset),
        row_used_(b.rows(), false),
        col_used_(b.cols(), false),
        color_map_(a.colors() + 1, 0),
        color_inv_(b.colors() + 1, 0) {
    // Alternate rows and columns so that every assignment after the first
    // two is constrained by already-mapped lines.
    const std::size_t n = std::max(a.rows(), a.cols());
    for (std::size_t i = 0; i < n; ++i) {
      if (i < a.rows()) order_.push_back({true, i});
      if (i < a.cols()) order_.push_back({false, i});
    }
  }

  bool signatures_match() const {
    return same_multiset(row_sig_a_, row_sig_b_) &&
           same_multiset(col_sig_a_, col_sig_b_);
  }

  Equivalence run() {
    if (extend(0)) return Equivalence::kEquivalent;
    return exhausted_ ? Equivalence::kBudgetExhausted
                      : Equivalence::kInequivalent;
  }

 private:
  static constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

  struct Step {
    bool is_row;
    std::size_t index;
  };

  // Unifies one pair of entries; records new color pairs on the trail.
  bool unify(PdaEntry x, PdaEntry y) {
    if (x.is_star() != y.is_star()) return false;
    if (x.is_star()) return true;
    const auto cx = static_cast<std::size_t>(x.color_index());
    const auto cy = static_cast<std::size_t>(y.color_index());
    if (color_map_[cx] == 0 && color_inv_[cy] == 0) {
      color_map_[cx] = cy;
      color_inv_[cy] = cx;
      trail_.push_back(cx);
      return true;
    }
    return color_map_[cx] == cy;
  }

  void undo_to(std::size_t mark) {
    while (trail_.size() > mark) {
      const std::size_t cx = trail_.back();
      trail_.pop_back();
      color_inv_[color_map_[cx]] = 0;
      color_map_[cx] = 0;
    }
  }

  bool consistent(const Step& s, std::size_t target) {
    if (s.is_row) {
      for (std::size_t c = 0; c < a_.cols(); ++c) {
        if (col_map_[c] == kUnset) continue;
        if (!unify(a_.at(s.index, c), b_.at(target, col_map_[c]))) return false;
      }
    } else {
      for (std::size_t r = 0; r < a_.rows(); ++r) {
        if (row_map_[r] == kUnset) continue;
        if (!unify(a_.at(r, s.index), b_.at(row_map_[r], target))) return false;
      }
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Step s = order_[depth];
    const auto& sig_a = s.is_row ? row_sig_a_ : col_sig_a_;
    const auto& sig_b = s.is_row ? row_sig_b_ : col_sig_b_;
    auto& used = s.is_row ? row_used_ : col_used_;
    auto& map = s.is_row ? row_map_ : col_map_;
    for (std::size_t t = 0; t < used.size(); ++t) {
      if (used[t] || sig_a[s.index] != sig_b[t]) continue;
      if (++nodes_ > budget_) {
        exhausted_ = true;
        return false;
      }
      const std::size_t mark = trail_.size();
      if (consistent(s, t)) {
        used[t] = true;
        map[s.index] = t;
        if (extend(depth + 1)) return true;
        used[t] = false;
        map[s.index] = kUnset;
      }
      undo_to(mark);
      if (exhausted_) return false;
    }
    return false;
  }

  const PdaArray& a_;
  const PdaArray& b_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Signature> row_sig_a_, row_sig_b_, col_sig_a_, col_sig_b_;
  std::vector<Step> order_;
  std::vector<std::size_t> row_map_, col_map_;
  std::vector<bool> row_used_, col_used_;
  std::vector<std::size_t> color_map_, color_inv_;
  std::vector<std::size_t> trail_;
};

}  // namespace

Equivalence equivalent(const PdaArray& a, const PdaArray& b,
                       std::uint64_t budget) {
  if (a.rows() != b.rows() || a.cols() != b.cols() ||
      a.colors() != b.colors()) {
    return Equivalence::kInequivalent;
  }
  Search search(a, b, budget);
  if (!search.signatures_match()) return Equivalence::kInequivalent;
  return search.run();
}

}  // namespace pdakit
