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

#include "pdakit/families.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "pdakit/combinators.hpp"
#include "pdakit/errors.hpp"

namespace pdakit {
namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

std::string params_text(int n, int a, int b, int t) {
  return "(n=" + std::to_string(n) + ", a=" + std::to_string(a) +
         ", b=" + std::to_string(b) + ", t=" + std::to_string(t) + ")";
}

std::vector<std::string> labels_of(const std::vector<SubsetLabel>& sets) {
  std::vector<std::string> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.str());
  return out;
}

}  // namespace

SubsetLabel::SubsetLabel(std::vector<int> elements, int n)
    : elements_(std::move(elements)) {
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    require(elements_[i] >= 1 && elements_[i] <= n,
            "subset element out of range 1.." + std::to_string(n));
    require(i == 0 || elements_[i - 1] < elements_[i],
            "subset elements must be distinct and sorted");
  }
}

std::uint64_t SubsetLabel::mask() const {
  std::uint64_t m = 0;
  for (int e : elements_) m |= std::uint64_t{1} << (e - 1);
  return m;
}

bool SubsetLabel::contains_all(const SubsetLabel& other) const {
  return (other.mask() & ~mask()) == 0;
}

std::string SubsetLabel::str() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(elements_[i]);
  }
  return out + "}";
}

std::vector<SubsetLabel> subsets(int n, int k) {
  require(n >= 0 && n <= 64, "subsets: n must lie in 0..64");
  std::vector<SubsetLabel> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(cur, n);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) {
      cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return out;
}

ColoredBipartiteGraph disjoint_union_coloring(int n, int a, int b) {
  require(a >= 1 && b >= 1 && a + b <= n,
          "disjoint_union_coloring needs a, b >= 1 and a + b <= n, got " +
              params_text(n, a, b, 0));
  const auto left = subsets(n, a);
  const auto right = subsets(n, b);
  const auto unions = subsets(n, a + b);
  std::unordered_map<std::uint64_t, std::size_t> color_of;
  for (std::size_t c = 0; c < unions.size(); ++c) color_of[unions[c].mask()] = c;

  std::vector<Triple> triples;
  for (std::size_t l = 0; l < left.size(); ++l) {
    const std::uint64_t lm = left[l].mask();
    for (std::size_t r = 0; r < right.size(); ++r) {
      const std::uint64_t rm = right[r].mask();
      if ((lm & rm) == 0) triples.push_back({l, r, color_of.at(lm | rm)});
    }
  }
  return ColoredBipartiteGraph(labels_of(left), labels_of(right),
                               labels_of(unions), std::move(triples));
}

ColoredBipartiteGraph intersection_t_coloring(int n, int a, int b, int t) {
  require(0 < a && a < n && 0 < b && b < n && 0 <= t && t <= std::min(a, b) &&
              a + b - t <= n,
          "intersection_t_coloring needs 0 < a, b < n, 0 <= t <= min(a, b) and "
          "a + b - t <= n, got " +
              params_text(n, a, b, t));
  const auto left = subsets(n, a);
  const auto right = subsets(n, b);

  // Colors (D, I) ordered lexicographically by D, then I.
  const auto ds = subsets(n, a + b - 2 * t);
  const auto is = subsets(n, t);
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::size_t> color_of;
  std::vector<std::string> colors;
  for (const auto& d : ds) {
    for (const auto& i : is) {
      if (d.mask() & i.mask()) continue;
      color_of[{d.mask(), i.mask()}] = colors.size();
      colors.push_back("(" + d.str() + "," + i.str() + ")");
    }
  }

  std::vector<Triple> triples;
  for (std::size_t l = 0; l < left.size(); ++l) {
    const std::uint64_t lm = left[l].mask();
    for (std::size_t r = 0; r < right.size(); ++r) {
      const std::uint64_t rm = right[r].mask();
      const std::uint64_t inter = lm & rm;
      if (std::popcount(inter) != t) continue;
      triples.push_back({l, r, color_of.at({lm ^ rm, inter})});
    }
  }
  return ColoredBipartiteGraph(labels_of(left), labels_of(right),
                               std::move(colors), std::move(triples));
}

ColoredBipartiteGraph restricted_combined_coloring(int n, int a, int b, int t) {
  require(a >= 1 && b >= 1 && a + b <= n && 0 <= t && t < b,
          "restricted_combined_family needs a, b >= 1, a + b <= n and "
          "0 <= t < b, got " +
              params_text(n, a, b, t));
  const ColoredBipartiteGraph g1 = disjoint_union_coloring(n, a + t, b - t);
  const ColoredBipartiteGraph g2 = disjoint_union_coloring(n, a, b);
  const CombineResult combined = combine_same_colors(g1, g2);

  const auto big = subsets(n, a + t);  // left side of g1
  const auto small = subsets(n, a);    // left side of g2
  std::vector<bool> keep(combined.right_origin.size());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    const auto& xu = combined.right_origin[r];
    keep[r] = big[xu[0]].contains_all(small[xu[1]]);
  }
  return combined.graph.restrict_right(keep);
}

PdaArray restricted_combined_family(int n, int a, int b, int t) {
  return coloring_to_pda(restricted_combined_coloring(n, a, b, t));
}

PdaArray trivial_pda() { return PdaArray::from_rows({{0, 1}, {1, 0}}); }

ColoredBipartiteGraph star_graph_coloring(std::size_t m) {
  require(m >= 1, "star_graph_coloring needs m >= 1");
  std::vector<std::string> right;
  std::vector<Triple> triples;
  for (std::size_t j = 0; j < m; ++j) {
    right.push_back(std::to_string(j + 1));
    triples.push_back({0, j, j});
  }
  return ColoredBipartiteGraph({"1"}, right, right, std::move(triples));
}

Family parse_family(const std::string& name) {
  if (name == "disjoint-union") return Family::kDisjointUnion;
  if (name == "intersection-t") return Family::kIntersectionT;
  if (name == "restricted-combined") return Family::kRestrictedCombined;
  if (name == "trivial") return Family::kTrivial;
  if (name == "star") return Family::kStar;
  throw PreconditionError("unknown family '" + name + "'");
}

ColoredBipartiteGraph build_family(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::kDisjointUnion:
      return disjoint_union_coloring(spec.n, spec.a, spec.b);
    case Family::kIntersectionT:
      return intersection_t_coloring(spec.n, spec.a, spec.b, spec.t);
    case Family::kRestrictedCombined:
      return restricted_combined_coloring(spec.n, spec.a, spec.b, spec.t);
    case Family::kTrivial:
      return pda_to_coloring(trivial_pda());
    case Family::kStar:
      return star_graph_coloring(spec.m);
  }
  throw PreconditionError("unknown family");
}

}  // namespace pdakit
