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
#include <string>
#include <vector>

#include "pdakit/graphs.hpp"
#include "pdakit/pda.hpp"

namespace pdakit {

/// A subset of [n] = {1..n}, elements strictly increasing.
class SubsetLabel {
 public:
  /// Throws PreconditionError unless the elements are distinct, sorted and
  /// inside 1..n.
  SubsetLabel(std::vector<int> elements, int n);

  const std::vector<int>& elements() const { return elements_; }
  std::uint64_t mask() const;  // bit (e - 1) set for each element e
  bool contains_all(const SubsetLabel& other) const;

  /// "{1,3}"; the empty set is "{}".
  std::string str() const;

  friend auto operator<=>(const SubsetLabel&, const SubsetLabel&) = default;

 private:
  std::vector<int> elements_;
};

/// All k-subsets of [n] in lexicographic order. This order fixes row and
/// column numbering of every family below.
std::vector<SubsetLabel> subsets(int n, int k);

/// Left: a-subsets, right: b-subsets, A ~ B iff disjoint, colored by A u B.
/// Requires a, b >= 1 and a + b <= n.
ColoredBipartiteGraph disjoint_union_coloring(int n, int a, int b);

/// Left: a-subsets, right: b-subsets, A ~ B iff |A n B| = t, colored by the
/// pair (symmetric difference, intersection), labelled "({D},{I})".
/// Requires 0 < a, b < n, 0 <= t <= min(a, b) and a + b - t <= n.
ColoredBipartiteGraph intersection_t_coloring(int n, int a, int b, int t);

/// Same-color combination of disjoint_union_coloring(n, a + t, b - t) with
/// disjoint_union_coloring(n, a, b), restricted to right vertices (A, A')
/// with A' a subset of A. Colors that disappear are dropped. Requires
/// a, b >= 1, a + b <= n and 0 <= t < b.
ColoredBipartiteGraph restricted_combined_coloring(int n, int a, int b, int t);

/// coloring_to_pda(restricted_combined_coloring(n, a, b, t)).
PdaArray restricted_combined_family(int n, int a, int b, int t);

/// [[*, 1], [1, *]].
PdaArray trivial_pda();

/// K_{1,m}: one left vertex joined to m right vertices, all colors distinct.
ColoredBipartiteGraph star_graph_coloring(std::size_t m);

enum class Family {
  kDisjointUnion,
  kIntersectionT,
  kRestrictedCombined,
  kTrivial,
  kStar,
};

struct FamilySpec {
  Family family = Family::kTrivial;
  int n = 0;
  int a = 0;
  int b = 0;
  int t = 0;
  std::size_t m = 0;
};

/// Parses "disjoint-union", "intersection-t", "restricted-combined",
/// "trivial" or "star".
Family parse_family(const std::string& name);

ColoredBipartiteGraph build_family(const FamilySpec& spec);

}  // namespace pdakit
