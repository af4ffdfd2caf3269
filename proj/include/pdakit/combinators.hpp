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
#include <optional>
#include <string>
#include <vector>

#include "pdakit/graphs.hpp"
#include "pdakit/pda.hpp"

namespace pdakit {

/// For every output color (by index), the input colors or vertices it was
/// formed from, e.g. {s, v} for combine_same_colors or {s_1, ..., s_l} for
/// star_product.
struct CombineLegend {
  std::vector<std::vector<std::string>> parts;

  /// Output color index whose parts equal `key`, if any.
  std::optional<std::size_t> find(const std::vector<std::string>& key) const;
};

struct CombineResult {
  ColoredBipartiteGraph graph;
  CombineLegend legend;
  // For each output right vertex, the input vertex indices it is made of:
  // (x, u) for combine_same_colors, one right index per factor for
  // star_product, (cycle vertex, base right vertex) for cycle_product.
  std::vector<std::vector<std::size_t>> right_origin;
};

/// Tuple label "(a,b,...)".
std::string tuple_label(const std::vector<std::string>& parts);

// ---------------------------------------------------------------------------
// Same-color combination.
//
// g1 = (V1, W1, E1) and g2 = (V2, W2, E2) must be strong colorings over the
// same color labels. The output has left side W1, right side the pairs (x, u)
// in V1 x V2 that see a common color, and triples
//   (y, (x, u), (s, v))  for every (x, y, s) in E1 and (u, v, s) in E2.
// Right vertices are ordered by (x, u), output colors by (s, v). Degrees of
// the right side need not be constant, so the result may not convert to a
// PDA; see coloring_to_pda().
// ---------------------------------------------------------------------------
CombineResult combine_same_colors(const ColoredBipartiteGraph& g1,
                                  const ColoredBipartiteGraph& g2);

/// Left fold of combine_same_colors over two or more graphs; each graph after
/// the second must use the color labels produced by the step before it. No
/// closed-form parameters are claimed for three or more.
CombineResult combine_same_colors(const std::vector<ColoredBipartiteGraph>& gs);

/// The parameter statement attached to the same-color combination, evaluated
/// literally on the two input arrays, next to what the construction measures.
struct SameColorsCheck {
  std::size_t predicted_K = 0;
  std::size_t predicted_F = 0;
  // Z read per output column (i, i'); set only when it is the same for all.
  std::optional<std::size_t> predicted_Z;
  std::size_t predicted_S = 0;

  std::size_t measured_K = 0;
  std::size_t measured_F = 0;
  std::optional<std::size_t> measured_Z;  // unset if right degrees vary
  std::size_t measured_S = 0;

  /// Names of the fields that disagree ("K", "F", "Z", "S").
  std::vector<std::string> mismatches;
};

SameColorsCheck check_same_colors(const PdaArray& p1, const PdaArray& p2,
                                  const ColoredBipartiteGraph& combined);

/// Star product: left = product of lefts, right = product of rights, an edge
/// iff every coordinate is an edge, colored by the tuple of coordinate
/// colors. Needs at least two factors, each strong.
CombineResult star_product(const std::vector<ColoredBipartiteGraph>& gs);

/// K, F, S multiply and so does F - Z.
ParamRecord predicted_star_params(const std::vector<ParamRecord>& factors);

/// Tensor product of general graphs with tuple colors; each factor must be
/// strong and at least one bipartite.
ColoredGraph tensor_product(const ColoredGraph& c1, const ColoredGraph& c2);

/// Splits a bipartite general graph into a colored bipartite graph, putting
/// vertices with side[v] == 0 on the left.
ColoredBipartiteGraph split_bipartite(const ColoredGraph& g,
                                      const std::vector<int>& side);

/// Cycle product C_m : base. C_m carries its vertex coloring, its strong
/// 3-edge-coloring and the two opposing orientations (primed colors); an edge
/// ((x, y), (u, v)) exists iff (y, v) is a base edge and x = u or x ~ u, and
/// is colored (vertex color of x, s2) when x = u and (arc color of <x, u>, s2)
/// otherwise. Supported m: 3 and positive multiples of 6.
CombineResult cycle_product(const ColoredBipartiteGraph& base, std::size_t m);

/// (mK', mF', mF' - 3g', 8S') for m divisible by 6; S = 9S' for m = 3.
ParamRecord predicted_cycle_params(const ParamRecord& base, std::size_t m);

}  // namespace pdakit
