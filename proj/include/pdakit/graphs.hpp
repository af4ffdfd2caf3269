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
#include <unordered_map>
#include <utility>
#include <vector>

#include "pdakit/pda.hpp"

namespace pdakit {

/// Edge (left, right) of a bipartite graph carrying a color, all by index.
struct Triple {
  std::size_t left = 0;
  std::size_t right = 0;
  std::size_t color = 0;

  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// An edge-colored bipartite graph stored as a triple system.
///
/// Left vertices play the role of PDA rows, right vertices of columns. Vertex
/// and color labels are strings so composite labels such as "({1,2},{3})"
/// survive products and stay readable. Throws PreconditionError if a pair
/// carries two triples, an index is out of range, labels repeat, or a
/// declared color is never used.
class ColoredBipartiteGraph {
 public:
  ColoredBipartiteGraph(std::vector<std::string> left,
                        std::vector<std::string> right,
                        std::vector<std::string> colors,
                        std::vector<Triple> triples);

  const std::vector<std::string>& left() const { return left_; }
  const std::vector<std::string>& right() const { return right_; }
  const std::vector<std::string>& colors() const { return colors_; }
  const std::vector<Triple>& triples() const { return triples_; }

  /// Color index on edge (l, r), if any.
  std::optional<std::size_t> color_at(std::size_t l, std::size_t r) const;
  bool has_edge(std::size_t l, std::size_t r) const {
    return color_at(l, r).has_value();
  }

  std::vector<std::size_t> left_degrees() const;
  std::vector<std::size_t> right_degrees() const;

  std::optional<std::size_t> color_index(const std::string& label) const;

  /// Keeps only the right vertices with keep[r] set, drops colors that no
  /// longer occur, and preserves the relative order of everything kept.
  ColoredBipartiteGraph restrict_right(const std::vector<bool>& keep) const;

 private:
  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<std::string> colors_;
  std::vector<Triple> triples_;
  std::unordered_map<std::size_t, std::size_t> edge_color_;  // l * |R| + r
};

/// Plain undirected graph without loops or parallel edges.
struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  bool adjacent(std::size_t u, std::size_t v) const;
};

struct ColoredEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t color = 0;
};

/// Edge-colored general graph. Each edge keeps the endpoint order it was
/// given in; orientations use it as the forward direction.
class ColoredGraph {
 public:
  ColoredGraph(std::vector<std::string> vertices,
               std::vector<std::string> colors, std::vector<ColoredEdge> edges);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<std::string>& colors() const { return colors_; }
  const std::vector<ColoredEdge>& edges() const { return edges_; }

  std::optional<std::size_t> color_at(std::size_t u, std::size_t v) const;
  bool adjacent(std::size_t u, std::size_t v) const {
    return color_at(u, v).has_value();
  }

  Graph underlying() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<std::string> colors_;
  std::vector<ColoredEdge> edges_;
  std::unordered_map<std::size_t, std::size_t> edge_color_;  // both directions
};

/// Proper vertex coloring: one label per vertex.
struct VertexColoring {
  std::vector<std::string> color_of;

  /// True when the coloring covers `host` and no edge joins equal colors.
  bool is_proper_for(const Graph& host) const;
  std::vector<std::string> palette() const;  // distinct labels, first-use order
};

/// Directed arc <from, to> carrying a color label.
struct Arc {
  std::size_t from = 0;
  std::size_t to = 0;
  std::string color;
};

struct Orientation {
  std::vector<Arc> arcs;

  /// True when each edge of `host` appears in exactly one direction and no
  /// arc falls outside it.
  bool orients(const ColoredGraph& host) const;
  std::vector<std::string> palette() const;
};

/// Same-colored edges must be at distance >= 2: they may not share a vertex
/// (reported as condition B) and no edge may join an endpoint of one to an
/// endpoint of the other (condition C). Cells hold (left, right) indices.
/// Checks every pair of same-colored edges.
ValidationReport is_strong_coloring(const ColoredBipartiteGraph& g);

/// General-graph version; cells hold the (u, v) endpoints of each edge.
ValidationReport is_strong_coloring(const ColoredGraph& g);

/// Rows become left vertices "1".."F", columns right vertices "1".."K",
/// colors "1".."S"; star cells are non-edges.
ColoredBipartiteGraph pda_to_coloring(const PdaArray& p);

/// Inverse of pda_to_coloring. Color index i becomes integer i + 1. Throws
/// InvalidPdaError naming a witness when right degrees are not constant or the
/// coloring is not strong.
PdaArray coloring_to_pda(const ColoredBipartiteGraph& g);

/// The bipartite graph seen as a general graph; right vertices follow the
/// left ones and get a trailing prime on their labels.
ColoredGraph as_general_graph(const ColoredBipartiteGraph& g);

/// Two-coloring of the vertices when the graph is bipartite.
std::optional<std::vector<int>> two_coloring(const Graph& g);

/// Cycle C_m on vertices "1".."m" with edges {i, i+1 mod m}. Requires m >= 3.
Graph cycle(std::size_t m);

/// Colors "a","b" by parity for even m; "a","b","c" for m = 3.
VertexColoring cycle_vertex_coloring(std::size_t m);

/// Edge {i, i+1} gets color ((i - 1) mod 3) + 1. Requires m divisible by 3.
ColoredGraph cycle_strong_coloring(std::size_t m);

/// The forward orientation keeps each edge's stored direction and color; the
/// opposing one reverses every arc and primes the color ("1" -> "1'"). Throws
/// PreconditionError if a primed label already names a color.
std::pair<Orientation, Orientation> opposing_orientations(const ColoredGraph& c);

}  // namespace pdakit
