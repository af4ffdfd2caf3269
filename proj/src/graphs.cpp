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

#include "pdakit/graphs.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <unordered_set>

#include "pdakit/errors.hpp"

namespace pdakit {
namespace {

void require_unique(const std::vector<std::string>& labels, const char* what) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) {
      throw PreconditionError(std::string("duplicate ") + what + " label '" +
                              l + "'");
    }
  }
}

std::vector<std::string> numbered(std::size_t n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

ValidationReport report_from(std::vector<Violation> v) {
  std::sort(v.begin(), v.end());
  ValidationReport r;
  r.is_valid = v.empty();
  r.violations = std::move(v);
  return r;
}

}  // namespace

ColoredBipartiteGraph::ColoredBipartiteGraph(std::vector<std::string> left,
                                             std::vector<std::string> right,
                                             std::vector<std::string> colors,
                                             std::vector<Triple> triples)
    : left_(std::move(left)),
      right_(std::move(right)),
      colors_(std::move(colors)),
      triples_(std::move(triples)) {
  require_unique(left_, "left vertex");
  require_unique(right_, "right vertex");
  require_unique(colors_, "color");
  std::vector<bool> used(colors_.size(), false);
  edge_color_.reserve(triples_.size());
  for (const Triple& t : triples_) {
    if (t.left >= left_.size() || t.right >= right_.size() ||
        t.color >= colors_.size()) {
      throw PreconditionError("triple index out of range");
    }
    if (!edge_color_.emplace(t.left * right_.size() + t.right, t.color).second) {
      throw PreconditionError("two triples on edge (" + left_[t.left] + ", " +
                              right_[t.right] + ")");
    }
    used[t.color] = true;
  }
  for (std::size_t c = 0; c < colors_.size(); ++c) {
    if (!used[c]) {
      throw PreconditionError("color '" + colors_[c] + "' labels no edge");
    }
  }
}

std::optional<std::size_t> ColoredBipartiteGraph::color_at(std::size_t l,
                                                           std::size_t r) const {
  const auto it = edge_color_.find(l * right_.size() + r);
  if (it == edge_color_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> ColoredBipartiteGraph::left_degrees() const {
  std::vector<std::size_t> d(left_.size(), 0);
  for (const Triple& t : triples_) ++d[t.left];
  return d;
}

std::vector<std::size_t> ColoredBipartiteGraph::right_degrees() const {
  std::vector<std::size_t> d(right_.size(), 0);
  for (const Triple& t : triples_) ++d[t.right];
  return d;
}

std::optional<std::size_t> ColoredBipartiteGraph::color_index(
    const std::string& label) const {
  const auto it = std::find(colors_.begin(), colors_.end(), label);
  if (it == colors_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - colors_.begin());
}

ColoredBipartiteGraph ColoredBipartiteGraph::restrict_right(
    const std::vector<bool>& keep) const {
  if (keep.size() != right_.size()) {
    throw PreconditionError("restrict_right: mask size mismatch");
  }
  std::vector<std::size_t> new_right(right_.size(), 0);
  std::vector<std::string> right;
  for (std::size_t r = 0; r < right_.size(); ++r) {
    if (keep[r]) {
      new_right[r] = right.size();
      right.push_back(right_[r]);
    }
  }
  std::vector<bool> color_used(colors_.size(), false);
  for (const Triple& t : triples_) {
    if (keep[t.right]) color_used[t.color] = true;
  }
  std::vector<std::size_t> new_color(colors_.size(), 0);
  std::vector<std::string> colors;
  for (std::size_t c = 0; c < colors_.size(); ++c) {
    if (color_used[c]) {
      new_color[c] = colors.size();
      colors.push_back(colors_[c]);
    }
  }
  std::vector<Triple> triples;
  for (const Triple& t : triples_) {
    if (keep[t.right]) triples.push_back({t.left, new_right[t.right], new_color[t.color]});
  }
  return ColoredBipartiteGraph(left_, std::move(right), std::move(colors),
                               std::move(triples));
}

bool Graph::adjacent(std::size_t u, std::size_t v) const {
  return std::any_of(edges.begin(), edges.end(), [&](const auto& e) {
    return (e.first == u && e.second == v) || (e.first == v && e.second == u);
  });
}

ColoredGraph::ColoredGraph(std::vector<std::string> vertices,
                           std::vector<std::string> colors,
                           std::vector<ColoredEdge> edges)
    : vertices_(std::move(vertices)),
      colors_(std::move(colors)),
      edges_(std::move(edges)) {
  require_unique(vertices_, "vertex");
  require_unique(colors_, "color");
  const std::size_t n = vertices_.size();
  std::vector<bool> used(colors_.size(), false);
  for (const ColoredEdge& e : edges_) {
    if (e.u >= n || e.v >= n || e.color >= colors_.size()) {
      throw PreconditionError("edge index out of range");
    }
    if (e.u == e.v) {
      throw PreconditionError("self-loop at '" + vertices_[e.u] + "'");
    }
    if (!edge_color_.emplace(e.u * n + e.v, e.color).second ||
        !edge_color_.emplace(e.v * n + e.u, e.color).second) {
      throw PreconditionError("edge {" + vertices_[e.u] + ", " + vertices_[e.v] +
                              "} listed twice");
    }
    used[e.color] = true;
  }
  for (std::size_t c = 0; c < colors_.size(); ++c) {
    if (!used[c]) {
      throw PreconditionError("color '" + colors_[c] + "' labels no edge");
    }
  }
}

std::optional<std::size_t> ColoredGraph::color_at(std::size_t u,
                                                  std::size_t v) const {
  const auto it = edge_color_.find(u * vertices_.size() + v);
  if (it == edge_color_.end()) return std::nullopt;
  return it->second;
}

Graph ColoredGraph::underlying() const {
  Graph g;
  g.vertices = vertices_;
  for (const ColoredEdge& e : edges_) g.edges.emplace_back(e.u, e.v);
  return g;
}

bool VertexColoring::is_proper_for(const Graph& host) const {
  if (color_of.size() != host.vertices.size()) return false;
  return std::none_of(host.edges.begin(), host.edges.end(), [&](const auto& e) {
    return color_of[e.first] == color_of[e.second];
  });
}

std::vector<std::string> VertexColoring::palette() const {
  std::vector<std::string> out;
  for (const auto& c : color_of) {
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

bool Orientation::orients(const ColoredGraph& host) const {
  if (arcs.size() != host.edges().size()) return false;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Arc& a : arcs) {
    if (!host.adjacent(a.from, a.to)) return false;
    const auto key = std::minmax(a.from, a.to);
    if (!seen.insert(key).second) return false;  // both directions present
  }
  return true;
}

std::vector<std::string> Orientation::palette() const {
  std::vector<std::string> out;
  for (const Arc& a : arcs) {
    if (std::find(out.begin(), out.end(), a.color) == out.end()) {
      out.push_back(a.color);
    }
  }
  return out;
}

ValidationReport is_strong_coloring(const ColoredBipartiteGraph& g) {
  std::vector<std::vector<const Triple*>> classes(g.colors().size());
  for (const Triple& t : g.triples()) classes[t.color].push_back(&t);
  std::vector<Violation> out;
  for (const auto& cls : classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        const Triple& a = *cls[i];
        const Triple& b = *cls[j];
        const Cell ca{a.left, a.right};
        const Cell cb{b.left, b.right};
        const std::vector<Cell> cells{std::min(ca, cb), std::max(ca, cb)};
        if (a.left == b.left || a.right == b.right) {
          out.push_back({Condition::kB, cells});
        } else if (g.has_edge(a.left, b.right) || g.has_edge(b.left, a.right)) {
          out.push_back({Condition::kC, cells});
        }
      }
    }
  }
  return report_from(std::move(out));
}

ValidationReport is_strong_coloring(const ColoredGraph& g) {
  std::vector<std::vector<const ColoredEdge*>> classes(g.colors().size());
  for (const ColoredEdge& e : g.edges()) classes[e.color].push_back(&e);
  std::vector<Violation> out;
  for (const auto& cls : classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (std::size_t j = i + 1; j < cls.size(); ++j) {
        const ColoredEdge& a = *cls[i];
        const ColoredEdge& b = *cls[j];
        const Cell ca{std::min(a.u, a.v), std::max(a.u, a.v)};
        const Cell cb{std::min(b.u, b.v), std::max(b.u, b.v)};
        const std::vector<Cell> cells{std::min(ca, cb), std::max(ca, cb)};
        if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
          out.push_back({Condition::kB, cells});
        } else if (g.adjacent(a.u, b.u) || g.adjacent(a.u, b.v) ||
                   g.adjacent(a.v, b.u) || g.adjacent(a.v, b.v)) {
          out.push_back({Condition::kC, cells});
        }
      }
    }
  }
  return report_from(std::move(out));
}

ColoredBipartiteGraph pda_to_coloring(const PdaArray& p) {
  std::vector<Triple> triples;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    for (std::size_t c = 0; c < p.cols(); ++c) {
      const PdaEntry e = p.at(r, c);
      if (!e.is_star()) {
        triples.push_back({r, c, static_cast<std::size_t>(e.color_index() - 1)});
      }
    }
  }
  return ColoredBipartiteGraph(numbered(p.rows()), numbered(p.cols()),
                               numbered(p.colors()), std::move(triples));
}

PdaArray coloring_to_pda(const ColoredBipartiteGraph& g) {
  const auto degrees = g.right_degrees();
  for (std::size_t r = 1; r < degrees.size(); ++r) {
    if (degrees[r] != degrees[0]) {
      throw InvalidPdaError("right vertices '" + g.right()[0] + "' and '" +
                            g.right()[r] + "' have degrees " +
                            std::to_string(degrees[0]) + " and " +
                            std::to_string(degrees[r]));
    }
  }
  const ValidationReport strong = is_strong_coloring(g);
  if (!strong.is_valid) {
    const Violation& v = strong.violations.front();
    const auto edge = [&](const Cell& c) {
      return "(" + g.left()[c.row] + ", " + g.right()[c.col] + ")";
    };
    throw InvalidPdaError(
        std::string("coloring is not strong: edges ") + edge(v.cells[0]) +
        " and " + edge(v.cells[1]) +
        (v.condition == Condition::kB ? " share a vertex" : " are joined by an edge"));
  }
  std::vector<PdaEntry> grid(g.left().size() * g.right().size());
  for (const Triple& t : g.triples()) {
    grid[t.left * g.right().size() + t.right] =
        PdaEntry::color(static_cast<int>(t.color + 1));
  }
  return PdaArray(g.left().size(), g.right().size(), std::move(grid));
}

ColoredGraph as_general_graph(const ColoredBipartiteGraph& g) {
  std::vector<std::string> vertices = g.left();
  for (const auto& r : g.right()) vertices.push_back(r + "'");
  std::vector<ColoredEdge> edges;
  edges.reserve(g.triples().size());
  for (const Triple& t : g.triples()) {
    edges.push_back({t.left, g.left().size() + t.right, t.color});
  }
  return ColoredGraph(std::move(vertices), g.colors(), std::move(edges));
}

std::optional<std::vector<int>> two_coloring(const Graph& g) {
  const std::size_t n = g.vertices.size();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : g.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> side(n, -1);
  for (std::size_t s = 0; s < n; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<std::size_t> q;
    q.push(s);
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (std::size_t v : adj[u]) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

Graph cycle(std::size_t m) {
  if (m < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  Graph g;
  g.vertices = numbered(m);
  for (std::size_t i = 0; i < m; ++i) g.edges.emplace_back(i, (i + 1) % m);
  return g;
}

VertexColoring cycle_vertex_coloring(std::size_t m) {
  if (m == 3) return {{"a", "b", "c"}};
  if (m < 3 || m % 2 != 0) {
    throw PreconditionError("C_" + std::to_string(m) +
                            " has no vertex coloring under the parity rule");
  }
  VertexColoring vc;
  for (std::size_t i = 0; i < m; ++i) vc.color_of.push_back(i % 2 == 0 ? "a" : "b");
  return vc;
}

ColoredGraph cycle_strong_coloring(std::size_t m) {
  if (m < 3 || m % 3 != 0) {
    throw PreconditionError("C_" + std::to_string(m) +
                            " has no strong 3-edge-coloring by index mod 3");
  }
  const Graph g = cycle(m);
  std::vector<ColoredEdge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back({g.edges[i].first, g.edges[i].second, i % 3});
  }
  return ColoredGraph(g.vertices, {"1", "2", "3"}, std::move(edges));
}

std::pair<Orientation, Orientation> opposing_orientations(const ColoredGraph& c) {
  for (const auto& label : c.colors()) {
    if (std::find(c.colors().begin(), c.colors().end(), label + "'") !=
        c.colors().end()) {
      throw PreconditionError("primed color '" + label +
                              "'' collides with an existing color");
    }
  }
  Orientation forward, backward;
  for (const ColoredEdge& e : c.edges()) {
    const std::string& s = c.colors()[e.color];
    forward.arcs.push_back({e.u, e.v, s});
    backward.arcs.push_back({e.v, e.u, s + "'"});
  }
  return {std::move(forward), std::move(backward)};
}

}  // namespace pdakit
