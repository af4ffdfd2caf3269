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

#include "pdakit/combinators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pdakit/errors.hpp"

namespace pdakit {
namespace {

void require_strong(const ColoredBipartiteGraph& g, const char* what) {
  const ValidationReport r = is_strong_coloring(g);
  if (!r.is_valid) {
    throw PreconditionError(std::string(what) + " is not a strong coloring: " +
                            r.describe());
  }
}

void require_strong(const ColoredGraph& g, const char* what) {
  const ValidationReport r = is_strong_coloring(g);
  if (!r.is_valid) {
    throw PreconditionError(std::string(what) + " is not a strong coloring: " +
                            r.describe());
  }
}

// Mixed-radix index of a coordinate tuple, first coordinate most significant.
std::size_t flatten(const std::vector<std::size_t>& coords,
                    const std::vector<std::size_t>& radix) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) idx = idx * radix[i] + coords[i];
  return idx;
}

// All tuple labels of a product of label lists, in mixed-radix order.
std::vector<std::string> product_labels(
    const std::vector<const std::vector<std::string>*>& lists) {
  std::vector<std::vector<std::string>> acc{{}};
  for (const auto* list : lists) {
    std::vector<std::vector<std::string>> next;
    next.reserve(acc.size() * list->size());
    for (const auto& prefix : acc) {
      for (const auto& l : *list) {
        next.push_back(prefix);
        next.back().push_back(l);
      }
    }
    acc = std::move(next);
  }
  std::vector<std::string> out;
  out.reserve(acc.size());
  for (const auto& parts : acc) out.push_back(tuple_label(parts));
  return out;
}

std::set<int> row_colors(const PdaArray& p, std::size_t row) {
  std::set<int> out;
  for (std::size_t c = 0; c < p.cols(); ++c) {
    if (!p.at(row, c).is_star()) out.insert(p.at(row, c).color_index());
  }
  return out;
}

}  // namespace

std::optional<std::size_t> CombineLegend::find(
    const std::vector<std::string>& key) const {
  const auto it = std::find(parts.begin(), parts.end(), key);
  if (it == parts.end()) return std::nullopt;
  return static_cast<std::size_t>(it - parts.begin());
}

std::string tuple_label(const std::vector<std::string>& parts) {
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += parts[i];
  }
  return out + ")";
}

CombineResult combine_same_colors(const ColoredBipartiteGraph& g1,
                                  const ColoredBipartiteGraph& g2) {
  const std::set<std::string> c1(g1.colors().begin(), g1.colors().end());
  const std::set<std::string> c2(g2.colors().begin(), g2.colors().end());
  if (c1 != c2) {
    throw PreconditionError(
        "combine_same_colors: the two colorings use different color sets (" +
        std::to_string(c1.size()) + " vs " + std::to_string(c2.size()) +
        " colors)");
  }
  require_strong(g1, "first input");
  require_strong(g2, "second input");

  const std::size_t S = g1.colors().size();
  // g2's color index -> g1's color index.
  std::map<std::string, std::size_t> by_label;
  for (std::size_t s = 0; s < S; ++s) by_label[g1.colors()[s]] = s;

  std::vector<std::vector<const Triple*>> e1(S), e2(S);
  for (const Triple& t : g1.triples()) e1[t.color].push_back(&t);
  for (const Triple& t : g2.triples()) {
    e2[by_label.at(g2.colors()[t.color])].push_back(&t);
  }

  // Right side: pairs (x, u) sharing a color, ordered by (x, u).
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t s = 0; s < S; ++s) {
    for (const Triple* a : e1[s]) {
      for (const Triple* b : e2[s]) pairs.emplace(a->left, b->left);
    }
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pair_index;
  std::vector<std::string> right;
  std::vector<std::vector<std::size_t>> origin;
  for (const auto& xu : pairs) {
    pair_index[xu] = right.size();
    right.push_back(tuple_label({g1.left()[xu.first], g2.left()[xu.second]}));
    origin.push_back({xu.first, xu.second});
  }

  // Output colors (s, v), ordered by g1's color order then v.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> sigma_index;
  for (std::size_t s = 0; s < S; ++s) {
    std::vector<std::size_t> vs;
    for (const Triple* b : e2[s]) vs.push_back(b->right);
    std::sort(vs.begin(), vs.end());
    for (std::size_t v : vs) sigma_index.emplace(std::make_pair(s, v), 0);
  }
  std::vector<std::string> colors;
  CombineLegend legend;
  for (auto& [sv, idx] : sigma_index) {
    idx = colors.size();
    legend.parts.push_back({g1.colors()[sv.first], g2.right()[sv.second]});
    colors.push_back(tuple_label(legend.parts.back()));
  }

  std::vector<Triple> triples;
  for (std::size_t s = 0; s < S; ++s) {
    for (const Triple* a : e1[s]) {
      for (const Triple* b : e2[s]) {
        triples.push_back({a->right, pair_index.at({a->left, b->left}),
                           sigma_index.at({s, b->right})});
      }
    }
  }
  std::sort(triples.begin(), triples.end());
  return {ColoredBipartiteGraph(g1.right(), std::move(right), std::move(colors),
                                std::move(triples)),
          std::move(legend), std::move(origin)};
}

CombineResult combine_same_colors(const std::vector<ColoredBipartiteGraph>& gs) {
  if (gs.size() < 2) {
    throw PreconditionError("combine_same_colors needs at least two graphs");
  }
  CombineResult acc = combine_same_colors(gs[0], gs[1]);
  for (std::size_t i = 2; i < gs.size(); ++i) {
    CombineResult next = combine_same_colors(acc.graph, gs[i]);
    // Compose legends so each final color lists its full history.
    CombineLegend legend;
    for (const auto& parts : next.legend.parts) {
      const auto inner = acc.legend.parts[*acc.graph.color_index(parts[0])];
      std::vector<std::string> flat = inner;
      flat.insert(flat.end(), parts.begin() + 1, parts.end());
      legend.parts.push_back(std::move(flat));
    }
    acc = {std::move(next.graph), std::move(legend),
           std::move(next.right_origin)};
  }
  return acc;
}

SameColorsCheck check_same_colors(const PdaArray& p1, const PdaArray& p2,
                                  const ColoredBipartiteGraph& combined) {
  SameColorsCheck out;
  std::set<std::size_t> zs;
  for (std::size_t i = 0; i < p1.rows(); ++i) {
    const std::set<int> left = row_colors(p1, i);
    for (std::size_t i2 = 0; i2 < p2.rows(); ++i2) {
      const std::set<int> right = row_colors(p2, i2);
      std::size_t shared = 0;
      for (int c : left) shared += right.count(c);
      if (shared == 0) continue;
      ++out.predicted_K;
      // Columns j of P1 whose entry in row i also appears in row i' of P2.
      zs.insert(p1.cols() - shared);
    }
  }
  out.predicted_F = p1.cols();
  if (zs.size() == 1) out.predicted_Z = *zs.begin();
  out.predicted_S = p1.colors() * p2.cols();

  out.measured_K = combined.right().size();
  out.measured_F = combined.left().size();
  const auto deg = combined.right_degrees();
  if (!deg.empty() && std::all_of(deg.begin(), deg.end(),
                                  [&](std::size_t d) { return d == deg[0]; })) {
    out.measured_Z = out.measured_F - deg[0];
  }
  out.measured_S = combined.colors().size();

  if (out.predicted_K != out.measured_K) out.mismatches.push_back("K");
  if (out.predicted_F != out.measured_F) out.mismatches.push_back("F");
  if (out.predicted_Z != out.measured_Z) out.mismatches.push_back("Z");
  if (out.predicted_S != out.measured_S) out.mismatches.push_back("S");
  return out;
}

CombineResult star_product(const std::vector<ColoredBipartiteGraph>& gs) {
  if (gs.size() < 2) throw PreconditionError("star_product needs two or more factors");
  for (const auto& g : gs) require_strong(g, "star_product factor");

  const std::size_t l = gs.size();
  std::vector<std::size_t> left_radix(l), right_radix(l), color_radix(l);
  std::vector<const std::vector<std::string>*> lefts, rights, colors;
  for (std::size_t i = 0; i < l; ++i) {
    left_radix[i] = gs[i].left().size();
    right_radix[i] = gs[i].right().size();
    color_radix[i] = gs[i].colors().size();
    lefts.push_back(&gs[i].left());
    rights.push_back(&gs[i].right());
    colors.push_back(&gs[i].colors());
  }

  std::vector<Triple> triples;
  std::vector<std::size_t> pick(l, 0);  // which triple of each factor
  std::vector<std::size_t> lc(l), rc(l), cc(l);
  while (true) {
    for (std::size_t i = 0; i < l; ++i) {
      const Triple& t = gs[i].triples()[pick[i]];
      lc[i] = t.left;
      rc[i] = t.right;
      cc[i] = t.color;
    }
    triples.push_back({flatten(lc, left_radix), flatten(rc, right_radix),
                       flatten(cc, color_radix)});
    std::size_t i = l;
    while (i > 0 && ++pick[i - 1] == gs[i - 1].triples().size()) {
      pick[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  std::sort(triples.begin(), triples.end());

  CombineLegend legend;
  const std::vector<std::string> color_labels = product_labels(colors);
  for (std::size_t c = 0; c < color_labels.size(); ++c) {
    std::vector<std::string> parts(l);
    std::size_t rest = c;
    for (std::size_t i = l; i-- > 0;) {
      parts[i] = gs[i].colors()[rest % color_radix[i]];
      rest /= color_radix[i];
    }
    legend.parts.push_back(std::move(parts));
  }
  std::vector<std::vector<std::size_t>> origin;
  std::size_t num_right = 1;
  for (std::size_t r : right_radix) num_right *= r;
  for (std::size_t r = 0; r < num_right; ++r) {
    std::vector<std::size_t> coords(l);
    std::size_t rest = r;
    for (std::size_t i = l; i-- > 0;) {
      coords[i] = rest % right_radix[i];
      rest /= right_radix[i];
    }
    origin.push_back(std::move(coords));
  }
  return {ColoredBipartiteGraph(product_labels(lefts), product_labels(rights),
                                color_labels, std::move(triples)),
          std::move(legend), std::move(origin)};
}

ParamRecord predicted_star_params(const std::vector<ParamRecord>& factors) {
  std::size_t K = 1, F = 1, S = 1, g = 1;
  for (const auto& p : factors) {
    K *= p.K;
    F *= p.F;
    S *= p.S;
    g *= p.g;
  }
  return ParamRecord::make(K, F, F - g, S);
}

ColoredGraph tensor_product(const ColoredGraph& c1, const ColoredGraph& c2) {
  require_strong(c1, "first tensor factor");
  require_strong(c2, "second tensor factor");
  if (!two_coloring(c1.underlying()) && !two_coloring(c2.underlying())) {
    throw PreconditionError("tensor_product: neither factor is bipartite");
  }
  const std::size_t n2 = c2.vertices().size();
  const std::size_t s2 = c2.colors().size();
  std::vector<std::string> vertices;
  for (const auto& a : c1.vertices()) {
    for (const auto& b : c2.vertices()) vertices.push_back(tuple_label({a, b}));
  }
  std::vector<std::string> colors;
  for (const auto& a : c1.colors()) {
    for (const auto& b : c2.colors()) colors.push_back(tuple_label({a, b}));
  }
  std::vector<ColoredEdge> edges;
  for (const ColoredEdge& e1 : c1.edges()) {
    for (const ColoredEdge& e2 : c2.edges()) {
      const std::size_t color = e1.color * s2 + e2.color;
      edges.push_back({e1.u * n2 + e2.u, e1.v * n2 + e2.v, color});
      edges.push_back({e1.u * n2 + e2.v, e1.v * n2 + e2.u, color});
    }
  }
  return ColoredGraph(std::move(vertices), std::move(colors), std::move(edges));
}

ColoredBipartiteGraph split_bipartite(const ColoredGraph& g,
                                      const std::vector<int>& side) {
  if (side.size() != g.vertices().size()) {
    throw PreconditionError("split_bipartite: side vector size mismatch");
  }
  std::vector<std::size_t> index(side.size());
  std::vector<std::string> left, right;
  for (std::size_t v = 0; v < side.size(); ++v) {
    auto& list = side[v] == 0 ? left : right;
    index[v] = list.size();
    list.push_back(g.vertices()[v]);
  }
  std::vector<Triple> triples;
  for (const ColoredEdge& e : g.edges()) {
    if (side[e.u] == side[e.v]) {
      throw PreconditionError("split_bipartite: edge inside one side");
    }
    const std::size_t l = side[e.u] == 0 ? e.u : e.v;
    const std::size_t r = side[e.u] == 0 ? e.v : e.u;
    triples.push_back({index[l], index[r], e.color});
  }
  std::sort(triples.begin(), triples.end());
  return ColoredBipartiteGraph(std::move(left), std::move(right), g.colors(),
                               std::move(triples));
}

CombineResult cycle_product(const ColoredBipartiteGraph& base, std::size_t m) {
  if (m != 3 && (m == 0 || m % 6 != 0)) {
    throw PreconditionError("cycle_product supports m = 3 or m divisible by 6, got " +
                            std::to_string(m));
  }
  require_strong(base, "cycle_product base");

  const ColoredGraph ring = cycle_strong_coloring(m);
  const VertexColoring vertex_colors = cycle_vertex_coloring(m);
  const auto [forward, backward] = opposing_orientations(ring);

  // Palette: vertex colors, then forward arc colors, then primed ones.
  std::vector<std::string> palette = vertex_colors.palette();
  for (const auto& c : forward.palette()) palette.push_back(c);
  for (const auto& c : backward.palette()) palette.push_back(c);
  if (std::set<std::string>(palette.begin(), palette.end()).size() !=
      palette.size()) {
    throw InvariantBreach("vertex and arc color sets overlap");
  }
  const auto palette_index = [&](const std::string& label) {
    return static_cast<std::size_t>(
        std::find(palette.begin(), palette.end(), label) - palette.begin());
  };
  // arc_color[x][u] for x ~ u.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> arc_color;
  for (const Orientation* o : {&forward, &backward}) {
    for (const Arc& a : o->arcs) arc_color[{a.from, a.to}] = palette_index(a.color);
  }
  std::vector<std::vector<std::size_t>> closed_nbhd(m);
  for (std::size_t x = 0; x < m; ++x) {
    closed_nbhd[x] = {x, (x + 1) % m, (x + m - 1) % m};
  }

  const std::size_t F2 = base.left().size();
  const std::size_t K2 = base.right().size();
  const std::size_t S2 = base.colors().size();
  std::vector<bool> used(palette.size() * S2, false);
  std::vector<Triple> raw;
  for (const Triple& t : base.triples()) {
    for (std::size_t x = 0; x < m; ++x) {
      for (std::size_t u : closed_nbhd[x]) {
        const std::size_t s =
            x == u ? palette_index(vertex_colors.color_of[x]) : arc_color.at({x, u});
        const std::size_t color = s * S2 + t.color;
        used[color] = true;
        raw.push_back({x * F2 + t.left, u * K2 + t.right, color});
      }
    }
  }

  std::vector<std::size_t> dense(used.size(), 0);
  std::vector<std::string> colors;
  CombineLegend legend;
  for (std::size_t c = 0; c < used.size(); ++c) {
    if (!used[c]) continue;
    dense[c] = colors.size();
    legend.parts.push_back({palette[c / S2], base.colors()[c % S2]});
    colors.push_back(tuple_label(legend.parts.back()));
  }
  for (Triple& t : raw) t.color = dense[t.color];
  std::sort(raw.begin(), raw.end());

  std::vector<std::string> left, right;
  std::vector<std::vector<std::size_t>> origin;
  for (const auto& x : ring.vertices()) {
    for (const auto& y : base.left()) left.push_back(tuple_label({x, y}));
  }
  for (std::size_t u = 0; u < m; ++u) {
    for (std::size_t v = 0; v < K2; ++v) {
      right.push_back(tuple_label({ring.vertices()[u], base.right()[v]}));
      origin.push_back({u, v});
    }
  }
  return {ColoredBipartiteGraph(std::move(left), std::move(right),
                                std::move(colors), std::move(raw)),
          std::move(legend), std::move(origin)};
}

ParamRecord predicted_cycle_params(const ParamRecord& base, std::size_t m) {
  if (m != 3 && (m == 0 || m % 6 != 0)) {
    throw PreconditionError("unsupported cycle length " + std::to_string(m));
  }
  const std::size_t F = m * base.F;
  const std::size_t S = (m == 3 ? 9 : 8) * base.S;
  return ParamRecord::make(m * base.K, F, F - 3 * base.g, S);
}

}  // namespace pdakit
