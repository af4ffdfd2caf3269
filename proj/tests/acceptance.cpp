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

// End-to-end checks, one line per criterion. Exit status is the number of
// failed criteria.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "pdakit/analytics.hpp"
#include "pdakit/combinators.hpp"
#include "pdakit/families.hpp"
#include "pdakit/graphs.hpp"
#include "pdakit/pda.hpp"
#include "pdakit/scheme_sim.hpp"

namespace pdakit {
namespace {

// Thrown by expect() with a message for the report line.
struct Failure {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw Failure{what};
}

using Packets = std::vector<PacketId>;

Packets slot_packets(const BroadcastSlot& slot, const DemandVector& d) {
  Packets out;
  for (const Cell& c : slot.contributors) out.push_back({d[c.col] - 1, c.row});
  std::sort(out.begin(), out.end());
  return out;
}

void reference_fidelity() {
  const PdaArray p = testing::reference_pda();
  expect(validate(p).is_valid, "reference array is not valid");
  expect(params(p) == ParamRecord::make(4, 4, 2, 4), "params are not (4,4,2,4)");

  const FileLibrary lib = FileLibrary::random(2, 4, 2024);
  const CacheState caches = place(p, lib);
  const Packets odd = {{0, 0}, {0, 2}, {1, 0}, {1, 2}};
  const Packets even = {{0, 1}, {0, 3}, {1, 1}, {1, 3}};
  for (std::size_t k = 0; k < 4; ++k) {
    Packets got;
    for (const auto& [id, bytes] : caches.users[k]) got.push_back(id);
    expect(got == (k % 2 == 0 ? odd : even), "cache of user " + std::to_string(k + 1));
  }

  // Request (1,2,2,1): W12+W21, W14+W23, W22+W11, W24+W13.
  const DemandVector d = {1, 2, 2, 1};
  const BroadcastLog log = deliver(p, lib, d);
  const std::vector<Packets> table = {{{0, 1}, {1, 0}},
                                      {{0, 3}, {1, 2}},
                                      {{0, 0}, {1, 1}},
                                      {{0, 2}, {1, 3}}};
  expect(log.slots.size() == 4, "expected four slots");
  for (std::size_t s = 0; s < 4; ++s) {
    expect(slot_packets(log.slots[s], d) == table[s],
           "slot " + std::to_string(s + 1) + " differs from the table");
  }

  const auto ds = demand_set(4, 2, 0);
  expect(ds.size() == 16, "expected 16 demand vectors");
  for (const auto& r : simulate(p, lib, ds)) {
    expect(r.ok, format_demand(r.demand) + ": " + r.failure);
  }
}

void same_color_combination() {
  const ColoredBipartiteGraph g = pda_to_coloring(testing::half_pda());
  const PdaArray p = coloring_to_pda(combine_same_colors(g, g).graph);
  expect(validate(p).is_valid, "combined array is invalid");
  expect(equivalent(p, testing::reference_pda()) == Equivalence::kEquivalent,
         "combined array is not equivalent to the reference array");
}

void cycle_example() {
  const PdaArray p =
      coloring_to_pda(cycle_product(pda_to_coloring(trivial_pda()), 3).graph);
  expect(validate(p).is_valid, "cycle product is invalid");
  expect(params(p) == ParamRecord::make(6, 6, 3, 9),
         "params are " + to_string(params(p)));
  const FileLibrary lib = FileLibrary::random(6, 6, 8);
  for (const auto& r : simulate(p, lib, random_demands(6, 6, 50, 8))) {
    expect(r.ok, format_demand(r.demand) + ": " + r.failure);
  }
}

struct Base {
  std::string name;
  ColoredBipartiteGraph graph;
};

std::vector<Base> star_bases() {
  return {{"trivial", pda_to_coloring(trivial_pda())},
          {"du(4,1,2)", disjoint_union_coloring(4, 1, 2)},
          {"du(5,1,2)", disjoint_union_coloring(5, 1, 2)},
          {"du(6,1,2)", disjoint_union_coloring(6, 1, 2)},
          {"du(5,2,2)", disjoint_union_coloring(5, 2, 2)},
          {"it(4,2,2,1)", intersection_t_coloring(4, 2, 2, 1)},
          {"it(5,2,2,1)", intersection_t_coloring(5, 2, 2, 1)}};
}

void star_law() {
  const auto bases = star_bases();
  int instances = 0;
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i; j < bases.size(); ++j) {
      const std::string name = bases[i].name + "*" + bases[j].name;
      const PdaArray p =
          coloring_to_pda(star_product({bases[i].graph, bases[j].graph}).graph);
      expect(validate_reference(p).is_valid, name + " is invalid");
      const ParamRecord a = params(coloring_to_pda(bases[i].graph));
      const ParamRecord b = params(coloring_to_pda(bases[j].graph));
      const ParamRecord got = params(p);
      expect(got.K == a.K * b.K && got.F == a.F * b.F && got.S == a.S * b.S &&
                 got.F - got.Z == a.g * b.g,
             name + " measured " + to_string(got));
      ++instances;
    }
  }
  expect(instances >= 20, "only " + std::to_string(instances) + " instances");
}

void cycle_law() {
  const std::vector<Base> bases = {{"trivial", pda_to_coloring(trivial_pda())},
                                   {"du(4,1,2)", disjoint_union_coloring(4, 1, 2)},
                                   {"du(5,1,2)", disjoint_union_coloring(5, 1, 2)}};
  for (const Base& b : bases) {
    const ParamRecord base = params(coloring_to_pda(b.graph));
    for (std::size_t m : {6u, 12u}) {
      const PdaArray p = coloring_to_pda(cycle_product(b.graph, m).graph);
      const std::string name = b.name + " m=" + std::to_string(m);
      expect(validate_reference(p).is_valid, name + " is invalid");
      const ParamRecord got = params(p);
      expect(got == ParamRecord::make(m * base.K, m * base.F,
                                      m * base.F - 3 * base.g, 8 * base.S),
             name + " measured " + to_string(got));
    }
  }
}

void restricted_closed_forms() {
  int instances = 0;
  for (int n = 2; n <= 8; ++n) {
    for (int a = 1; a < n; ++a) {
      for (int b = 1; a + b <= n; ++b) {
        for (int t = 0; t < b; ++t) {
          const PdaArray p = restricted_combined_family(n, a, b, t);
          const std::string name = "(" + std::to_string(n) + "," + std::to_string(a) +
                                   "," + std::to_string(b) + "," + std::to_string(t) + ")";
          expect(validate(p).is_valid, name + " is invalid");
          expect(ex3_params(n, a, b, t).matches(params(p)),
                 name + " measured " + to_string(params(p)));
          ++instances;
        }
      }
    }
  }
  expect(instances > 0, "no instances");
}

bool has(const SchemeRow& r, const std::string& field) {
  return std::find(r.divergence.begin(), r.divergence.end(), field) !=
         r.divergence.end();
}

void table_reproduction() {
  const auto eight = table_report(Table::kVIII);
  const int e8[] = {19, 46, 73};
  for (int i = 0; i < 3; ++i) {
    expect(*eight[i].F == (BigCount(1) << e8[i]) && *eight[i].R == Rational(3, 4) &&
               1 - *eight[i].one_minus_ratio == Rational(5, 8) &&
               eight[i].divergence.empty(),
           "table VIII row " + std::to_string(i + 1));
  }
  const auto nine = table_report(Table::kIX);
  const int e9[] = {7, 16, 25};
  for (int i = 0; i < 3; ++i) {
    expect(*nine[i].F == 3 * (BigCount(1) << e9[i]) && *nine[i].R == Rational(2) &&
               nine[i].divergence.empty(),
           "table IX row " + std::to_string(i + 1));
  }
  const auto five = table_report(Table::kV);
  const int k5[] = {784, 1296, 2025};
  const Rational r5[] = {Rational(16), Rational(81, 4), Rational(25)};
  const double paper_f[] = {5215, 18542, 66754};
  for (int i = 0; i < 3; ++i) {
    expect(*five[i].K == k5[i] && *five[i].R == r5[i], "table V row " + std::to_string(i + 1));
    if (five[i].F) {
      const double f = five[i].F->convert_to<double>();
      expect(std::abs(f - paper_f[i]) / paper_f[i] < 0.10,
             "table V row " + std::to_string(i + 1) + " F off by more than 10%");
    } else {
      expect(has(five[i], "non_integral"), "table V non-integral row not flagged");
    }
  }
  const auto three = table_report(Table::kIII);
  const int k3[] = {90, 132, 182};
  const int f3[] = {210, 792, 3003};
  for (int i = 0; i < 3; ++i) {
    expect(*three[i].K == k3[i] && *three[i].F == f3[i],
           "table III row " + std::to_string(i + 1));
  }
  expect(has(three[0], "R"), "table III R not flagged");
}

// Changes one cell and renumbers colors densely.
PdaArray mutate(const PdaArray& p, std::mt19937_64& rng) {
  std::vector<std::vector<int>> grid(p.rows(), std::vector<int>(p.cols()));
  for (std::size_t j = 0; j < p.rows(); ++j) {
    for (std::size_t k = 0; k < p.cols(); ++k) grid[j][k] = p.at(j, k).color_index();
  }
  const std::size_t j = rng() % p.rows();
  const std::size_t k = rng() % p.cols();
  grid[j][k] = static_cast<int>(rng() % (p.colors() + 2));
  std::map<int, int> dense;
  for (const auto& row : grid) {
    for (int v : row) {
      if (v != 0) dense.emplace(v, 0);
    }
  }
  int next = 1;
  for (auto& [v, d] : dense) d = next++;
  for (auto& row : grid) {
    for (int& v : row) v = v == 0 ? 0 : dense[v];
  }
  return PdaArray::from_rows(grid);
}

void oracle_agreement() {
  std::vector<PdaArray> valid = {
      testing::reference_pda(), testing::half_pda(), trivial_pda(),
      coloring_to_pda(disjoint_union_coloring(4, 1, 2)),
      coloring_to_pda(disjoint_union_coloring(5, 2, 1)),
      coloring_to_pda(intersection_t_coloring(4, 2, 2, 1)),
      coloring_to_pda(intersection_t_coloring(5, 2, 3, 1)),
      restricted_combined_family(4, 1, 2, 1),
      restricted_combined_family(5, 1, 2, 0),
      coloring_to_pda(cycle_product(pda_to_coloring(trivial_pda()), 3).graph)};
  std::mt19937_64 rng(500);
  int accepted = 0, rejected = 0;
  for (int i = 0; i < 500; ++i) {
    PdaArray p = valid[static_cast<std::size_t>(i) % valid.size()];
    const int mutations = i % 3 == 0 ? 0 : 1 + static_cast<int>(rng() % 3);
    for (int m = 0; m < mutations; ++m) p = mutate(p, rng);
    const ValidationReport scan = validate(p);
    const bool scan_ok = std::none_of(
        scan.violations.begin(), scan.violations.end(),
        [](const Violation& v) { return v.condition != Condition::kA; });
    const bool strong_ok = is_strong_coloring(pda_to_coloring(p)).is_valid;
    expect(scan_ok == strong_ok, "disagreement on\n" + p.grid_text());
    (scan_ok ? accepted : rejected) += 1;
  }
  expect(accepted > 0 && rejected > 0, "corpus is one-sided");
}

struct Criterion {
  int id;
  std::string name;
  double budget_ms;
  std::function<void()> run;
};

}  // namespace
}  // namespace pdakit

int main() {
  using namespace pdakit;
  const std::vector<Criterion> criteria = {
      {1, "reference array fidelity", 1000, reference_fidelity},
      {2, "same-color combination equals the reference array", 1000, same_color_combination},
      {3, "cycle product of the trivial array, m=3", 1000, cycle_example},
      {4, "star product parameter law", 30000, star_law},
      {5, "cycle product parameter law, m in {6,12}", 30000, cycle_law},
      {6, "restricted family closed forms, n<=8", 60000, restricted_closed_forms},
      {7, "table reproduction with divergence flags", 5000, table_reproduction},
      {8, "condition-C scanner vs strong coloring checker", 60000, oracle_agreement},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run();
    } catch (const Failure& f) {
      error = f.what;
    } catch (const std::exception& e) {
      error = std::string("exception: ") + e.what();
    }
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - start)
                          .count();
    if (error.empty() && ms > c.budget_ms) {
      error = "took longer than " + std::to_string(static_cast<int>(c.budget_ms)) + " ms";
    }
    std::ostringstream line;
    line << (error.empty() ? "PASS" : "FAIL") << "  criterion " << c.id << ": "
         << c.name << " (" << static_cast<long>(ms) << " ms)";
    if (!error.empty()) line << " - " << error;
    std::cout << line.str() << std::endl;
    failed += error.empty() ? 0 : 1;
  }
  return failed;
}
