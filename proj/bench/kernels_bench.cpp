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

// Serial reference vs parallel kernel for validation and simulation.

#include <benchmark/benchmark.h>

#include "pdakit/combinators.hpp"
#include "pdakit/families.hpp"
#include "pdakit/graphs.hpp"
#include "pdakit/pda.hpp"
#include "pdakit/scheme_sim.hpp"

namespace {

using namespace pdakit;

const PdaArray& bench_array() {
  static const PdaArray p = coloring_to_pda(
      cycle_product(disjoint_union_coloring(5, 1, 2), 6).graph);
  return p;
}

void BM_ValidateReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(validate_reference(bench_array()));
}
BENCHMARK(BM_ValidateReference)->Unit(benchmark::kMillisecond);

void BM_ValidateParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(validate(bench_array()));
}
BENCHMARK(BM_ValidateParallel)->Unit(benchmark::kMillisecond);

void BM_SimulateReference(benchmark::State& state) {
  const PdaArray& p = bench_array();
  const FileLibrary lib = FileLibrary::random(4, p.rows() * 16, 1);
  const auto ds = random_demands(p.cols(), 4, 64, 1);
  for (auto _ : state) benchmark::DoNotOptimize(simulate_reference(p, lib, ds));
}
BENCHMARK(BM_SimulateReference)->Unit(benchmark::kMillisecond);

void BM_SimulateParallel(benchmark::State& state) {
  const PdaArray& p = bench_array();
  const FileLibrary lib = FileLibrary::random(4, p.rows() * 16, 1);
  const auto ds = random_demands(p.cols(), 4, 64, 1);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(p, lib, ds));
}
BENCHMARK(BM_SimulateParallel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
