// Copyright 2026 The Authors.
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

// Parallel simulate() against the single-threaded reference on a few
// representative mechanisms. Both produce identical summaries.

#include <benchmark/benchmark.h>

#include <memory>

#include "prophet/generators.h"
#include "prophet/online.h"
#include "prophet/simulation.h"

namespace prophet {
namespace {

std::unique_ptr<Mechanism> mechanism(int family) {
  switch (family) {
    case 0:
      return make_mechanism(random_single_item(10, {.max_support = 5}, 1), Algorithm::kDynamic, {});
    case 1:
      return make_mechanism(random_matching(6, 6, {}, 2), Algorithm::kDynamic, {});
    case 2:
      return make_mechanism(random_xos(4, 5, {}, 3), Algorithm::kDynamic, {});
    default:
      return make_mechanism(random_matroid_instance(k4_graphic(), {}, 4), Algorithm::kDynamic, {});
  }
}

const char* kFamilies[] = {"single", "matching", "xos", "matroid"};

void BM_SimulateSerial(benchmark::State& state) {
  const auto mech = mechanism(static_cast<int>(state.range(0)));
  const auto trials = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(simulate_serial(*mech, trials, 7));
  state.SetLabel(kFamilies[state.range(0)]);
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

void BM_SimulateParallel(benchmark::State& state) {
  const auto mech = mechanism(static_cast<int>(state.range(0)));
  const auto trials = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(simulate(*mech, trials, 7));
  state.SetLabel(kFamilies[state.range(0)]);
  state.SetItemsProcessed(state.iterations() * state.range(1));
}

BENCHMARK(BM_SimulateSerial)->ArgsProduct({{0, 1, 2, 3}, {100000}})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SimulateParallel)->ArgsProduct({{0, 1, 2, 3}, {100000}})->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
}  // namespace prophet

BENCHMARK_MAIN();
