// Copyright 2026 The tablesetter Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "support/fixtures.hpp"
#include "tablesetter/creativity.hpp"
#include "tablesetter/rules.hpp"

namespace {

using namespace tablesetter;

void BM_InferRulesTableOne(benchmark::State& state) {
  const auto h = testing::table_one_household();
  for (auto _ : state) benchmark::DoNotOptimize(infer_rules(h.episodic(), h.catalog()));
}
BENCHMARK(BM_InferRulesTableOne);

void BM_InferRulesLarge(benchmark::State& state) {
  const auto h = testing::large_household();
  for (auto _ : state) benchmark::DoNotOptimize(infer_rules(h.episodic(), h.catalog()));
}
BENCHMARK(BM_InferRulesLarge);

void BM_FixCerealMilkSpoon(benchmark::State& state) {
  const auto h = testing::table_one_household();
  const auto lv = encode(std::vector<std::string>{"cereal", "milk", "spoon"}, h.catalog());
  for (auto _ : state) benchmark::DoNotOptimize(fix(lv, h.knowledge_graph(), h.catalog()));
}
BENCHMARK(BM_FixCerealMilkSpoon);

void BM_CreateBreakfast(benchmark::State& state) {
  const auto h = testing::large_household();
  Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(create_breakfast(h, rng));
}
BENCHMARK(BM_CreateBreakfast);

void BM_SimulateBatch(benchmark::State& state) {
  const auto h = testing::large_household();
  for (auto _ : state) {
    Rng rng(2);
    benchmark::DoNotOptimize(simulate_batch(h, rng, static_cast<std::size_t>(state.range(0))));
  }
}
BENCHMARK(BM_SimulateBatch)->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
