// Copyright 2026 The snakebox Authors.
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


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <vector>

#include "snakebox/assembler.hpp"
#include "snakebox/chain.hpp"
#include "snakebox/distance_kernels.hpp"

namespace {

using namespace snakebox;

const std::vector<std::uint8_t>& S7Table() {
  static const std::vector<std::uint8_t> flat = [] {
    std::vector<std::uint8_t> out;
    for (const Permutation& p : AssembleHeSnake(3).Codewords()) {
      out.insert(out.end(), p.entries().begin(), p.entries().end());
    }
    return out;
  }();
  return flat;
}

void BM_ClosePairSerial(benchmark::State& state) {
  const CodewordTable table{S7Table(), 7};
  for (auto _ : state) benchmark::DoNotOptimize(FindClosePairSerial(table, 2));
  state.counters["pairs"] = static_cast<double>(table.rows() * (table.rows() - 1) / 2);
}

void BM_ClosePairParallel(benchmark::State& state) {
  const CodewordTable table{S7Table(), 7};
  for (auto _ : state) benchmark::DoNotOptimize(FindClosePairParallel(table, 2));
  state.counters["pairs"] = static_cast<double>(table.rows() * (table.rows() - 1) / 2);
}

void BM_ChainsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(BuildAllChainsSerial(static_cast<int>(state.range(0))));
}

void BM_ChainsParallel(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(BuildAllChains(static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_ClosePairSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ClosePairParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChainsSerial)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ChainsParallel)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
