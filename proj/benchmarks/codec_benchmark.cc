// Copyright 2026 The NAGTI Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "nagti/decode_inhibitors.h"
#include "nagti/disjunct.h"
#include "nagti/encoder.h"
#include "nagti/signature.h"

namespace nagti {
namespace {

ItemVector RandomItems(uint64_t n, size_t d, size_t h, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<ItemIndex> pick(1, n);
  std::vector<ItemIndex> chosen;
  while (chosen.size() < d + h) {
    const ItemIndex j = pick(rng);
    if (std::find(chosen.begin(), chosen.end(), j) == chosen.end()) chosen.push_back(j);
  }
  return ItemVector(n, {chosen.begin(), chosen.begin() + d}, {chosen.begin() + d, chosen.end()});
}

// Args: log2 n, d. h = ceil(0.2 d), z = 3.
void BM_Encode(benchmark::State& state) {
  const uint64_t n = uint64_t{1} << state.range(0);
  const uint64_t d = state.range(1), h = (d + 4) / 5;
  const Scheme scheme = ComposeFullScheme(n, d, h, 3);
  const ItemVector items = RandomItems(n, d, h, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Encode(scheme, items));
  state.counters["rows"] = double(scheme.rows());
}

void BM_DecodeFull(benchmark::State& state) {
  const uint64_t n = uint64_t{1} << state.range(0);
  const uint64_t d = state.range(1), h = (d + 4) / 5;
  const Scheme scheme = ComposeFullScheme(n, d, h, 3);
  const ItemVector items = RandomItems(n, d, h, 1);
  const OutcomeVector noisy = InjectErrors(Encode(scheme, items), 1, ErrorStrategy::kUniform, 2);
  OpCounters counters;
  for (auto _ : state) {
    DecodeResult r = Decode(noisy.bits, scheme);
    counters = r.counters;
    benchmark::DoNotOptimize(r);
  }
  state.counters["column_generations"] = double(counters.column_generations);
  state.counters["inversions"] = double(counters.inversions);
}

void BM_DecodeDefectiveOnly(benchmark::State& state) {
  const uint64_t n = uint64_t{1} << state.range(0);
  const uint64_t d = state.range(1), h = (d + 4) / 5;
  const Scheme scheme = ComposeDefectiveScheme(n, d, h, 3);
  const ItemVector items = RandomItems(n, d, h, 1);
  const OutcomeVector noisy = InjectErrors(Encode(scheme, items), 1, ErrorStrategy::kUniform, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Decode(noisy.bits, scheme));
}

void BM_DisjunctColumn(benchmark::State& state) {
  const uint64_t n = uint64_t{1} << state.range(0);
  const DisjunctCode code(DeriveParams(n, state.range(1), 2, 3));
  std::vector<uint64_t> support;
  ItemIndex j = 1;
  for (auto _ : state) {
    code.Support(j, support);
    benchmark::DoNotOptimize(support.data());
    j = j % n + 1;
  }
  state.counters["weight"] = double(support.size());
}

void Grid(benchmark::internal::Benchmark* b) {
  for (int log_n : {10, 20, 32})
    for (int d : {2, 8, 32}) b->Args({log_n, d});
}

BENCHMARK(BM_Encode)->Apply(Grid);
BENCHMARK(BM_DecodeFull)->Apply(Grid);
BENCHMARK(BM_DecodeDefectiveOnly)->Apply(Grid);
BENCHMARK(BM_DisjunctColumn)->Apply(Grid);

}  // namespace
}  // namespace nagti

BENCHMARK_MAIN();
