// Copyright 2026 The decaycode Authors
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

#include "benchmark/benchmark.h"
#include "decaycode/search.hpp"

using namespace decaycode;

// A fixed slice from the start of the n=8 enumeration.
static void BM_SearchSlice(benchmark::State& state) {
  SearchBudget b;
  b.max_subspaces = static_cast<std::uint64_t>(state.range(0));
  const SignFamily signs = state.range(1) ? SignFamily::kQuadraticForms
                                          : SignFamily::kLinearCharacters;
  for (auto _ : state) benchmark::DoNotOptimize(search_shorter_codes({8, 3, signs}, b));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SearchSlice)->Args({2048, 0})->Args({2048, 1})->Unit(benchmark::kMillisecond);

static void BM_SearchSixQubits(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(search_shorter_codes({6, 3, SignFamily::kQuadraticForms}));
  }
}
BENCHMARK(BM_SearchSixQubits)->Unit(benchmark::kMillisecond);
