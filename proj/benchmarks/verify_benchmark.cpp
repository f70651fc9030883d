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
#include "decaycode/verify.hpp"

using namespace decaycode;

static void BM_KnillLaflamme(benchmark::State& state) {
  const CodeSpec code = eight_bit_code();
  for (auto _ : state) benchmark::DoNotOptimize(kl_check(code));
}
BENCHMARK(BM_KnillLaflamme);

static void BM_ErrorSpaceDimension(benchmark::State& state) {
  const CodeSpec code = eight_bit_code();
  for (auto _ : state) benchmark::DoNotOptimize(error_space_dimension(code));
}
BENCHMARK(BM_ErrorSpaceDimension)->Unit(benchmark::kMillisecond);

static void BM_SphereBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sphere_bound({1, n, n / 4}));
}
BENCHMARK(BM_SphereBound)->Arg(8)->Arg(64)->Arg(512);
